#include "blasius/inner.hpp"

#include <algorithm>
#include <stdexcept>

namespace blasius {

namespace {

const std::vector<Rational>& p_table() {
    static const std::vector<Rational> kP = {
        Rational(-510, 10445149),  Rational(-18523, 5934),   Rational(-42998, 441819),
        Rational(113448, 81151),   Rational(-65173, 22093),  Rational(390101, 6016),
        Rational(-2326169, 9858),  Rational(4134879, 7249),  Rational(-1928001, 1960),
        Rational(20880183, 19117), Rational(-1572554, 2161), Rational(1546782, 5833),
        Rational(-1315241, 32239)};
    return kP;
}

}  // namespace

InnerApproximant build_inner() {
    // F0(x) = x^2/2 + x^4 P(2x/5), P(y) = sum_j 2 p_j y^j / (5 (j+2)(j+3)(j+4)),
    // so the x^{j+4} coefficient is 2 p_j (2/5)^j / (5 (j+2)(j+3)(j+4)).
    std::vector<Rational> c(17, Rational(0));
    c[2] = Rational(1, 2);
    const auto& p = p_table();
    Rational scale_pow(1);
    for (std::size_t j = 0; j < p.size(); ++j) {
        long jj = static_cast<long>(j);
        c[j + 4] = Rational(2) * p[j] * scale_pow / (Rational(5) * (jj + 2) * (jj + 3) * (jj + 4));
        scale_pow *= Rational(2, 5);
    }
    InnerApproximant inner;
    inner.F0 = RationalPoly(std::move(c));
    inner.F0p = inner.F0.derivative();
    inner.F0pp = inner.F0p.derivative();
    inner.F0ppp = inner.F0pp.derivative();
    inner.R = inner.F0ppp + inner.F0 * inner.F0pp;
    return inner;
}

const Rational& x_c() {
    static const Rational kXc(1322040, 1000000);
    return kXc;
}

Partition paper_partition() {
    Partition p;
    p.breakpoints = {Rational(0),      Rational(1, 16),  Rational(1, 8),  Rational(1, 4),
                     Rational(3, 8),   Rational(1, 2),   Rational(3, 4),  Rational(1),
                     x_c(),            Rational(3, 2),   Rational(7, 4),  Rational(2),
                     Rational(9, 4),   Rational(12, 5),  Rational(5, 2)};
    return p;
}

RemainderBounds bound_remainder(const InnerApproximant& inner, const Partition& part) {
    const auto& bp = part.breakpoints;
    if (bp.size() < 2 || bp.front() != Rational(0) || bp.back() != Rational(5, 2))
        throw std::invalid_argument("bound_remainder: partition must span [0, 5/2]");
    for (std::size_t i = 1; i < bp.size(); ++i)
        if (!(bp[i - 1] < bp[i])) throw std::invalid_argument("bound_remainder: breakpoints not increasing");
    if (std::find(bp.begin(), bp.end(), x_c()) == bp.end() ||
        std::find(bp.begin(), bp.end(), Rational(2)) == bp.end())
        throw std::invalid_argument("bound_remainder: partition must contain x_c and 2");

    RemainderBounds out;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        out.per_cell.push_back({bp[i], bp[i + 1], range_bound(inner.R, bp[i], bp[i + 1])});

    auto union_over = [&](const Rational& a, const Rational& b) {
        bool first = true;
        IntervalValue acc;
        for (const auto& cell : out.per_cell) {
            if (cell.xl >= a && cell.xr <= b) {
                acc = first ? cell.range : IntervalValue::hull(acc, cell.range);
                first = false;
            }
        }
        if (first) throw std::logic_error("bound_remainder: empty union");
        return acc;
    };
    out.on_left = union_over(Rational(0), x_c());
    out.on_middle = union_over(x_c(), Rational(2));
    out.on_right = union_over(Rational(2), Rational(5, 2));
    out.sup_left = out.on_left.abs_hi();
    out.sup_middle = out.on_middle.abs_hi();
    out.sup_right = out.on_right.abs_hi();
    out.sup_global = max(out.sup_left, max(out.sup_middle, out.sup_right));
    return out;
}

IntervalValue range_bound_refined(const RationalPoly& p, const Rational& xl, const Rational& xr,
                                  int max_depth) {
    if (max_depth <= 0) return range_bound(p, xl, xr);
    Rational mid = (xl + xr) / 2;
    IntervalValue left = range_bound_refined(p, xl, mid, max_depth - 1);
    IntervalValue right = range_bound_refined(p, mid, xr, max_depth - 1);
    return IntervalValue::hull(left, right);
}

F0FamilyBounds bound_F0_family(const InnerApproximant& inner) {
    F0FamilyBounds out;
    // The bands near x = 0 are extremely tight (down to 1e-12 scale), so the
    // head interval needs deeper bisection than the main one.
    out.refine_depth = 6;
    const Rational head_l(0), head_r(1, 8), main_r(5, 2);
    out.F0_head = range_bound_refined(inner.F0, head_l, head_r, out.refine_depth);
    out.F0p_head = range_bound_refined(inner.F0p, head_l, head_r, out.refine_depth);
    out.F0pp_head = range_bound_refined(inner.F0pp, head_l, head_r, out.refine_depth);
    out.F0_main = range_bound_refined(inner.F0, head_r, main_r, 4);
    out.F0_quarter = range_bound_refined(inner.F0, Rational(1, 4), main_r, 4);
    out.F0p_main = range_bound_refined(inner.F0p, head_r, main_r, 4);
    out.F0pp_main = range_bound_refined(inner.F0pp, head_r, main_r, 4);
    return out;
}

std::string to_string(SignExpr e) {
    switch (e) {
        case SignExpr::F0pp_minus_2F0_plus_1: return "F0''-2F0+1";
        case SignExpr::twoF0pp_minus_2F0: return "2F0''-2F0";
        case SignExpr::F0pp_minus_2F0: return "F0''-2F0";
    }
    return "?";
}

RationalPoly sign_expr_poly(const InnerApproximant& inner, SignExpr e) {
    switch (e) {
        case SignExpr::F0pp_minus_2F0_plus_1:
            return inner.F0pp - inner.F0.scaled(Rational(2)) + RationalPoly::constant(Rational(1));
        case SignExpr::twoF0pp_minus_2F0:
            return inner.F0pp.scaled(Rational(2)) - inner.F0.scaled(Rational(2));
        case SignExpr::F0pp_minus_2F0:
            return inner.F0pp - inner.F0.scaled(Rational(2));
    }
    throw std::logic_error("sign_expr_poly: bad enum");
}

namespace {

// Derivative negativity on [1/8, 5/2]: d/dx (F0''-2F0+c) = -F0 F0'' - 2F0' + R
// (exact identity through R = F0''' + F0 F0''), and the 2F0'' variant doubles
// both the polynomial part and R. Uses the already-computed per-cell R ranges.
bool derivative_negative_on_main(const InnerApproximant& inner, const Partition& part,
                                 const RemainderBounds& rem, bool doubled) {
    const RationalPoly polypart =
        (-(inner.F0 * inner.F0pp) - inner.F0p.scaled(Rational(2))).scaled(doubled ? Rational(2) : Rational(1));
    for (std::size_t i = 0; i < rem.per_cell.size(); ++i) {
        const auto& cell = rem.per_cell[i];
        if (cell.xr <= Rational(1, 8)) continue;  // head handled separately
        IntervalValue rng = range_bound(polypart, cell.xl, cell.xr);
        IntervalValue rpart = doubled ? cell.range * Rational(2) : cell.range;
        if (!((rng + rpart).strictly_negative())) return false;
    }
    return true;
}

}  // namespace

std::vector<SignChangeBracket> localize_sign_changes(const InnerApproximant& inner,
                                                     const Partition& part,
                                                     const RemainderBounds& rem) {
    struct Spec {
        SignExpr e;
        Rational lo, hi;
        bool doubled;
    };
    const std::vector<Spec> specs = {
        {SignExpr::F0pp_minus_2F0_plus_1, Rational(1322040, 1000000), Rational(1322041, 1000000), false},
        {SignExpr::twoF0pp_minus_2F0, Rational(12314283, 10000000), Rational(12314284, 10000000), true},
        {SignExpr::F0pp_minus_2F0, Rational(9399325, 10000000), Rational(9399326, 10000000), false},
    };
    std::vector<SignChangeBracket> out;
    for (const auto& s : specs) {
        RationalPoly expr = sign_expr_poly(inner, s.e);
        SignChangeBracket b;
        b.expr = s.e;
        b.lo = s.lo;
        b.hi = s.hi;
        b.value_lo = expr.eval(s.lo);
        b.value_hi = expr.eval(s.hi);
        if (!(b.value_lo.sign() > 0 && b.value_hi.sign() < 0))
            throw std::runtime_error("localize_sign_changes: no sign change in expected bracket for " +
                                     to_string(s.e));
        b.monotone_certified = derivative_negative_on_main(inner, part, rem, s.doubled);
        b.positive_on_head = range_bound(expr, Rational(0), Rational(1, 8)).strictly_positive() ||
                             range_bound_refined(expr, Rational(0), Rational(1, 8), 5).strictly_positive();
        out.push_back(b);
    }
    return out;
}

}  // namespace blasius
