#include "blasius/energy.hpp"

#include <stdexcept>

namespace blasius {

namespace {

RationalPoly x_minus_xl_pow4(const Rational& xl) {
    RationalPoly lin({-xl, Rational(1)});
    RationalPoly sq = lin * lin;
    return sq * sq;
}

const SignChangeBracket& find_bracket(const std::vector<SignChangeBracket>& brackets, SignExpr e) {
    for (const auto& b : brackets)
        if (b.expr == e) return b;
    throw std::invalid_argument("energy: missing sign-change bracket");
}

}  // namespace

EnergyWeights build_weights(const InnerApproximant& inner, WeightKind kind, const Rational& xl,
                            const Rational& xr, const std::vector<SignChangeBracket>& brackets) {
    if (!(Rational(0) <= xl && xl < xr && xr <= Rational(5, 2)))
        throw std::invalid_argument("build_weights: need [xl,xr] inside [0, 5/2]");
    EnergyWeights w;
    w.kind = kind;
    w.xl = xl;
    w.xr = xr;
    const RationalPoly quart = x_minus_xl_pow4(xl).scaled(Rational(1, 4));
    const RationalPoly quart_term = inner.F0pp * quart;
    switch (kind) {
        case WeightKind::Q1:
            w.branch_pos = inner.F0pp.scaled(Rational(2)) + quart_term - inner.F0.scaled(Rational(2));
            w.switch_expr = SignExpr::twoF0pp_minus_2F0;
            break;
        case WeightKind::Q2:
            w.branch_pos = inner.F0pp + quart_term - inner.F0.scaled(Rational(2));
            w.switch_expr = SignExpr::F0pp_minus_2F0;
            break;
        case WeightKind::Q:
            w.branch_pos = inner.F0pp - inner.F0.scaled(Rational(2)) + RationalPoly::constant(Rational(1)) +
                           quart_term;
            w.switch_expr = SignExpr::F0pp_minus_2F0_plus_1;
            break;
    }
    w.branch_neg = quart_term;
    const auto& b = find_bracket(brackets, w.switch_expr);
    if (!(b.monotone_certified && b.positive_on_head))
        throw std::runtime_error("build_weights: switch bracket lacks monotonicity certificate");
    if (xr <= b.lo) {
        w.side = BranchSide::positive;  // entirely left of the zero
    } else if (xl >= b.hi) {
        w.side = BranchSide::negative;
    } else {
        w.side = BranchSide::split;
        w.switch_lo = max(xl, b.lo);
        w.switch_hi = min(xr, b.hi);
    }
    return w;
}

IntervalValue integrate_weight(const EnergyWeights& w) {
    const auto exact = [](const RationalPoly& p, const Rational& a, const Rational& b) {
        return a < b ? IntervalValue(definite_integral(p, a, b)) : IntervalValue(Rational(0));
    };
    if (w.side == BranchSide::positive) return exact(w.branch_pos, w.xl, w.xr);
    if (w.side == BranchSide::negative) return exact(w.branch_neg, w.xl, w.xr);
    IntervalValue left = exact(w.branch_pos, w.xl, w.switch_lo);
    IntervalValue right = exact(w.branch_neg, w.switch_hi, w.xr);
    // Inside the bracket the active branch is unknown; the integrand there lies
    // in the hull of both branch ranges.
    IntervalValue pos_rng = range_bound(w.branch_pos, w.switch_lo, w.switch_hi);
    IntervalValue neg_rng = range_bound(w.branch_neg, w.switch_lo, w.switch_hi);
    IntervalValue bracket_part = IntervalValue(w.switch_hi - w.switch_lo) * IntervalValue::hull(pos_rng, neg_rng);
    return left + right + bracket_part;
}

namespace {

IntervalValue weight_integral(const InnerApproximant& inner, WeightKind kind, const Rational& xl,
                              const Rational& xr, const std::vector<SignChangeBracket>& brackets) {
    return integrate_weight(build_weights(inner, kind, xl, xr, brackets));
}

}  // namespace

IntervalValue bound_M1(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                       const std::vector<SignChangeBracket>& brackets) {
    IntervalValue q1 = weight_integral(inner, WeightKind::Q1, xl, xr, brackets);
    IntervalValue amp = sqrt_enclosure(IntervalValue(inner.F0p.eval(xr) - inner.F0p.eval(xl)));
    return amp * exp_enclosure(q1 / Rational(2));
}

IntervalValue bound_M2(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                       const std::vector<SignChangeBracket>& brackets) {
    IntervalValue q1 = weight_integral(inner, WeightKind::Q1, xl, xr, brackets);
    RationalPoly lin({-xl, Rational(1)});
    Rational inner_int = definite_integral(lin * lin * inner.F0pp, xl, xr);
    return sqrt_enclosure(IntervalValue(inner_int)) * exp_enclosure(q1 / Rational(2));
}

IntervalValue bound_M3(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                       const std::vector<SignChangeBracket>& brackets) {
    IntervalValue q2 = weight_integral(inner, WeightKind::Q2, xl, xr, brackets);
    return exp_enclosure(q2 / Rational(2));
}

IntervalValue bound_M(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                      const std::vector<SignChangeBracket>& brackets) {
    IntervalValue q = weight_integral(inner, WeightKind::Q, xl, xr, brackets);
    return sqrt_enclosure(IntervalValue(xr - xl)) * exp_enclosure(q / Rational(2));
}

EnergyBoundSet bound_energy_set(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                                const std::vector<SignChangeBracket>& brackets) {
    EnergyBoundSet s;
    s.M1 = bound_M1(inner, xl, xr, brackets);
    s.M2 = bound_M2(inner, xl, xr, brackets);
    s.M3 = bound_M3(inner, xl, xr, brackets);
    s.M = bound_M(inner, xl, xr, brackets);
    return s;
}

}  // namespace blasius
