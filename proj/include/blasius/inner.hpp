#pragma once

#include <string>
#include <vector>

#include "blasius/poly.hpp"

namespace blasius {

// Polynomial model of the solution on [0, 5/2]: F0 of degree 16 built from
// the fixed coefficient table, its exact derivatives, and the defect
// R = F0''' + F0 * F0'' (degree 30).
struct InnerApproximant {
    RationalPoly F0, F0p, F0pp, F0ppp;
    RationalPoly R;
};

InnerApproximant build_inner();

// Breakpoints on [0, 5/2]; strictly increasing, first 0, last 5/2.
struct Partition {
    std::vector<Rational> breakpoints;
    std::size_t cells() const { return breakpoints.empty() ? 0 : breakpoints.size() - 1; }
};

// The 14-cell partition used by all golden bounds, with the near-crossing
// breakpoint x_c = 1.322040.
Partition paper_partition();
const Rational& x_c();

struct SubintervalBound {
    Rational xl, xr;
    IntervalValue range;
};

struct RemainderBounds {
    std::vector<SubintervalBound> per_cell;
    IntervalValue on_left;    // union over [0, x_c]
    IntervalValue on_middle;  // union over [x_c, 2]
    IntervalValue on_right;   // union over [2, 5/2]
    Rational sup_left, sup_middle, sup_right, sup_global;  // sup |R| per union
};

// Per-cell range enclosures of R and their unions over the three blocks.
// Throws if the partition does not contain x_c and 2 as breakpoints.
RemainderBounds bound_remainder(const InnerApproximant& inner, const Partition& part);

// Range bound with adaptive bisection: splits [xl, xr] until each piece's
// enclosure width gain stalls or max_depth is reached, then unions.
IntervalValue range_bound_refined(const RationalPoly& p, const Rational& xl, const Rational& xr,
                                  int max_depth);

struct F0FamilyBounds {
    // ranges on [0, 1/8] and [1/8, 5/2] for F0, F0', F0''
    IntervalValue F0_head, F0p_head, F0pp_head;
    IntervalValue F0_main, F0p_main, F0pp_main;
    // range on [1/4, 5/2]; the classical 0.03 lower constant for F0 holds
    // from 1/4 on (at 1/8 the exact value is 1/128 + O(x^4))
    IntervalValue F0_quarter;
    int refine_depth;
};

F0FamilyBounds bound_F0_family(const InnerApproximant& inner);

enum class SignExpr { F0pp_minus_2F0_plus_1, twoF0pp_minus_2F0, F0pp_minus_2F0 };

std::string to_string(SignExpr e);

// Bracket [lo, hi] with exact opposite-sign evaluations of the expression,
// plus a certificate that the expression decreases on [1/8, 5/2] (so the
// bracketed zero is the only one in [0, 5/2]).
struct SignChangeBracket {
    SignExpr expr;
    Rational lo, hi;
    Rational value_lo, value_hi;           // exact evaluations
    bool monotone_certified;               // derivative < 0 on [1/8, 5/2]
    bool positive_on_head;                 // expression > 0 on [0, 1/8]
};

// The polynomial form of each sign expression.
RationalPoly sign_expr_poly(const InnerApproximant& inner, SignExpr e);

// Localizes the three zeros of the expressions of interest; derivative
// negativity reuses the per-cell R enclosures from `rem`.
std::vector<SignChangeBracket> localize_sign_changes(const InnerApproximant& inner,
                                                     const Partition& part,
                                                     const RemainderBounds& rem);

}  // namespace blasius
