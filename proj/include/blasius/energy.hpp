#pragma once

#include <vector>

#include "blasius/inner.hpp"

namespace blasius {

enum class WeightKind { Q1, Q2, Q };

// Gronwall weight on [xl, xr]. Each weight has two polynomial branches; which
// one applies at a point is decided by the sign of an associated expression
// from localize_sign_changes (positive branch left of the zero, negative
// branch right of it).
enum class BranchSide { positive, negative, split };

struct EnergyWeights {
    WeightKind kind;
    Rational xl, xr;
    RationalPoly branch_pos, branch_neg;
    SignExpr switch_expr;
    BranchSide side = BranchSide::positive;
    // switch bracket restricted to [xl, xr]; meaningful only when split
    Rational switch_lo, switch_hi;
};

EnergyWeights build_weights(const InnerApproximant& inner, WeightKind kind, const Rational& xl,
                            const Rational& xr, const std::vector<SignChangeBracket>& brackets);

// Upper enclosure of int_{xl}^{xr} weight dy. Where the switch bracket lies
// inside the interval, the bracket's contribution is bounded by its width
// times the hull of both branch ranges.
IntervalValue integrate_weight(const EnergyWeights& w);

struct EnergyBoundSet {
    IntervalValue M1, M2, M3, M;
    int refine_depth = 0;
};

IntervalValue bound_M1(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                       const std::vector<SignChangeBracket>& brackets);
IntervalValue bound_M2(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                       const std::vector<SignChangeBracket>& brackets);
IntervalValue bound_M3(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                       const std::vector<SignChangeBracket>& brackets);
IntervalValue bound_M(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                      const std::vector<SignChangeBracket>& brackets);

EnergyBoundSet bound_energy_set(const InnerApproximant& inner, const Rational& xl, const Rational& xr,
                                const std::vector<SignChangeBracket>& brackets);

}  // namespace blasius
