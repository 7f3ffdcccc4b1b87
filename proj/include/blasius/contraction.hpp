#pragma once

#include <string>
#include <vector>

#include "blasius/energy.hpp"

namespace blasius {

// Certified bounds on |E|, |E'|, |E''| at the left endpoint of the current
// subinterval (equal to the sup over the previous one; exactly (0,0,0) at 0).
// at_point marks the exact initial state; propagated states carry
// sup-over-interval semantics, which double as endpoint bounds.
struct IntervalErrorState {
    IntervalValue E_abs{Rational(0)}, Ep_abs{Rational(0)}, Epp_abs{Rational(0)};
    bool at_point = true;
};

struct InnerContractionCert {
    std::string interval_id;
    Rational xl, xr;
    IntervalValue B0;
    Rational epsilon;
    IntervalValue cond1_lhs, cond2_lhs;  // pass needs cond1 < epsilon, cond2 < 1
    bool verdict = false;
    std::string failure;                  // names the violated inequality
    IntervalValue Epp_bound, Ep_bound, E_bound, Eppp_bound;
    EnergyBoundSet energy;
    IntervalValue R_sup;
};

// B0 = M*||R|| + M1|E(xl)| + M2|E'(xl)| + M3|E''(xl)|.
IntervalValue compute_B0(const IntervalErrorState& state_in, const EnergyBoundSet& bounds,
                         const IntervalValue& R_sup);

// Checks the two contraction inequalities on [xl, xr]; on pass fills
// Epp_bound = B0 (1+eps) and the E''' bound.
InnerContractionCert verify_lemma5(const InnerApproximant& inner, const std::string& interval_id,
                                   const Rational& xl, const Rational& xr,
                                   const IntervalErrorState& state_in, const EnergyBoundSet& bounds,
                                   const IntervalValue& R_sup, const Rational& epsilon);

// Propagates the certified bounds across the subinterval:
// |E'| <= |E'(xl)| + w |E''|, |E| <= |E(xl)| + w |E'(xl)| + w^2 |E''|/2.
IntervalErrorState integrate_error_state(const InnerContractionCert& cert,
                                         const IntervalErrorState& state_in);

struct InnerPipelineResult {
    std::vector<InnerContractionCert> certs;
    IntervalErrorState final_state;      // at x = 5/2 (sup over last interval)
    IntervalValue global_Epp, global_Ep, global_E;
    bool verdict = false;
};

// Runs the contraction chain over the given chain intervals (defaults to the
// three blocks [0,x_c], [x_c,2], [2,5/2] with the default epsilon choices).
InnerPipelineResult run_inner_pipeline(const InnerApproximant& inner, const Partition& part,
                                       const RemainderBounds& rem,
                                       const std::vector<SignChangeBracket>& brackets,
                                       const std::vector<Rational>& chain_points,
                                       const std::vector<Rational>& epsilons);

InnerPipelineResult run_inner_pipeline(const InnerApproximant& inner, const Partition& part,
                                       const RemainderBounds& rem,
                                       const std::vector<SignChangeBracket>& brackets);

// Sup |R| over [xl, xr] from the per-cell table, falling back to a direct
// range bound when [xl, xr] is not a union of table cells.
IntervalValue remainder_sup_on(const InnerApproximant& inner, const RemainderBounds& rem,
                               const Rational& xl, const Rational& xr);

}  // namespace blasius
