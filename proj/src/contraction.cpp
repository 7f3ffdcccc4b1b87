#include "blasius/contraction.hpp"

#include <stdexcept>

namespace blasius {

IntervalValue compute_B0(const IntervalErrorState& state_in, const EnergyBoundSet& bounds,
                         const IntervalValue& R_sup) {
    return bounds.M * R_sup + bounds.M1 * state_in.E_abs + bounds.M2 * state_in.Ep_abs +
           bounds.M3 * state_in.Epp_abs;
}

IntervalValue remainder_sup_on(const InnerApproximant& inner, const RemainderBounds& rem,
                               const Rational& xl, const Rational& xr) {
    Rational sup(0);
    Rational covered = xl;
    bool clean = true;
    for (const auto& cell : rem.per_cell) {
        if (cell.xr <= xl || cell.xl >= xr) continue;
        if (cell.xl == covered && cell.xr <= xr) {
            sup = max(sup, cell.range.abs_hi());
            covered = cell.xr;
        } else {
            clean = false;
            break;
        }
    }
    if (clean && covered == xr) return IntervalValue(sup);
    // [xl, xr] is not a union of table cells; bound directly
    return IntervalValue(range_bound_refined(inner.R, xl, xr, 3).abs_hi());
}

InnerContractionCert verify_lemma5(const InnerApproximant& inner, const std::string& interval_id,
                                   const Rational& xl, const Rational& xr,
                                   const IntervalErrorState& state_in, const EnergyBoundSet& bounds,
                                   const IntervalValue& R_sup, const Rational& epsilon) {
    if (epsilon.sign() <= 0) throw std::invalid_argument("verify_lemma5: epsilon must be positive");
    InnerContractionCert cert;
    cert.interval_id = interval_id;
    cert.xl = xl;
    cert.xr = xr;
    cert.epsilon = epsilon;
    cert.energy = bounds;
    cert.R_sup = R_sup;
    cert.B0 = compute_B0(state_in, bounds, R_sup);

    const Rational w = xr - xl;
    const IntervalValue one_eps(Rational(1) + epsilon);
    const IntervalValue head = bounds.M * (state_in.E_abs + IntervalValue(w) * state_in.Ep_abs);
    cert.cond1_lhs = head * one_eps + IntervalValue(w * w / 2) * bounds.M * cert.B0 * one_eps * one_eps;
    cert.cond2_lhs = head + IntervalValue(w * w) * bounds.M * cert.B0 * one_eps;

    if (!(cert.cond1_lhs.hi() < epsilon)) {
        cert.failure = "contraction margin: M(|E|+w|E'|)(1+eps) + w^2 M B0 (1+eps)^2 / 2 < eps";
        return cert;
    }
    if (!(cert.cond2_lhs.hi() < Rational(1))) {
        cert.failure = "invariance margin: M(|E|+w|E'|) + w^2 M B0 (1+eps) < 1";
        return cert;
    }
    cert.verdict = true;
    cert.Epp_bound = cert.B0 * one_eps;

    // third-derivative bound from the ODE, recorded for completeness
    const IntervalValue F0_sup(range_bound(inner.F0, xl, xr).abs_hi());
    const IntervalValue F0pp_sup(range_bound(inner.F0pp, xl, xr).abs_hi());
    cert.Eppp_bound = F0_sup * one_eps * cert.B0 +
                      F0pp_sup * (state_in.E_abs + IntervalValue(w) * state_in.Ep_abs) +
                      IntervalValue(w * w / 2) * F0pp_sup * cert.B0 * one_eps +
                      IntervalValue(w * w / 2) * cert.B0 * cert.B0 * one_eps * one_eps + R_sup;
    return cert;
}

IntervalErrorState integrate_error_state(const InnerContractionCert& cert,
                                         const IntervalErrorState& state_in) {
    if (!cert.verdict) throw std::logic_error("integrate_error_state: certificate did not pass");
    const Rational w = cert.xr - cert.xl;
    IntervalErrorState out;
    out.at_point = false;
    out.Epp_abs = cert.Epp_bound;
    out.Ep_abs = state_in.Ep_abs + IntervalValue(w) * cert.Epp_bound;
    out.E_abs = state_in.E_abs + IntervalValue(w) * state_in.Ep_abs +
                IntervalValue(w * w / 2) * cert.Epp_bound;
    return out;
}

InnerPipelineResult run_inner_pipeline(const InnerApproximant& inner, const Partition& part,
                                       const RemainderBounds& rem,
                                       const std::vector<SignChangeBracket>& brackets,
                                       const std::vector<Rational>& chain_points,
                                       const std::vector<Rational>& epsilons) {
    if (chain_points.size() < 2 || chain_points.front() != Rational(0) ||
        chain_points.back() != Rational(5, 2))
        throw std::invalid_argument("run_inner_pipeline: chain must span [0, 5/2]");
    if (epsilons.size() != chain_points.size() - 1)
        throw std::invalid_argument("run_inner_pipeline: one epsilon per chain interval");

    InnerPipelineResult out;
    IntervalErrorState state;  // zero at x = 0
    IntervalValue gEpp(Rational(0)), gEp(Rational(0)), gE(Rational(0));
    for (std::size_t i = 0; i + 1 < chain_points.size(); ++i) {
        const Rational &xl = chain_points[i], &xr = chain_points[i + 1];
        EnergyBoundSet bounds = bound_energy_set(inner, xl, xr, brackets);
        IntervalValue rsup = remainder_sup_on(inner, rem, xl, xr);
        InnerContractionCert cert = verify_lemma5(inner, "I" + std::to_string(i + 1), xl, xr, state,
                                                  bounds, rsup, epsilons[i]);
        // sup bounds over this interval (state propagated after the cert)
        if (!cert.verdict) {
            out.certs.push_back(cert);
            out.verdict = false;
            return out;
        }
        IntervalErrorState next = integrate_error_state(cert, state);
        cert.Ep_bound = next.Ep_abs;
        cert.E_bound = next.E_abs;
        out.certs.push_back(cert);
        gEpp = IntervalValue(max(gEpp.hi(), next.Epp_abs.hi()));
        gEp = IntervalValue(max(gEp.hi(), next.Ep_abs.hi()));
        gE = IntervalValue(max(gE.hi(), next.E_abs.hi()));
        state = next;
    }
    out.final_state = state;
    out.global_Epp = gEpp;
    out.global_Ep = gEp;
    out.global_E = gE;
    out.verdict = true;
    return out;
}

InnerPipelineResult run_inner_pipeline(const InnerApproximant& inner, const Partition& part,
                                       const RemainderBounds& rem,
                                       const std::vector<SignChangeBracket>& brackets) {
    const std::vector<Rational> chain = {Rational(0), x_c(), Rational(2), Rational(5, 2)};
    const std::vector<Rational> eps = {Rational(3, 1000000), Rational(2, 1000000), Rational(3, 1000000)};
    return run_inner_pipeline(inner, part, rem, brackets, chain, eps);
}

}  // namespace blasius
