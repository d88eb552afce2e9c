#include "sixvertex/model.hpp"

namespace sixvertex {

std::string phase_name(Phase p) {
    switch (p) {
        case Phase::Ferroelectric: return "ferroelectric";
        case Phase::Antiferroelectric: return "antiferroelectric";
        case Phase::Disordered: return "disordered";
    }
    return "?";
}

Phase phase_from_string(const std::string& s) {
    if (s == "f" || s == "ferroelectric") return Phase::Ferroelectric;
    if (s == "af" || s == "antiferroelectric") return Phase::Antiferroelectric;
    if (s == "d" || s == "disordered") return Phase::Disordered;
    throw DomainError("unknown phase '" + s + "' (expected f|af|d)");
}

void PhaseParams::validate() const {
    if (!(gamma > 0)) throw DomainError("gamma must be positive");
    switch (phase) {
        case Phase::Ferroelectric:
            if (!(gamma < t))
                throw DomainError("ferroelectric domain requires 0 < gamma < t");
            break;
        case Phase::Antiferroelectric:
            if (!(abs(t) < gamma))
                throw DomainError("antiferroelectric domain requires |t| < gamma");
            break;
        case Phase::Disordered: {
            PrecisionGuard guard(precision_bits);
            if (!(abs(t) < gamma && gamma < pi_value() / 2))
                throw DomainError("disordered domain requires |t| < gamma < pi/2");
            break;
        }
    }
}

PhaseParams make_params(Phase phase, const Real& gamma, const Real& t,
                        unsigned precision_bits) {
    PhaseParams p{phase, gamma, t, precision_bits};
    p.validate();
    return p;
}

BoltzmannWeights weights_from_params(const PhaseParams& p) {
    p.validate();
    PrecisionGuard guard(p.precision_bits);
    BoltzmannWeights bw;
    switch (p.phase) {
        case Phase::Ferroelectric:
            bw.a = sinh(p.t - p.gamma);
            bw.b = sinh(p.t + p.gamma);
            bw.c = sinh(2 * p.gamma);
            break;
        case Phase::Antiferroelectric:
            bw.a = sinh(p.gamma - p.t);
            bw.b = sinh(p.gamma + p.t);
            bw.c = sinh(2 * p.gamma);
            break;
        case Phase::Disordered:
            bw.a = sin(p.gamma - p.t);
            bw.b = sin(p.gamma + p.t);
            bw.c = sin(2 * p.gamma);
            break;
    }
    Real ra = sqrt(bw.a), rb = sqrt(bw.b), rc = sqrt(bw.c);
    bw.w = {ra, ra, rb, rb, rc, rc};
    return bw;
}

Real delta_parameter(const Real& a, const Real& b, const Real& c) {
    if (!(a > 0 && b > 0 && c > 0))
        throw DomainError("delta requires positive weights a, b, c");
    return (a * a + b * b - c * c) / (2 * a * b);
}

Phase classify_phase(const Real& delta, unsigned precision_bits) {
    Real tol = pow2(-static_cast<long>(precision_bits / 2));
    if (abs(abs(delta) - 1) < tol)
        throw PhaseBoundaryError("|Delta| = 1 within tolerance: phase boundary excluded");
    if (delta > 1) return Phase::Ferroelectric;
    if (delta < -1) return Phase::Antiferroelectric;
    return Phase::Disordered;
}

ReducedWeights reduce_general_weights(const std::array<Real, 6>& w) {
    for (const Real& wi : w)
        if (!(wi > 0)) throw DomainError("vertex weights must be positive");
    ReducedWeights r;
    r.a = sqrt(w[0] * w[1]);
    r.b = sqrt(w[2] * w[3]);
    r.c = sqrt(w[4] * w[5]);
    r.drift = w[4] / w[5];
    return r;
}

}  // namespace sixvertex
