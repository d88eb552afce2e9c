#ifndef SIXVERTEX_MODEL_HPP
#define SIXVERTEX_MODEL_HPP

#include <array>
#include <string>

#include "sixvertex/real.hpp"

namespace sixvertex {

enum class Phase { Ferroelectric, Antiferroelectric, Disordered };

std::string phase_name(Phase p);
Phase phase_from_string(const std::string& s);

// The model's two free parameters plus the working precision carried with
// them. Immutable after construction; validate() enforces the per-phase
// parameter domain:
//   ferroelectric      0 < gamma < t          a = sinh(t-gamma)
//   antiferroelectric  |t| < gamma            a = sinh(gamma-t)
//   disordered         |t| < gamma < pi/2     a = sin(gamma-t)
struct PhaseParams {
    Phase phase;
    Real gamma;
    Real t;
    unsigned precision_bits = 256;

    Real zeta() const { return t / gamma; }
    void validate() const;
};

PhaseParams make_params(Phase phase, const Real& gamma, const Real& t,
                        unsigned precision_bits = 256);

struct BoltzmannWeights {
    Real a, b, c;
    std::array<Real, 6> w;  // w[0..5] = w1..w6
};

// (a, b, c) per the phase parametrization and w_i their square roots.
BoltzmannWeights weights_from_params(const PhaseParams& p);

Real delta_parameter(const Real& a, const Real& b, const Real& c);

// Classifies by sign of Delta-1 / Delta+1. Values within 2^(-precision_bits/2)
// of a boundary are rejected.
Phase classify_phase(const Real& delta, unsigned precision_bits);

struct ReducedWeights {
    Real a, b, c;
    Real drift;  // w5/w6; Z(w1..w6) = drift^(N/2) * Z(a,a,b,b,c,c)
};

ReducedWeights reduce_general_weights(const std::array<Real, 6>& w);

}  // namespace sixvertex

#endif
