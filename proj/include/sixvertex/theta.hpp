#ifndef SIXVERTEX_THETA_HPP
#define SIXVERTEX_THETA_HPP

#include <cmath>

#include "sixvertex/real.hpp"

namespace sixvertex {

// Jacobi theta series for real nome 0 < q < 1. nstar is the truncation index:
// q^(nstar^2) < 2^(-precision_bits), so dropped terms are below the working
// precision.
struct ThetaContext {
    Real q;
    unsigned precision_bits;
    int nstar;
};

inline ThetaContext make_theta_context(const Real& q, unsigned precision_bits) {
    if (q == 0) throw UnderflowError("theta context: nome underflowed to zero");
    if (!(q > 0 && q < 1)) throw DomainError("theta context requires 0 < q < 1");
    double logq = static_cast<double>(log(q));
    int nstar = static_cast<int>(std::ceil(
                    std::sqrt(precision_bits * 0.6931471805599453 / -logq))) + 1;
    return ThetaContext{q, precision_bits, nstar};
}

// q = exp(-pi^2 / (2 gamma))
inline Real nome(const Real& gamma, unsigned precision_bits) {
    if (!(gamma > 0)) throw DomainError("nome requires gamma > 0");
    PrecisionGuard guard(precision_bits);
    Real pi = pi_value();
    Real q = exp(-pi * pi / (2 * gamma));
    if (q == 0)
        throw UnderflowError("nome underflowed at the requested precision");
    return q;
}

inline ThetaContext theta_context_for(const Real& gamma, unsigned precision_bits) {
    return make_theta_context(nome(gamma, precision_bits), precision_bits);
}

// theta_1(z) = 2 sum (-1)^n q^((n+1/2)^2) sin((2n+1)z)
// theta_2(z) = 2 sum q^((n+1/2)^2) cos((2n+1)z)
// theta_3(z) = 1 + 2 sum q^(n^2) cos(2nz)
// theta_4(z) = 1 + 2 sum (-1)^n q^(n^2) cos(2nz)
inline Real theta(int j, const Real& z, const ThetaContext& ctx) {
    PrecisionGuard guard(ctx.precision_bits + 32);
    Real sum(0);
    if (j == 1 || j == 2) {
        for (int n = 0; n <= ctx.nstar; ++n) {
            Real e = Real(n) + Real(1) / 2;
            Real term = pow(ctx.q, e * e);
            term *= (j == 1) ? sin((2 * n + 1) * z) : cos((2 * n + 1) * z);
            if (j == 1 && (n & 1)) term = -term;
            sum += term;
        }
        return 2 * sum;
    }
    if (j == 3 || j == 4) {
        for (int n = 1; n <= ctx.nstar; ++n) {
            Real term = pow(ctx.q, Real(n) * n) * cos(2 * n * z);
            if (j == 4 && (n & 1)) term = -term;
            sum += term;
        }
        return 1 + 2 * sum;
    }
    throw DomainError("theta index must be 1..4");
}

// theta_1'(0) by termwise differentiation: 2 sum (-1)^n q^((n+1/2)^2) (2n+1).
inline Real theta1_prime0(const ThetaContext& ctx) {
    PrecisionGuard guard(ctx.precision_bits + 32);
    Real sum(0);
    for (int n = 0; n <= ctx.nstar; ++n) {
        Real e = Real(n) + Real(1) / 2;
        Real term = pow(ctx.q, e * e) * (2 * n + 1);
        if (n & 1) term = -term;
        sum += term;
    }
    return 2 * sum;
}

// Norms of the shifted monic Meixner polynomials (beta = 0 specialization):
// h_k = (k!)^2 q^(k+1) / (1-q)^(2k+1). Works for exact scalar types as well.
template <typename T>
T meixner_norm(int k, const T& q) {
    if (k < 0) throw DomainError("meixner_norm requires k >= 0");
    if (!(q > 0 && q < 1)) throw DomainError("meixner_norm requires 0 < q < 1");
    T fact(1);
    for (int i = 2; i <= k; ++i) fact *= i;
    T num = fact * fact * pow(q, k + 1);
    return num / pow(T(1) - q, 2 * k + 1);
}

}  // namespace sixvertex

#endif
