#ifndef SIXVERTEX_SERIES_HPP
#define SIXVERTEX_SERIES_HPP

#include <cmath>
#include <vector>

#include "sixvertex/model.hpp"
#include "sixvertex/real.hpp"

namespace sixvertex {

// Truncated Taylor series about a fixed center: coeff[m] = f^(m)(center)/m!.
// All arithmetic is closed at the common order; operands must share center
// and order.
template <typename T>
struct TruncatedSeries {
    T center;
    std::vector<T> coeff;

    int order() const { return static_cast<int>(coeff.size()) - 1; }
};

namespace detail {
template <typename T>
void require_compatible(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g) {
    if (f.coeff.size() != g.coeff.size() || f.center != g.center)
        throw DomainError("series operands must share center and order");
}
}  // namespace detail

template <typename T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g) {
    detail::require_compatible(f, g);
    TruncatedSeries<T> r{f.center, f.coeff};
    for (std::size_t m = 0; m < r.coeff.size(); ++m) r.coeff[m] += g.coeff[m];
    return r;
}

template <typename T>
TruncatedSeries<T> series_scale(const TruncatedSeries<T>& f, const T& s) {
    TruncatedSeries<T> r{f.center, f.coeff};
    for (auto& c : r.coeff) c *= s;
    return r;
}

template <typename T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g) {
    detail::require_compatible(f, g);
    const std::size_t n = f.coeff.size();
    TruncatedSeries<T> r{f.center, std::vector<T>(n, T(0))};
    for (std::size_t i = 0; i < n; ++i) {
        if (f.coeff[i] == 0) continue;
        for (std::size_t j = 0; j + i < n; ++j) r.coeff[i + j] += f.coeff[i] * g.coeff[j];
    }
    return r;
}

// g = 1/f via g_m = -(1/f_0) sum_{j=1..m} f_j g_{m-j}.
inline TruncatedSeries<Real> series_reciprocal(const TruncatedSeries<Real>& f,
                                               unsigned precision_bits) {
    if (abs(f.coeff[0]) < pow2(-static_cast<long>(precision_bits / 2)))
        throw NearSingularError("series reciprocal: constant term is numerically zero");
    const std::size_t n = f.coeff.size();
    TruncatedSeries<Real> g{f.center, std::vector<Real>(n, Real(0))};
    Real inv0 = 1 / f.coeff[0];
    g.coeff[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        Real s(0);
        for (std::size_t j = 1; j <= m; ++j) s += f.coeff[j] * g.coeff[m - j];
        g.coeff[m] = -inv0 * s;
    }
    return g;
}

enum class SeriesKind { Sin, Sinh };

// Taylor series of x -> kind(shift + sign*x) about x = t0.
inline TruncatedSeries<Real> elementary_series(SeriesKind kind, const Real& shift, int sign,
                                               const Real& t0, int order) {
    Real u0 = shift + sign * t0;
    std::array<Real, 4> cycle;
    if (kind == SeriesKind::Sin)
        cycle = {sin(u0), cos(u0), -sin(u0), -cos(u0)};
    else
        cycle = {sinh(u0), cosh(u0), sinh(u0), cosh(u0)};
    TruncatedSeries<Real> r{t0, std::vector<Real>(order + 1)};
    Real mfact(1);
    int sgn = 1;
    for (int m = 0; m <= order; ++m) {
        if (m > 0) {
            mfact *= m;
            sgn *= sign;
        }
        r.coeff[m] = sgn * cycle[m % 4] / mfact;
    }
    return r;
}

// Guard bits for a tower of order M (Cauchy products lose O(M log M) bits).
inline unsigned series_guard_bits(int order) {
    return static_cast<unsigned>(std::ceil(4.0 * order * std::log2(order + 2.0)));
}

namespace detail {

struct SymbolSeries {
    TruncatedSeries<Real> a, b;  // weight factors as functions of t
    Real c;                      // constant in t
};

inline SymbolSeries weight_series(const PhaseParams& p, int order) {
    SymbolSeries s;
    switch (p.phase) {
        case Phase::Ferroelectric:
            s.a = elementary_series(SeriesKind::Sinh, -p.gamma, +1, p.t, order);
            s.b = elementary_series(SeriesKind::Sinh, p.gamma, +1, p.t, order);
            s.c = sinh(2 * p.gamma);
            break;
        case Phase::Antiferroelectric:
            s.a = elementary_series(SeriesKind::Sinh, p.gamma, -1, p.t, order);
            s.b = elementary_series(SeriesKind::Sinh, p.gamma, +1, p.t, order);
            s.c = sinh(2 * p.gamma);
            break;
        case Phase::Disordered:
            s.a = elementary_series(SeriesKind::Sin, p.gamma, -1, p.t, order);
            s.b = elementary_series(SeriesKind::Sin, p.gamma, +1, p.t, order);
            s.c = sin(2 * p.gamma);
            break;
    }
    return s;
}

inline std::vector<Real> tower_from_series(const TruncatedSeries<Real>& f,
                                           unsigned target_bits) {
    std::vector<Real> tower(f.coeff.size());
    Real mfact(1);
    PrecisionGuard guard(target_bits);
    for (std::size_t m = 0; m < f.coeff.size(); ++m) {
        if (m > 0) mfact *= m;
        tower[m] = at_current_precision(f.coeff[m] * mfact);
    }
    return tower;
}

}  // namespace detail

// Derivative towers phi^(m)(t), psi^(m)(t) for m = 0..order, phi = c/(ab),
// psi = 1/a + 1/b. Computed by series arithmetic at guarded precision and
// rounded back to p.precision_bits.
inline std::vector<Real> derivative_tower_phi(const PhaseParams& p, int order) {
    p.validate();
    unsigned work = p.precision_bits + series_guard_bits(order);
    PrecisionGuard guard(work);
    auto s = detail::weight_series(p, order);
    auto phi = series_scale(series_reciprocal(series_mul(s.a, s.b), work), s.c);
    return detail::tower_from_series(phi, p.precision_bits);
}

inline std::vector<Real> derivative_tower_psi(const PhaseParams& p, int order) {
    p.validate();
    unsigned work = p.precision_bits + series_guard_bits(order);
    PrecisionGuard guard(work);
    auto s = detail::weight_series(p, order);
    auto psi = series_add(series_reciprocal(s.a, work), series_reciprocal(s.b, work));
    return detail::tower_from_series(psi, p.precision_bits);
}

}  // namespace sixvertex

#endif
