#ifndef SIXVERTEX_REAL_HPP
#define SIXVERTEX_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sixvertex {

// Arbitrary-precision scalar used throughout. Expression templates are off so
// the type composes with Eigen.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Parameter outside the admissible domain of a phase parametrization.
struct DomainError : Error {
    using Error::Error;
};
// |Delta| is within tolerance of 1; phase boundaries are out of scope.
struct PhaseBoundaryError : Error {
    using Error::Error;
};
struct ResourceLimitError : Error {
    using Error::Error;
};
// Reciprocal of a series whose constant term is numerically zero.
struct NearSingularError : Error {
    using Error::Error;
};
// Estimated cancellation exceeded half the working precision.
struct InsufficientPrecisionError : Error {
    using Error::Error;
};
// Hankel pivot came out nonpositive: truncation or precision exhaustion.
struct MomentSequenceError : Error {
    using Error::Error;
};
struct TruncationError : Error {
    using Error::Error;
};
struct UnderflowError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Precision management. boost tracks default precision in decimal digits;
// binary bit counts are the interface used by this library.
// ---------------------------------------------------------------------------

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}

// Scoped override of the (thread-local) default precision.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(Real::default_precision()) {
        Real::default_precision(bits_to_digits10(bits));
    }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
    ~PrecisionGuard() { Real::default_precision(saved_); }

  private:
    unsigned saved_;
};

// Copy of x carrying exactly the current default precision.
inline Real at_current_precision(const Real& x) {
    Real y(0);
    y = x;  // assignment rounds into y's (default) precision
    return y;
}

inline Real round_to_bits(const Real& x, unsigned bits) {
    PrecisionGuard guard(bits);
    return at_current_precision(x);
}

inline Real pi_value() {
    Real x(0);
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

// floor(log2 |x|) + 1, i.e. the mpfr exponent. Very negative for x == 0.
inline long log2_magnitude(const Real& x) {
    if (x == 0) return std::numeric_limits<long>::min() / 2;
    return static_cast<long>(mpfr_get_exp(x.backend().data()));
}

inline Real ldexp2(const Real& x, long e) {  // x * 2^e
    Real y = x;
    mpfr_mul_2si(y.backend().data(), y.backend().data(), e, MPFR_RNDN);
    return y;
}

inline Real pow2(long e) { return ldexp2(Real(1), e); }

// Full-precision decimal string (round-trips at the value's own precision).
inline std::string to_decimal_string(const Real& x) {
    return x.str(0, std::ios_base::scientific);
}

inline Real factorial_real(int k) {
    Real f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace sixvertex

#endif
