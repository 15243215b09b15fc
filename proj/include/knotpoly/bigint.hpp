#ifndef KNOTPOLY_BIGINT_HPP
#define KNOTPOLY_BIGINT_HPP

#include <gmpxx.h>
#include <cmath>
#include <cstdint>
#include <string>

namespace knotpoly {

// Exact integer coefficients. They grow exponentially with the family index,
// so fixed-width types are not an option anywhere exact results are produced.
using BigInt = mpz_class;

/// Lossless-range conversion to long double (values up to ~2^16380).
inline long double to_long_double(const BigInt& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

/// Base-2 logarithm of |v|; returns -infinity for v == 0.
inline double log2_abs(const BigInt& v) {
    if (sgn(v) == 0) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

} // namespace knotpoly

#endif
