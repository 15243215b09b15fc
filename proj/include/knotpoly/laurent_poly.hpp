#ifndef KNOTPOLY_LAURENT_POLY_HPP
#define KNOTPOLY_LAURENT_POLY_HPP

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "knotpoly/bigint.hpp"
#include "knotpoly/bivar_poly.hpp"

namespace knotpoly {

/// Result of a numerically scaled evaluation: the value together with the
/// magnitude of the largest term, so callers can form relative residuals.
struct ScaledEval {
    std::complex<long double> value;
    long double max_term_magnitude;
};

/// Sparse exact Laurent polynomial in t (signed integer exponents).
///
/// Terms are stored with exponents descending; no stored coefficient is zero.
/// The zero polynomial is the empty term map.
class LaurentPoly {
public:
    using TermMap = std::map<int, BigInt, std::greater<int>>;

    LaurentPoly() = default;

    static LaurentPoly constant(BigInt c);
    static LaurentPoly monomial(BigInt c, int e);
    static LaurentPoly var_t() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Largest/smallest exponent with nonzero coefficient; only valid when nonzero.
    int max_degree() const;
    int min_degree() const;

    BigInt coefficient(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }

    /// Multiply by t^k (exponent shift).
    LaurentPoly shifted(int k) const;

    /// p(1/t): every exponent negated. An involution.
    LaurentPoly invert_t() const;

    /// Dense coefficient vector, highest exponent first (degree span + 1 entries).
    std::vector<BigInt> dense_descending() const;

    /// Numeric evaluation via scaled Horner on the ordinary-polynomial part.
    /// Throws ZeroArgument when t0 == 0 and negative exponents are present.
    std::complex<double> eval(std::complex<double> t0) const;
    ScaledEval eval_scaled(std::complex<long double> t0) const;

    std::string to_text() const;
    static LaurentPoly parse(const std::string& text);

    void set_term(int e, BigInt c);

private:
    TermMap terms_;
};

/// Substitution x = -t, y = -1/t: x^a y^b maps to (-1)^(a+b) t^(a-b).
/// A ring homomorphism from the bivariate ring to the Laurent ring.
LaurentPoly specialize_jones(const BivarPoly& p);

} // namespace knotpoly

#endif
