#ifndef KNOTPOLY_BIVAR_POLY_HPP
#define KNOTPOLY_BIVAR_POLY_HPP

#include <map>
#include <string>
#include <utility>

#include "knotpoly/bigint.hpp"

namespace knotpoly {

/// Sparse exact polynomial in (x, y) with nonnegative exponents.
///
/// Terms are stored in the canonical print order (e_x descending, then e_y
/// descending) and no stored coefficient is zero.
class BivarPoly {
public:
    struct DescLex {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            if (a.first != b.first) return a.first > b.first;
            return a.second > b.second;
        }
    };
    using TermMap = std::map<std::pair<int, int>, BigInt, DescLex>;

    BivarPoly() = default;

    static BivarPoly constant(BigInt c);
    static BivarPoly monomial(BigInt c, int ex, int ey);
    static BivarPoly var_x() { return monomial(1, 1, 0); }
    static BivarPoly var_y() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int degree_x() const;
    int degree_y() const;

    BigInt coefficient(int ex, int ey) const;

    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator-() const;

    bool operator==(const BivarPoly& rhs) const { return terms_ == rhs.terms_; }

    BivarPoly swap_xy() const;

    /// Exact evaluation at integer arguments.
    BigInt eval_exact(const BigInt& x, const BigInt& y) const;

    /// Canonical text form, e.g. "+x^4 +2*x^3 +x^2*y +y".
    std::string to_text() const;
    static BivarPoly parse(const std::string& text);

    void set_term(int ex, int ey, BigInt c);  // replaces; drops zeros

private:
    TermMap terms_;
};

} // namespace knotpoly

#endif
