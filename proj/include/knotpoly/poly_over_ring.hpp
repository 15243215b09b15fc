#ifndef KNOTPOLY_POLY_OVER_RING_HPP
#define KNOTPOLY_POLY_OVER_RING_HPP

#include <vector>

namespace knotpoly {

/// Polynomial in an outer variable (z or xi) whose coefficients live in an
/// exact ring (BivarPoly or LaurentPoly). Trailing zero coefficients are
/// trimmed so degree() is well-defined; the zero polynomial has degree -1.
template <class Ring>
class PolyOverRing {
public:
    PolyOverRing() = default;
    explicit PolyOverRing(std::vector<Ring> ascending) : coeffs_(std::move(ascending)) { trim(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Ring& coeff(int k) const {
        static const Ring zero{};
        if (k < 0 || k > degree()) return zero;
        return coeffs_[static_cast<size_t>(k)];
    }
    const std::vector<Ring>& coeffs() const { return coeffs_; }

    void set_coeff(int k, Ring value) {
        if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<size_t>(k) + 1);
        coeffs_[static_cast<size_t>(k)] = std::move(value);
        trim();
    }

    friend PolyOverRing operator+(const PolyOverRing& a, const PolyOverRing& b) {
        std::vector<Ring> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.coeffs_.size()) r[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) r[i] += b.coeffs_[i];
        }
        return PolyOverRing(std::move(r));
    }

    friend PolyOverRing operator-(const PolyOverRing& a, const PolyOverRing& b) {
        std::vector<Ring> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.coeffs_.size()) r[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) r[i] -= b.coeffs_[i];
        }
        return PolyOverRing(std::move(r));
    }

    friend PolyOverRing operator*(const PolyOverRing& a, const PolyOverRing& b) {
        if (a.is_zero() || b.is_zero()) return PolyOverRing();
        std::vector<Ring> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return PolyOverRing(std::move(r));
    }

    bool operator==(const PolyOverRing& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Formal derivative with respect to the outer variable.
    PolyOverRing derivative() const {
        std::vector<Ring> r;
        for (int k = 1; k <= degree(); ++k) {
            Ring c{};
            for (int i = 0; i < k; ++i) c += coeffs_[static_cast<size_t>(k)];
            r.push_back(std::move(c));
        }
        return PolyOverRing(std::move(r));
    }

    /// Evaluate at a ring element.
    Ring eval(const Ring& at) const {
        Ring acc{};
        for (int k = degree(); k >= 0; --k) acc = acc * at + coeffs_[static_cast<size_t>(k)];
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Ring> coeffs_;  // ascending powers of the outer variable
};

/// Determinant of a square matrix over an exact ring, by cofactor expansion
/// memoized on column subsets. Intended for small matrices (n <= 12).
template <class Ring>
Ring ring_determinant(const std::vector<std::vector<Ring>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Ring{};
    std::vector<Ring> memo(static_cast<size_t>(1) << n);
    std::vector<bool> seen(static_cast<size_t>(1) << n, false);

    // det over rows [n - popcount(mask), n) and the column set `mask`
    auto solve = [&](auto&& self, unsigned mask) -> const Ring& {
        if (seen[mask]) return memo[mask];
        seen[mask] = true;
        if (mask == 0) {
            // empty minor: determinant 1 is represented lazily by the caller
            return memo[mask];
        }
        const int row = n - __builtin_popcount(mask);
        Ring acc{};
        int sign = 1;
        for (int col = 0; col < n; ++col) {
            if (!(mask >> col & 1u)) continue;
            const unsigned rest = mask & ~(1u << col);
            if (!m[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) {
                Ring term = (rest == 0)
                                ? m[static_cast<size_t>(row)][static_cast<size_t>(col)]
                                : m[static_cast<size_t>(row)][static_cast<size_t>(col)] * self(self, rest);
                if (sign < 0)
                    acc -= term;
                else
                    acc += term;
            }
            sign = -sign;
        }
        memo[mask] = std::move(acc);
        return memo[mask];
    };
    const unsigned full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    return solve(solve, full);
}

/// Resultant of two polynomials over an exact ring via the Sylvester matrix.
template <class Ring>
Ring ring_resultant(const PolyOverRing<Ring>& f, const PolyOverRing<Ring>& g) {
    const int df = f.degree(), dg = g.degree();
    const int n = df + dg;
    std::vector<std::vector<Ring>> m(static_cast<size_t>(n),
                                     std::vector<Ring>(static_cast<size_t>(n)));
    for (int i = 0; i < dg; ++i)
        for (int k = 0; k <= df; ++k) m[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = f.coeff(df - k);
    for (int i = 0; i < df; ++i)
        for (int k = 0; k <= dg; ++k)
            m[static_cast<size_t>(dg + i)][static_cast<size_t>(i + k)] = g.coeff(dg - k);
    return ring_determinant(m);
}

} // namespace knotpoly

#endif
