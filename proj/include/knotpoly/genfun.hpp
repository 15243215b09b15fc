#ifndef KNOTPOLY_GENFUN_HPP
#define KNOTPOLY_GENFUN_HPP

#include <array>
#include <string>
#include <vector>

#include "knotpoly/bivar_poly.hpp"
#include "knotpoly/poly_over_ring.hpp"

namespace knotpoly {

/// Rational generating function in the auxiliary variable z whose power-series
/// coefficients are the Tutte polynomials of the S_m family:
/// numerator degree 4, denominator degree 5 with constant term 1.
struct GenFun {
    PolyOverRing<BivarPoly> numerator;    // a_0..a_4
    PolyOverRing<BivarPoly> denominator;  // 1 + b_1 z + ... + b_5 z^5

    BivarPoly a(int j) const { return numerator.coeff(j); }
    BivarPoly b(int j) const { return denominator.coeff(j); }
};

/// The exact hard-coded coefficients a_0..a_4 and b_1..b_5.
const GenFun& build_genfun();

/// First m_max Tutte polynomials T(S_1)..T(S_max) by exact long division of
/// the generating function in the power-series ring in z.
std::vector<BivarPoly> tutte_series(const GenFun& gf, int m_max);

/// One step of the linear recursion
///   T_{m+5} = -(b_1 T_{m+4} + b_2 T_{m+3} + b_3 T_{m+2} + b_4 T_{m+1} + b_5 T_m)
/// in any coefficient ring (bivariate, or Laurent after specialization).
/// window = {T_m, ..., T_{m+4}}, b = {b_1, ..., b_5} in the same ring.
template <class Ring>
Ring tutte_recursion_step(const std::array<Ring, 5>& window, const std::array<Ring, 5>& b) {
    Ring acc{};
    for (int j = 0; j < 5; ++j) acc += b[static_cast<size_t>(j)] * window[static_cast<size_t>(4 - j)];
    return -acc;
}

struct IdentityReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_passed() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

/// Exact checks of a_j against deletion-contraction values:
/// a_0 = T_1, a_1 = T_2 + b_1 T_1, ..., a_4 = T_5 + b_1 T_4 + ... + b_4 T_1.
IdentityReport verify_numerator_identities(const GenFun& gf);

/// b_j(x,y) = b_j(y,x) for all j, and a_j(x,y) != a_j(y,x) for all j.
IdentityReport verify_b_symmetry(const GenFun& gf);

} // namespace knotpoly

#endif
