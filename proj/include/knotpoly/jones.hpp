#ifndef KNOTPOLY_JONES_HPP
#define KNOTPOLY_JONES_HPP

#include "knotpoly/laurent_poly.hpp"

namespace knotpoly {

/// Combinatorial bookkeeping for the m-th member of the family:
/// crossing number r = 4m+2, writhe and prefactor power from the mod-5 rule.
struct FamilyIndex {
    int m;
    int r;
    int writhe;
    int pt_power;
};

FamilyIndex family_index(int m);

/// V(H_{r(m)}, t) = t^{pt(m)} * T(S_m, -t, -1/t), exactly. The writhe is even
/// for every m, so the sign prefactor is +1. For m > 5 the Tutte value comes
/// from the linear recursion run in the Laurent ring.
LaurentPoly jones_H(int m);

/// max deg = (2m+3)-1+pt, min deg = -2m+pt, span = 4m+2.
bool degree_span_check(const LaurentPoly& v, const FamilyIndex& idx);

/// Coefficients of successive powers of t never share a sign.
bool sign_alternation_check(const LaurentPoly& v);

} // namespace knotpoly

#endif
