#ifndef KNOTPOLY_SPECTRA_HPP
#define KNOTPOLY_SPECTRA_HPP

#include <array>
#include <complex>

#include "knotpoly/genfun.hpp"
#include "knotpoly/laurent_poly.hpp"
#include "knotpoly/poly_over_ring.hpp"

namespace knotpoly {

/// b_1t..b_5t: the denominator coefficients after x = -t, y = -1/t.
/// Satisfy b_1t = -b_4t, b_2t = -b_3t, b_5t = -1 (checked at startup).
const std::array<LaurentPoly, 5>& bjt_coeffs();

/// The quartic factor of the transfer denominator in the inverse variable xi:
///   Q_s = 1 + q1*xi*(1+xi^2) + q2*xi^2 + xi^4,  Q = t^3 * Q_s.
/// Q's coefficients carry explicit factorizations that are verified exactly
/// on construction.
struct QPolys {
    LaurentPoly q1, q2;
    PolyOverRing<LaurentPoly> Q_s;  // coefficients in the Laurent ring, xi ascending
    PolyOverRing<LaurentPoly> Q;
};
const QPolys& q_polys();

/// Auxiliary polynomials entering the closed-form quartic roots; palindromic
/// symmetries are verified exactly on construction.
struct AuxPolys {
    LaurentPoly Pa, Pb, R1;
};
const AuxPolys& aux_polys();

/// The four quartic roots in closed form,
///   (1/(4t^2)) * (P_a +/- sqrt(R1) +/- sqrt(2*(P_b +/- P_a*sqrt(R1)))),
/// with principal branches and the inner sign tied to the sign of sqrt(R1)
/// (the pairing that makes all four values exact roots of Q for every t).
/// Order: (+,+), (+,-), (-,+), (-,-).
std::array<std::complex<double>, 4> lambda_closed_form(std::complex<double> t0);

/// The same four roots by the global numeric method (Aberth on Q(.,t0));
/// branch-robust backup used as the authority in locus scans.
std::array<std::complex<double>, 4> quartic_roots_numeric(std::complex<double> t0);

/// Discriminant data: the factor polynomials, the exact discriminant
/// Disc = Res(Q, dQ/dxi) / t^3 computed in the Laurent ring, and the exact
/// identity checks (both the stated factorizations and the observed ones).
struct DiscriminantFactors {
    LaurentPoly D1, D2, D12, D3, D4;
    LaurentPoly disc;
    IdentityReport identities;
};
const DiscriminantFactors& discriminant_factors();

/// Five lambda values at a point: the unit root plus the four quartic roots,
/// with magnitudes sorted descending and the relative dominance gap.
struct SpectrumAtT {
    std::complex<double> t;
    std::array<std::complex<double>, 5> lambdas;
    std::array<double, 5> magnitudes;  // sorted descending
    double gap;                        // (M1 - M2) / M1
};
SpectrumAtT spectrum_at(std::complex<double> t0);

/// The two real zeros of D3 (ends of the real locus segment), with
/// outer*inner = 1 enforced to 1e-10, plus the degenerate unit-magnitude
/// conjugate pair of quartic roots at the outer endpoint.
struct SegmentEndpoints {
    double outer, inner;
    std::complex<double> degenerate_pair;  // Im > 0 representative
};
SegmentEndpoints segment_endpoints();

/// All eight zeros of R1 grouped as conjugate pairs (arc pair outside/inside
/// the unit circle, horseshoe pair outside/inside), and the unit-circle arc
/// endpoints (the unit-magnitude zeros of D3 whose dominance gap vanishes).
struct ArcEndpoints {
    // each entry is the Im > 0 representative of a conjugate pair
    std::complex<double> arc_outer, arc_inner;
    std::complex<double> horseshoe_outer, horseshoe_inner;
    std::complex<double> circle_endpoint;
    double circle_angle_deg;
};
ArcEndpoints arc_endpoints();

} // namespace knotpoly

#endif
