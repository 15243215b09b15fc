#ifndef KNOTPOLY_LOCUS_HPP
#define KNOTPOLY_LOCUS_HPP

#include <complex>
#include <vector>

#include "knotpoly/jones.hpp"

namespace knotpoly {

struct Region {
    double re_min = -2.0, re_max = 3.0;
    double im_min = -2.0, im_max = 2.0;
};

/// All zeros of V(H_{r(m)}, t) with per-root relative residuals
/// (|V(z)| over the largest term magnitude at z). Zeros are sorted by
/// (re, im), so the output order is independent of thread count.
struct ZeroSet {
    int m = 0;
    int r = 0;
    std::vector<std::complex<double>> zeros;
    std::vector<double> residuals;
};

ZeroSet find_zeros(int m, bool parallel = true);

/// One sample of the dominance structure at a point of the t plane.
/// dominant[0], dominant[1] are the slots of the two largest magnitudes
/// (0 = the unit root, 1..4 = quartic roots in solver order).
struct LocusSample {
    std::complex<double> t;
    double gap = 0.0;
    bool on_locus = false;
    int dominant[2] = {0, 0};
};

/// Gap between the two largest lambda magnitudes at t0, canonicalized to the
/// upper half plane (the lambda multiset at conj(t) is the conjugate multiset,
/// so the gap is conjugation-invariant; evaluating at the representative makes
/// that exact in floating point as well).
LocusSample dominance_gap(std::complex<double> t0, double eps = 1e-3);

struct ScanOptions {
    int grid = 400;        // subdivisions per axis; nodes are grid+1 per axis
    double eps = 1e-3;     // locus membership threshold on the relative gap
    int refine_steps = 26; // edge-search iterations (locates minima to ~1e-6)
    bool parallel = true;
};

/// Grid scan of the dominance gap plus refinement of near-locus grid edges:
/// flagged grid nodes first (row-major, im then re ascending), then refined
/// edge minima in deterministic edge order.
std::vector<LocusSample> scan_locus(const Region& region, const ScanOptions& opts);

/// Test helpers over zero sets.
bool conjugation_closed(const std::vector<std::complex<double>>& zs, double tol);
bool has_negative_real_zero(const std::vector<std::complex<double>>& zs, double imag_tol);

} // namespace knotpoly

#endif
