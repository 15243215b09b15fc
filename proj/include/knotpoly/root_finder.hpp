#ifndef KNOTPOLY_ROOT_FINDER_HPP
#define KNOTPOLY_ROOT_FINDER_HPP

#include <complex>
#include <vector>

#include "knotpoly/bigint.hpp"
#include "knotpoly/laurent_poly.hpp"

namespace knotpoly {

struct AberthOptions {
    int max_iterations = 800;
    // per-root stop: |p(z)| <= rel_tol * sum_k |c_k||z|^k
    long double rel_tol = 1e-16L;
    bool parallel = true;
};

/// All roots of a polynomial given by complex coefficients (highest power
/// first) via simultaneous Aberth-Ehrlich iteration. Initial guesses come
/// from the Newton polygon of (k, log2|c_k|), so extreme coefficient ranges
/// are fine. Jacobi sweeps keep results identical between the serial and the
/// OpenMP path. Throws ConvergenceFailure naming any unconverged root index.
std::vector<std::complex<long double>> aberth_roots(
    const std::vector<std::complex<long double>>& coeffs_desc, const AberthOptions& opts = {});

/// Newton-polishes approximate roots of an exact integer polynomial
/// (coefficients highest-first) in GMP floating point at `bits` precision.
/// Needed where double/long double conditioning is insufficient: zeros in
/// deep cancellation valleys move by orders of magnitude under polishing.
std::vector<std::complex<long double>> polish_roots_exact(
    const std::vector<BigInt>& coeffs_desc, const std::vector<std::complex<long double>>& roots,
    int bits = 256, int max_steps = 24, bool parallel = true);

/// Convenience: all roots of p * t^(-min_degree) for a nonzero Laurent
/// polynomial with exact coefficients (Aberth + exact polish).
std::vector<std::complex<long double>> roots_of_laurent(const LaurentPoly& p,
                                                        const AberthOptions& opts = {});

} // namespace knotpoly

#endif
