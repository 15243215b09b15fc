#include "knotpoly/locus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "knotpoly/errors.hpp"
#include "knotpoly/root_finder.hpp"
#include "knotpoly/spectra.hpp"

namespace knotpoly {

ZeroSet find_zeros(int m, bool parallel) {
    if (m < 1) throw InvalidParameter("find_zeros requires m >= 1");
    if (m > 200) throw TooLarge("find_zeros guarded at m <= 200");
    const LaurentPoly v = jones_H(m);

    AberthOptions opts;
    opts.parallel = parallel;
    std::vector<std::complex<long double>> roots = roots_of_laurent(v, opts);

    ZeroSet zs;
    zs.m = m;
    zs.r = 4 * m + 2;
    zs.zeros.reserve(roots.size());
    for (const auto& z : roots)
        zs.zeros.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    std::sort(zs.zeros.begin(), zs.zeros.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    std::vector<int> bad;
    zs.residuals.resize(zs.zeros.size());
    for (size_t i = 0; i < zs.zeros.size(); ++i) {
        const std::complex<double>& z = zs.zeros[i];
        const ScaledEval ev = v.eval_scaled({z.real(), z.imag()});
        const double resid = static_cast<double>(std::abs(ev.value) / ev.max_term_magnitude);
        zs.residuals[i] = resid;
        if (!(resid <= 1e-9)) bad.push_back(static_cast<int>(i));
    }
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "zero refinement exceeded the residual bound at indices";
        for (int i : bad) msg << ' ' << i;
        throw ConvergenceFailure(msg.str());
    }
    return zs;
}

LocusSample dominance_gap(std::complex<double> t0, double eps) {
    if (t0 == std::complex<double>(0.0, 0.0)) throw ZeroArgument("dominance_gap at t = 0");
    // conjugation representative: lambda multiset at conj(t) is the conjugate
    // multiset, so evaluating in the upper half plane is exact symmetry
    const std::complex<double> rep(t0.real(), std::fabs(t0.imag()));
    const auto quartic = quartic_roots_numeric(rep);
    double mags[5];
    mags[0] = 1.0;
    for (size_t i = 0; i < 4; ++i) mags[i + 1] = std::abs(quartic[i]);
    int order[5] = {0, 1, 2, 3, 4};
    std::sort(order, order + 5, [&](int a, int b) {
        if (mags[a] != mags[b]) return mags[a] > mags[b];
        return a < b;
    });
    LocusSample s;
    s.t = t0;
    s.gap = (mags[order[0]] - mags[order[1]]) / mags[order[0]];
    s.on_locus = s.gap < eps;
    s.dominant[0] = order[0];
    s.dominant[1] = order[1];
    return s;
}

namespace {

struct Edge {
    std::complex<double> a, b;
};

// Deterministic golden-section search for the gap minimum along a grid edge.
LocusSample refine_edge(const Edge& e, int steps, double eps) {
    const double phi = 0.6180339887498949;
    double lo = 0.0, hi = 1.0;
    auto at = [&](double s) {
        return std::complex<double>(e.a.real() + s * (e.b.real() - e.a.real()),
                                    e.a.imag() + s * (e.b.imag() - e.a.imag()));
    };
    auto gap_at = [&](double s) { return dominance_gap(at(s), eps).gap; };
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double g1 = gap_at(x1), g2 = gap_at(x2);
    for (int i = 0; i < steps; ++i) {
        if (g1 <= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = gap_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = gap_at(x2);
        }
    }
    return dominance_gap(at(0.5 * (lo + hi)), eps);
}

} // namespace

std::vector<LocusSample> scan_locus(const Region& region, const ScanOptions& opts) {
    if (opts.grid < 2) throw InvalidParameter("scan_locus requires grid >= 2");
    if (!(opts.eps > 0)) throw InvalidParameter("scan_locus requires eps > 0");
    const int n = opts.grid;
    const int nodes = n + 1;
    const double dre = (region.re_max - region.re_min) / n;
    const double dim = (region.im_max - region.im_min) / n;

    // grid samples (row-major: im rows ascending, re columns ascending)
    std::vector<LocusSample> grid(static_cast<size_t>(nodes) * nodes);
    std::vector<char> valid(static_cast<size_t>(nodes) * nodes, 0);

#pragma omp parallel for schedule(static) if (opts.parallel)
    for (int row = 0; row < nodes; ++row) {
        for (int col = 0; col < nodes; ++col) {
            const std::complex<double> t(region.re_min + col * dre, region.im_min + row * dim);
            const size_t idx = static_cast<size_t>(row) * nodes + col;
            if (std::abs(t) < 1e-12) continue;  // the spectrum is singular at t = 0
            grid[idx] = dominance_gap(t, opts.eps);
            valid[idx] = 1;
        }
    }

    std::vector<LocusSample> result;
    for (size_t i = 0; i < grid.size(); ++i)
        if (valid[i] && grid[i].on_locus) result.push_back(grid[i]);

    // near-locus edges: refine wherever an endpoint gap is already small
    const double near = 50.0 * opts.eps;
    std::vector<Edge> edges;
    auto consider = [&](size_t ia, size_t ib) {
        if (!valid[ia] || !valid[ib]) return;
        if (std::min(grid[ia].gap, grid[ib].gap) < near)
            edges.push_back({grid[ia].t, grid[ib].t});
    };
    for (int row = 0; row < nodes; ++row)
        for (int col = 0; col + 1 < nodes; ++col)
            consider(static_cast<size_t>(row) * nodes + col, static_cast<size_t>(row) * nodes + col + 1);
    for (int row = 0; row + 1 < nodes; ++row)
        for (int col = 0; col < nodes; ++col)
            consider(static_cast<size_t>(row) * nodes + col, static_cast<size_t>(row + 1) * nodes + col);

    std::vector<LocusSample> refined(edges.size());
#pragma omp parallel for schedule(static) if (opts.parallel)
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        refined[static_cast<size_t>(i)] = refine_edge(edges[static_cast<size_t>(i)], opts.refine_steps, opts.eps);

    for (const auto& s : refined)
        if (s.on_locus) result.push_back(s);
    return result;
}

bool conjugation_closed(const std::vector<std::complex<double>>& zs, double tol) {
    for (const auto& z : zs) {
        if (std::fabs(z.imag()) <= tol) continue;
        bool paired = false;
        for (const auto& w : zs) {
            if (std::abs(std::conj(z) - w) <= tol) {
                paired = true;
                break;
            }
        }
        if (!paired) return false;
    }
    return true;
}

bool has_negative_real_zero(const std::vector<std::complex<double>>& zs, double imag_tol) {
    for (const auto& z : zs)
        if (std::fabs(z.imag()) < imag_tol && z.real() < 0.0) return true;
    return false;
}

} // namespace knotpoly
