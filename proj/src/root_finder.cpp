#include "knotpoly/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

using CLD = std::complex<long double>;

// Initial guesses on circles whose radii come from the upper convex hull of
// (k, log2|c_k|) over ascending powers k (Newton polygon / Bini placement).
std::vector<CLD> initial_guesses(const std::vector<double>& log2c) {
    const int n = static_cast<int>(log2c.size()) - 1;
    std::vector<std::pair<int, double>> hull;
    for (int k = 0; k <= n; ++k) {
        if (!std::isfinite(log2c[static_cast<size_t>(k)])) continue;
        std::pair<int, double> p{k, log2c[static_cast<size_t>(k)]};
        while (hull.size() >= 2) {
            const auto& [x1, y1] = hull[hull.size() - 2];
            const auto& [x2, y2] = hull[hull.size() - 1];
            if ((y2 - y1) * (p.first - x1) >= (p.second - y1) * (x2 - x1))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<CLD> z;
    z.reserve(static_cast<size_t>(n));
    const long double golden = 0.3819660112501051L;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        const auto& [k1, h1] = hull[s];
        const auto& [k2, h2] = hull[s + 1];
        const int cnt = k2 - k1;
        const long double r = std::exp2((static_cast<long double>(h1) - h2) / cnt);
        for (int j = 0; j < cnt; ++j) {
            const long double th =
                2.0L * static_cast<long double>(M_PI) * (static_cast<long double>(j) / cnt + golden * static_cast<long double>(s + 1)) + 0.5L;
            z.push_back(r * CLD(std::cos(th), std::sin(th)));
        }
    }
    return z;
}

struct HornerResult {
    CLD p, dp;
    long double scale;  // sum_k |c_k| |z|^k
};

HornerResult horner(const std::vector<CLD>& c, const std::vector<long double>& cabs, CLD z) {
    HornerResult r{c[0], CLD(0.0L, 0.0L), cabs[0]};
    const long double az = std::abs(z);
    for (size_t k = 1; k < c.size(); ++k) {
        r.dp = r.dp * z + r.p;
        r.p = r.p * z + c[k];
        r.scale = r.scale * az + cabs[k];
    }
    return r;
}

} // namespace

std::vector<CLD> aberth_roots(const std::vector<CLD>& coeffs_desc, const AberthOptions& opts) {
    // strip exact zero leading/trailing coefficients
    size_t lead = 0;
    while (lead < coeffs_desc.size() && coeffs_desc[lead] == CLD(0.0L, 0.0L)) ++lead;
    std::vector<CLD> c(coeffs_desc.begin() + static_cast<long>(lead), coeffs_desc.end());
    int zero_roots = 0;
    while (!c.empty() && c.back() == CLD(0.0L, 0.0L)) {
        c.pop_back();
        ++zero_roots;
    }
    if (c.size() <= 1) {
        if (c.empty()) throw InvalidParameter("aberth_roots: zero polynomial");
        return std::vector<CLD>(static_cast<size_t>(zero_roots), CLD(0.0L, 0.0L));
    }
    const int n = static_cast<int>(c.size()) - 1;

    std::vector<long double> cabs(c.size());
    std::vector<double> log2c_asc(c.size());
    for (size_t k = 0; k < c.size(); ++k) {
        cabs[k] = std::abs(c[k]);
        log2c_asc[c.size() - 1 - k] =
            cabs[k] == 0.0L ? -std::numeric_limits<double>::infinity()
                            : static_cast<double>(std::log2(cabs[k]));
    }

    std::vector<CLD> z = initial_guesses(log2c_asc);
    std::vector<CLD> z_next(static_cast<size_t>(n));
    std::vector<char> done(static_cast<size_t>(n), 0);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        int remaining = 0;

#pragma omp parallel for schedule(static) reduction(+ : remaining) if (opts.parallel)
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<size_t>(i)]) {
                z_next[static_cast<size_t>(i)] = z[static_cast<size_t>(i)];
                continue;
            }
            const CLD zi = z[static_cast<size_t>(i)];
            const HornerResult h = horner(c, cabs, zi);
            if (std::abs(h.p) <= opts.rel_tol * h.scale) {
                done[static_cast<size_t>(i)] = 1;
                z_next[static_cast<size_t>(i)] = zi;
                continue;
            }
            ++remaining;
            CLD w = (h.dp == CLD(0.0L, 0.0L)) ? CLD(0.0L, 0.0L) : h.p / h.dp;
            CLD s(0.0L, 0.0L);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const CLD d = zi - z[static_cast<size_t>(j)];
                if (d != CLD(0.0L, 0.0L)) s += 1.0L / d;
            }
            const CLD denom = 1.0L - w * s;
            CLD step = (denom == CLD(0.0L, 0.0L)) ? w : w / denom;
            if (h.dp == CLD(0.0L, 0.0L) && denom == CLD(0.0L, 0.0L)) {
                // stationary-point guard: nudge deterministically
                step = CLD(0.25L, 0.25L) * (std::abs(zi) + 1.0L);
            }
            z_next[static_cast<size_t>(i)] = zi - step;
        }
        std::swap(z, z_next);
        if (remaining == 0) break;
    }

    std::vector<int> unconverged;
    for (int i = 0; i < n; ++i) {
        if (done[static_cast<size_t>(i)]) continue;
        const HornerResult h = horner(c, cabs, z[static_cast<size_t>(i)]);
        if (std::abs(h.p) <= opts.rel_tol * h.scale * 16.0L)
            continue;
        unconverged.push_back(i);
    }
    if (!unconverged.empty()) {
        std::ostringstream msg;
        msg << "aberth iteration did not converge for root indices";
        for (int i : unconverged) msg << ' ' << i;
        throw ConvergenceFailure(msg.str());
    }

    for (int k = 0; k < zero_roots; ++k) z.emplace_back(0.0L, 0.0L);
    return z;
}

// ---- exact Newton polish in GMP floating point ------------------------------

namespace {

struct MpfC {
    mpf_class re, im;
    MpfC(int bits) : re(0, static_cast<mp_bitcnt_t>(bits)), im(0, static_cast<mp_bitcnt_t>(bits)) {}
};

void cmul(const MpfC& a, const MpfC& b, MpfC& out, mpf_class& t1, mpf_class& t2) {
    t1 = a.re * b.re - a.im * b.im;
    t2 = a.re * b.im + a.im * b.re;
    out.re = t1;
    out.im = t2;
}

} // namespace

std::vector<CLD> polish_roots_exact(const std::vector<BigInt>& coeffs_desc,
                                    const std::vector<CLD>& roots, int bits, int max_steps,
                                    bool parallel) {
    const int n = static_cast<int>(coeffs_desc.size()) - 1;
    if (n < 1) return roots;
    const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits);
    std::vector<mpf_class> cf;
    cf.reserve(coeffs_desc.size());
    for (const auto& c : coeffs_desc) cf.emplace_back(c, prec);

    std::vector<CLD> out(roots.size());
    const long double tiny = std::exp2(-static_cast<long double>(bits) * 0.5L);

#pragma omp parallel for schedule(static) if (parallel)
    for (int idx = 0; idx < static_cast<int>(roots.size()); ++idx) {
        MpfC z(bits);
        z.re = static_cast<double>(roots[static_cast<size_t>(idx)].real());
        z.im = static_cast<double>(roots[static_cast<size_t>(idx)].imag());
        // refill the low mantissa bits lost in the double conversion
        {
            const long double r = roots[static_cast<size_t>(idx)].real();
            const long double i = roots[static_cast<size_t>(idx)].imag();
            z.re += static_cast<double>(r - static_cast<long double>(static_cast<double>(r)));
            z.im += static_cast<double>(i - static_cast<long double>(static_cast<double>(i)));
        }
        MpfC p(bits), dp(bits), t(bits);
        mpf_class t1(0, prec), t2(0, prec), den(0, prec);
        for (int step = 0; step < max_steps; ++step) {
            p.re = cf[0];
            p.im = 0;
            dp.re = 0;
            dp.im = 0;
            for (size_t k = 1; k < cf.size(); ++k) {
                cmul(dp, z, t, t1, t2);
                dp.re = t.re + p.re;
                dp.im = t.im + p.im;
                cmul(p, z, t, t1, t2);
                p.re = t.re + cf[k];
                p.im = t.im;
            }
            den = dp.re * dp.re + dp.im * dp.im;
            if (sgn(den) == 0) break;
            // z -= p/dp
            t1 = (p.re * dp.re + p.im * dp.im) / den;
            t2 = (p.im * dp.re - p.re * dp.im) / den;
            z.re -= t1;
            z.im -= t2;
            const long double sr = std::fabs(t1.get_d());
            const long double si = std::fabs(t2.get_d());
            const long double az = std::fabs(z.re.get_d()) + std::fabs(z.im.get_d());
            if (sr + si <= tiny * std::max(az, 1e-30L)) break;
        }
        const long double zr = static_cast<long double>(mpf_get_d(z.re.get_mpf_t()));
        const long double zi2 = static_cast<long double>(mpf_get_d(z.im.get_mpf_t()));
        // recover long double precision beyond the double mantissa
        mpf_class rr = z.re - mpf_class(z.re.get_d(), prec);
        mpf_class ri = z.im - mpf_class(z.im.get_d(), prec);
        out[static_cast<size_t>(idx)] = CLD(zr + static_cast<long double>(rr.get_d()),
                                            zi2 + static_cast<long double>(ri.get_d()));
    }
    return out;
}

std::vector<CLD> roots_of_laurent(const LaurentPoly& p, const AberthOptions& opts) {
    if (p.is_zero()) throw InvalidParameter("roots_of_laurent: zero polynomial");
    const std::vector<BigInt> dense = p.dense_descending();
    // common power-of-two rescale keeps the long double conversion in range
    double maxlog = 0.0;
    for (const auto& c : dense)
        if (sgn(c) != 0) maxlog = std::max(maxlog, log2_abs(c));
    const long shift = static_cast<long>(maxlog);
    std::vector<CLD> c;
    c.reserve(dense.size());
    for (const auto& v : dense) {
        if (sgn(v) == 0) {
            c.emplace_back(0.0L, 0.0L);
            continue;
        }
        long e = 0;
        const double mant = mpz_get_d_2exp(&e, v.get_mpz_t());
        c.emplace_back(std::ldexp(static_cast<long double>(mant), static_cast<int>(e - shift)), 0.0L);
    }
    std::vector<CLD> roots = aberth_roots(c, opts);
    return polish_roots_exact(dense, roots, 256, 24, opts.parallel);
}

} // namespace knotpoly
