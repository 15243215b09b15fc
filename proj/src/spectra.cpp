#include "knotpoly/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "knotpoly/errors.hpp"
#include "knotpoly/root_finder.hpp"

namespace knotpoly {

namespace {

using CLD = std::complex<long double>;

LaurentPoly lp(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(c, e);
    return p;
}

CLD eval_lp(const LaurentPoly& p, CLD t0) { return p.eval_scaled(t0).value; }

} // namespace

const std::array<LaurentPoly, 5>& bjt_coeffs() {
    static const std::array<LaurentPoly, 5> b = [] {
        const LaurentPoly b1t = lp({{0, -4}, {1, 3}, {-1, 3}, {2, -1}, {-2, -1}});
        const LaurentPoly b2t = lp({{0, 10}, {1, -8}, {-1, -8}, {2, 4}, {-2, 4}, {3, -1}, {-3, -1}});
        std::array<LaurentPoly, 5> arr{b1t, b2t, -b2t, -b1t, LaurentPoly::constant(-1)};
        // cross-check against the bivariate coefficients
        const GenFun& gf = build_genfun();
        for (int j = 1; j <= 5; ++j) {
            if (!(specialize_jones(gf.b(j)) == arr[static_cast<size_t>(j - 1)]))
                throw std::logic_error("b_jt transcription disagrees with specialization");
        }
        return arr;
    }();
    return b;
}

const QPolys& q_polys() {
    static const QPolys q = [] {
        QPolys r;
        const auto& b = bjt_coeffs();
        const LaurentPoly one = LaurentPoly::constant(1);
        r.q1 = one + b[0];
        r.q2 = one + b[0] + b[1];
        // Q_s = 1 + q1*xi + q2*xi^2 + q1*xi^3 + xi^4
        r.Q_s = PolyOverRing<LaurentPoly>({one, r.q1, r.q2, r.q1, one});
        const LaurentPoly t3 = LaurentPoly::monomial(1, 3);
        r.Q = PolyOverRing<LaurentPoly>({t3 * one, t3 * r.q1, t3 * r.q2, t3 * r.q1, t3 * one});

        // verify the explicit coefficient factorizations of Q
        const LaurentPoly A = LaurentPoly::monomial(1, 3);
        const LaurentPoly B =
            LaurentPoly::var_t() * lp({{4, -1}, {3, 3}, {2, -3}, {1, 3}, {0, -1}});
        const LaurentPoly C = -(lp({{3, 1}, {2, -1}, {1, 2}, {0, -1}}) * lp({{3, 1}, {2, -2}, {1, 1}, {0, -1}}));
        if (!(r.Q.coeff(4) == A && r.Q.coeff(3) == B && r.Q.coeff(2) == C && r.Q.coeff(1) == B &&
              r.Q.coeff(0) == A))
            throw std::logic_error("Q factored coefficients disagree with t^3 * Q_s");
        // t-inversion symmetry of Q_s
        for (int k = 0; k <= 4; ++k) {
            if (!(r.Q_s.coeff(k).invert_t() == r.Q_s.coeff(k)))
                throw std::logic_error("Q_s is not t-inversion symmetric");
        }
        return r;
    }();
    return q;
}

const AuxPolys& aux_polys() {
    static const AuxPolys aux = [] {
        AuxPolys r;
        r.Pa = lp({{4, 1}, {3, -3}, {2, 3}, {1, -3}, {0, 1}});
        r.Pb = lp({{8, 1}, {7, -4}, {6, 9}, {5, -14}, {4, 11}, {3, -14}, {2, 9}, {1, -4}, {0, 1}});
        r.R1 = lp({{8, 1}, {7, -2}, {6, 3}, {5, -4}, {4, 9}, {3, -4}, {2, 3}, {1, -2}, {0, 1}});
        if (!(r.Pa.invert_t().shifted(4) == r.Pa)) throw std::logic_error("Pa palindrome broken");
        if (!(r.Pb.invert_t().shifted(8) == r.Pb)) throw std::logic_error("Pb palindrome broken");
        if (!(r.R1.invert_t().shifted(8) == r.R1)) throw std::logic_error("R1 palindrome broken");
        return r;
    }();
    return aux;
}

std::array<std::complex<double>, 4> lambda_closed_form(std::complex<double> t0) {
    if (t0 == std::complex<double>(0.0, 0.0))
        throw ZeroArgument("lambda_closed_form at t = 0");
    const auto& aux = aux_polys();
    const CLD t(t0.real(), t0.imag());
    const CLD pa = eval_lp(aux.Pa, t);
    const CLD pb = eval_lp(aux.Pb, t);
    const CLD s = std::sqrt(eval_lp(aux.R1, t));
    const CLD wp = std::sqrt(2.0L * (pb + pa * s));
    const CLD wm = std::sqrt(2.0L * (pb - pa * s));
    const CLD f = 1.0L / (4.0L * t * t);
    const std::array<CLD, 4> lam{f * (pa + s + wp), f * (pa + s - wp), f * (pa - s + wm),
                                 f * (pa - s - wm)};
    std::array<std::complex<double>, 4> out;
    for (size_t i = 0; i < 4; ++i)
        out[i] = {static_cast<double>(lam[i].real()), static_cast<double>(lam[i].imag())};
    return out;
}

std::array<std::complex<double>, 4> quartic_roots_numeric(std::complex<double> t0) {
    if (t0 == std::complex<double>(0.0, 0.0))
        throw ZeroArgument("quartic_roots_numeric at t = 0");
    const CLD t(t0.real(), t0.imag());
    const CLD A = t * t * t;
    const CLD B = t * (-t * t * t * t + 3.0L * t * t * t - 3.0L * t * t + 3.0L * t - 1.0L);
    const CLD C = -(t * t * t - t * t + 2.0L * t - 1.0L) * (t * t * t - 2.0L * t * t + t - 1.0L);
    AberthOptions opts;
    opts.parallel = false;  // tiny problem; called inside parallel scans
    const std::vector<CLD> roots = aberth_roots({A, B, C, B, A}, opts);
    std::array<std::complex<double>, 4> out;
    for (size_t i = 0; i < 4; ++i)
        out[i] = {static_cast<double>(roots[i].real()), static_cast<double>(roots[i].imag())};
    return out;
}

const DiscriminantFactors& discriminant_factors() {
    static const DiscriminantFactors df = [] {
        DiscriminantFactors r;
        r.D1 = lp({{3, 1}, {2, -3}, {1, 2}, {0, -1}});
        r.D2 = lp({{3, 1}, {2, -2}, {1, 3}, {0, -1}});
        r.D12 = lp({{6, 1}, {5, -5}, {4, 11}, {3, -15}, {2, 11}, {1, -5}, {0, 1}});
        r.D3 = lp({{6, 1}, {5, -1}, {4, -1}, {3, -3}, {2, -1}, {1, -1}, {0, 1}});
        r.D4 = lp({{8, 1}, {7, -2}, {6, 3}, {5, -4}, {4, 9}, {3, -4}, {2, 3}, {1, -2}, {0, 1}});

        const QPolys& q = q_polys();
        // Res(Q, dQ/dxi) = lead(Q) * Disc(Q) for a quartic; lead(Q) = t^3
        const LaurentPoly res = ring_resultant(q.Q, q.Q.derivative());
        r.disc = res.shifted(-3);

        const auto& aux = aux_polys();
        const LaurentPoly t4 = LaurentPoly::monomial(1, 4);
        const LaurentPoly prod = r.D1 * r.D2 * r.D3 * r.D4;
        auto& ck = r.identities.checks;
        ck.emplace_back("Disc(Q) = t^4*D1*D2*D3*D4", r.disc == t4 * prod);
        ck.emplace_back("Disc(Q) = t^4*D1*D2*D3*D4^2", r.disc == t4 * prod * r.D4);
        ck.emplace_back("D12 = D1*D2", r.D12 == r.D1 * r.D2);
        const LaurentPoly lhs = aux.Pb * aux.Pb - aux.Pa * aux.Pa * aux.R1;
        ck.emplace_back("Pb^2 - Pa^2*R1 = D1*D2*D3", lhs == r.D1 * r.D2 * r.D3);
        ck.emplace_back("Pb^2 - Pa^2*R1 = 4*t^2*D1*D2*D3",
                        lhs == LaurentPoly::monomial(4, 2) * r.D1 * r.D2 * r.D3);
        ck.emplace_back("t^3*D1(1/t) = -D2", r.D1.invert_t().shifted(3) == -r.D2);
        ck.emplace_back("t^3*D2(1/t) = -D1", r.D2.invert_t().shifted(3) == -r.D1);
        ck.emplace_back("D12 = t^6*D12(1/t)", r.D12.invert_t().shifted(6) == r.D12);
        ck.emplace_back("D3 = t^6*D3(1/t)", r.D3.invert_t().shifted(6) == r.D3);
        ck.emplace_back("D4 = t^8*D4(1/t)", r.D4.invert_t().shifted(8) == r.D4);
        ck.emplace_back("R1 = D4", aux.R1 == r.D4);
        return r;
    }();
    return df;
}

SpectrumAtT spectrum_at(std::complex<double> t0) {
    SpectrumAtT s;
    s.t = t0;
    s.lambdas[0] = {1.0, 0.0};
    const auto quartic = quartic_roots_numeric(t0);
    for (size_t i = 0; i < 4; ++i) s.lambdas[i + 1] = quartic[i];
    for (size_t i = 0; i < 5; ++i) s.magnitudes[i] = std::abs(s.lambdas[i]);
    std::sort(s.magnitudes.begin(), s.magnitudes.end(), std::greater<double>());
    s.gap = (s.magnitudes[0] - s.magnitudes[1]) / s.magnitudes[0];
    return s;
}

namespace {

// roots of an exact Laurent polynomial as complex<double>, polished
std::vector<std::complex<double>> exact_roots(const LaurentPoly& p) {
    AberthOptions opts;
    opts.parallel = false;
    std::vector<std::complex<double>> out;
    for (const CLD& r : roots_of_laurent(p, opts))
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    return out;
}

} // namespace

SegmentEndpoints segment_endpoints() {
    const auto& df = discriminant_factors();
    std::vector<std::complex<double>> roots = exact_roots(df.D3);
    std::vector<double> real_roots;
    for (const auto& z : roots)
        if (std::fabs(z.imag()) < 1e-12) real_roots.push_back(z.real());
    if (real_roots.size() != 2)
        throw ConvergenceFailure("expected exactly two real zeros of D3");
    SegmentEndpoints s;
    s.outer = std::max(real_roots[0], real_roots[1]);
    s.inner = std::min(real_roots[0], real_roots[1]);
    if (std::fabs(s.outer * s.inner - 1.0) > 1e-10)
        throw ConvergenceFailure("segment endpoints do not satisfy outer*inner = 1");

    // at the outer endpoint the dominant quartic roots are degenerate in
    // magnitude: a double root at 1 plus a unit-magnitude conjugate pair
    s.degenerate_pair = {0.0, 0.0};
    for (const auto& lam : quartic_roots_numeric({s.outer, 0.0})) {
        if (lam.imag() > 1e-6) s.degenerate_pair = lam;
    }
    return s;
}

ArcEndpoints arc_endpoints() {
    const auto& aux = aux_polys();
    ArcEndpoints a;

    std::vector<std::complex<double>> r1 = exact_roots(aux.R1);
    std::vector<std::complex<double>> upper;
    for (const auto& z : r1)
        if (z.imag() > 0) upper.push_back(z);
    if (upper.size() != 4) throw ConvergenceFailure("expected four conjugate pairs of R1 zeros");
    // arc pair (Re > 0), horseshoe pair (Re < 0); outer has |t| > 1
    std::vector<std::complex<double>> arc, horseshoe;
    for (const auto& z : upper) (z.real() > 0 ? arc : horseshoe).push_back(z);
    if (arc.size() != 2 || horseshoe.size() != 2)
        throw ConvergenceFailure("unexpected quadrant structure of R1 zeros");
    auto by_mag = [](std::complex<double>& lo, std::complex<double>& hi) {
        if (std::abs(lo) > std::abs(hi)) std::swap(lo, hi);
    };
    by_mag(arc[0], arc[1]);
    by_mag(horseshoe[0], horseshoe[1]);
    a.arc_inner = arc[0];
    a.arc_outer = arc[1];
    a.horseshoe_inner = horseshoe[0];
    a.horseshoe_outer = horseshoe[1];
    if (std::fabs(std::abs(a.arc_inner) * std::abs(a.arc_outer) - 1.0) > 1e-8 ||
        std::fabs(std::abs(a.horseshoe_inner) * std::abs(a.horseshoe_outer) - 1.0) > 1e-8)
        throw ConvergenceFailure("R1 endpoint pairs are not inversion-symmetric");

    // circle-arc endpoints: unit-magnitude complex zeros of D3 that lie on the
    // dominance locus (D3 has two unit conjugate pairs; one is off-locus)
    a.circle_endpoint = {0.0, 0.0};
    for (const auto& z : exact_roots(discriminant_factors().D3)) {
        if (z.imag() <= 1e-12) continue;
        if (std::fabs(std::abs(z) - 1.0) > 1e-8) continue;
        if (spectrum_at(z).gap < 1e-9) a.circle_endpoint = z;
    }
    if (a.circle_endpoint == std::complex<double>(0.0, 0.0))
        throw ConvergenceFailure("no unit-magnitude zero of D3 lies on the locus");
    a.circle_angle_deg = std::arg(a.circle_endpoint) * 180.0 / M_PI;
    return a;
}

} // namespace knotpoly
