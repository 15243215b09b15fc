#include "knotpoly/genfun.hpp"

#include <initializer_list>

#include "knotpoly/errors.hpp"
#include "knotpoly/tutte.hpp"

namespace knotpoly {

namespace {

struct Term {
    long c;
    int ex, ey;
};

BivarPoly from_terms(std::initializer_list<Term> terms) {
    BivarPoly p;
    for (const auto& t : terms) p += BivarPoly::monomial(t.c, t.ex, t.ey);
    return p;
}

GenFun make_genfun() {
    const BivarPoly a0 = from_terms({{1, 4, 0}, {2, 3, 0}, {1, 2, 1}, {2, 2, 0}, {2, 1, 1}, {1, 1, 0}, {1, 0, 2}, {1, 0, 1}});
    const BivarPoly a1 = from_terms({{-1, 5, 1}, {-1, 5, 0}, {-1, 4, 2}, {-4, 4, 1}, {-3, 4, 0}, {-2, 3, 2}, {-6, 3, 1}, {-3, 3, 0}, {-1, 2, 3}, {-4, 2, 2}, {-5, 2, 1}, {-1, 2, 0}, {-1, 1, 3}, {-3, 1, 2}, {-1, 1, 1}});
    const BivarPoly a2 = from_terms({{1, 6, 1}, {1, 5, 3}, {3, 5, 2}, {4, 5, 1}, {2, 4, 3}, {5, 4, 2}, {5, 4, 1}, {3, 3, 3}, {5, 3, 2}, {3, 3, 1}, {2, 2, 4}, {3, 2, 3}, {2, 2, 2}, {-1, 1, 4}, {-1, 1, 3}});
    const BivarPoly a3 = from_terms({{-1, 6, 3}, {-1, 6, 2}, {-1, 5, 4}, {-3, 5, 3}, {-2, 5, 2}, {-2, 4, 3}, {-1, 4, 2}, {-2, 3, 4}, {1, 2, 4}});
    const BivarPoly a4 = from_terms({{1, 6, 4}});
    const BivarPoly b1 = from_terms({{-1, 2, 0}, {-1, 1, 1}, {-3, 1, 0}, {-1, 0, 2}, {-3, 0, 1}, {-3, 0, 0}});
    const BivarPoly b2 = from_terms({{1, 3, 1}, {1, 3, 0}, {1, 2, 2}, {5, 2, 1}, {3, 2, 0}, {1, 1, 3}, {5, 1, 2}, {8, 1, 1}, {3, 1, 0}, {1, 0, 3}, {3, 0, 2}, {3, 0, 1}, {1, 0, 0}});
    const BivarPoly b3 = from_terms({{-1, 4, 1}, {-1, 3, 3}, {-3, 3, 2}, {-4, 3, 1}, {-3, 2, 3}, {-6, 2, 2}, {-5, 2, 1}, {-1, 1, 4}, {-4, 1, 3}, {-5, 1, 2}, {-3, 1, 1}});
    const BivarPoly b4 = from_terms({{1, 4, 3}, {1, 4, 2}, {1, 3, 4}, {3, 3, 3}, {2, 3, 2}, {1, 2, 4}, {2, 2, 3}, {1, 2, 2}});
    const BivarPoly b5 = from_terms({{-1, 4, 4}});

    GenFun gf;
    gf.numerator = PolyOverRing<BivarPoly>({a0, a1, a2, a3, a4});
    gf.denominator = PolyOverRing<BivarPoly>({BivarPoly::constant(1), b1, b2, b3, b4, b5});
    return gf;
}

} // namespace

const GenFun& build_genfun() {
    static const GenFun gf = make_genfun();
    return gf;
}

std::vector<BivarPoly> tutte_series(const GenFun& gf, int m_max) {
    if (m_max < 1) throw InvalidParameter("tutte_series requires m_max >= 1");
    // c_k = a_k - sum_{j=1..min(k,5)} b_j c_{k-j}, with T_{k+1} = c_k
    std::vector<BivarPoly> c;
    c.reserve(static_cast<size_t>(m_max));
    for (int k = 0; k < m_max; ++k) {
        BivarPoly v = gf.numerator.coeff(k);
        for (int j = 1; j <= std::min(k, 5); ++j)
            v -= gf.denominator.coeff(j) * c[static_cast<size_t>(k - j)];
        c.push_back(std::move(v));
    }
    return c;
}

IdentityReport verify_numerator_identities(const GenFun& gf) {
    IdentityReport report;
    std::vector<BivarPoly> T;
    for (int m = 1; m <= 5; ++m) T.push_back(tutte_delcon(build_S(m)));
    for (int j = 0; j <= 4; ++j) {
        // a_j = T_{j+1} + sum_{i=1..j} b_i T_{j+1-i}
        BivarPoly rhs = T[static_cast<size_t>(j)];
        for (int i = 1; i <= j; ++i) rhs += gf.b(i) * T[static_cast<size_t>(j - i)];
        report.checks.emplace_back("a" + std::to_string(j), gf.a(j) == rhs);
    }
    return report;
}

IdentityReport verify_b_symmetry(const GenFun& gf) {
    IdentityReport report;
    for (int j = 1; j <= 5; ++j) {
        const BivarPoly& b = gf.b(j);
        report.checks.emplace_back("b" + std::to_string(j) + " symmetric", b == b.swap_xy());
    }
    for (int j = 0; j <= 4; ++j) {
        const BivarPoly& a = gf.a(j);
        report.checks.emplace_back("a" + std::to_string(j) + " asymmetric", !(a == a.swap_xy()));
    }
    return report;
}

} // namespace knotpoly
