#include "knotpoly/jones.hpp"

#include <array>

#include "knotpoly/errors.hpp"
#include "knotpoly/genfun.hpp"
#include "knotpoly/spectra.hpp"

namespace knotpoly {

FamilyIndex family_index(int m) {
    if (m < 1) throw InvalidParameter("family_index requires m >= 1");
    FamilyIndex idx;
    idx.m = m;
    idx.r = 4 * m + 2;
    switch (m % 5) {
        case 1:
        case 2:
        case 4:
            idx.writhe = 2;
            idx.pt_power = 1;
            break;
        case 3:
            idx.writhe = 6;
            idx.pt_power = 4;
            break;
        default:  // m = 0 mod 5
            idx.writhe = -2;
            idx.pt_power = -2;
            break;
    }
    // pt = (n_l - n_d + 3w)/4 with n_l - n_d = -2 for the whole family
    if (idx.pt_power != (-2 + 3 * idx.writhe) / 4)
        throw std::logic_error("prefactor table inconsistent with the writhe rule");
    return idx;
}

LaurentPoly jones_H(int m) {
    const FamilyIndex idx = family_index(m);

    static const std::array<LaurentPoly, 5> seeds = [] {
        const std::vector<BivarPoly> series = tutte_series(build_genfun(), 5);
        std::array<LaurentPoly, 5> s;
        for (size_t i = 0; i < 5; ++i) s[i] = specialize_jones(series[i]);
        return s;
    }();

    LaurentPoly T;
    if (m <= 5) {
        T = seeds[static_cast<size_t>(m - 1)];
    } else {
        const auto& b = bjt_coeffs();
        std::array<LaurentPoly, 5> window = seeds;
        for (int step = 5; step < m; ++step) {
            LaurentPoly next = tutte_recursion_step(window, b);
            for (size_t i = 0; i + 1 < 5; ++i) window[i] = std::move(window[i + 1]);
            window[4] = std::move(next);
        }
        T = window[4];
    }
    return T.shifted(idx.pt_power);
}

bool degree_span_check(const LaurentPoly& v, const FamilyIndex& idx) {
    if (v.is_zero()) return false;
    const int expect_max = (2 * idx.m + 3) - 1 + idx.pt_power;
    const int expect_min = -2 * idx.m + idx.pt_power;
    return v.max_degree() == expect_max && v.min_degree() == expect_min &&
           v.max_degree() - v.min_degree() == 4 * idx.m + 2;
}

bool sign_alternation_check(const LaurentPoly& v) {
    if (v.is_zero()) return false;
    const int lo = v.min_degree(), hi = v.max_degree();
    for (int e = lo; e < hi; ++e) {
        if (sgn(v.coefficient(e)) * sgn(v.coefficient(e + 1)) > 0) return false;
    }
    return true;
}

} // namespace knotpoly
