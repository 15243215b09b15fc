#include "knotpoly/bivar_poly.hpp"

#include <sstream>

#include "knotpoly/errors.hpp"
#include "knotpoly/text_detail.hpp"

namespace knotpoly {

BivarPoly BivarPoly::constant(BigInt c) { return monomial(std::move(c), 0, 0); }

BivarPoly BivarPoly::monomial(BigInt c, int ex, int ey) {
    BivarPoly p;
    if (sgn(c) != 0) p.terms_.emplace(std::make_pair(ex, ey), std::move(c));
    return p;
}

int BivarPoly::degree_x() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivarPoly::degree_y() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

BigInt BivarPoly::coefficient(int ex, int ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            auto [it, inserted] = r.terms_.emplace(k, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (sgn(it->second) == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BivarPoly BivarPoly::swap_xy() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(std::make_pair(k.second, k.first), c);
    return r;
}

BigInt BivarPoly::eval_exact(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    for (const auto& [k, c] : terms_) {
        BigInt term = c;
        for (int i = 0; i < k.first; ++i) term *= x;
        for (int i = 0; i < k.second; ++i) term *= y;
        acc += term;
    }
    return acc;
}

void BivarPoly::set_term(int ex, int ey, BigInt c) {
    if (sgn(c) == 0)
        terms_.erase({ex, ey});
    else
        terms_[{ex, ey}] = std::move(c);
}

std::string BivarPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << ' ';
        first = false;
        detail::print_term(out, c, {{"x", k.first}, {"y", k.second}});
    }
    return out.str();
}

BivarPoly BivarPoly::parse(const std::string& text) {
    BivarPoly p;
    detail::parse_poly(text, {"x", "y"}, [&](const BigInt& c, const std::vector<int>& e) {
        p += monomial(c, e[0], e[1]);
    });
    return p;
}

} // namespace knotpoly
