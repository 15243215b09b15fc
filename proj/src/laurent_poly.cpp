#include "knotpoly/laurent_poly.hpp"

#include <cmath>
#include <sstream>

#include "knotpoly/errors.hpp"
#include "knotpoly/text_detail.hpp"

namespace knotpoly {
namespace detail {

void print_term(std::ostream& out, const BigInt& coeff, const std::vector<VarPower>& powers) {
    out << (sgn(coeff) < 0 ? '-' : '+');
    BigInt mag = abs(coeff);
    bool have_var = false;
    for (const auto& p : powers)
        if (p.exp != 0) have_var = true;
    bool need_star = false;
    if (!have_var || mag != 1) {
        out << mag.get_str();
        need_star = true;
    }
    for (const auto& p : powers) {
        if (p.exp == 0) continue;
        if (need_star) out << '*';
        need_star = true;
        out << p.var;
        if (p.exp != 1) out << '^' << p.exp;
    }
}

void parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const std::function<void(const BigInt&, const std::vector<int>&)>& sink) {
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "0") continue;
        size_t pos = 0;
        int sign = 1;
        if (tok[pos] == '+' || tok[pos] == '-') {
            sign = tok[pos] == '-' ? -1 : 1;
            ++pos;
        }
        BigInt mag = 1;
        size_t dig = pos;
        while (dig < tok.size() && std::isdigit(static_cast<unsigned char>(tok[dig]))) ++dig;
        if (dig > pos) {
            mag = BigInt(tok.substr(pos, dig - pos), 10);
            pos = dig;
        }
        std::vector<int> exps(vars.size(), 0);
        while (pos < tok.size()) {
            if (tok[pos] == '*') ++pos;
            size_t vi = vars.size();
            for (size_t i = 0; i < vars.size(); ++i) {
                if (tok.compare(pos, vars[i].size(), vars[i]) == 0) {
                    vi = i;
                    break;
                }
            }
            if (vi == vars.size()) throw ParseError("unknown factor in term: " + tok);
            pos += vars[vi].size();
            int e = 1;
            if (pos < tok.size() && tok[pos] == '^') {
                ++pos;
                size_t end = pos;
                if (end < tok.size() && (tok[end] == '-' || tok[end] == '+')) ++end;
                while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
                if (end == pos) throw ParseError("missing exponent in term: " + tok);
                e = std::stoi(tok.substr(pos, end - pos));
                pos = end;
            }
            exps[vi] += e;
        }
        sink(sign < 0 ? BigInt(-mag) : mag, exps);
    }
    if (!any) throw ParseError("empty polynomial text");
}

} // namespace detail

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

int LaurentPoly::max_degree() const { return terms_.begin()->first; }
int LaurentPoly::min_degree() const { return terms_.rbegin()->first; }

BigInt LaurentPoly::coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.emplace(ea + eb, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (sgn(it->second) == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::invert_t() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::vector<BigInt> LaurentPoly::dense_descending() const {
    if (terms_.empty()) return {};
    const int hi = max_degree(), lo = min_degree();
    std::vector<BigInt> c(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, v] : terms_) c[static_cast<size_t>(hi - e)] = v;
    return c;
}

namespace {

std::complex<long double> cpow_int(std::complex<long double> base, int e) {
    if (e < 0) return 1.0L / cpow_int(base, -e);
    std::complex<long double> acc = 1.0L;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace

ScaledEval LaurentPoly::eval_scaled(std::complex<long double> t0) const {
    if (terms_.empty()) return {{0.0L, 0.0L}, 0.0L};
    const int lo = min_degree(), hi = max_degree();
    if (t0 == std::complex<long double>(0.0L, 0.0L)) {
        if (lo < 0) throw ZeroArgument("evaluation at t = 0 with negative exponents present");
        std::complex<long double> v(lo == 0 ? to_long_double(terms_.rbegin()->second) : 0.0L, 0.0L);
        return {v, std::abs(v)};
    }
    // Horner on p(t)/t^lo (exponents descending), then restore the shift.
    std::complex<long double> acc(0.0L, 0.0L);
    const long double abs_t = std::abs(t0);
    const long double log2_t = std::log2(abs_t);
    long double max_log = -1e30L;
    auto it = terms_.begin();
    for (int e = hi; e >= lo; --e) {
        acc *= t0;
        if (it != terms_.end() && it->first == e) {
            acc += to_long_double(it->second);
            long double lg = static_cast<long double>(log2_abs(it->second)) + log2_t * e;
            max_log = std::max(max_log, lg);
            ++it;
        }
    }
    acc *= cpow_int(t0, lo);
    return {acc, std::exp2(max_log)};
}

std::complex<double> LaurentPoly::eval(std::complex<double> t0) const {
    ScaledEval r = eval_scaled(std::complex<long double>(t0.real(), t0.imag()));
    return {static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())};
}

void LaurentPoly::set_term(int e, BigInt c) {
    if (sgn(c) == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << ' ';
        first = false;
        detail::print_term(out, c, {{"t", e}});
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly p;
    detail::parse_poly(text, {"t"}, [&](const BigInt& c, const std::vector<int>& e) {
        p += monomial(c, e[0]);
    });
    return p;
}

LaurentPoly specialize_jones(const BivarPoly& p) {
    LaurentPoly r;
    for (const auto& [k, c] : p.terms()) {
        const int e = k.first - k.second;
        const bool odd = ((k.first + k.second) & 1) != 0;
        r += LaurentPoly::monomial(odd ? BigInt(-c) : c, e);
    }
    return r;
}

} // namespace knotpoly
