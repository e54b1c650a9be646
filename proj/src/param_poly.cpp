#include "qalg/param_poly.hpp"

#include <algorithm>
#include <numeric>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

constexpr std::array<std::string_view, kNumParams> kNames = {"a1", "a2", "a3", "b1", "b2",
                                                             "b3", "c1", "c2", "c3", "rho"};

unsigned degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Exponents add(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kNumParams; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return r;
}

bool divides(const Exponents& d, const Exponents& e) {
    for (std::size_t i = 0; i < kNumParams; ++i)
        if (d[i] > e[i]) return false;
    return true;
}

Exponents sub(const Exponents& e, const Exponents& d) {
    Exponents r{};
    for (std::size_t i = 0; i < kNumParams; ++i) r[i] = static_cast<std::uint8_t>(e[i] - d[i]);
    return r;
}

struct GrlexLess {
    bool operator()(const ParamPoly::Term& t, const Exponents& e) const { return grlex_less(t.first, e); }
};

}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumParams; ++i)
        if (kNames[i] == name) return static_cast<Param>(i);
    return std::nullopt;
}

bool grlex_less(const Exponents& lhs, const Exponents& rhs) {
    unsigned dl = degree(lhs), dr = degree(rhs);
    if (dl != dr) return dl < dr;
    // a1 is the most significant variable: a larger a1 exponent ranks higher.
    for (std::size_t i = 0; i < kNumParams; ++i)
        if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
    return false;
}

ParamPoly::ParamPoly(const Rational& c) {
    Rational v = c;
    v.canonicalize();
    if (v != 0) terms_.emplace_back(Exponents{}, std::move(v));
}

ParamPoly ParamPoly::variable(Param p) {
    ParamPoly r;
    Exponents e{};
    e[static_cast<std::size_t>(p)] = 1;
    r.terms_.emplace_back(e, Rational(1));
    return r;
}

bool ParamPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && degree(terms_[0].first) == 0);
}

Rational ParamPoly::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial '" + to_string() + "' is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

unsigned ParamPoly::total_degree() const { return terms_.empty() ? 0 : degree(terms_.back().first); }

bool ParamPoly::depends_on(Param p) const {
    auto i = static_cast<std::size_t>(p);
    return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.first[i] != 0; });
}

void ParamPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, GrlexLess{});
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{e, c});
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    if (rhs.terms_.empty()) return *this;
    if (terms_.empty()) return *this = rhs;
    if (&rhs == this) return *this *= Rational(2);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.cbegin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && grlex_less(a->first, b->first))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || grlex_less(b->first, a->first)) {
            merged.push_back(*b++);
        } else {
            Rational s = a->second + b->second;
            if (s != 0) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) { return *this += -rhs; }

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
    ParamPoly r;
    if (lhs.is_zero() || rhs.is_zero()) return r;
    if (lhs.terms_.size() == 1 && rhs.terms_.size() == 1) {
        r.terms_.emplace_back(add(lhs.terms_[0].first, rhs.terms_[0].first),
                              lhs.terms_[0].second * rhs.terms_[0].second);
        return r;
    }
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) r.add_term(add(ea, eb), ca * cb);
    return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) { return *this = *this * rhs; }

ParamPoly& ParamPoly::operator*=(const Rational& factor) {
    Rational rhs = factor;
    rhs.canonicalize();
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= rhs;
    return *this;
}

ParamPoly ParamPoly::pow(unsigned n) const {
    ParamPoly r(Rational(1));
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
}

ParamPoly ParamPoly::substitute(const Bindings& bindings) const {
    if (bindings.empty()) return *this;
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        Rational coef = c;
        for (const auto& [p, v] : bindings) {
            auto i = static_cast<std::size_t>(p);
            if (rest[i] == 0) continue;
            coef *= qalg::pow(v, rest[i]);
            rest[i] = 0;
        }
        r.add_term(rest, coef);
    }
    return r;
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& value) const {
    auto i = static_cast<std::size_t>(p);
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        unsigned k = rest[i];
        rest[i] = 0;
        ParamPoly t;
        t.terms_.emplace_back(rest, c);
        r += t * value.pow(k);
    }
    return r;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    ParamPoly rem = *this;
    ParamPoly quot;
    const auto& [ld, lc] = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto [le, lcoef] = rem.leading_term();
        if (!divides(ld, le)) return std::nullopt;
        ParamPoly t;
        t.terms_.emplace_back(sub(le, ld), lcoef / lc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

ParamPoly ParamPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_term().second);
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool constant = degree(e) == 0;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < kNumParams; ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += kNames[i];
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (constant) {
            out += qalg::to_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += qalg::to_string(mag) + "*" + factors;
        }
    }
    return out;
}

}  // namespace qalg
