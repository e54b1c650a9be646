#include "qalg/alg_element.hpp"

#include "qalg/errors.hpp"

namespace qalg {

AlgElement AlgElement::term(int order, const Monomial& m, const ParamPoly& c, int z_degree) {
    AlgElement e(order);
    e.add(m, ZSeries::monomial(order, z_degree, c));
    return e;
}

AlgElement AlgElement::term(const Monomial& m, const ZSeries& s) {
    AlgElement e(s.order());
    e.add(m, s);
    return e;
}

ZSeries AlgElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ZSeries(order_) : it->second;
}

std::optional<int> AlgElement::lowest_order() const {
    std::optional<int> low;
    for (const auto& [m, s] : terms_) {
        auto d = s.lowest_degree();
        if (d && (!low || *d < *low)) low = d;
    }
    return low;
}

AlgElement AlgElement::component(int degree) const {
    AlgElement r(order_);
    if (degree < 0 || degree > order_) return r;
    for (const auto& [m, s] : terms_)
        if (!s[degree].is_zero()) r.add(m, ZSeries::monomial(order_, degree, s[degree]));
    return r;
}

bool AlgElement::has_parity(Parity p) const {
    for (const auto& [m, s] : terms_)
        if (!s.has_parity(p)) return false;
    return true;
}

void AlgElement::add(const Monomial& m, const ZSeries& s) {
    if (s.order() != order_) throw TruncationMismatch(order_, s.order());
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgElement::add_scaled(const AlgElement& x, const ZSeries& s) {
    if (x.order_ != order_) throw TruncationMismatch(order_, x.order_);
    for (const auto& [m, c] : x.terms_) add(m, c * s);
}

AlgElement AlgElement::operator-() const {
    AlgElement r = *this;
    for (auto& [m, s] : r.terms_) s = -s;
    return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& rhs) {
    if (rhs.order_ != order_) throw TruncationMismatch(order_, rhs.order_);
    for (const auto& [m, s] : rhs.terms_) add(m, s);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& rhs) {
    if (rhs.order_ != order_) throw TruncationMismatch(order_, rhs.order_);
    for (const auto& [m, s] : rhs.terms_) add(m, -s);
    return *this;
}

AlgElement& AlgElement::operator*=(const ParamPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

AlgElement operator*(const AlgElement& x, const ZSeries& s) {
    AlgElement r(x.order());
    r.add_scaled(x, s);
    return r;
}

AlgElement AlgElement::negate_z() const {
    AlgElement r(order_);
    for (const auto& [m, s] : terms_) r.add(m, s.negate_z());
    return r;
}

AlgElement AlgElement::rescale_z(const Rational& lambda) const {
    AlgElement r(order_);
    for (const auto& [m, s] : terms_) r.add(m, s.rescale_z(lambda));
    return r;
}

AlgElement AlgElement::truncated(int order) const {
    AlgElement r(order);
    for (const auto& [m, s] : terms_) r.add(m, s.truncated(order));
    return r;
}

AlgElement AlgElement::substitute(const Bindings& bindings) const {
    AlgElement r(order_);
    for (const auto& [m, s] : terms_) r.add(m, s.substitute(bindings));
    return r;
}

std::string AlgElement::to_string(bool commutative) const {
    std::string out;
    for (int d = 0; d <= order_; ++d) {
        for (const auto& [m, s] : terms_) {
            const ParamPoly& c = s[d];
            if (c.is_zero()) continue;
            std::string coef = c.to_string();
            bool negative = c.terms().size() == 1 && c.terms()[0].second < 0;
            if (negative) coef = (-c).to_string();
            bool compound = c.terms().size() > 1;
            if (!out.empty()) out += negative ? " - " : " + ";
            else if (negative) out += "-";
            std::string factor;
            if (compound) factor = "(" + coef + ")";
            else if (coef != "1" || (d == 0 && m.is_one())) factor = c.is_constant() && coef.find('/') != std::string::npos ? "(" + coef + ")" : coef;
            auto join = [&factor](const std::string& part) {
                if (!factor.empty()) factor += "*";
                factor += part;
            };
            if (d == 1) join("z");
            if (d > 1) join("z^" + std::to_string(d));
            if (!m.is_one()) join(m.to_string(commutative));
            out += factor;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace qalg
