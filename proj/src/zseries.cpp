#include "qalg/zseries.hpp"

#include "qalg/errors.hpp"

namespace qalg {

namespace {

void require_same_order(const ZSeries& a, const ZSeries& b) {
    if (a.order() != b.order()) throw TruncationMismatch(a.order(), b.order());
}

}  // namespace

ZSeries::ZSeries(int order) {
    if (order < 0) throw DomainError("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ZSeries::ZSeries(int order, std::vector<ParamPoly> coeffs) : ZSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

ZSeries ZSeries::constant(int order, const ParamPoly& c) { return monomial(order, 0, c); }

ZSeries ZSeries::monomial(int order, int degree, const ParamPoly& c) {
    ZSeries s(order);
    if (degree >= 0 && degree <= order) s[degree] = c;
    return s;
}

bool ZSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<int> ZSeries::lowest_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return std::nullopt;
}

bool ZSeries::has_parity(Parity p) const {
    std::size_t skip = p == Parity::even ? 1 : 0;
    for (std::size_t i = skip; i < coeffs_.size(); i += 2)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

ZSeries ZSeries::operator-() const {
    ZSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZSeries& ZSeries::operator+=(const ZSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

ZSeries& ZSeries::operator*=(const ParamPoly& scale) {
    for (auto& c : coeffs_) c = c * scale;
    return *this;
}

ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs) {
    require_same_order(lhs, rhs);
    const int n = lhs.order();
    ZSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (lhs[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (rhs[j].is_zero()) continue;
            r[i + j] += lhs[i] * rhs[j];
        }
    }
    return r;
}

ZSeries ZSeries::negate_z() const {
    ZSeries r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

ZSeries ZSeries::div_z() const {
    if (!coeffs_[0].is_zero()) throw DomainError("div_z: series has a nonzero constant term");
    if (order() == 0) throw DomainError("div_z: order-0 series has no remaining coefficients");
    return ZSeries(order() - 1, std::vector<ParamPoly>(coeffs_.begin() + 1, coeffs_.end()));
}

ZSeries ZSeries::shift(int k) const {
    ZSeries r(order());
    for (int i = 0; i + k <= order(); ++i)
        if (i + k >= 0) r[i + k] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

ZSeries ZSeries::rescale_z(const Rational& lambda) const {
    ZSeries r = *this;
    Rational f(1);
    for (auto& c : r.coeffs_) {
        c *= f;
        f *= lambda;
    }
    return r;
}

ZSeries ZSeries::truncated(int new_order) const {
    ZSeries r(new_order);
    for (int i = 0; i <= new_order && i <= order(); ++i) r[i] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

ZSeries ZSeries::substitute(const Bindings& bindings) const {
    ZSeries r = *this;
    for (auto& c : r.coeffs_) c = c.substitute(bindings);
    return r;
}

std::string ZSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs_[i].to_string();
        bool compound = coeffs_[i].terms().size() > 1;
        if (i == 0) {
            out += c;
        } else {
            out += (compound ? "(" + c + ")" : c) + "*z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace qalg
