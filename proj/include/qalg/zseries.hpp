#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/param_poly.hpp"

namespace qalg {

enum class Parity { even, odd };

/// Truncated power series in the deformation parameter z with ParamPoly coefficients.
///
/// Degrees above `order()` are never stored; every operation drops them.
class ZSeries {
public:
    ZSeries() = default;
    explicit ZSeries(int order);
    ZSeries(int order, std::vector<ParamPoly> coeffs);
    static ZSeries constant(int order, const ParamPoly& c);
    /// c * z^degree (zero if degree > order).
    static ZSeries monomial(int order, int degree, const ParamPoly& c);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const ParamPoly& operator[](int degree) const { return coeffs_[static_cast<std::size_t>(degree)]; }
    ParamPoly& operator[](int degree) { return coeffs_[static_cast<std::size_t>(degree)]; }
    const std::vector<ParamPoly>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Lowest degree with a nonzero coefficient.
    std::optional<int> lowest_degree() const;
    bool has_parity(Parity p) const;

    ZSeries operator-() const;
    ZSeries& operator+=(const ZSeries& rhs);
    ZSeries& operator-=(const ZSeries& rhs);
    ZSeries& operator*=(const ParamPoly& scale);
    friend ZSeries operator+(ZSeries lhs, const ZSeries& rhs) { return lhs += rhs; }
    friend ZSeries operator-(ZSeries lhs, const ZSeries& rhs) { return lhs -= rhs; }
    friend ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs);
    friend ZSeries operator*(ZSeries lhs, const ParamPoly& rhs) { return lhs *= rhs; }
    friend bool operator==(const ZSeries&, const ZSeries&) = default;

    /// z -> -z.
    ZSeries negate_z() const;
    /// Division by z; requires a zero constant term and lowers the order by one.
    ZSeries div_z() const;
    /// Multiplication by z^k at the same truncation order.
    ZSeries shift(int k) const;
    /// z -> lambda * z.
    ZSeries rescale_z(const Rational& lambda) const;
    ZSeries truncated(int order) const;
    ZSeries substitute(const Bindings& bindings) const;

    std::string to_string() const;

private:
    std::vector<ParamPoly> coeffs_;
};

}  // namespace qalg
