#pragma once

#include <map>
#include <optional>
#include <string>

#include "qalg/monomial.hpp"
#include "qalg/zseries.hpp"

namespace qalg {

/// Finite combination of ordered monomials with z-series coefficients, truncated at a
/// common order N. Identically zero coefficients are never stored.
class AlgElement {
public:
    using Terms = std::map<Monomial, ZSeries>;

    explicit AlgElement(int order = 0) : order_(order) {}
    static AlgElement one(int order) { return term(order, Monomial{}, ParamPoly(1)); }
    static AlgElement generator(Gen g, int order) { return term(order, Monomial::of(g), ParamPoly(1)); }
    static AlgElement term(int order, const Monomial& m, const ParamPoly& c, int z_degree = 0);
    static AlgElement term(const Monomial& m, const ZSeries& s);

    int order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient series of `m` (zero series when absent).
    ZSeries coefficient(const Monomial& m) const;
    /// Lowest z-degree carried by any term.
    std::optional<int> lowest_order() const;
    /// The z^degree slice, as an element whose coefficients are concentrated in that degree.
    AlgElement component(int degree) const;
    bool has_parity(Parity p) const;

    /// this += m * s
    void add(const Monomial& m, const ZSeries& s);
    /// this += s * x (series product truncated at this order)
    void add_scaled(const AlgElement& x, const ZSeries& s);

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& rhs);
    AlgElement& operator-=(const AlgElement& rhs);
    AlgElement& operator*=(const ParamPoly& c);
    friend AlgElement operator+(AlgElement lhs, const AlgElement& rhs) { return lhs += rhs; }
    friend AlgElement operator-(AlgElement lhs, const AlgElement& rhs) { return lhs -= rhs; }
    friend AlgElement operator*(AlgElement lhs, const ParamPoly& c) { return lhs *= c; }
    friend AlgElement operator*(const AlgElement& x, const ZSeries& s);
    friend bool operator==(const AlgElement&, const AlgElement&) = default;

    AlgElement negate_z() const;
    AlgElement rescale_z(const Rational& lambda) const;
    AlgElement truncated(int order) const;
    AlgElement substitute(const Bindings& bindings) const;

    /// Human-readable rendering, e.g. "A + (1/6)*z^2*A^3".
    std::string to_string(bool commutative = false) const;

private:
    int order_;
    Terms terms_;
};

}  // namespace qalg
