#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/// The closed set of symbolic parameters: the nine structure constants and rho.
enum class Param : std::uint8_t { a1, a2, a3, b1, b2, b3, c1, c2, c3, rho };

inline constexpr std::size_t kNumParams = 10;
inline constexpr std::array<Param, 9> kStructureConstants = {
    Param::a1, Param::a2, Param::a3, Param::b1, Param::b2, Param::b3, Param::c1, Param::c2, Param::c3};

std::string_view param_name(Param p);
/// Returns nullopt for names outside the fixed set.
std::optional<Param> param_from_name(std::string_view name);

using Exponents = std::array<std::uint8_t, kNumParams>;
using Bindings = std::map<Param, Rational>;

/// Graded lexicographic comparison: total degree first, then lexicographic with a1 most significant.
bool grlex_less(const Exponents& lhs, const Exponents& rhs);

/// Sparse polynomial in the fixed parameter set with exact rational coefficients.
///
/// Terms are kept sorted by grlex with no zero coefficients, so operator== is structural.
class ParamPoly {
public:
    using Term = std::pair<Exponents, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT: constants convert implicitly
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT
    static ParamPoly variable(Param p);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant value; throws DomainError if the polynomial is not constant.
    Rational constant_value() const;
    unsigned total_degree() const;
    /// Highest term in grlex order; polynomial must be nonzero.
    const Term& leading_term() const { return terms_.back(); }
    bool depends_on(Param p) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly& operator*=(const Rational& rhs);
    friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
    friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
    friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
    friend ParamPoly operator*(ParamPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    ParamPoly pow(unsigned n) const;
    ParamPoly substitute(const Bindings& bindings) const;
    /// Replaces `p` by an arbitrary polynomial.
    ParamPoly substitute(Param p, const ParamPoly& value) const;

    /// Exact quotient if `divisor` divides this polynomial, otherwise nullopt.
    std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;
    /// Scales so the leading coefficient is 1 (zero stays zero).
    ParamPoly monic() const;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    std::vector<Term> terms_;
};

}  // namespace qalg
