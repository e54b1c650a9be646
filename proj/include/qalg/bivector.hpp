#pragma once

#include <array>
#include <string>

#include "qalg/rational.hpp"

namespace qalg {

/// r = r_AB A∧B + r_AC A∧C + r_BC B∧C, with X∧Y = X⊗Y - Y⊗X.
struct Bivector {
    std::array<Rational, 3> c{0, 0, 0};

    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    friend bool operator==(const Bivector&, const Bivector&) = default;
    std::string to_string() const;
};

/// Coefficient of A∧B∧C.
struct Trivector {
    Rational value = 0;
    bool is_zero() const { return value == 0; }
};

}  // namespace qalg
