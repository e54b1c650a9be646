#pragma once

#include <array>
#include <optional>

#include "qalg/commutator_table.hpp"

namespace qalg {

/// Jacobi sum J = [A,[B,C]] + [B,[C,A]] + [C,[A,B]] with its three summands.
/// With three generators every other triple is zero by antisymmetry, so J alone decides
/// consistency of the table.
struct JacobiResiduals {
    AlgElement sum;
    std::array<AlgElement, 3> terms;

    bool is_zero() const { return sum.is_zero(); }
    std::optional<int> lowest_order() const { return sum.lowest_order(); }
};

JacobiResiduals jacobi_residuals(const CommutatorTable& t);

/// Poisson brackets {a,b}, {a,c}, {b,c} of the classical limit in the z-series sense:
/// the Sym-form entries read as commutative polynomials. Keys are commutative monomials.
std::array<AlgElement, 3> poisson_table(const CommutatorTable& t);

/// True iff every ordered entry is even in z.
bool table_is_even(const CommutatorTable& t);

}  // namespace qalg
