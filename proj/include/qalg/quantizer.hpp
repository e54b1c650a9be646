#pragma once

#include <array>
#include <string>
#include <vector>

#include "qalg/hopf.hpp"

namespace qalg {

/// Classical brackets [A,B] = c1 A + c2 B + c3 C, [A,C] = b1 A + b2 B + b3 C,
/// [B,C] = a1 A + a2 B + a3 C, together with the cocommutator parameter rho.
struct BialgebraSpec {
    std::array<ParamPoly, 9> constants;  // indexed like kStructureConstants
    ParamPoly rho;

    /// Every constant and rho left as its own symbol.
    static BialgebraSpec symbolic();
    static BialgebraSpec concrete(const Bindings& values);
    const ParamPoly& constant(Param p) const { return constants[static_cast<std::size_t>(p)]; }
    ParamPoly& constant(Param p) { return constants[static_cast<std::size_t>(p)]; }
    BialgebraSpec substitute(const Bindings& b) const;
    bool is_concrete() const;
    /// Undeformed table truncated at `order`.
    CommutatorTable classical_table(int order) const;
    /// Reads the z^0 layer of a table.
    static BialgebraSpec from_table(const CommutatorTable& t, const ParamPoly& rho);
};

/// Polynomials required to vanish, each monic and pairwise distinct.
struct ConstraintSet {
    std::vector<ParamPoly> equations;

    bool contains(const ParamPoly& p) const;
    /// Same equations up to order and scalar factors.
    bool same_as(const std::vector<ParamPoly>& other) const;
    std::string to_string() const;
};

/// Compatibility of the first-order coproduct with the undeformed brackets plus classical
/// Jacobi, with linear relations solved into the Jacobi conditions.
ConstraintSet first_order_constraints(const BialgebraSpec& spec);

struct QuantizeOptions {
    /// Extra powers of A allowed in the ansatz beyond 2m+1 before giving up.
    int max_escalation = 4;
};

struct QuantizationResult {
    CommutatorTable table;
    HopfData hopf;
    std::vector<int> solved_orders;
    std::vector<std::size_t> freedom;  // per solved order
    std::vector<std::string> log;
};

/// Order-by-order reconstruction of the deformed brackets for concrete constants.
/// Throws DomainError if the first-order constraints fail, NoSolution if some order is
/// inconsistent even after ansatz escalation.
QuantizationResult quantize(const BialgebraSpec& spec, int order, const QuantizeOptions& options = {});

/// Ordered-basis differences of the three entries.
std::array<Residual<AlgElement>, 3> compare_tables(const CommutatorTable& t1, const CommutatorTable& t2);
bool tables_equal(const CommutatorTable& t1, const CommutatorTable& t2);

}  // namespace qalg
