#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qalg/bivector.hpp"
#include "qalg/hopf.hpp"
#include "qalg/linear_solve.hpp"

namespace qalg {

using Vector3 = std::array<Rational, 3>;

/// Three-dimensional Lie algebra given by its brackets on A, B, C.
class LieAlgebra3 {
public:
    /// brackets[p] = [X,Y] for the pair p in (AB, AC, BC) order. Throws DomainError if
    /// the Jacobi identity fails.
    explicit LieAlgebra3(const std::array<Vector3, 3>& brackets);
    /// z^0 layer of a table; the entries must be concrete.
    static LieAlgebra3 from_table(const CommutatorTable& t);

    Vector3 bracket(Gen x, Gen y) const;
    Vector3 bracket(const Vector3& x, const Vector3& y) const;
    const std::array<Vector3, 3>& brackets() const { return brackets_; }
    /// Matrix of ad_x, column j = [x, e_j].
    std::array<Vector3, 3> ad(const Vector3& x) const;
    Rational trace_ad(Gen g) const;
    bool unimodular() const;

    /// Structure constants after the basis change e'_i = sum_j p[i][j] e_j.
    LieAlgebra3 change_basis(const std::array<Vector3, 3>& p) const;

private:
    std::array<Vector3, 3> brackets_;
};

enum class JacobsonKind { I, II_Heisenberg, II_BorelCentral, III_alpha, III_nilshift, IV };

struct JacobsonType {
    JacobsonKind kind = JacobsonKind::I;
    /// Type III_alpha: kappa = tr^2/det of ad_X3 on the derived algebra, so that
    /// alpha + 1/alpha + 2 = kappa. Basis independent.
    std::optional<Rational> kappa;
    /// alpha and 1/alpha when they are rational.
    std::optional<std::array<Rational, 2>> alpha;
    std::size_t derived_dimension = 0;

    std::string to_string() const;
};

std::string_view to_string(JacobsonKind k);
JacobsonType jacobson_type(const LieAlgebra3& g);

/// Classical cocommutator: eta[g] is the bivector image of generator g.
using Cobracket = std::array<Bivector, 3>;
/// Requires concrete coefficients.
Cobracket cobracket_of(const Cocommutator3& eta);
Cobracket cobracket_of(const Cocommutator3& eta, const Bindings& params);

/// ad_x acting on a bivector.
Bivector ad_action(const LieAlgebra3& g, const Vector3& x, const Bivector& r);

struct CocycleResiduals {
    std::array<Bivector, 3> cocycle;  // eta([X,Y]) - ad_X eta(Y) + ad_Y eta(X), pairs AB, AC, BC
    Vector3 co_jacobi{0, 0, 0};       // Jacobi sum of the dual bracket on e^A, e^B, e^C
    bool cocycle_ok() const;
    bool co_jacobi_ok() const { return co_jacobi[0] == 0 && co_jacobi[1] == 0 && co_jacobi[2] == 0; }
    bool ok() const { return cocycle_ok() && co_jacobi_ok(); }
};
CocycleResiduals cocycle_check(const LieAlgebra3& g, const Cobracket& eta);

enum class SchoutenClass { cybe_zero, mcybe_invariant, neither };
std::string_view to_string(SchoutenClass c);

struct SchoutenResult {
    SchoutenClass kind;
    Trivector witness;  // [[r,r]] as a multiple of A^B^C
};
/// [[r,r]] from the classical Yang-Baxter combination [r12,r13]+[r12,r23]+[r13,r23].
Trivector schouten(const Bivector& r, const LieAlgebra3& g);
SchoutenResult schouten_classify(const Bivector& r, const LieAlgebra3& g);

/// Induced cocommutator X -> ad_X(r).
Cobracket coboundary_of(const LieAlgebra3& g, const Bivector& r);

struct CoboundaryResult {
    bool feasible = false;
    Bivector r;                            // particular solution, free directions set to zero
    std::vector<Bivector> kernel;          // directions with zero coboundary
    std::vector<Rational> certificate;     // y with y*M = 0, y*eta = 1 (infeasible case)
    std::size_t dimension() const { return feasible ? kernel.size() : 0; }
};
/// Solves eta(X) = ad_X(r) for r over the bivector space.
CoboundaryResult coboundary_solve(const LieAlgebra3& g, const Cobracket& eta);

enum class TransformFamily { cambio1, cambio2, cambio3 };
std::string_view to_string(TransformFamily f);

/// New generators
///   A' = alpha A,  B' = beta B + gamma_c C + delta S,  C' = mu B + nu C + eta_c S_rho,
///   z' = z / alpha,
/// where S = sinh(zA)/z and S_rho = sinh(rho z A)/(rho z) for cambio1, S_rho = S otherwise.
struct TransformSpec {
    TransformFamily family = TransformFamily::cambio2;
    Rational alpha = 1, beta = 1, gamma_c = 0, delta = 0, mu = 0, nu = 1, eta_c = 0;
    Rational rho = 1;

    static TransformSpec identity() { return {}; }
    /// Throws DomainError unless alpha != 0 and the (B, C) block is invertible and has
    /// the shape allowed by the family.
    void validate() const;
};

struct TransformResult {
    CommutatorTable table;
    HopfData hopf;
};

/// Rewrites (t, h) on the new generators. Commutators and coproducts of the images are
/// computed in the old algebra and re-expressed through the inverse substitution.
TransformResult apply_transformation(const CommutatorTable& t, const HopfData& h, const TransformSpec& spec);

/// Whether two coproducts agree term by term.
bool same_coproduct(const HopfData& x, const HopfData& y);

}  // namespace qalg
