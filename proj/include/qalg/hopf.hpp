#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "qalg/tensor.hpp"

namespace qalg {

/// Coproduct images, counit values and (optionally) antipode images of A, B, C.
struct HopfData {
    std::array<TensorElement, 3> delta;
    std::array<Rational, 3> counit{0, 0, 0};
    std::optional<std::array<AlgElement, 3>> antipode;

    int order() const { return delta[0].order(); }
    const TensorElement& coproduct(Gen g) const { return delta[static_cast<std::size_t>(g)]; }

    /// Δ(A) primitive, Δ(B) = e^{zA}⊗B + B⊗e^{-zA}, Δ(C) = e^{ρzA}⊗C + C⊗e^{-ρzA}.
    static HopfData standard(const ParamPoly& rho, int order);
    /// Every generator primitive.
    static HopfData primitive(int order);
    HopfData substitute(const Bindings& b) const;
};

/// Residual of an axiom check together with the lowest z-degree where it is nonzero.
template <class T>
struct Residual {
    T element;
    std::optional<int> lowest_order;

    bool ok() const { return !lowest_order.has_value(); }
    static Residual of(T e) {
        auto low = e.lowest_order();
        return {std::move(e), low};
    }
};

/// Homomorphic extension of Δ from generators to the whole algebra, memoized per monomial.
class Coproduct {
public:
    Coproduct(const HopfData& h, const CommutatorTable& t);

    const CommutatorTable& table() const { return table_; }
    TensorElement operator()(const AlgElement& x) const;
    const TensorElement& of(const Monomial& m) const;
    /// (Δ⊗id)(x) and (id⊗Δ)(x)
    Tensor3Element left(const TensorElement& x) const;
    Tensor3Element right(const TensorElement& x) const;

private:
    const HopfData& hopf_;
    const CommutatorTable& table_;
    mutable std::mutex mutex_;
    mutable std::map<Monomial, std::unique_ptr<TensorElement>> memo_;
};

TensorElement coproduct_extend(const AlgElement& x, const HopfData& h, const CommutatorTable& t);

/// ε extended multiplicatively; ε(1) = 1.
ZSeries counit_apply(const AlgElement& x, const HopfData& h);

using GenResiduals3 = std::array<Residual<Tensor3Element>, 3>;
using PairResiduals = std::array<Residual<TensorElement>, 3>;

/// (Δ⊗id)Δ(g) - (id⊗Δ)Δ(g) for g = A, B, C.
GenResiduals3 check_coassociativity(const HopfData& h, const CommutatorTable& t);
/// Δ([X,Y]_z) - [ΔX, ΔY] for the pairs AB, AC, BC.
PairResiduals check_homomorphism(const HopfData& h, const CommutatorTable& t);
/// Whether σ∘T fixes Δ(g), where σ swaps slots and T negates z.
std::array<bool, 3> check_sigma_tilde(const HopfData& h);

struct CounitResiduals {
    std::array<Residual<AlgElement>, 3> left;   // (ε⊗id)Δ(g) - g
    std::array<Residual<AlgElement>, 3> right;  // (id⊗ε)Δ(g) - g
    bool ok() const;
};
CounitResiduals check_counit(const HopfData& h, const CommutatorTable& t);

/// γ extended as an anti-homomorphism from generator images.
AlgElement antipode_apply(const AlgElement& x, const std::array<AlgElement, 3>& gamma, const CommutatorTable& t);

/// Solves m∘(γ⊗id)∘Δ = 1·ε order by order starting from γ(g) = -g, then checks the
/// mirror axiom m∘(id⊗γ)∘Δ = 1·ε. Throws NoSolution with the failing order.
std::array<AlgElement, 3> solve_antipode(const HopfData& h, const CommutatorTable& t);

struct AntipodeResiduals {
    std::array<Residual<AlgElement>, 3> left;   // m(γ⊗id)Δ(g) - ε(g)
    std::array<Residual<AlgElement>, 3> right;  // m(id⊗γ)Δ(g) - ε(g)
    bool ok() const;
};
AntipodeResiduals check_antipode(const HopfData& h, const std::array<AlgElement, 3>& gamma, const CommutatorTable& t);

/// η(g) as coefficients of X∧Y (X⊗Y - Y⊗X) on the basis A∧B, A∧C, B∧C.
struct Cocommutator3 {
    std::array<std::array<ParamPoly, 3>, 3> images{};

    const std::array<ParamPoly, 3>& of(Gen g) const { return images[static_cast<std::size_t>(g)]; }
    bool is_zero() const;
    friend bool operator==(const Cocommutator3&, const Cocommutator3&) = default;
};

/// z^1 coefficient of (Δ - σΔ)/2. Throws DomainError if it is not a bivector.
Cocommutator3 extract_cocommutator(const HopfData& h);

}  // namespace qalg

namespace qalg {

/// Every axiom check for one (table, coproduct) pair.
struct HopfReport {
    GenResiduals3 coassociativity;
    PairResiduals homomorphism;
    CounitResiduals counit;
    std::array<bool, 3> sigma_tilde{};
    std::optional<std::array<AlgElement, 3>> antipode;  // solved images
    std::optional<AntipodeResiduals> antipode_residuals;
    std::optional<int> antipode_failed_order;  // set when the solve failed
    Residual<AlgElement> jacobi;

    bool coassociative() const;
    bool homomorphic() const;
    bool sigma_invariant() const { return sigma_tilde[0] && sigma_tilde[1] && sigma_tilde[2]; }
    bool antipode_ok() const { return antipode_residuals && antipode_residuals->ok(); }
    bool ok() const;
};

HopfReport verify_hopf(const HopfData& h, const CommutatorTable& t);

}  // namespace qalg
