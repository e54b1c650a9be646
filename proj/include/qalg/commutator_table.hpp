#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "qalg/alg_element.hpp"

namespace qalg {

/// The three independent brackets, indexed [A,B], [A,C], [B,C].
enum class Pair : std::uint8_t { AB = 0, AC = 1, BC = 2 };
inline constexpr Pair kPairs[3] = {Pair::AB, Pair::AC, Pair::BC};
std::string_view pair_name(Pair p);
/// Pair of two distinct generators, in either order.
Pair pair_of(Gen x, Gen y);

namespace detail {

/// Rewrites words to ordered monomials with YX -> XY - [X,Y], leftmost inversion first.
///
/// Results are memoized per (word, z-budget); the cache is mutex-guarded so one reducer
/// can serve concurrent readers.
class Reducer {
public:
    /// Throws NonTerminatingTable unless every z^0 bracket term is strictly smaller than
    /// the pair it replaces in the (BC-degree, length) order.
    Reducer(int order, std::array<AlgElement, 3> ordered);

    int order() const noexcept { return order_; }
    const AlgElement& bracket(Pair p) const { return ordered_[static_cast<std::size_t>(p)]; }

    /// Normal form of `w` modulo z^(budget+1), stored at the full truncation order.
    std::shared_ptr<const AlgElement> reduce(const Word& w, int budget) const;

private:
    int order_;
    std::array<AlgElement, 3> ordered_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, std::shared_ptr<const AlgElement>> memo_;
};

}  // namespace detail

/// Deformed brackets [A,B]_z, [A,C]_z, [B,C]_z.
///
/// Each entry is held twice: in the ordered basis A^i B^j C^k (used for all reductions)
/// and in the symmetrized basis, where a key m stands for Sym(m). Either form determines
/// the other; the constructors derive the missing one.
class CommutatorTable {
public:
    /// Entries given on the symmetrized basis.
    static CommutatorTable from_sym(const std::array<AlgElement, 3>& sym);
    /// Entries given on the ordered basis.
    static CommutatorTable from_ordered(const std::array<AlgElement, 3>& ordered);
    static CommutatorTable abelian(int order);

    int order() const noexcept { return reducer_->order(); }
    const AlgElement& ordered(Pair p) const { return reducer_->bracket(p); }
    const AlgElement& sym(Pair p) const { return sym_[static_cast<std::size_t>(p)]; }
    /// [x, y]_z in the ordered basis for any two generators (zero when x == y).
    AlgElement bracket(Gen x, Gen y) const;
    const detail::Reducer& reducer() const { return *reducer_; }

    /// Concrete parameter values the table was instantiated at, if any.
    const std::optional<Bindings>& params() const noexcept { return params_; }
    CommutatorTable with_params(Bindings b) const;

private:
    CommutatorTable(std::shared_ptr<const detail::Reducer> r, std::array<AlgElement, 3> sym)
        : reducer_(std::move(r)), sym_(std::move(sym)) {}

    std::shared_ptr<const detail::Reducer> reducer_;
    std::array<AlgElement, 3> sym_;
    std::optional<Bindings> params_;
};

/// Normal form of a word in the quotient algebra defined by `t`.
AlgElement normal_order(const Word& w, const CommutatorTable& t);
AlgElement multiply(const AlgElement& x, const AlgElement& y, const CommutatorTable& t);
/// multiply(x, y) - multiply(y, x)
AlgElement commutator(const AlgElement& x, const AlgElement& y, const CommutatorTable& t);

enum class SymDirection { sym_to_ordered, ordered_to_sym };
/// Change of basis between symmetrized and ordered monomials.
AlgElement sym_convert(const AlgElement& x, SymDirection direction, const CommutatorTable& t);
AlgElement sym_to_ordered(const AlgElement& sym, const CommutatorTable& t);
AlgElement ordered_to_sym(const AlgElement& ordered, const CommutatorTable& t);

namespace detail {
AlgElement multiply(const AlgElement& x, const AlgElement& y, const Reducer& r);
AlgElement sym_to_ordered(const AlgElement& sym, const Reducer& r);
AlgElement ordered_to_sym(const AlgElement& ordered, const Reducer& r);
}  // namespace detail

}  // namespace qalg
