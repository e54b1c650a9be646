#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qalg/commutator_table.hpp"

namespace qalg {

/// Element of the K-fold tensor power of the truncated algebra. Each slot is normal
/// ordered on its own; products never mix slots.
template <std::size_t K>
class Tensor {
public:
    using Key = std::array<Monomial, K>;
    using Terms = std::map<Key, ZSeries>;

    explicit Tensor(int order = 0) : order_(order) {}
    static Tensor one(int order) {
        Tensor t(order);
        t.add(Key{}, ZSeries::constant(order, ParamPoly(1)));
        return t;
    }

    int order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    ZSeries coefficient(const Key& k) const;
    std::optional<int> lowest_order() const;

    void add(const Key& k, const ZSeries& s);

    Tensor operator-() const;
    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    Tensor& operator*=(const ParamPoly& c);
    friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
    friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
    friend Tensor operator*(Tensor lhs, const ParamPoly& c) { return lhs *= c; }
    friend bool operator==(const Tensor&, const Tensor&) = default;

    Tensor negate_z() const;
    Tensor substitute(const Bindings& b) const;
    /// z^degree slice.
    Tensor component(int degree) const;
    std::string to_string() const;

private:
    int order_;
    Terms terms_;
};

using TensorElement = Tensor<2>;
using Tensor3Element = Tensor<3>;

/// x ⊗ y
TensorElement tensor(const AlgElement& x, const AlgElement& y);
/// Slotwise product (x⊗y)(u⊗v) = xu ⊗ yv.
template <std::size_t K>
Tensor<K> multiply(const Tensor<K>& x, const Tensor<K>& y, const CommutatorTable& t);
/// σ: swap the two slots.
TensorElement flip(const TensorElement& x);

extern template class Tensor<2>;
extern template class Tensor<3>;
extern template Tensor<2> multiply<2>(const Tensor<2>&, const Tensor<2>&, const CommutatorTable&);
extern template Tensor<3> multiply<3>(const Tensor<3>&, const Tensor<3>&, const CommutatorTable&);

}  // namespace qalg
