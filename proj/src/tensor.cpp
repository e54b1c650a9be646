#include "qalg/tensor.hpp"

#include "qalg/errors.hpp"

namespace qalg {

template <std::size_t K>
ZSeries Tensor<K>::coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ZSeries(order_) : it->second;
}

template <std::size_t K>
std::optional<int> Tensor<K>::lowest_order() const {
    std::optional<int> low;
    for (const auto& [k, s] : terms_) {
        auto d = s.lowest_degree();
        if (d && (!low || *d < *low)) low = d;
    }
    return low;
}

template <std::size_t K>
void Tensor<K>::add(const Key& k, const ZSeries& s) {
    if (s.order() != order_) throw TruncationMismatch(order_, s.order());
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <std::size_t K>
Tensor<K> Tensor<K>::operator-() const {
    Tensor r = *this;
    for (auto& [k, s] : r.terms_) s = -s;
    return r;
}

template <std::size_t K>
Tensor<K>& Tensor<K>::operator+=(const Tensor& rhs) {
    if (rhs.order_ != order_) throw TruncationMismatch(order_, rhs.order_);
    for (const auto& [k, s] : rhs.terms_) add(k, s);
    return *this;
}

template <std::size_t K>
Tensor<K>& Tensor<K>::operator-=(const Tensor& rhs) {
    if (rhs.order_ != order_) throw TruncationMismatch(order_, rhs.order_);
    for (const auto& [k, s] : rhs.terms_) add(k, -s);
    return *this;
}

template <std::size_t K>
Tensor<K>& Tensor<K>::operator*=(const ParamPoly& c) {
    Terms out;
    for (auto& [k, s] : terms_) {
        ZSeries v = s * c;
        if (!v.is_zero()) out.emplace(k, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
}

template <std::size_t K>
Tensor<K> Tensor<K>::negate_z() const {
    Tensor r(order_);
    for (const auto& [k, s] : terms_) r.add(k, s.negate_z());
    return r;
}

template <std::size_t K>
Tensor<K> Tensor<K>::substitute(const Bindings& b) const {
    Tensor r(order_);
    for (const auto& [k, s] : terms_) r.add(k, s.substitute(b));
    return r;
}

template <std::size_t K>
Tensor<K> Tensor<K>::component(int degree) const {
    Tensor r(order_);
    if (degree < 0 || degree > order_) return r;
    for (const auto& [k, s] : terms_)
        if (!s[degree].is_zero()) r.add(k, ZSeries::monomial(order_, degree, s[degree]));
    return r;
}

template <std::size_t K>
std::string Tensor<K>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, s] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + s.to_string() + ")*";
        for (std::size_t i = 0; i < K; ++i) {
            if (i) out += "⊗";
            out += k[i].to_string();
        }
    }
    return out;
}

TensorElement tensor(const AlgElement& x, const AlgElement& y) {
    if (x.order() != y.order()) throw TruncationMismatch(x.order(), y.order());
    TensorElement r(x.order());
    for (const auto& [mx, sx] : x.terms())
        for (const auto& [my, sy] : y.terms()) r.add({mx, my}, sx * sy);
    return r;
}

TensorElement flip(const TensorElement& x) {
    TensorElement r(x.order());
    for (const auto& [k, s] : x.terms()) r.add({k[1], k[0]}, s);
    return r;
}

template <std::size_t K>
Tensor<K> multiply(const Tensor<K>& x, const Tensor<K>& y, const CommutatorTable& t) {
    const int n = t.order();
    if (x.order() != n) throw TruncationMismatch(n, x.order());
    if (y.order() != n) throw TruncationMismatch(n, y.order());
    Tensor<K> out(n);
    for (const auto& [kx, sx] : x.terms()) {
        for (const auto& [ky, sy] : y.terms()) {
            const ZSeries c = sx * sy;
            const auto low = c.lowest_degree();
            if (!low) continue;
            const int budget = n - *low;
            // Outer product of the per-slot normal forms.
            Tensor<K> acc(n);
            acc.add({}, c);
            for (std::size_t i = 0; i < K; ++i) {
                const Word w = kx[i].word() + ky[i].word();
                auto slot = t.reducer().reduce(w, budget);
                Tensor<K> next(n);
                for (const auto& [key, s] : acc.terms())
                    for (const auto& [m, sm] : slot->terms()) {
                        auto k2 = key;
                        k2[i] = m;
                        next.add(k2, s * sm);
                    }
                acc = std::move(next);
            }
            out += acc;
        }
    }
    return out;
}

template class Tensor<2>;
template class Tensor<3>;
template Tensor<2> multiply<2>(const Tensor<2>&, const Tensor<2>&, const CommutatorTable&);
template Tensor<3> multiply<3>(const Tensor<3>&, const Tensor<3>&, const CommutatorTable&);

}  // namespace qalg
