#include "qalg/commutator_table.hpp"

#include <algorithm>
#include <utility>

#include "qalg/errors.hpp"

namespace qalg {

std::string_view pair_name(Pair p) {
    switch (p) {
        case Pair::AB: return "AB";
        case Pair::AC: return "AC";
        case Pair::BC: return "BC";
    }
    return "?";
}

Pair pair_of(Gen x, Gen y) {
    if (x == y) throw DomainError("pair_of: generators must differ");
    if (x > y) std::swap(x, y);
    if (x == Gen::A) return y == Gen::B ? Pair::AB : Pair::AC;
    return Pair::BC;
}

namespace detail {

namespace {

std::pair<Gen, Gen> pair_gens(Pair p) {
    switch (p) {
        case Pair::AB: return {Gen::A, Gen::B};
        case Pair::AC: return {Gen::A, Gen::C};
        case Pair::BC: return {Gen::B, Gen::C};
    }
    return {Gen::A, Gen::A};
}

}  // namespace

Reducer::Reducer(int order, std::array<AlgElement, 3> ordered) : order_(order), ordered_(std::move(ordered)) {
    for (Pair p : kPairs) {
        const AlgElement& e = ordered_[static_cast<std::size_t>(p)];
        if (e.order() != order_) throw TruncationMismatch(order_, e.order());
        auto [x, y] = pair_gens(p);
        const unsigned pair_bc = (x != Gen::A) + (y != Gen::A);
        for (const auto& [m, s] : e.terms()) {
            if (s[0].is_zero()) continue;
            bool smaller = m.bc_degree() < pair_bc || (m.bc_degree() == pair_bc && m.degree() < 2);
            if (!smaller)
                throw NonTerminatingTable("bracket [" + std::string(pair_name(p)) + "] has z^0 term " + m.to_string() +
                                          " that does not reduce the rewriting measure");
        }
    }
}

std::shared_ptr<const AlgElement> Reducer::reduce(const Word& w, int budget) const {
    if (budget < 0) return std::make_shared<const AlgElement>(order_);
    std::string key = w;
    key += '#';
    key += std::to_string(budget);
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    AlgElement result(order_);
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
        result.add(Monomial::from_word(w), ZSeries::constant(order_, ParamPoly(1)));
    } else {
        // w = u Y X v with X < Y:  YX = XY - [X,Y]
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        result = *reduce(swapped, budget);
        const Gen x = static_cast<Gen>(w[i + 1] - 'A');
        const Gen y = static_cast<Gen>(w[i] - 'A');
        const Word prefix = w.substr(0, i), suffix = w.substr(i + 2);
        for (const auto& [m, s] : bracket(pair_of(x, y)).terms()) {
            const Word inner = prefix + m.word() + suffix;
            for (int d = 0; d <= budget; ++d) {
                if (s[d].is_zero()) continue;
                auto sub = reduce(inner, budget - d);
                ParamPoly c = -s[d];
                for (const auto& [m2, s2] : sub->terms()) result.add(m2, s2.shift(d) * c);
            }
        }
    }

    auto shared = std::make_shared<const AlgElement>(std::move(result));
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(std::move(key), shared).first->second;
}

AlgElement multiply(const AlgElement& x, const AlgElement& y, const Reducer& r) {
    const int n = r.order();
    if (x.order() != n) throw TruncationMismatch(n, x.order());
    if (y.order() != n) throw TruncationMismatch(n, y.order());
    AlgElement out(n);
    for (const auto& [mx, sx] : x.terms()) {
        for (const auto& [my, sy] : y.terms()) {
            ZSeries c = sx * sy;
            auto low = c.lowest_degree();
            if (!low) continue;
            Word w = mx.word() + my.word();
            if (std::is_sorted(w.begin(), w.end())) {
                out.add(mx * my, c);
                continue;
            }
            out.add_scaled(*r.reduce(w, n - *low), c);
        }
    }
    return out;
}

namespace {

/// Average over the distinct arrangements of the letters of m, normal ordered.
AlgElement expand_sym(const Monomial& m, int budget, const Reducer& r) {
    Word letters = m.word();
    AlgElement sum(r.order());
    std::size_t count = 0;
    do {
        sum += *r.reduce(letters, budget);
        ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    return sum * ParamPoly(Rational(1, static_cast<long>(count)));
}

}  // namespace

AlgElement sym_to_ordered(const AlgElement& sym, const Reducer& r) {
    const int n = r.order();
    if (sym.order() != n) throw TruncationMismatch(n, sym.order());
    AlgElement out(n);
    for (const auto& [m, s] : sym.terms()) {
        auto low = s.lowest_degree();
        if (!low) continue;
        out.add_scaled(expand_sym(m, n - *low, r), s);
    }
    return out;
}

AlgElement ordered_to_sym(const AlgElement& ordered, const Reducer& r) {
    const int n = r.order();
    if (ordered.order() != n) throw TruncationMismatch(n, ordered.order());
    AlgElement remaining = ordered;
    AlgElement out(n);
    std::map<Monomial, AlgElement> expansions;
    for (int d = 0; d <= n; ++d) {
        for (;;) {
            // Highest-degree monomial still present at z^d; its Sym expansion is itself plus
            // lower-degree terms at z^d, so the z^d slice strictly descends.
            const Monomial* best = nullptr;
            for (const auto& [m, s] : remaining.terms())
                if (!s[d].is_zero() && (!best || m.degree() > best->degree() || (m.degree() == best->degree() && *best < m)))
                    best = &m;
            if (!best) break;
            const Monomial m = *best;
            ZSeries c = ZSeries::monomial(n, d, remaining.coefficient(m)[d]);
            out.add(m, c);
            auto it = expansions.find(m);
            if (it == expansions.end()) it = expansions.emplace(m, expand_sym(m, n, r)).first;
            remaining.add_scaled(it->second, -c);
        }
    }
    return out;
}

}  // namespace detail

CommutatorTable CommutatorTable::from_sym(const std::array<AlgElement, 3>& sym) {
    const int n = sym[0].order();
    std::array<AlgElement, 3> ordered = sym;
    // Expanding Sym(m) needs the brackets themselves; each pass fixes two more z-orders.
    for (int pass = 0; pass <= n / 2 + 2; ++pass) {
        auto reducer = std::make_shared<const detail::Reducer>(n, ordered);
        std::array<AlgElement, 3> next{AlgElement(n), AlgElement(n), AlgElement(n)};
        for (std::size_t i = 0; i < 3; ++i) next[i] = detail::sym_to_ordered(sym[i], *reducer);
        if (next == ordered) return CommutatorTable(std::move(reducer), sym);
        ordered = std::move(next);
    }
    throw NonTerminatingTable("symmetrized table did not reach a fixed point");
}

CommutatorTable CommutatorTable::from_ordered(const std::array<AlgElement, 3>& ordered) {
    auto reducer = std::make_shared<const detail::Reducer>(ordered[0].order(), ordered);
    std::array<AlgElement, 3> sym{AlgElement(ordered[0].order()), AlgElement(ordered[0].order()),
                                  AlgElement(ordered[0].order())};
    for (std::size_t i = 0; i < 3; ++i) sym[i] = detail::ordered_to_sym(ordered[i], *reducer);
    return CommutatorTable(std::move(reducer), std::move(sym));
}

CommutatorTable CommutatorTable::abelian(int order) {
    return from_ordered({AlgElement(order), AlgElement(order), AlgElement(order)});
}

AlgElement CommutatorTable::bracket(Gen x, Gen y) const {
    if (x == y) return AlgElement(order());
    const AlgElement& e = ordered(pair_of(x, y));
    return x < y ? e : -e;
}

CommutatorTable CommutatorTable::with_params(Bindings b) const {
    CommutatorTable t = *this;
    t.params_ = std::move(b);
    return t;
}

AlgElement normal_order(const Word& w, const CommutatorTable& t) {
    for (char ch : w)
        if (ch < 'A' || ch > 'C') throw DomainError("word '" + w + "' has letters outside {A,B,C}");
    return *t.reducer().reduce(w, t.order());
}

AlgElement multiply(const AlgElement& x, const AlgElement& y, const CommutatorTable& t) {
    return detail::multiply(x, y, t.reducer());
}

AlgElement commutator(const AlgElement& x, const AlgElement& y, const CommutatorTable& t) {
    return multiply(x, y, t) - multiply(y, x, t);
}

AlgElement sym_to_ordered(const AlgElement& sym, const CommutatorTable& t) {
    return detail::sym_to_ordered(sym, t.reducer());
}

AlgElement ordered_to_sym(const AlgElement& ordered, const CommutatorTable& t) {
    return detail::ordered_to_sym(ordered, t.reducer());
}

AlgElement sym_convert(const AlgElement& x, SymDirection direction, const CommutatorTable& t) {
    return direction == SymDirection::sym_to_ordered ? sym_to_ordered(x, t) : ordered_to_sym(x, t);
}

}  // namespace qalg
