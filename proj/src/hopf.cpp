#include "qalg/hopf.hpp"

#include "qalg/errors.hpp"
#include "qalg/generator_series.hpp"

namespace qalg {

namespace {

AlgElement unit_times(const ZSeries& s) { return AlgElement::term(Monomial{}, s); }

TensorElement primitive_delta(Gen g, int n) {
    const AlgElement x = AlgElement::generator(g, n), one = AlgElement::one(n);
    return tensor(one, x) + tensor(x, one);
}

TensorElement exp_delta(Gen g, const ParamPoly& c, int n) {
    const AlgElement x = AlgElement::generator(g, n);
    return tensor(generator_series(Gen::A, SeriesKind::exp, c, n), x) +
           tensor(x, generator_series(Gen::A, SeriesKind::exp, -c, n));
}

}  // namespace

HopfData HopfData::standard(const ParamPoly& rho, int order) {
    HopfData h;
    h.delta = {primitive_delta(Gen::A, order), exp_delta(Gen::B, ParamPoly(1), order),
               exp_delta(Gen::C, rho, order)};
    return h;
}

HopfData HopfData::primitive(int order) {
    HopfData h;
    h.delta = {primitive_delta(Gen::A, order), primitive_delta(Gen::B, order), primitive_delta(Gen::C, order)};
    return h;
}

HopfData HopfData::substitute(const Bindings& b) const {
    HopfData h = *this;
    for (auto& d : h.delta) d = d.substitute(b);
    if (h.antipode)
        for (auto& g : *h.antipode) g = g.substitute(b);
    return h;
}

Coproduct::Coproduct(const HopfData& h, const CommutatorTable& t) : hopf_(h), table_(t) {
    for (const auto& d : h.delta)
        if (d.order() != t.order()) throw TruncationMismatch(t.order(), d.order());
}

const TensorElement& Coproduct::of(const Monomial& m) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(m); it != memo_.end()) return *it->second;
    }
    TensorElement value(table_.order());
    if (m.is_one()) {
        value = TensorElement::one(table_.order());
    } else {
        // A^a B^b C^c = g * rest with g its first letter
        Gen g = m.a ? Gen::A : m.b ? Gen::B : Gen::C;
        Monomial rest = m;
        rest.power(g)--;
        value = rest.is_one() ? hopf_.coproduct(g) : multiply(hopf_.coproduct(g), of(rest), table_);
    }
    std::lock_guard lock(mutex_);
    auto [it, fresh] = memo_.try_emplace(m, std::make_unique<TensorElement>(std::move(value)));
    return *it->second;
}

TensorElement Coproduct::operator()(const AlgElement& x) const {
    if (x.order() != table_.order()) throw TruncationMismatch(table_.order(), x.order());
    TensorElement out(table_.order());
    for (const auto& [m, s] : x.terms())
        for (const auto& [k, c] : of(m).terms()) out.add(k, c * s);
    return out;
}

Tensor3Element Coproduct::left(const TensorElement& x) const {
    Tensor3Element out(table_.order());
    for (const auto& [k, s] : x.terms())
        for (const auto& [k2, c] : of(k[0]).terms()) out.add({k2[0], k2[1], k[1]}, c * s);
    return out;
}

Tensor3Element Coproduct::right(const TensorElement& x) const {
    Tensor3Element out(table_.order());
    for (const auto& [k, s] : x.terms())
        for (const auto& [k2, c] : of(k[1]).terms()) out.add({k[0], k2[0], k2[1]}, c * s);
    return out;
}

TensorElement coproduct_extend(const AlgElement& x, const HopfData& h, const CommutatorTable& t) {
    return Coproduct(h, t)(x);
}

ZSeries counit_apply(const AlgElement& x, const HopfData& h) {
    ZSeries out(x.order());
    for (const auto& [m, s] : x.terms()) {
        Rational v = pow(h.counit[0], m.a) * pow(h.counit[1], m.b) * pow(h.counit[2], m.c);
        out += s * ParamPoly(v);
    }
    return out;
}

GenResiduals3 check_coassociativity(const HopfData& h, const CommutatorTable& t) {
    Coproduct delta(h, t);
    GenResiduals3 out;
    for (Gen g : kGens) {
        const TensorElement& d = h.coproduct(g);
        out[static_cast<std::size_t>(g)] = Residual<Tensor3Element>::of(delta.left(d) - delta.right(d));
    }
    return out;
}

PairResiduals check_homomorphism(const HopfData& h, const CommutatorTable& t) {
    Coproduct delta(h, t);
    PairResiduals out;
    const std::pair<Gen, Gen> pairs[3] = {{Gen::A, Gen::B}, {Gen::A, Gen::C}, {Gen::B, Gen::C}};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& dx = h.coproduct(pairs[i].first);
        const auto& dy = h.coproduct(pairs[i].second);
        TensorElement lhs = delta(t.ordered(kPairs[i]));
        TensorElement rhs = multiply(dx, dy, t) - multiply(dy, dx, t);
        out[i] = Residual<TensorElement>::of(lhs - rhs);
    }
    return out;
}

std::array<bool, 3> check_sigma_tilde(const HopfData& h) {
    std::array<bool, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = flip(h.delta[i]).negate_z() == h.delta[i];
    return out;
}

bool CounitResiduals::ok() const {
    for (std::size_t i = 0; i < 3; ++i)
        if (!left[i].ok() || !right[i].ok()) return false;
    return true;
}

CounitResiduals check_counit(const HopfData& h, const CommutatorTable& t) {
    const int n = t.order();
    CounitResiduals out;
    for (Gen g : kGens) {
        AlgElement l(n), r(n);
        for (const auto& [k, s] : h.coproduct(g).terms()) {
            l.add_scaled(AlgElement::term(k[1], s), counit_apply(AlgElement::term(k[0], ZSeries::constant(n, 1)), h));
            r.add_scaled(AlgElement::term(k[0], s), counit_apply(AlgElement::term(k[1], ZSeries::constant(n, 1)), h));
        }
        const AlgElement x = AlgElement::generator(g, n);
        out.left[static_cast<std::size_t>(g)] = Residual<AlgElement>::of(l - x);
        out.right[static_cast<std::size_t>(g)] = Residual<AlgElement>::of(r - x);
    }
    return out;
}

namespace {

/// γ on monomials: γ(A^a B^b C^c) = γ(C)^c γ(B)^b γ(A)^a, cached for one set of images.
class AntipodeMap {
public:
    AntipodeMap(const std::array<AlgElement, 3>& gamma, const CommutatorTable& t) : gamma_(gamma), t_(t) {}

    const AlgElement& of(const Monomial& m) {
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        AlgElement value = AlgElement::one(t_.order());
        if (!m.is_one()) {
            // last letter of m becomes the first factor of the reversed product
            Gen g = m.c ? Gen::C : m.b ? Gen::B : Gen::A;
            Monomial rest = m;
            rest.power(g)--;
            value = multiply(gamma_[static_cast<std::size_t>(g)], of(rest), t_);
        }
        return memo_.emplace(m, std::move(value)).first->second;
    }

    AlgElement apply(const AlgElement& x) {
        AlgElement out(t_.order());
        for (const auto& [m, s] : x.terms()) out.add_scaled(of(m), s);
        return out;
    }

private:
    const std::array<AlgElement, 3>& gamma_;
    const CommutatorTable& t_;
    std::map<Monomial, AlgElement> memo_;
};

/// m∘(γ⊗id)∘Δ(g) - ε(g) when `gamma_left`, else m∘(id⊗γ)∘Δ(g) - ε(g).
AlgElement antipode_residual(Gen g, const HopfData& h, AntipodeMap& gamma, const CommutatorTable& t, bool gamma_left) {
    const int n = t.order();
    AlgElement out(n);
    for (const auto& [k, s] : h.coproduct(g).terms()) {
        const AlgElement x = AlgElement::term(k[0], ZSeries::constant(n, 1));
        const AlgElement y = AlgElement::term(k[1], ZSeries::constant(n, 1));
        AlgElement prod = gamma_left ? multiply(gamma.of(k[0]), y, t) : multiply(x, gamma.of(k[1]), t);
        out.add_scaled(prod, s);
    }
    out -= unit_times(ZSeries::constant(n, ParamPoly(h.counit[static_cast<std::size_t>(g)])));
    return out;
}

}  // namespace

AlgElement antipode_apply(const AlgElement& x, const std::array<AlgElement, 3>& gamma, const CommutatorTable& t) {
    AntipodeMap map(gamma, t);
    return map.apply(x);
}

std::array<AlgElement, 3> solve_antipode(const HopfData& h, const CommutatorTable& t) {
    const int n = t.order();
    std::array<AlgElement, 3> gamma;
    for (Gen g : kGens) gamma[static_cast<std::size_t>(g)] = -AlgElement::generator(g, n);
    for (int d = 0; d <= n; ++d) {
        std::array<AlgElement, 3> residual;
        AntipodeMap map(gamma, t);
        for (Gen g : kGens) {
            const auto i = static_cast<std::size_t>(g);
            residual[i] = antipode_residual(g, h, map, t, true);
            auto low = residual[i].lowest_order();
            if (low && *low < d) throw NoSolution("antipode: residual for " + std::string(1, gen_letter(g)), *low);
        }
        // γ(g) enters the residual as γ(g)⊗1 at z^0, so subtracting the z^d slice clears it.
        for (std::size_t i = 0; i < 3; ++i) gamma[i] -= residual[i].component(d);
    }
    AntipodeMap map(gamma, t);
    for (Gen g : kGens) {
        if (auto low = antipode_residual(g, h, map, t, true).lowest_order())
            throw NoSolution("antipode: left axiom", *low);
        if (auto low = antipode_residual(g, h, map, t, false).lowest_order())
            throw NoSolution("antipode: mirror axiom", *low);
    }
    return gamma;
}

bool AntipodeResiduals::ok() const {
    for (std::size_t i = 0; i < 3; ++i)
        if (!left[i].ok() || !right[i].ok()) return false;
    return true;
}

AntipodeResiduals check_antipode(const HopfData& h, const std::array<AlgElement, 3>& gamma, const CommutatorTable& t) {
    AntipodeMap map(gamma, t);
    AntipodeResiduals out;
    for (Gen g : kGens) {
        const auto i = static_cast<std::size_t>(g);
        out.left[i] = Residual<AlgElement>::of(antipode_residual(g, h, map, t, true));
        out.right[i] = Residual<AlgElement>::of(antipode_residual(g, h, map, t, false));
    }
    return out;
}

bool Cocommutator3::is_zero() const {
    for (const auto& img : images)
        for (const auto& c : img)
            if (!c.is_zero()) return false;
    return true;
}

Cocommutator3 extract_cocommutator(const HopfData& h) {
    Cocommutator3 eta;
    for (Gen g : kGens) {
        const TensorElement& d = h.coproduct(g);
        if (d.order() < 1) throw DomainError("extract_cocommutator: needs truncation order >= 1");
        const TensorElement first = d.component(1);
        const TensorElement skew = (first - flip(first)) * ParamPoly(Rational(1, 2));
        auto& img = eta.images[static_cast<std::size_t>(g)];
        for (const auto& [k, s] : skew.terms()) {
            if (k[0].degree() != 1 || k[1].degree() != 1)
                throw DomainError("extract_cocommutator: first-order skew part of Δ(" + std::string(1, gen_letter(g)) +
                                  ") is not a bivector");
            Gen x = k[0].a ? Gen::A : k[0].b ? Gen::B : Gen::C;
            Gen y = k[1].a ? Gen::A : k[1].b ? Gen::B : Gen::C;
            if (x < y) img[static_cast<std::size_t>(pair_of(x, y))] += s[1];
        }
    }
    return eta;
}

}  // namespace qalg

#include "qalg/diagnostics.hpp"

namespace qalg {

bool HopfReport::coassociative() const {
    for (const auto& r : coassociativity)
        if (!r.ok()) return false;
    return true;
}

bool HopfReport::homomorphic() const {
    for (const auto& r : homomorphism)
        if (!r.ok()) return false;
    return true;
}

bool HopfReport::ok() const {
    return coassociative() && homomorphic() && counit.ok() && sigma_invariant() && antipode_ok() && jacobi.ok();
}

HopfReport verify_hopf(const HopfData& h, const CommutatorTable& t) {
    HopfReport r;
    r.coassociativity = check_coassociativity(h, t);
    r.homomorphism = check_homomorphism(h, t);
    r.counit = check_counit(h, t);
    r.sigma_tilde = check_sigma_tilde(h);
    r.jacobi = Residual<AlgElement>::of(jacobi_residuals(t).sum);
    if (r.coassociative() && r.counit.ok()) {
        try {
            r.antipode = solve_antipode(h, t);
            r.antipode_residuals = check_antipode(h, *r.antipode, t);
        } catch (const NoSolution& e) {
            r.antipode_failed_order = e.order();
        }
    }
    return r;
}

}  // namespace qalg
