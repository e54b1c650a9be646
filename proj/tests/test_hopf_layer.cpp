#include <doctest.h>

#include <random>

#include "qalg/errors.hpp"
#include "qalg/generator_series.hpp"
#include "qalg/hopf.hpp"
#include "support/tables.hpp"

using namespace qalg;
using fixtures::gen;

namespace {

Monomial mono(unsigned a, unsigned b, unsigned c) {
    return {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)};
}

AlgElement expA(long c, int n) { return generator_series(Gen::A, SeriesKind::exp, ParamPoly(c), n); }

template <class R>
bool all_ok(const R& residuals) {
    for (const auto& r : residuals)
        if (!r.ok()) return false;
    return true;
}

/// m∘(γ⊗id) applied to a tensor.
AlgElement mu_gamma_id(const TensorElement& x, const std::array<AlgElement, 3>& gamma, const CommutatorTable& t) {
    AlgElement out(t.order());
    for (const auto& [k, s] : x.terms()) {
        AlgElement left = antipode_apply(AlgElement::term(k[0], ZSeries::constant(t.order(), 1)), gamma, t);
        out.add_scaled(multiply(left, AlgElement::term(k[1], ZSeries::constant(t.order(), 1)), t), s);
    }
    return out;
}

}  // namespace

TEST_CASE("coproduct_extend") {
    const int n = 2;
    auto abelian = CommutatorTable::abelian(n);
    auto prim = HopfData::primitive(n);
    CHECK(coproduct_extend(AlgElement::one(n), prim, abelian) == TensorElement::one(n));

    AlgElement a2 = AlgElement::term(n, mono(2, 0, 0), 1);
    AlgElement a = gen(Gen::A, n), one = AlgElement::one(n);
    CHECK(coproduct_extend(a2, prim, abelian) ==
          tensor(a2, one) + tensor(a, a) * ParamPoly(2) + tensor(one, a2));

    auto std_h = HopfData::standard(ParamPoly::variable(Param::rho), n);
    AlgElement b = gen(Gen::B, n);
    AlgElement e_plus = one + AlgElement::term(n, mono(1, 0, 0), 1, 1) + AlgElement::term(n, mono(2, 0, 0), Rational(1, 2), 2);
    AlgElement e_minus = one - AlgElement::term(n, mono(1, 0, 0), 1, 1) + AlgElement::term(n, mono(2, 0, 0), Rational(1, 2), 2);
    CHECK(coproduct_extend(b, std_h, abelian) == tensor(e_plus, b) + tensor(b, e_minus));
}

TEST_CASE("check_coassociativity") {
    const int n = 6;
    auto t = fixtures::t211(n);
    CHECK(all_ok(check_coassociativity(HopfData::standard(ParamPoly(1), n), t)));
    CHECK(all_ok(check_coassociativity(HopfData::primitive(4), CommutatorTable::abelian(4))));

    auto abelian = CommutatorTable::abelian(3);
    // g⊗B + B⊗g with g grouplike stays coassociative even with the sign flipped
    HopfData same_sign = HopfData::standard(ParamPoly(1), 3);
    same_sign.delta[1] = tensor(expA(1, 3), gen(Gen::B, 3)) + tensor(gen(Gen::B, 3), expA(1, 3));
    CHECK(all_ok(check_coassociativity(same_sign, abelian)));

    // an extra z A^2⊗A term breaks it at first order: the z^1 defect is 2z A⊗A⊗A
    HopfData broken = HopfData::standard(ParamPoly(1), 3);
    broken.delta[1] += tensor(AlgElement::term(3, mono(2, 0, 0), 1, 1), gen(Gen::A, 3));
    auto r = check_coassociativity(broken, abelian);
    CHECK(r[0].ok());
    REQUIRE(r[1].lowest_order == 1);
    Tensor3Element expected(3);
    expected.add({mono(1, 0, 0), mono(1, 0, 0), mono(1, 0, 0)}, ZSeries::monomial(3, 1, ParamPoly(2)));
    CHECK(r[1].element.component(1) == expected);
}

TEST_CASE("check_homomorphism") {
    const int n = 6;
    CHECK(all_ok(check_homomorphism(HopfData::standard(ParamPoly(1), n), fixtures::t211(n))));
    CHECK(all_ok(check_homomorphism(HopfData::primitive(3), CommutatorTable::abelian(3))));
    CHECK(all_ok(check_homomorphism(HopfData::standard(ParamPoly(2), 4), fixtures::t111(4, 2))));
    auto wrong = check_homomorphism(HopfData::standard(ParamPoly(3), 4), fixtures::t111(4, 2));
    CHECK(wrong[0].ok());
    CHECK(wrong[1].ok());
    CHECK(wrong[2].lowest_order == 1);
}

TEST_CASE("check_sigma_tilde") {
    auto s = check_sigma_tilde(HopfData::standard(ParamPoly::variable(Param::rho), 4));
    CHECK((s[0] && s[1] && s[2]));
    auto p = check_sigma_tilde(HopfData::primitive(4));
    CHECK((p[0] && p[1] && p[2]));
    HopfData bad = HopfData::standard(ParamPoly(1), 3);
    bad.delta[1] = tensor(expA(1, 3), gen(Gen::B, 3)) + tensor(gen(Gen::B, 3), expA(1, 3));
    auto b = check_sigma_tilde(bad);
    CHECK(b[0]);
    CHECK_FALSE(b[1]);
}

TEST_CASE("extract_cocommutator") {
    const ParamPoly rho = ParamPoly::variable(Param::rho);
    auto eta = extract_cocommutator(HopfData::standard(rho, 3));
    CHECK(eta.of(Gen::A) == std::array<ParamPoly, 3>{});
    CHECK(eta.of(Gen::B) == std::array<ParamPoly, 3>{ParamPoly(1), ParamPoly(), ParamPoly()});
    CHECK(eta.of(Gen::C) == std::array<ParamPoly, 3>{ParamPoly(), rho, ParamPoly()});
    CHECK(extract_cocommutator(HopfData::primitive(3)).is_zero());

    HopfData doubled = HopfData::standard(rho, 3);
    doubled.delta[1] = tensor(expA(2, 3), gen(Gen::B, 3)) + tensor(gen(Gen::B, 3), expA(-2, 3));
    CHECK(extract_cocommutator(doubled).of(Gen::B)[0] == ParamPoly(2));

    HopfData not_bivector = HopfData::primitive(2);
    not_bivector.delta[0] += tensor(AlgElement::term(2, mono(2, 0, 0), 1, 1), AlgElement::one(2));
    CHECK_THROWS_AS(extract_cocommutator(not_bivector), DomainError);
}

TEST_CASE("check_counit") {
    auto t = fixtures::t111(4);
    CHECK(check_counit(HopfData::standard(ParamPoly(2), 4), t).ok());
    CHECK(check_counit(HopfData::primitive(4), t).ok());
    HopfData bad = HopfData::standard(ParamPoly(2), 4);
    bad.counit[0] = 1;
    auto r = check_counit(bad, t);
    CHECK_FALSE(r.ok());
    CHECK(r.left[0].lowest_order == 0);
}

TEST_CASE("solve_antipode") {
    {
        auto t = fixtures::t111(2);
        auto gamma = solve_antipode(HopfData::standard(ParamPoly(2), 2), t);
        CHECK(gamma[0] == -gen(Gen::A, 2));
        AlgElement b = gen(Gen::B, 2);
        CHECK(gamma[1] == -b + AlgElement::term(2, mono(0, 1, 0), 1, 1) - AlgElement::term(2, mono(0, 1, 0), Rational(1, 2), 2));
    }
    {
        auto gamma = solve_antipode(HopfData::standard(ParamPoly(1), 4), CommutatorTable::abelian(4));
        CHECK(gamma[1] == -gen(Gen::B, 4));
    }
    {
        // adjoint-series oracle: γ(X) = -e^{-zA} X e^{zA} for X = B, C
        const int n = 6;
        for (const auto& t : {fixtures::t111(n), fixtures::t211(n), fixtures::t221(n)}) {
            const ParamPoly rho = t.ordered(Pair::AC) == -gen(Gen::C, n, 2) ? ParamPoly(2) : ParamPoly(1);
            HopfData h = HopfData::standard(rho, n);
            auto gamma = solve_antipode(h, t);
            CHECK(gamma[0] == -gen(Gen::A, n));
            AlgElement sandwich_b = -multiply(multiply(expA(-1, n), gen(Gen::B, n), t), expA(1, n), t);
            CHECK(gamma[1] == sandwich_b);
            CHECK(check_antipode(h, gamma, t).ok());
        }
    }
}

TEST_CASE("randomized homomorphism and antipode checks on products") {
    const int n = 4;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(0, 2), c(-2, 2);
    auto t = fixtures::t221(n);
    HopfData h = HopfData::standard(ParamPoly(1), n);
    Coproduct delta(h, t);
    auto gamma = solve_antipode(h, t);
    for (int trial = 0; trial < 30; ++trial) {
        AlgElement x = AlgElement::term(n, mono(e(rng), e(rng) % 2, e(rng) % 2), c(rng) ? c(rng) : 1);
        AlgElement y = AlgElement::term(n, mono(e(rng) % 2, e(rng), e(rng) % 2), 1);
        CHECK(delta(multiply(x, y, t)) == multiply(delta(x), delta(y), t));
        AlgElement small = AlgElement::term(n, mono(e(rng) % 2, e(rng) % 2, e(rng) % 2), 1);
        CHECK(mu_gamma_id(delta(small), gamma, t) == AlgElement::term(Monomial{}, counit_apply(small, h)));
    }
}
