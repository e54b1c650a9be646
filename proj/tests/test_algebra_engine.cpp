#include <doctest.h>

#include <random>

#include "qalg/diagnostics.hpp"
#include "qalg/errors.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace qalg;
using fixtures::gen;

namespace {

Monomial mono(unsigned a, unsigned b, unsigned c) {
    return {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)};
}

AlgElement term(int n, Monomial m, Rational c, int zdeg = 0) { return AlgElement::term(n, m, ParamPoly(c), zdeg); }

AlgElement random_element(std::mt19937& rng, int n, unsigned max_degree) {
    std::uniform_int_distribution<int> count(1, 3), coef(-3, 3), zdeg(0, 2), exps(0, static_cast<int>(max_degree));
    AlgElement x(n);
    for (int k = count(rng); k > 0; --k) {
        Monomial m;
        for (Gen g : kGens) {
            unsigned room = max_degree - m.degree();
            m.power(g) = static_cast<std::uint16_t>(std::min<unsigned>(room, static_cast<unsigned>(exps(rng))));
        }
        x += term(n, m, coef(rng), zdeg(rng));
    }
    return x;
}

}  // namespace

TEST_CASE("normal_order single rewrite and long sinh entry") {
    auto t = fixtures::t111(2);
    CHECK(normal_order("BA", t) == term(2, mono(1, 1, 0), 1) - term(2, mono(0, 1, 0), 1));

    auto t2 = fixtures::t211(4);
    AlgElement expected = term(4, mono(0, 1, 1), 1) - term(4, mono(1, 0, 0), 1) -
                          term(4, mono(3, 0, 0), Rational(2, 3), 2) - term(4, mono(5, 0, 0), Rational(2, 15), 4);
    CHECK(normal_order("CB", t2) == expected);

    CHECK(normal_order("AAB", CommutatorTable::abelian(3)) == term(3, mono(2, 1, 0), 1));
    CHECK(normal_order("", t) == AlgElement::one(2));
    CHECK_THROWS_AS(normal_order("AD", t), DomainError);
}

TEST_CASE("non-terminating tables are rejected up front") {
    const int n = 2;
    // [B,C] = BC would rewrite CB -> BC - BC... with no descent.
    AlgElement bad = term(n, mono(0, 1, 1), 1);
    CHECK_THROWS_AS(CommutatorTable::from_ordered({AlgElement(n), AlgElement(n), bad}), NonTerminatingTable);
    // [A,B] = AB is not smaller than the pair it replaces.
    CHECK_THROWS_AS(CommutatorTable::from_ordered({term(n, mono(1, 1, 0), 1), AlgElement(n), AlgElement(n)}),
                    NonTerminatingTable);
    // the same words at positive z-order are fine: the budget shrinks.
    CHECK_NOTHROW(CommutatorTable::from_ordered({term(n, mono(1, 1, 0), 1, 2), AlgElement(n), AlgElement(n)}));
}

TEST_CASE("multiply and commutator") {
    auto t = fixtures::t111(3);
    AlgElement x = term(3, mono(1, 2, 0), 2) + term(3, mono(0, 0, 1), -1, 1);
    CHECK(multiply(AlgElement::one(3), x, t) == x);
    CHECK(commutator(gen(Gen::A, 3), gen(Gen::B, 3), t) == gen(Gen::B, 3));
    // BA^2 = A^2B - 2AB + B by two single-letter rewrites
    AlgElement a2 = term(3, mono(2, 0, 0), 1);
    CHECK(commutator(a2, gen(Gen::B, 3), t) == term(3, mono(1, 1, 0), 2) - gen(Gen::B, 3));
    CHECK_THROWS_AS(multiply(x, AlgElement::one(2), t), TruncationMismatch);
}

TEST_CASE("sym_convert") {
    auto t = fixtures::t111(2);
    AlgElement sym_ab = term(2, mono(1, 1, 0), 1);
    AlgElement expanded = sym_to_ordered(sym_ab, t);
    CHECK(expanded == term(2, mono(1, 1, 0), 1) - term(2, mono(0, 1, 0), Rational(1, 2)));
    CHECK(ordered_to_sym(expanded, t) == sym_ab);
    CHECK(sym_convert(expanded, SymDirection::ordered_to_sym, t) == sym_ab);

    AlgElement b3 = term(2, mono(0, 3, 0), 1);
    CHECK(sym_to_ordered(b3, t) == b3);
}

TEST_CASE("Sym correction for C cosh(zA) under the Jordanian-type table") {
    const int n = 6;
    auto t = fixtures::t221(n);
    AlgElement sym_ccosh = sym_to_ordered(fixtures::sym_cosh(Gen::C, 1, n), t);
    AlgElement cosh = generator_series(Gen::A, SeriesKind::cosh, ParamPoly(1), n);
    AlgElement c = gen(Gen::C, n);
    AlgElement half = (multiply(c, cosh, t) + multiply(cosh, c, t)) * ParamPoly(Rational(1, 2));
    AlgElement correction = sym_ccosh - half;

    AlgElement brute = oracle::brute_sym_to_ordered(fixtures::sym_cosh(Gen::C, 1, n), t) - half;
    CHECK(correction == brute);
    // z^2/12 * sinh(2zA)/(2z)
    AlgElement closed = generator_series(Gen::A, SeriesKind::sinh_over_scaled_z, ParamPoly(2), n);
    AlgElement shifted(n);
    for (const auto& [m, s] : closed.terms()) shifted.add(m, s.shift(2) * ParamPoly(Rational(1, 12)));
    CHECK(correction == shifted);
    CHECK(correction == term(n, mono(1, 0, 0), Rational(1, 12), 2) + term(n, mono(3, 0, 0), Rational(1, 18), 4) +
                            term(n, mono(5, 0, 0), Rational(1, 90), 6));
}

TEST_CASE("generator_series") {
    AlgElement s = generator_series(Gen::A, SeriesKind::sinh_over_z, ParamPoly(1), 5);
    CHECK(s == term(5, mono(1, 0, 0), 1) + term(5, mono(3, 0, 0), Rational(1, 6), 2) +
                   term(5, mono(5, 0, 0), Rational(1, 120), 4));
    const ParamPoly k = ParamPoly(1) + ParamPoly::variable(Param::rho);
    AlgElement scaled = generator_series(Gen::A, SeriesKind::sinh_over_scaled_z, k, 2);
    CHECK(scaled == term(2, mono(1, 0, 0), 1) + AlgElement::term(2, mono(3, 0, 0), k * k * Rational(1, 6), 2));
    CHECK(generator_series(Gen::A, SeriesKind::cosh, ParamPoly(0), 4) == AlgElement::one(4));
    AlgElement e = generator_series(Gen::B, SeriesKind::exp, ParamPoly(-1), 2);
    CHECK(e == AlgElement::one(2) - term(2, mono(0, 1, 0), 1, 1) + term(2, mono(0, 2, 0), Rational(1, 2), 2));
}

TEST_CASE("jacobi_residuals") {
    auto j = jacobi_residuals(fixtures::t211(6));
    CHECK(j.is_zero());
    CHECK(jacobi_residuals(CommutatorTable::abelian(4)).is_zero());
    auto bad = jacobi_residuals(fixtures::classical(0, 1, 0, 0, 0, 1, 1, 0, 0));
    CHECK(bad.sum == gen(Gen::A, 2, -2));
    CHECK(bad.lowest_order() == 0);
    CHECK(jacobi_residuals(fixtures::t221(6)).is_zero());
}

TEST_CASE("poisson_table") {
    const int n = 6;
    auto p = poisson_table(fixtures::t221(n));
    CHECK(p[2] == -fixtures::sym_cosh(Gen::C, 1, n));
    CHECK(p[2].to_string(true).find("c") != std::string::npos);
    for (const auto& e : poisson_table(CommutatorTable::abelian(3))) CHECK(e.is_zero());
    auto q = poisson_table(fixtures::t111(2));
    CHECK(q[0] == gen(Gen::B, 2));
    CHECK(q[1] == gen(Gen::C, 2, -2));
    CHECK(q[2].is_zero());
}

TEST_CASE("normal_order agrees with the naive rewriter") {
    for (const auto& t : {fixtures::t111(4), fixtures::t211(4), fixtures::t221(4)})
        for (const auto& w : oracle::all_words(4)) CHECK(normal_order(w, t) == oracle::naive_normal_order(w, t));
}

TEST_CASE("randomized engine properties on fixture tables") {
    std::mt19937 rng(7);
    const int n = 4;
    for (const auto& t : {fixtures::t111(n), fixtures::t211(n), fixtures::t221(n)}) {
        CHECK(table_is_even(t));
        for (int trial = 0; trial < 20; ++trial) {
            AlgElement x = random_element(rng, n, 3), y = random_element(rng, n, 3), z = random_element(rng, n, 2);
            CHECK(multiply(multiply(x, y, t), z, t) == multiply(x, multiply(y, z, t), t));
            CHECK(commutator(x, y, t) == -commutator(y, x, t));
            CHECK(sym_to_ordered(ordered_to_sym(x, t), t) == x);
            CHECK(ordered_to_sym(sym_to_ordered(x, t), t) == x);
            AlgElement nx = sym_to_ordered(x, t);
            CHECK(multiply(AlgElement::one(n), nx, t) == nx);
        }
    }
}
