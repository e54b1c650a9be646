#include <doctest.h>

#include "qalg/catalog.hpp"
#include "qalg/errors.hpp"
#include "qalg/expression.hpp"
#include "qalg/quantizer.hpp"
#include "support/families.hpp"
#include "support/tables.hpp"

using namespace qalg;

namespace {

std::vector<ParamPoly> polys(std::initializer_list<const char*> texts) {
    std::vector<ParamPoly> out;
    for (const char* t : texts) out.push_back(parse_expression(t));
    return out;
}

}  // namespace

TEST_CASE("first-order constraints, generic rho") {
    ConstraintSet s = first_order_constraints(BialgebraSpec::symbolic());
    CHECK(s.same_as(polys({"c3*rho-c3", "b2*rho-b2", "c2*rho+b3", "c1*rho-a3", "a2*rho+b1",
                           "a2*c1*rho^2-a1*c2*rho+a1*c2-a2*c1"})));
}

TEST_CASE("first-order constraints at rho = 1 and rho = -1") {
    Bindings one{{Param::rho, Rational(1)}};
    Bindings minus{{Param::rho, Rational(-1)}};
    CHECK(first_order_constraints(BialgebraSpec::symbolic().substitute(one)).same_as(polys({"b3+c2", "a3-c1", "a2+b1"})));
    CHECK(first_order_constraints(BialgebraSpec::symbolic().substitute(minus))
              .same_as(polys({"c3", "b2", "b3-c2", "a3+c1", "a2-b1", "a1*c2"})));
}

TEST_CASE("first-order constraints on concrete points") {
    for (const auto& p : fixtures::family_points()) {
        CAPTURE(p.id);
        ConstraintSet s = first_order_constraints(p.spec);
        CHECK(s.equations.empty());
    }
    // c2 = 1/3, rho = 2 with the linear relations imposed and a1 from the quadratic one
    BialgebraSpec ok = fixtures::fam11(2, 1, fixtures::q("1/3"), 1).spec;
    CHECK(first_order_constraints(ok).equations.empty());
    BialgebraSpec bad = ok;
    bad.constant(Param::a1) += ParamPoly(1);
    CHECK_FALSE(first_order_constraints(bad).equations.empty());
}

TEST_CASE("quantize rejects constants that violate the constraints") {
    BialgebraSpec bad = fixtures::fam12(2, 1, 1).spec;
    bad.constant(Param::c3) = ParamPoly(1);
    CHECK_THROWS_AS(quantize(bad, 4), DomainError);
    CHECK_THROWS_AS(quantize(BialgebraSpec::symbolic(), 4), DomainError);
}

TEST_CASE("quantize the abelian algebra") {
    BialgebraSpec zero = BialgebraSpec::concrete({{Param::rho, Rational(3)}});
    QuantizationResult r = quantize(zero, 4);
    CHECK(tables_equal(r.table, CommutatorTable::abelian(4)));
    CHECK(verify_hopf(r.hopf, r.table).ok());
}

TEST_CASE("quantize A1(q) from its classical limit") {
    // [A,B]=B, [A,C]=-C, [B,C]=A, rho=1
    BialgebraSpec s = fixtures::constants(1, 0, 1, 0, 0, 0, -1, 1, 0, 0);
    for (int n : {2, 4, 6}) {
        CAPTURE(n);
        QuantizationResult r = quantize(s, n);
        CHECK(tables_equal(r.table, fixtures::t211(n)));
        CHECK(r.solved_orders.size() == r.freedom.size());
    }
}

TEST_CASE("quantize reproduces the closed-form families at N=4") {
    for (const auto& p : fixtures::family_points()) {
        CAPTURE(p.id);
        CatalogCase c = catalog_table(p.id, p.overrides, 4);
        QuantizationResult r = quantize(p.spec, 4);
        for (const auto& res : compare_tables(r.table, c.table)) CHECK(res.ok());
        CHECK(verify_hopf(r.hopf, r.table).ok());
    }
}

TEST_CASE("compare_tables reports the first differing order") {
    auto r = compare_tables(fixtures::t211(4), fixtures::t111(4, 1));
    CHECK(r[0].ok());
    CHECK(r[1].ok());
    REQUIRE_FALSE(r[2].ok());
    CHECK(r[2].lowest_order == 0);  // [B,C] = A vs 0

    // Heisenberg with deformed vs undeformed bracket: equal at z^0, differ at z^2
    CatalogCase h1 = catalog_table("1.2.2", {}, 4);
    CatalogCase h2 = catalog_table("3.2.4", {}, 4);
    auto d = compare_tables(h1.table, h2.table);
    REQUIRE_FALSE(d[2].ok());
    CHECK(d[2].lowest_order == 2);
    CHECK_THROWS_AS(compare_tables(fixtures::t211(4), fixtures::t211(2)), TruncationMismatch);
}

TEST_CASE("catalog listing") {
    CHECK(classified_case_ids().size() == 16);
    CHECK(family_ids().size() == 5);
    CHECK(catalog_ids().front() == "1.1.1");
    CHECK(classified_case_ids().back() == "3.2.5");
    CHECK(catalog_source("2.1.1").find("\"id\": \"2.1.1\"") != std::string::npos);
}

TEST_CASE("catalog table matches hand-assembled tables") {
    CHECK(tables_equal(catalog_table("2.1.1", {}, 6).table, fixtures::t211(6)));
    CHECK(tables_equal(catalog_table("2.2.1", {}, 6).table, fixtures::t221(6)));
    CHECK(tables_equal(catalog_table("1.1.1", {}, 6).table, fixtures::t111(6, 2)));
    CHECK(tables_equal(catalog_table("1.1.1", {{Param::rho, Rational(5)}}, 4).table, fixtures::t111(4, 5)));
}

TEST_CASE("catalog metadata") {
    CatalogCase c = catalog_table("1.2.1", {}, 2);
    REQUIRE(c.r_matrix);
    CHECK(c.r_matrix->to_string() == "A^B");
    CHECK(c.r_matrix_kind == RMatrixKind::non_standard);
    CatalogCase d = catalog_table("1.1.1", {}, 2);
    CHECK_FALSE(d.r_matrix);
    CHECK(d.coboundary == false);
    CHECK(catalog_table("fam-2.1", {}, 2).is_family());
}

TEST_CASE("catalog input errors") {
    CHECK_THROWS_AS(catalog_table("9.9.9", {}, 4), DomainError);
    CHECK_THROWS_AS(catalog_table("2.1.1", {{Param::rho, Rational(2)}}, 4), DomainError);  // fixed
    CHECK_THROWS_AS(catalog_table("1.1.1", {{Param::rho, Rational(1)}}, 4), DomainError);  // constraint
    CHECK_THROWS_AS(catalog_table("1.1.1", {{Param::a1, Rational(1)}}, 4), DomainError);   // not a parameter
    CHECK_THROWS_AS(catalog_table("fam-1.1", {{Param::c2, Rational(0)}}, 4), DomainError);
    CHECK_THROWS_AS(catalog_table("1.1.1", {}, 1), DomainError);
    CHECK_NOTHROW(catalog_table("2.2.1", {}, 4, true));
}
