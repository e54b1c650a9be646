// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qalg/catalog.hpp"
#include "qalg/classification.hpp"
#include "qalg/diagnostics.hpp"
#include "qalg/errors.hpp"
#include "qalg/expression.hpp"
#include "qalg/quantizer.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace qalg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

std::vector<ParamPoly> polys(std::initializer_list<const char*> texts) {
    std::vector<ParamPoly> out;
    for (const char* t : texts) out.push_back(parse_expression(t));
    return out;
}

LieAlgebra3 classical_limit(const CatalogCase& c) { return LieAlgebra3::from_table(c.table); }

Cobracket eta_of(const CatalogCase& c) { return cobracket_of(extract_cocommutator(c.hopf)); }

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// ---- random inputs -------------------------------------------------------------------

class Random {
public:
    explicit Random(unsigned seed) : rng_(seed) {}

    Rational rational() {
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        Rational r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }
    Rational nonzero() {
        Rational r = 0;
        while (r == 0) r = rational();
        return r;
    }
    // rho outside {0, 1, -1}, as the families with generic rho require
    Rational generic_rho() {
        Rational r = 0;
        while (r == 0 || r == 1 || r == -1) r = rational();
        return r;
    }

    fixtures::FamilyPoint family_point() {
        switch (std::uniform_int_distribution<int>(0, 4)(rng_)) {
            case 0: return fixtures::fam11(generic_rho(), rational(), nonzero(), rational());
            case 1: return fixtures::fam12(generic_rho(), rational(), rational());
            case 2: return fixtures::fam21(rational(), rational(), rational(), rational(), rational(), rational());
            case 3: return fixtures::fam31(rational(), nonzero(), rational());
            default: return fixtures::fam32(rational(), rational(), rational());
        }
    }

    AlgElement element(int n, unsigned max_degree) {
        std::uniform_int_distribution<int> count(1, 3), coef(-3, 3), zdeg(0, 2), exps(0, static_cast<int>(max_degree));
        AlgElement x(n);
        for (int k = count(rng_); k > 0; --k) {
            Monomial m;
            for (Gen g : kGens) {
                unsigned room = max_degree - m.degree();
                m.power(g) = static_cast<std::uint16_t>(std::min<unsigned>(room, static_cast<unsigned>(exps(rng_))));
            }
            x += AlgElement::term(n, m, ParamPoly(Rational(coef(rng_))), zdeg(rng_));
        }
        return x;
    }

private:
    std::mt19937 rng_;
};

// ---- criteria ------------------------------------------------------------------------

Outcome constraints() {
    Outcome o;
    BialgebraSpec s = BialgebraSpec::symbolic();
    ConstraintSet generic = first_order_constraints(s);
    o.require(generic.same_as(polys({"c3*rho-c3", "b2*rho-b2", "c2*rho+b3", "c1*rho-a3", "a2*rho+b1",
                                     "a2*c1*rho^2-a1*c2*rho+a1*c2-a2*c1"})),
              "generic: " + generic.to_string());
    ConstraintSet plus = first_order_constraints(s.substitute({{Param::rho, Rational(1)}}));
    o.require(plus.same_as(polys({"b3+c2", "a3-c1", "a2+b1"})), "rho=1: " + plus.to_string());
    ConstraintSet minus = first_order_constraints(s.substitute({{Param::rho, Rational(-1)}}));
    o.require(minus.same_as(polys({"c3", "b2", "b3-c2", "a3+c1", "a2-b1", "a1*c2"})), "rho=-1: " + minus.to_string());
    o.detail = "generic 6, rho=1 3, rho=-1 6 equations";
    return o;
}

Outcome hopf_suite() {
    Outcome o;
    for (const auto& id : classified_case_ids()) {
        CatalogCase c = catalog_table(id, {}, 6);
        HopfReport r = verify_hopf(c.hopf, c.table);
        o.require(r.coassociative(), id + " coassociativity");
        o.require(r.homomorphic(), id + " homomorphism");
        o.require(r.counit.ok(), id + " counit");
        o.require(r.antipode_ok(), id + " antipode");
        o.require(r.sigma_invariant(), id + " sigma_tilde");
    }
    o.detail = std::to_string(classified_case_ids().size()) + " cases at N=6";
    return o;
}

Outcome quantizer_reproduction() {
    Outcome o;
    std::ostringstream freedom;
    for (const auto& p : fixtures::family_points()) {
        CatalogCase c = catalog_table(p.id, p.overrides, 6);
        QuantizationResult r = quantize(p.spec, 6);
        for (const auto& res : compare_tables(r.table, c.table)) o.require(res.ok(), p.id + " table mismatch");
        o.require(same_coproduct(r.hopf, c.hopf), p.id + " coproduct mismatch");
        freedom << " " << p.id << join(r.freedom);
    }
    o.detail = std::to_string(fixtures::family_points().size()) + " points; freedom per order:" + freedom.str();
    return o;
}

Outcome rmatrix_ledger() {
    Outcome o;
    auto label = [&](const char* id, SchoutenClass want) {
        CatalogCase c = catalog_table(id, {}, 2);
        if (!c.r_matrix) {
            o.require(false, std::string(id) + " has no r-matrix");
            return;
        }
        SchoutenResult s = schouten_classify(*c.r_matrix, classical_limit(c));
        o.require(s.kind == want, std::string(id) + " is " + std::string(to_string(s.kind)));
    };
    for (const char* id : {"1.2.1", "2.2.1", "2.2.2.1", "3.2.2", "3.2.5"}) label(id, SchoutenClass::cybe_zero);
    for (const char* id : {"1.2.2", "2.1.1", "2.2.2.2", "2.2.2.3", "3.2.4"}) label(id, SchoutenClass::mcybe_invariant);
    for (const char* id : {"1.1.1", "2.1.2", "2.2.2.4", "3.1", "3.2.1", "3.2.3"}) {
        CatalogCase c = catalog_table(id, {}, 2);
        CoboundaryResult r = coboundary_solve(classical_limit(c), eta_of(c));
        o.require(!r.feasible && !r.certificate.empty(), std::string(id) + " coboundary feasible");
    }
    o.detail = "5 cybe_zero, 5 mcybe_invariant, 6 infeasible";
    return o;
}

Outcome transformation() {
    Outcome o;
    const Rational c2 = 1, c1 = 2, a2 = 3, rho = 2;
    CatalogCase f = catalog_table("fam-1.1", {{Param::c2, c2}, {Param::c1, c1}, {Param::a2, a2}, {Param::rho, rho}}, 6);
    TransformSpec s;
    s.family = TransformFamily::cambio1;
    s.alpha = 1 / c2;
    s.beta = c2;
    s.delta = c1;
    s.nu = c2;
    s.eta_c = a2;
    s.rho = rho;
    TransformResult r = apply_transformation(f.table, f.hopf, s);
    CatalogCase target = catalog_table("1.1.1", {{Param::rho, rho}}, 6);
    o.require(tables_equal(r.table, target.table), "transformed table differs from 1.1.1");
    o.require(same_coproduct(r.hopf, target.hopf), "transformed coproduct differs from 1.1.1");
    o.require(verify_hopf(r.hopf, r.table).ok(), "transformed Hopf checks");

    // z -> 0 limit of 3.2.1, then B' = B + C
    CatalogCase c = catalog_table("3.2.1", {}, 4);
    CommutatorTable limit = fixtures::classical(-1, 0, 0, 1, 0, 0, 1, 1, 1, 0);
    for (std::size_t p = 0; p < 3; ++p)
        o.require(c.table.ordered(kPairs[p]).component(0).truncated(0) == limit.ordered(kPairs[p]), "3.2.1 limit");
    TransformSpec relabel;
    relabel.gamma_c = 1;
    TransformResult l = apply_transformation(limit, HopfData::primitive(0), relabel);
    o.require(tables_equal(l.table, fixtures::classical(0, 0, 0, 1, 0, 0, 1, 1, 0, 0)), "relabel table");
    o.detail = "fam-1.1 at c2=1 c1=2 a2=3 rho=2 -> 1.1.1; relabel -> [A,C]=A, [B,C]=A+B";
    return o;
}

Outcome sym_identity() {
    Outcome o;
    const int n = 6;
    CommutatorTable t = catalog_table("2.2.1", {}, n).table;
    AlgElement sym_ccosh = fixtures::sym_cosh(Gen::C, 1, n);
    AlgElement cosh = generator_series(Gen::A, SeriesKind::cosh, ParamPoly(1), n);
    AlgElement c = AlgElement::generator(Gen::C, n);
    AlgElement half = (multiply(c, cosh, t) + multiply(cosh, c, t)) * ParamPoly(Rational(1, 2));
    AlgElement correction = sym_to_ordered(sym_ccosh, t) - half;
    AlgElement brute = oracle::brute_sym_to_ordered(sym_ccosh, t) - half;
    o.require(correction == brute, "computed " + correction.to_string() + " vs oracle " + brute.to_string());
    o.require(!correction.is_zero(), "correction vanishes");
    o.detail = "Sym(C cosh(zA)) - (C cosh(zA) + cosh(zA) C)/2 = " + correction.to_string();
    return o;
}

Outcome property_suites() {
    Outcome o;
    Random rnd(20261019);
    const int n = 4;
    const int instances = 200;
    int assoc = 0, roundtrip = 0, jacobi = 0, limit = 0, even = 0;

    for (int i = 0; i < instances; ++i) {
        fixtures::FamilyPoint p = rnd.family_point();
        CatalogCase c = catalog_table(p.id, p.overrides, n);
        const CommutatorTable& t = c.table;
        const std::string where = p.id + " #" + std::to_string(i);

        AlgElement x = rnd.element(n, 3), y = rnd.element(n, 3), z = rnd.element(n, 2);
        o.require(multiply(multiply(x, y, t), z, t) == multiply(x, multiply(y, z, t), t), "associativity " + where);
        ++assoc;

        o.require(sym_to_ordered(ordered_to_sym(x, t), t) == x, "ordered->sym->ordered " + where);
        o.require(ordered_to_sym(sym_to_ordered(y, t), t) == y, "sym->ordered->sym " + where);
        ++roundtrip;

        AlgElement xy = commutator(x, y, t);
        o.require(xy == -commutator(y, x, t), "antisymmetry " + where);
        AlgElement jac = commutator(x, commutator(y, z, t), t) + commutator(y, commutator(z, x, t), t) +
                         commutator(z, commutator(x, y, t), t);
        o.require(jac.is_zero(), "Jacobi on elements " + where);
        o.require(jacobi_residuals(t).is_zero(), "Jacobi on the table " + where);
        ++jacobi;

        CommutatorTable cl = p.spec.classical_table(n);
        for (Pair q : kPairs) o.require(t.ordered(q).component(0) == cl.ordered(q), "classical entry " + where);
        o.require(multiply(x, y, t).component(0) == multiply(x.component(0), y.component(0), cl).component(0),
                  "product mod z " + where);
        ++limit;

        o.require(table_is_even(t), "ordered entries even " + where);
        for (Pair q : kPairs) o.require(t.sym(q).has_parity(Parity::even), "Sym entries even " + where);
        ++even;
    }
    for (int k : {assoc, roundtrip, jacobi, limit, even}) o.require(k >= 200, "too few instances");
    o.detail = "associativity " + std::to_string(assoc) + ", round-trip " + std::to_string(roundtrip) +
               ", antisymmetry+Jacobi " + std::to_string(jacobi) + ", classical limit " + std::to_string(limit) +
               ", evenness " + std::to_string(even) + " (N=4, random family points)";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const int n = 6;
    std::size_t words = 0;
    for (const char* id : {"1.1.1", "2.2.1", "3.2.5"}) {
        CommutatorTable t = catalog_table(id, {}, n).table;
        for (const auto& w : oracle::all_words(5)) {
            o.require(normal_order(w, t) == oracle::naive_normal_order(w, t), std::string(id) + " word " + w);
            ++words;
        }
    }
    o.detail = std::to_string(words) + " words (length <= 5) over 1.1.1, 2.2.1, 3.2.5 at N=6";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> run;
        double budget;  // seconds, 0 = none
    };
    const std::vector<Criterion> criteria = {
        {1, "constraint reproduction", constraints, 1},
        {2, "Hopf verification suite", hopf_suite, 30},
        {3, "quantizer reproduction", quantizer_reproduction, 0},
        {4, "r-matrix ledger", rmatrix_ledger, 1},
        {5, "transformation check", transformation, 0},
        {6, "Sym identity", sym_identity, 0},
        {7, "property suites", property_suites, 0},
        {8, "oracle equivalence", oracle_equivalence, 0},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs > c.budget) {
            o.pass = false;
            o.failures.push_back("over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        std::cout << "criterion " << c.number << " " << (o.pass ? "PASS" : "FAIL") << " [" << timing << "] " << c.name
                  << ": " << o.detail << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? "acceptance FAILED" : "acceptance passed") << " (" << criteria.size() - failed << "/"
              << criteria.size() << ")\n";
    return failed ? 1 : 0;
}
