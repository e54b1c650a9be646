#include "qalg/quantizer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <tuple>

#include "qalg/diagnostics.hpp"
#include "qalg/errors.hpp"
#include "qalg/linear_solve.hpp"

namespace qalg {

namespace {

constexpr std::size_t index_of(Param p) { return static_cast<std::size_t>(p); }

AlgElement linear(const ParamPoly& a, const ParamPoly& b, const ParamPoly& c, int n) {
    AlgElement e(n);
    e.add(Monomial::of(Gen::A), ZSeries::constant(n, a));
    e.add(Monomial::of(Gen::B), ZSeries::constant(n, b));
    e.add(Monomial::of(Gen::C), ZSeries::constant(n, c));
    return e;
}

}  // namespace

BialgebraSpec BialgebraSpec::symbolic() {
    BialgebraSpec s;
    for (Param p : kStructureConstants) s.constant(p) = ParamPoly::variable(p);
    s.rho = ParamPoly::variable(Param::rho);
    return s;
}

BialgebraSpec BialgebraSpec::concrete(const Bindings& values) {
    BialgebraSpec s;
    for (const auto& [p, v] : values) {
        if (p == Param::rho)
            s.rho = ParamPoly(v);
        else
            s.constant(p) = ParamPoly(v);
    }
    return s;
}

BialgebraSpec BialgebraSpec::substitute(const Bindings& b) const {
    BialgebraSpec s = *this;
    for (auto& c : s.constants) c = c.substitute(b);
    s.rho = s.rho.substitute(b);
    return s;
}

bool BialgebraSpec::is_concrete() const {
    if (!rho.is_constant()) return false;
    return std::all_of(constants.begin(), constants.end(), [](const ParamPoly& c) { return c.is_constant(); });
}

CommutatorTable BialgebraSpec::classical_table(int order) const {
    using P = Param;
    return CommutatorTable::from_ordered({linear(constant(P::c1), constant(P::c2), constant(P::c3), order),
                                          linear(constant(P::b1), constant(P::b2), constant(P::b3), order),
                                          linear(constant(P::a1), constant(P::a2), constant(P::a3), order)});
}

BialgebraSpec BialgebraSpec::from_table(const CommutatorTable& t, const ParamPoly& rho) {
    BialgebraSpec s;
    s.rho = rho;
    const std::array<std::array<Param, 3>, 3> slots = {{{Param::c1, Param::c2, Param::c3},
                                                        {Param::b1, Param::b2, Param::b3},
                                                        {Param::a1, Param::a2, Param::a3}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (Gen g : kGens) s.constant(slots[i][static_cast<std::size_t>(g)]) = t.ordered(kPairs[i]).coefficient(Monomial::of(g))[0];
    return s;
}

bool ConstraintSet::contains(const ParamPoly& p) const {
    const ParamPoly m = p.monic();
    return std::find(equations.begin(), equations.end(), m) != equations.end();
}

bool ConstraintSet::same_as(const std::vector<ParamPoly>& other) const {
    ConstraintSet o;
    for (const auto& p : other) {
        ParamPoly m = p.monic();
        if (!m.is_zero() && !o.contains(m)) o.equations.push_back(m);
    }
    if (o.equations.size() != equations.size()) return false;
    return std::all_of(o.equations.begin(), o.equations.end(), [this](const ParamPoly& p) { return contains(p); });
}

std::string ConstraintSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < equations.size(); ++i) out += (i ? ", " : "") + equations[i].to_string();
    return out + "}";
}

namespace {

/// The latest structure constant appearing linearly with a constant coefficient.
std::optional<std::pair<Param, ParamPoly>> solvable_variable(const ParamPoly& eq) {
    for (auto it = kStructureConstants.rbegin(); it != kStructureConstants.rend(); ++it) {
        const Param v = *it;
        if (!eq.depends_on(v)) continue;
        // eq = coef * v + rest, rest free of v
        ParamPoly coef = eq.substitute(v, ParamPoly(1)) - eq.substitute(v, ParamPoly(0));
        ParamPoly rest = eq.substitute(v, ParamPoly(0));
        if (!coef.is_constant() || coef.is_zero()) continue;
        if (eq != coef * ParamPoly::variable(v) + rest) continue;  // v appears non-linearly
        return std::make_pair(v, -rest * Rational(1 / coef.constant_value()));
    }
    return std::nullopt;
}

void add_unique(std::vector<ParamPoly>& eqs, const ParamPoly& p) {
    ParamPoly m = p.monic();
    if (m.is_zero()) return;
    if (std::find(eqs.begin(), eqs.end(), m) == eqs.end()) eqs.push_back(std::move(m));
}

}  // namespace

namespace {

bool redundant(const std::vector<ParamPoly>& eqs, const ParamPoly& p) {
    return std::any_of(eqs.begin(), eqs.end(), [&p](const ParamPoly& e) { return p.divide_exact(e).has_value(); });
}

/// The constraint set with every constant and rho symbolic.
ConstraintSet generic_constraints() {
    const BialgebraSpec spec = BialgebraSpec::symbolic();
    const CommutatorTable t = spec.classical_table(1);
    const HopfData h = HopfData::standard(spec.rho, 1);

    std::vector<ParamPoly> linear_eqs;
    for (const auto& r : check_homomorphism(h, t))
        for (const auto& [k, s] : r.element.terms())
            for (int d = 0; d <= 1; ++d) add_unique(linear_eqs, s[d]);

    std::vector<ParamPoly> jacobi;
    const JacobiResiduals jac = jacobi_residuals(t);
    for (const auto& [m, s] : jac.sum.terms()) add_unique(jacobi, s[0]);

    for (std::size_t i = 0; i < linear_eqs.size(); ++i) {
        auto solved = solvable_variable(linear_eqs[i]);
        if (!solved) continue;
        for (auto& j : jacobi) j = j.substitute(solved->first, solved->second);
        for (std::size_t k = 0; k < linear_eqs.size(); ++k)
            if (k != i) linear_eqs[k] = linear_eqs[k].substitute(solved->first, solved->second).monic();
    }

    ConstraintSet out;
    for (const auto& e : linear_eqs) add_unique(out.equations, e);
    for (const auto& j : jacobi)
        if (!j.is_zero() && !redundant(out.equations, j)) add_unique(out.equations, j);
    return out;
}

}  // namespace

ConstraintSet first_order_constraints(const BialgebraSpec& spec) {
    // Derived once with everything symbolic, then specialized, so the solved-for variables
    // do not depend on which values happen to be concrete.
    static const ConstraintSet generic = generic_constraints();
    std::vector<std::pair<Param, ParamPoly>> values;
    for (Param p : kStructureConstants)
        if (spec.constant(p) != ParamPoly::variable(p)) values.emplace_back(p, spec.constant(p));
    if (spec.rho != ParamPoly::variable(Param::rho)) values.emplace_back(Param::rho, spec.rho);

    std::vector<ParamPoly> specialized;
    for (ParamPoly e : generic.equations) {
        for (const auto& [p, v] : values) e = e.substitute(p, v);
        specialized.push_back(e.monic());
    }
    ConstraintSet out;
    for (std::size_t i = 0; i < specialized.size(); ++i) {
        const ParamPoly& e = specialized[i];
        if (e.is_zero()) continue;
        std::vector<ParamPoly> others;
        for (std::size_t k = 0; k < specialized.size(); ++k)
            if (k != i && !specialized[k].is_zero() && specialized[k].total_degree() < e.total_degree())
                others.push_back(specialized[k]);
        if (!redundant(others, e)) add_unique(out.equations, e);
    }
    return out;
}

namespace {

using RowKey = std::tuple<int, int, Monomial, Monomial, int>;
using Rows = std::map<RowKey, Rational>;

Rational constant_of(const ParamPoly& p) {
    if (!p.is_constant()) throw DomainError("quantize needs concrete constants, got '" + p.to_string() + "'");
    return p.constant_value();
}

/// Homomorphism and Jacobi residual coefficients at z-degrees [lo, hi].
Rows residual_rows(const std::array<AlgElement, 3>& sym, const HopfData& h, int lo, int hi) {
    const CommutatorTable t = CommutatorTable::from_sym(sym);
    Rows rows;
    auto hom = check_homomorphism(h, t);
    for (int i = 0; i < 3; ++i)
        for (const auto& [k, s] : hom[static_cast<std::size_t>(i)].element.terms())
            for (int d = lo; d <= hi; ++d)
                if (!s[d].is_zero()) rows[{0, i, k[0], k[1], d}] = constant_of(s[d]);
    const JacobiResiduals jac = jacobi_residuals(t);
    for (const auto& [m, s] : jac.sum.terms())
        for (int d = lo; d <= hi; ++d)
            if (!s[d].is_zero()) rows[{1, 0, m, Monomial{}, d}] = constant_of(s[d]);
    return rows;
}

struct Unknown {
    std::size_t pair;
    Monomial sym_key;
};

/// Ansatz columns at one order: higher A-powers first, the linear generators last so
/// that they are the ones left free.
std::vector<Unknown> ansatz(int max_power) {
    std::vector<Unknown> out, lin;
    for (int p = max_power; p >= 0; --p) {
        for (std::size_t pair = 0; pair < 3; ++pair) {
            for (Gen g : kGens) {
                Monomial m;
                m.a = static_cast<std::uint16_t>(p);
                if (g != Gen::A) m.power(g) += 1;
                (m.degree() == 1 ? lin : out).push_back({pair, m});
            }
        }
    }
    out.insert(out.end(), lin.begin(), lin.end());
    return out;
}

std::array<AlgElement, 3> truncate_all(const std::array<AlgElement, 3>& x, int order) {
    return {x[0].truncated(order), x[1].truncated(order), x[2].truncated(order)};
}

}  // namespace

QuantizationResult quantize(const BialgebraSpec& spec, int order, const QuantizeOptions& options) {
    if (order < 0) throw DomainError("negative truncation order");
    if (!spec.is_concrete()) throw DomainError("quantize needs concrete rational constants and rho");
    const ConstraintSet first = first_order_constraints(spec);
    if (!first.equations.empty())
        throw DomainError("first-order constraints violated: " + first.to_string());

    const CommutatorTable classical = spec.classical_table(order);
    std::array<AlgElement, 3> sym = {classical.sym(Pair::AB), classical.sym(Pair::AC), classical.sym(Pair::BC)};
    QuantizationResult result{classical, HopfData::standard(spec.rho, order), {}, {}, {}};

    for (int m = 1; 2 * m <= order; ++m) {
        const int z = 2 * m;
        const int work = std::min(order, z + 1);
        const HopfData h = HopfData::standard(spec.rho, work);
        const auto base = truncate_all(sym, work);
        const Rows r0 = residual_rows(base, h, z, work);

        bool solved = false;
        for (int extra = 0; extra <= options.max_escalation && !solved; extra += 2) {
            const auto unknowns = ansatz(z + 1 + extra);
            std::vector<Rows> cols(unknowns.size());
            const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
            for (std::size_t start = 0; start < unknowns.size(); start += workers) {
                std::vector<std::future<Rows>> batch;
                for (std::size_t i = start; i < std::min(unknowns.size(), start + workers); ++i) {
                    batch.push_back(std::async(std::launch::async, [&, i] {
                        auto trial = base;
                        trial[unknowns[i].pair].add(unknowns[i].sym_key, ZSeries::monomial(work, z, ParamPoly(1)));
                        return residual_rows(trial, h, z, work);
                    }));
                }
                for (std::size_t i = start; i < std::min(unknowns.size(), start + workers); ++i)
                    cols[i] = batch[i - start].get();
            }

            std::map<RowKey, std::size_t> row_index;
            for (const auto& [k, v] : r0) row_index.emplace(k, 0);
            for (const auto& c : cols)
                for (const auto& [k, v] : c) row_index.emplace(k, 0);
            std::size_t next = 0;
            for (auto& [k, idx] : row_index) idx = next++;

            RationalMatrix mat(row_index.size(), unknowns.size());
            std::vector<Rational> rhs(row_index.size());
            for (const auto& [k, v] : r0) rhs[row_index[k]] = -v;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                for (const auto& [k, v] : cols[j]) mat(row_index[k], j) += v;
                for (const auto& [k, v] : r0) mat(row_index[k], j) -= v;
            }

            LinearSolution sol = solve_linear(mat, rhs);
            if (!sol.consistent) {
                result.log.push_back("order " + std::to_string(z) + ": ansatz with A-powers <= " +
                                     std::to_string(z + 1 + extra) + " inconsistent, escalating");
                continue;
            }
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                if (sol.solution[j] != 0)
                    sym[unknowns[j].pair].add(unknowns[j].sym_key, ZSeries::monomial(order, z, ParamPoly(sol.solution[j])));
            result.solved_orders.push_back(z);
            result.freedom.push_back(sol.freedom());
            result.log.push_back("order " + std::to_string(z) + ": " + std::to_string(unknowns.size()) + " unknowns, rank " +
                                 std::to_string(sol.rank) + ", freedom " + std::to_string(sol.freedom()));
            solved = true;
        }
        if (!solved) throw NoSolution("quantize: no solution within the ansatz", z);
    }

    result.table = CommutatorTable::from_sym(sym);
    for (const auto& r : check_homomorphism(result.hopf, result.table))
        if (!r.ok()) throw NoSolution("quantize: homomorphism residual survives", *r.lowest_order);
    if (auto j = jacobi_residuals(result.table); !j.is_zero())
        throw NoSolution("quantize: Jacobi residual survives", *j.lowest_order());
    return result;
}

std::array<Residual<AlgElement>, 3> compare_tables(const CommutatorTable& t1, const CommutatorTable& t2) {
    if (t1.order() != t2.order()) throw TruncationMismatch(t1.order(), t2.order());
    std::array<Residual<AlgElement>, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = Residual<AlgElement>::of(t1.ordered(kPairs[i]) - t2.ordered(kPairs[i]));
    return out;
}

bool tables_equal(const CommutatorTable& t1, const CommutatorTable& t2) {
    for (const auto& r : compare_tables(t1, t2))
        if (!r.ok()) return false;
    return true;
}

}  // namespace qalg
