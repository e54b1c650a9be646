#include "qalg/classification.hpp"

#include "qalg/errors.hpp"
#include "qalg/generator_series.hpp"

namespace qalg {

namespace {

constexpr std::size_t idx(Gen g) { return static_cast<std::size_t>(g); }

Vector3 unit(std::size_t i) {
    Vector3 v{0, 0, 0};
    v[i] = 1;
    return v;
}

Vector3 add(const Vector3& x, const Vector3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Vector3 scale(const Rational& c, const Vector3& x) { return {c * x[0], c * x[1], c * x[2]}; }
bool is_zero(const Vector3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

/// Coefficients of u∧v on (A∧B, A∧C, B∧C).
Bivector wedge(const Vector3& u, const Vector3& v) {
    Bivector r;
    for (Pair p : kPairs) {
        auto [i, j] = std::pair<std::size_t, std::size_t>{p == Pair::BC ? 1 : 0, p == Pair::AB ? 1 : 2};
        r[static_cast<std::size_t>(p)] = u[i] * v[j] - u[j] * v[i];
    }
    return r;
}

Bivector operator+(Bivector x, const Bivector& y) {
    for (std::size_t i = 0; i < 3; ++i) x[i] += y[i];
    return x;
}

Bivector operator-(Bivector x, const Bivector& y) {
    for (std::size_t i = 0; i < 3; ++i) x[i] -= y[i];
    return x;
}

Bivector scaled(const Rational& c, Bivector x) {
    for (auto& v : x.c) v *= c;
    return x;
}

// (first, second) generator of each pair
constexpr std::array<std::array<std::size_t, 2>, 3> kPairGens = {{{0, 1}, {0, 2}, {1, 2}}};

Bivector pair_basis(std::size_t p) { return wedge(unit(kPairGens[p][0]), unit(kPairGens[p][1])); }

bool is_rational_square(const Rational& q, Rational& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

}  // namespace

LieAlgebra3::LieAlgebra3(const std::array<Vector3, 3>& brackets) : brackets_(brackets) {
    Vector3 j = add(add(bracket(unit(0), bracket(Gen::B, Gen::C)), bracket(unit(1), bracket(Gen::C, Gen::A))),
                    bracket(unit(2), bracket(Gen::A, Gen::B)));
    if (!is_zero(j)) throw DomainError("structure constants violate the Jacobi identity");
}

LieAlgebra3 LieAlgebra3::from_table(const CommutatorTable& t) {
    std::array<Vector3, 3> b;
    for (std::size_t p = 0; p < 3; ++p)
        for (Gen g : kGens) {
            const ParamPoly c = t.ordered(kPairs[p]).coefficient(Monomial::of(g))[0];
            if (!c.is_constant()) throw DomainError("classical brackets must be concrete, got '" + c.to_string() + "'");
            b[p][idx(g)] = c.constant_value();
        }
    return LieAlgebra3(b);
}

Vector3 LieAlgebra3::bracket(Gen x, Gen y) const {
    if (x == y) return {0, 0, 0};
    const Vector3& v = brackets_[static_cast<std::size_t>(pair_of(x, y))];
    return x < y ? v : scale(-1, v);
}

Vector3 LieAlgebra3::bracket(const Vector3& x, const Vector3& y) const {
    Vector3 out{0, 0, 0};
    for (Gen i : kGens)
        for (Gen j : kGens) {
            if (i == j || x[idx(i)] == 0 || y[idx(j)] == 0) continue;
            out = add(out, scale(x[idx(i)] * y[idx(j)], bracket(i, j)));
        }
    return out;
}

std::array<Vector3, 3> LieAlgebra3::ad(const Vector3& x) const {
    return {bracket(x, unit(0)), bracket(x, unit(1)), bracket(x, unit(2))};
}

Rational LieAlgebra3::trace_ad(Gen g) const {
    auto cols = ad(unit(idx(g)));
    return cols[0][0] + cols[1][1] + cols[2][2];
}

bool LieAlgebra3::unimodular() const {
    return trace_ad(Gen::A) == 0 && trace_ad(Gen::B) == 0 && trace_ad(Gen::C) == 0;
}

LieAlgebra3 LieAlgebra3::change_basis(const std::array<Vector3, 3>& p) const {
    RationalMatrix pt(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) pt(j, i) = p[i][j];
    std::array<Vector3, 3> out;
    for (std::size_t k = 0; k < 3; ++k) {
        Vector3 v = bracket(p[kPairGens[k][0]], p[kPairGens[k][1]]);
        LinearSolution s = solve_linear(pt, {v[0], v[1], v[2]});
        if (!s.consistent || s.rank != 3) throw DomainError("basis change is not invertible");
        out[k] = {s.solution[0], s.solution[1], s.solution[2]};
    }
    return LieAlgebra3(out);
}

std::string_view to_string(JacobsonKind k) {
    switch (k) {
        case JacobsonKind::I: return "I";
        case JacobsonKind::II_Heisenberg: return "II_Heisenberg";
        case JacobsonKind::II_BorelCentral: return "II_BorelCentral";
        case JacobsonKind::III_alpha: return "III_alpha";
        case JacobsonKind::III_nilshift: return "III_nilshift";
        case JacobsonKind::IV: return "IV";
    }
    return "?";
}

std::string JacobsonType::to_string() const {
    std::string out(qalg::to_string(kind));
    if (kind != JacobsonKind::III_alpha) return out;
    if (alpha) {
        out += "(" + qalg::to_string((*alpha)[0]);
        if ((*alpha)[1] != (*alpha)[0]) out += "|" + qalg::to_string((*alpha)[1]);
        return out + ")";
    }
    return out + "(kappa=" + qalg::to_string(*kappa) + ")";
}

JacobsonType jacobson_type(const LieAlgebra3& g) {
    JacobsonType out;
    RationalMatrix m(3, 3);  // columns: [A,B], [A,C], [B,C]
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t r = 0; r < 3; ++r) m(r, p) = g.brackets()[p][r];
    LinearSolution s = solve_linear(m, {0, 0, 0});
    out.derived_dimension = s.rank;

    switch (s.rank) {
        case 0:
            out.kind = JacobsonKind::I;
            return out;
        case 3:
            out.kind = JacobsonKind::IV;
            return out;
        case 1: {
            const Vector3& v = g.brackets()[s.pivot_columns[0]];
            bool central = true;
            for (std::size_t j = 0; j < 3; ++j) central = central && is_zero(g.bracket(v, unit(j)));
            out.kind = central ? JacobsonKind::II_Heisenberg : JacobsonKind::II_BorelCentral;
            return out;
        }
        default:
            break;
    }

    // dim L' = 2: L' is abelian and ad of any X3 outside it acts invertibly on L'.
    const Vector3& v1 = g.brackets()[s.pivot_columns[0]];
    const Vector3& v2 = g.brackets()[s.pivot_columns[1]];
    RationalMatrix basis(3, 2);
    for (std::size_t r = 0; r < 3; ++r) {
        basis(r, 0) = v1[r];
        basis(r, 1) = v2[r];
    }
    std::optional<Vector3> x3;
    for (std::size_t j = 0; j < 3 && !x3; ++j)
        if (!solve_linear(basis, {unit(j)[0], unit(j)[1], unit(j)[2]}).consistent) x3 = unit(j);
    std::array<std::array<Rational, 2>, 2> a;  // a[row][col], col k = coordinates of [X3, v_k]
    for (std::size_t k = 0; k < 2; ++k) {
        Vector3 w = g.bracket(*x3, k == 0 ? v1 : v2);
        LinearSolution c = solve_linear(basis, {w[0], w[1], w[2]});
        if (!c.consistent) throw Error("derived algebra is not an ideal");
        a[0][k] = c.solution[0];
        a[1][k] = c.solution[1];
    }
    const Rational tr = a[0][0] + a[1][1];
    const Rational det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det == 0) throw Error("adjoint action on the derived algebra is singular");
    const Rational disc = tr * tr - 4 * det;
    const bool scalar = a[0][1] == 0 && a[1][0] == 0 && a[0][0] == a[1][1];
    if (disc == 0 && !scalar) {
        out.kind = JacobsonKind::III_nilshift;
        return out;
    }
    out.kind = JacobsonKind::III_alpha;
    out.kappa = Rational(tr * tr / det);
    // alpha^2 + (2 - kappa) alpha + 1 = 0; the eigenvalue ratio may be rational even when
    // the eigenvalues are not.
    const Rational k = *out.kappa;
    Rational root;
    if (is_rational_square(Rational(k * (k - 4)), root)) {
        Rational x = (k - 2 - root) / 2, y = (k - 2 + root) / 2;
        out.alpha = std::array<Rational, 2>{x, y};
    }
    return out;
}

Cobracket cobracket_of(const Cocommutator3& eta) { return cobracket_of(eta, {}); }

Cobracket cobracket_of(const Cocommutator3& eta, const Bindings& params) {
    Cobracket out;
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t p = 0; p < 3; ++p) {
            ParamPoly c = eta.images[g][p].substitute(params);
            if (!c.is_constant()) throw DomainError("cocommutator must be concrete, got '" + c.to_string() + "'");
            out[g][p] = c.constant_value();
        }
    return out;
}

Bivector ad_action(const LieAlgebra3& g, const Vector3& x, const Bivector& r) {
    Bivector out;
    for (std::size_t p = 0; p < 3; ++p) {
        if (r[p] == 0) continue;
        const Vector3 u = unit(kPairGens[p][0]), v = unit(kPairGens[p][1]);
        out = out + scaled(r[p], wedge(g.bracket(x, u), v) + wedge(u, g.bracket(x, v)));
    }
    return out;
}

bool CocycleResiduals::cocycle_ok() const {
    return cocycle[0].is_zero() && cocycle[1].is_zero() && cocycle[2].is_zero();
}

CocycleResiduals cocycle_check(const LieAlgebra3& g, const Cobracket& eta) {
    auto eta_of = [&eta](const Vector3& v) {
        Bivector out;
        for (std::size_t k = 0; k < 3; ++k)
            if (v[k] != 0) out = out + scaled(v[k], eta[k]);
        return out;
    };
    CocycleResiduals out;
    for (std::size_t p = 0; p < 3; ++p) {
        const Vector3 x = unit(kPairGens[p][0]), y = unit(kPairGens[p][1]);
        out.cocycle[p] = eta_of(g.bracket(x, y)) - ad_action(g, x, eta_of(y)) + ad_action(g, y, eta_of(x));
    }

    // dual bracket [e^i, e^j] = sum_k (coefficient of e_i∧e_j in eta(e_k)) e^k
    auto f = [&eta](std::size_t i, std::size_t j, std::size_t k) -> Rational {
        if (i == j) return 0;
        std::size_t lo = std::min(i, j), hi = std::max(i, j);
        std::size_t p = lo == 0 ? (hi == 1 ? 0 : 1) : 2;
        return i < j ? eta[k][p] : Rational(-eta[k][p]);
    };
    auto dual = [&f](const Vector3& u, const Vector3& v) {
        Vector3 out{0, 0, 0};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (u[i] == 0 || v[j] == 0) continue;
                for (std::size_t k = 0; k < 3; ++k) out[k] += u[i] * v[j] * f(i, j, k);
            }
        return out;
    };
    out.co_jacobi = add(add(dual(unit(0), dual(unit(1), unit(2))), dual(unit(1), dual(unit(2), unit(0)))),
                        dual(unit(2), dual(unit(0), unit(1))));
    return out;
}

std::string_view to_string(SchoutenClass c) {
    switch (c) {
        case SchoutenClass::cybe_zero: return "cybe_zero";
        case SchoutenClass::mcybe_invariant: return "mcybe_invariant";
        case SchoutenClass::neither: return "neither";
    }
    return "?";
}

Trivector schouten(const Bivector& r, const LieAlgebra3& g) {
    Rational m[3][3];
    for (std::size_t p = 0; p < 3; ++p) {
        auto [i, j] = kPairGens[p];
        m[i][j] = r[p];
        m[j][i] = -r[p];
    }
    Rational t[3][3][3];
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            if (m[a][b] == 0) continue;
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t d = 0; d < 3; ++d) {
                    if (m[c][d] == 0) continue;
                    const Rational w = m[a][b] * m[c][d];
                    const Vector3 ac = g.bracket(unit(a), unit(c));
                    const Vector3 bc = g.bracket(unit(b), unit(c));
                    const Vector3 bd = g.bracket(unit(b), unit(d));
                    for (std::size_t k = 0; k < 3; ++k) {
                        t[k][b][d] += w * ac[k];  // [r12, r13]
                        t[a][k][d] += w * bc[k];  // [r12, r23]
                        t[a][c][k] += w * bd[k];  // [r13, r23]
                    }
                }
        }
    // For skew r the result is totally antisymmetric, hence a multiple of A^B^C.
    const Rational v = t[0][1][2];
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                Rational expect = 0;
                if (a != b && b != c && a != c) {
                    bool even = (a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0);
                    expect = even ? v : Rational(-v);
                }
                if (t[a][b][c] != expect) throw Error("Yang-Baxter tensor is not antisymmetric");
            }
    return {v};
}

SchoutenResult schouten_classify(const Bivector& r, const LieAlgebra3& g) {
    Trivector w = schouten(r, g);
    if (w.is_zero()) return {SchoutenClass::cybe_zero, w};
    // ad_X acts on the top exterior power by tr(ad_X).
    return {g.unimodular() ? SchoutenClass::mcybe_invariant : SchoutenClass::neither, w};
}

Cobracket coboundary_of(const LieAlgebra3& g, const Bivector& r) {
    return {ad_action(g, unit(0), r), ad_action(g, unit(1), r), ad_action(g, unit(2), r)};
}

CoboundaryResult coboundary_solve(const LieAlgebra3& g, const Cobracket& eta) {
    RationalMatrix m(9, 3);
    std::vector<Rational> rhs(9);
    for (std::size_t q = 0; q < 3; ++q) {
        Cobracket col = coboundary_of(g, pair_basis(q));
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t p = 0; p < 3; ++p) m(3 * k + p, q) = col[k][p];
    }
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t p = 0; p < 3; ++p) rhs[3 * k + p] = eta[k][p];

    CoboundaryResult out;
    LinearSolution s = solve_linear(m, rhs);
    out.feasible = s.consistent;
    if (!s.consistent) {
        out.certificate = s.certificate;
        return out;
    }
    for (std::size_t q = 0; q < 3; ++q) out.r[q] = s.solution[q];
    for (const auto& k : kernel_basis(m)) out.kernel.push_back(Bivector{{k[0], k[1], k[2]}});
    return out;
}

std::string_view to_string(TransformFamily f) {
    switch (f) {
        case TransformFamily::cambio1: return "cambio1";
        case TransformFamily::cambio2: return "cambio2";
        case TransformFamily::cambio3: return "cambio3";
    }
    return "?";
}

void TransformSpec::validate() const {
    if (alpha == 0) throw DomainError("transformation needs alpha != 0");
    if (family == TransformFamily::cambio2) {
        if (beta * nu - gamma_c * mu == 0) throw DomainError("transformation block is singular (beta*nu - gamma*mu = 0)");
        return;
    }
    if (gamma_c != 0 || mu != 0) throw DomainError(std::string(to_string(family)) + " does not mix B and C");
    if (beta * nu == 0) throw DomainError("transformation block is singular (beta*nu = 0)");
}

namespace {

// Images of the new generators in the old algebra, and of the old generators in terms of the
// new ones (still in the old deformation parameter z).
struct Substitution {
    std::array<AlgElement, 3> forward;
    std::array<AlgElement, 3> inverse;
    AlgElement one;
    Rational inv_alpha;
};

Substitution substitution(const TransformSpec& s, int n) {
    const bool scaled_c = s.family == TransformFamily::cambio1;
    const ParamPoly one(1);
    const AlgElement a = AlgElement::generator(Gen::A, n);
    const AlgElement b = AlgElement::generator(Gen::B, n);
    const AlgElement c = AlgElement::generator(Gen::C, n);

    // sinh(zA)/z and the shift used in C', as series in the old A
    const AlgElement s_old = generator_series(Gen::A, SeriesKind::sinh_over_z, one, n);
    const AlgElement t_old =
        scaled_c ? generator_series(Gen::A, SeriesKind::sinh_over_scaled_z, ParamPoly(s.rho), n) : s_old;

    Substitution out;
    out.forward = {a * ParamPoly(s.alpha), b * ParamPoly(s.beta) + c * ParamPoly(s.gamma_c) + s_old * ParamPoly(s.delta),
                   b * ParamPoly(s.mu) + c * ParamPoly(s.nu) + t_old * ParamPoly(s.eta_c)};

    // the same series with A = A'/alpha
    const Rational inv_alpha = 1 / s.alpha;
    const AlgElement s_new = generator_series(Gen::A, SeriesKind::sinh_over_z, ParamPoly(inv_alpha), n);
    const AlgElement t_new =
        scaled_c ? generator_series(Gen::A, SeriesKind::sinh_over_scaled_z, ParamPoly(Rational(s.rho * inv_alpha)), n) *
                       ParamPoly(inv_alpha)
                 : s_new;
    const AlgElement bp = b - s_new * ParamPoly(s.delta);
    const AlgElement cp = c - t_new * ParamPoly(s.eta_c);
    const Rational det = s.beta * s.nu - s.gamma_c * s.mu;
    out.one = AlgElement::one(n);
    out.inv_alpha = inv_alpha;
    out.inverse = {a * ParamPoly(inv_alpha), (bp * ParamPoly(s.nu) - cp * ParamPoly(s.gamma_c)) * ParamPoly(Rational(1 / det)),
                   (cp * ParamPoly(s.beta) - bp * ParamPoly(s.mu)) * ParamPoly(Rational(1 / det))};
    return out;
}

// A^k x, valid when x is linear in B and C (so the product is already ordered).
AlgElement shift_a(const AlgElement& x, unsigned k) {
    AlgElement out(x.order());
    for (const auto& [m, s] : x.terms()) {
        Monomial p = m;
        p.a = static_cast<std::uint16_t>(p.a + k);
        out.add(p, s);
    }
    return out;
}

AlgElement pull_back(const Monomial& m, const Substitution& sub) {
    if (m.bc_degree() > 1)
        throw Error("transformed images do not close on the new generators (monomial " + m.to_string() + ")");
    const AlgElement& base = m.b ? sub.inverse[1] : m.c ? sub.inverse[2] : sub.one;
    return shift_a(base, m.a) * ParamPoly(pow(sub.inv_alpha, m.a));
}

AlgElement pull_back(const AlgElement& x, const Substitution& sub) {
    AlgElement out(x.order());
    for (const auto& [m, s] : x.terms()) out.add_scaled(pull_back(m, sub), s);
    return out;
}

TensorElement rescale(const TensorElement& x, const Rational& alpha) {
    TensorElement out(x.order());
    for (const auto& [k, s] : x.terms()) out.add(k, s.rescale_z(alpha));
    return out;
}

}  // namespace

TransformResult apply_transformation(const CommutatorTable& t, const HopfData& h, const TransformSpec& spec) {
    spec.validate();
    const int n = t.order();
    if (h.order() != n) throw TruncationMismatch(h.order(), n);
    const Substitution sub = substitution(spec, n);

    std::array<AlgElement, 3> entries;
    for (std::size_t p = 0; p < 3; ++p) {
        auto [i, j] = kPairGens[p];
        AlgElement r = commutator(sub.forward[i], sub.forward[j], t);
        entries[p] = pull_back(r, sub).rescale_z(spec.alpha);
    }

    HopfData out_h;
    for (std::size_t g = 0; g < 3; ++g) {
        TensorElement d = coproduct_extend(sub.forward[g], h, t);
        TensorElement mapped(n);
        for (const auto& [k, s] : d.terms()) {
            AlgElement x = pull_back(k[0], sub);
            AlgElement y = pull_back(k[1], sub);
            for (const auto& [mx, sx] : x.terms())
                for (const auto& [my, sy] : y.terms()) mapped.add({mx, my}, sx * sy * s);
        }
        out_h.delta[g] = rescale(mapped, spec.alpha);
        out_h.counit[g] = 0;
    }
    return {CommutatorTable::from_ordered(entries), std::move(out_h)};
}

bool same_coproduct(const HopfData& x, const HopfData& y) { return x.delta == y.delta; }

}  // namespace qalg
