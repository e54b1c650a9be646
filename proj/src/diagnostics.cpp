#include "qalg/diagnostics.hpp"

namespace qalg {

JacobiResiduals jacobi_residuals(const CommutatorTable& t) {
    const int n = t.order();
    auto gen = [n](Gen g) { return AlgElement::generator(g, n); };
    JacobiResiduals r{AlgElement(n), {AlgElement(n), AlgElement(n), AlgElement(n)}};
    r.terms[0] = commutator(gen(Gen::A), t.bracket(Gen::B, Gen::C), t);
    r.terms[1] = commutator(gen(Gen::B), t.bracket(Gen::C, Gen::A), t);
    r.terms[2] = commutator(gen(Gen::C), t.bracket(Gen::A, Gen::B), t);
    r.sum = r.terms[0] + r.terms[1] + r.terms[2];
    return r;
}

std::array<AlgElement, 3> poisson_table(const CommutatorTable& t) {
    return {t.sym(Pair::AB), t.sym(Pair::AC), t.sym(Pair::BC)};
}

bool table_is_even(const CommutatorTable& t) {
    for (Pair p : kPairs)
        if (!t.ordered(p).has_parity(Parity::even)) return false;
    return true;
}

}  // namespace qalg
