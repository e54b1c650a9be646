#include "qalg/generator_series.hpp"

namespace qalg {

namespace {

Rational inv_fact(unsigned k) { return Rational(1) / factorial(k); }

}  // namespace

AlgElement generator_series(Gen g, SeriesKind kind, const ParamPoly& c, int order) {
    AlgElement out(order);
    auto power_of = [g](unsigned p) {
        Monomial m;
        m.power(g) = static_cast<std::uint16_t>(p);
        return m;
    };
    for (int d = 0; d <= order; ++d) {
        const unsigned k = static_cast<unsigned>(d);
        switch (kind) {
            case SeriesKind::exp:
                out.add(power_of(k), ZSeries::monomial(order, d, c.pow(k) * inv_fact(k)));
                break;
            case SeriesKind::cosh:
                if (d % 2 == 0) out.add(power_of(k), ZSeries::monomial(order, d, c.pow(k) * inv_fact(k)));
                break;
            case SeriesKind::sinh_over_z:
                if (d % 2 == 0)
                    out.add(power_of(k + 1), ZSeries::monomial(order, d, c.pow(k + 1) * inv_fact(k + 1)));
                break;
            case SeriesKind::sinh_over_scaled_z:
                if (d % 2 == 0)
                    out.add(power_of(k + 1), ZSeries::monomial(order, d, c.pow(k) * inv_fact(k + 1)));
                break;
        }
    }
    return out;
}

}  // namespace qalg
