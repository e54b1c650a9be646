#pragma once

#include "qalg/alg_element.hpp"

namespace qalg {

enum class SeriesKind { exp, sinh_over_z, cosh, sinh_over_scaled_z };

/// Truncated Taylor expansion in the single generator g:
///   exp                 e^{c z g}
///   sinh_over_z         sinh(c z g) / z
///   cosh                cosh(c z g)
///   sinh_over_scaled_z  sinh(c z g) / (c z)
AlgElement generator_series(Gen g, SeriesKind kind, const ParamPoly& c, int order);

}  // namespace qalg
