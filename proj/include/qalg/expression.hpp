#pragma once

#include <string_view>

#include "qalg/param_poly.hpp"

namespace qalg {

/// Parses an arithmetic expression over rationals and the fixed parameter names,
/// e.g. "a2*c1/c2" or "-(1+rho)^2". Bound names are replaced by their values; unbound
/// names stay symbolic. Division is only allowed by expressions that are constant after
/// binding. Throws ParseError on bad syntax or unknown names, DomainError on division by zero.
ParamPoly parse_expression(std::string_view text, const Bindings& bindings = {});

}  // namespace qalg
