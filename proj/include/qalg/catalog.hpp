#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/bivector.hpp"
#include "qalg/hopf.hpp"

namespace qalg {

enum class RMatrixKind { standard, non_standard };

/// One preset: a classified quantum algebra or a closed-form family, instantiated at
/// concrete parameter values.
struct CatalogCase {
    std::string id;
    std::string title;
    Rational rho;
    Bindings params;
    CommutatorTable table;
    HopfData hopf;
    std::optional<Bivector> r_matrix;
    std::optional<RMatrixKind> r_matrix_kind;
    std::optional<bool> coboundary;  // as claimed for the case
    std::string jacobson;
    std::vector<std::string> gomez;
    std::string notes;

    bool is_family() const { return id.rfind("fam-", 0) == 0; }
};

/// Ids of all presets in catalog order: the sixteen classified cases, then the families.
const std::vector<std::string>& catalog_ids();
const std::vector<std::string>& classified_case_ids();
const std::vector<std::string>& family_ids();
/// Raw JSON text of a preset.
const std::string& catalog_source(const std::string& id);

/// Default parameter values of a preset; `fixed` lists those that cannot be overridden.
Bindings catalog_defaults(const std::string& id);

/// Builds the case at `order` with `overrides` applied on top of the defaults.
/// Throws DomainError for an unknown id, an unknown or fixed parameter, or values
/// outside the case's constraint set. With `verify`, every Hopf check is run and a
/// failure raises Error.
CatalogCase catalog_table(const std::string& id, const Bindings& overrides, int order, bool verify = false);

std::string_view to_string(RMatrixKind k);

}  // namespace qalg

namespace qalg {

/// Table from an object {"ab": [...], "ac": [...], "bc": [...]} of terms in the preset
/// format, entries on the symmetrized basis.
CommutatorTable table_from_json(const std::string& json_text, const Bindings& params, int order);

}  // namespace qalg
