#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/classification.hpp"
#include "qalg/quantizer.hpp"

namespace qalg {

/// Transformation as requested on input; for cambio1 a missing rho is taken from the case.
struct TransformRequest {
    TransformSpec spec;
    bool rho_given = false;
};

/// A case to run commands on: either a catalog preset (with parameter overrides) or raw
/// classical constants, optionally with an explicit deformed table.
struct CaseDefinition {
    std::string name;
    std::optional<std::string> preset;
    Bindings params;                      // preset overrides
    std::optional<BialgebraSpec> spec;    // raw constants (may be symbolic)
    std::optional<int> order;             // N
    std::optional<std::string> coproduct; // "standard" or "primitive"
    std::optional<std::string> table_json;
    std::optional<Bivector> r_matrix;
    std::optional<TransformRequest> transform;
};

/// Parses the JSON definition format (docs/definition.md). Errors are ParseError with the
/// offending field and its line.
CaseDefinition parse_definition(std::string_view text);
CaseDefinition preset_definition(const std::string& id);

/// "k=v,k=v" parameter list, values exact rationals.
Bindings parse_params(std::string_view text);
/// "family=cambio1,alpha=1/2,..." transformation list.
TransformRequest parse_transform(std::string_view text);

struct ReportCheck {
    std::string name;
    bool pass = false;
    std::optional<int> lowest_order;  // first nonzero z-order of a failing residual
    std::string detail;
};

struct Report {
    std::string command;
    std::string subject;
    int order = 0;
    std::vector<std::pair<std::string, std::string>> values;  // in emission order
    std::vector<ReportCheck> checks;
    std::vector<std::string> text;  // human-only lines
    std::optional<std::string> error;

    void set(std::string key, std::string value) { values.emplace_back(std::move(key), std::move(value)); }
    void check(std::string name, bool pass, std::optional<int> lowest = std::nullopt, std::string detail = {});
    bool passed() const;
};

enum class ReportFormat { human, machine };

std::string render(const std::vector<Report>& reports, ReportFormat format);

enum class Command { verify, quantize, classify, rmatrix, transform, catalog };
std::optional<Command> command_from_name(std::string_view name);
std::string_view to_string(Command c);

struct RunOptions {
    std::optional<int> order;  // command-line override
    int default_order = 6;
    Bindings params;           // command-line overrides
    std::optional<TransformRequest> transform;
    unsigned jobs = 1;
};

/// Runs one command on one definition. Input problems raise ParseError or DomainError;
/// failures inside the computation are recorded in the report.
Report dispatch(Command c, const CaseDefinition& def, const RunOptions& options);
/// Runs a command over several definitions, concurrently when jobs > 1. Output order
/// follows the input order.
std::vector<Report> dispatch_batch(Command c, const std::vector<CaseDefinition>& defs, const RunOptions& options);
/// The `catalog` command: lists presets, or describes one.
Report catalog_report(const std::optional<std::string>& id, int order = 4);

/// 0 all checks pass, 1 some check failed.
int exit_code(const std::vector<Report>& reports);

}  // namespace qalg
