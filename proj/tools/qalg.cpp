#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "qalg/catalog.hpp"
#include "qalg/cli.hpp"
#include "qalg/errors.hpp"

namespace {

constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw qalg::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> preset_list(const std::string& arg) {
    if (arg == "all") return qalg::catalog_ids();
    if (arg == "cases") return qalg::classified_case_ids();
    if (arg == "families") return qalg::family_ids();
    std::vector<std::string> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbative quantization of three-dimensional Lie bialgebras"};
    app.require_subcommand(1, 1);

    std::string file, preset, params, transform, format = "human";
    int order = 0, jobs = 1;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("definition", file, "Definition file (JSON), '-' for stdin");
        sub->add_option("--preset", preset, "Catalog preset id, comma list, 'cases', 'families' or 'all'");
        sub->add_option("--order", order, "Truncation order N (default 6)")->check(CLI::PositiveNumber);
        sub->add_option("--params", params, "Parameter overrides k=v,...");
        sub->add_option("--jobs", jobs, "Presets run concurrently in batch mode")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    };
    for (const char* name : {"verify", "quantize", "classify", "rmatrix", "transform"}) add_common(app.add_subcommand(name));
    app.get_subcommand("verify")->description("Run every Hopf-algebra check");
    app.get_subcommand("quantize")->description("Reconstruct the deformed brackets order by order");
    app.get_subcommand("classify")->description("Jacobson type, cocycle and coboundary status");
    app.get_subcommand("rmatrix")->description("Schouten classification and coboundary solve");
    app.get_subcommand("transform")->description("Apply a coproduct-preserving change of generators");
    app.get_subcommand("transform")->add_option("--transform", transform, "family=cambio1,alpha=...,beta=...");
    CLI::App* cat = app.add_subcommand("catalog", "List presets or describe one");
    cat->add_option("--preset", preset, "Preset id");
    cat->add_option("--order", order, "Truncation order for the printed table (default 4)");
    cat->add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const qalg::Command command = *qalg::command_from_name(name);
    const auto fmt = format == "machine" ? qalg::ReportFormat::machine : qalg::ReportFormat::human;

    try {
        std::vector<qalg::Report> reports;
        if (command == qalg::Command::catalog) {
            std::optional<std::string> id;
            if (!preset.empty()) id = preset;
            reports.push_back(qalg::catalog_report(id, order ? order : 4));
        } else {
            qalg::RunOptions opt;
            if (order) opt.order = order;
            opt.jobs = static_cast<unsigned>(jobs);
            if (!params.empty()) opt.params = qalg::parse_params(params);
            if (!transform.empty()) opt.transform = qalg::parse_transform(transform);

            std::vector<qalg::CaseDefinition> defs;
            if (!file.empty() && !preset.empty()) throw qalg::ParseError("give either a definition file or --preset");
            if (!file.empty()) defs.push_back(qalg::parse_definition(read_input(file)));
            for (const auto& id : preset.empty() ? std::vector<std::string>{} : preset_list(preset))
                defs.push_back(qalg::preset_definition(id));
            if (defs.empty()) throw qalg::ParseError("nothing to run: give a definition file or --preset");
            reports = qalg::dispatch_batch(command, defs, opt);
        }
        std::cout << qalg::render(reports, fmt);
        return qalg::exit_code(reports);
    } catch (const qalg::ParseError& e) {
        std::cerr << "qalg: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const qalg::DomainError& e) {
        std::cerr << "qalg: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "qalg: " << e.what() << "\n";
        return 1;
    }
}
