#include "qalg/cli.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qalg/catalog.hpp"
#include "qalg/errors.hpp"
#include "qalg/expression.hpp"

namespace qalg {

namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

int line_of_key(std::string_view text, const std::string& key) {
    auto pos = text.find("\"" + key + "\"");
    return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

Rational rational_value(const json& v, const std::string& field, int line) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw ParseError("expected an exact rational such as \"2/3\"", field, line);
    try {
        return parse_rational(trim(v.get<std::string>()));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), field, line);
    }
}

ParamPoly expression_value(const json& v, const std::string& field, int line) {
    if (v.is_number_integer()) return ParamPoly(Rational(v.get<long>()));
    if (!v.is_string()) throw ParseError("expected a rational or expression string", field, line);
    try {
        return parse_expression(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), field, line);
    }
}

const std::vector<std::string> kConstantNames = {"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "rho"};

TransformRequest transform_from_pairs(const std::vector<std::pair<std::string, std::string>>& kv,
                                      const std::string& field, int line) {
    TransformRequest t;
    for (const auto& [k, v] : kv) {
        if (k == "family") {
            if (v == "cambio1") t.spec.family = TransformFamily::cambio1;
            else if (v == "cambio2") t.spec.family = TransformFamily::cambio2;
            else if (v == "cambio3") t.spec.family = TransformFamily::cambio3;
            else throw ParseError("unknown transformation family '" + v + "'", field, line);
            continue;
        }
        Rational q;
        try {
            q = parse_rational(trim(v));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " for '" + k + "'", field, line);
        }
        if (k == "alpha") t.spec.alpha = q;
        else if (k == "beta") t.spec.beta = q;
        else if (k == "gamma" || k == "gamma_c") t.spec.gamma_c = q;
        else if (k == "delta") t.spec.delta = q;
        else if (k == "mu") t.spec.mu = q;
        else if (k == "nu") t.spec.nu = q;
        else if (k == "eta" || k == "eta_c") t.spec.eta_c = q;
        else if (k == "rho") {
            t.spec.rho = q;
            t.rho_given = true;
        } else {
            throw ParseError("unknown transformation coefficient '" + k + "'", field, line);
        }
    }
    return t;
}

std::vector<std::pair<std::string, std::string>> split_pairs(std::string_view text, const std::string& what) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in " + what + ", got '" + item + "'");
        out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
    }
    return out;
}

std::string residual_detail(const std::optional<int>& low) {
    return low ? "nonzero from z^" + std::to_string(*low) : std::string();
}

template <class T>
void residual_check(Report& r, const std::string& name, const Residual<T>& res) {
    r.check(name, res.ok(), res.lowest_order, residual_detail(res.lowest_order));
}

std::string pair_label(std::size_t p) { return std::string(pair_name(kPairs[p])); }

std::string gen_label(std::size_t g) { return std::string(1, gen_letter(kGens[g])); }

// Everything a command needs about one case.
struct Instance {
    int order = 6;
    ParamPoly rho;
    std::optional<CatalogCase> preset;
    std::optional<BialgebraSpec> spec;
    std::optional<CommutatorTable> table;
    HopfData hopf;
};

Instance instantiate(const CaseDefinition& def, const RunOptions& opt) {
    Instance in;
    in.order = opt.order ? *opt.order : def.order ? *def.order : opt.default_order;
    if (in.order < 2) throw DomainError("truncation order must be at least 2");
    if (def.preset) {
        Bindings params = def.params;
        for (const auto& [k, v] : opt.params) params[k] = v;
        in.preset = catalog_table(*def.preset, params, in.order);
        in.rho = ParamPoly(in.preset->rho);
        in.table = in.preset->table;
        in.spec = BialgebraSpec::from_table(in.preset->table, in.rho);
    } else {
        if (!def.spec) throw DomainError("definition has neither a preset nor constants");
        BialgebraSpec s = def.spec->substitute(opt.params);
        in.rho = s.rho;
        in.spec = s;
        if (def.table_json) {
            Bindings b;
            for (const auto& name : kConstantNames) {
                Param p = *param_from_name(name);
                const ParamPoly& v = p == Param::rho ? s.rho : s.constant(p);
                if (v.is_constant()) b[p] = v.constant_value();
            }
            in.table = table_from_json(*def.table_json, b, in.order);
        }
    }
    in.hopf = def.coproduct == "primitive" ? HopfData::primitive(in.order) : HopfData::standard(in.rho, in.order);
    return in;
}

// The deformed table, quantizing raw constants when none was given.
const CommutatorTable& ensure_table(Instance& in, Report& r) {
    if (!in.table) {
        if (!in.spec->is_concrete()) throw DomainError("constants must be concrete to build the deformed table");
        in.table = quantize(*in.spec, in.order).table;
        r.set("table_source", "quantized");
    } else {
        r.set("table_source", in.preset ? "catalog" : "definition");
    }
    return *in.table;
}

void add_table_values(Report& r, const CommutatorTable& t) {
    for (std::size_t p = 0; p < 3; ++p) r.set("table." + pair_label(p), t.sym(kPairs[p]).to_string());
}

void hopf_checks(Report& r, const HopfReport& h) {
    for (std::size_t g = 0; g < 3; ++g) residual_check(r, "coassociativity." + gen_label(g), h.coassociativity[g]);
    for (std::size_t p = 0; p < 3; ++p) residual_check(r, "homomorphism." + pair_label(p), h.homomorphism[p]);
    for (std::size_t g = 0; g < 3; ++g) residual_check(r, "counit.left." + gen_label(g), h.counit.left[g]);
    for (std::size_t g = 0; g < 3; ++g) residual_check(r, "counit.right." + gen_label(g), h.counit.right[g]);
    for (std::size_t g = 0; g < 3; ++g) {
        if (h.antipode_residuals) {
            residual_check(r, "antipode.left." + gen_label(g), h.antipode_residuals->left[g]);
            residual_check(r, "antipode.right." + gen_label(g), h.antipode_residuals->right[g]);
        }
    }
    if (!h.antipode_residuals)
        r.check("antipode", false, h.antipode_failed_order,
                h.antipode_failed_order ? "no solution" : "skipped: coproduct is not coassociative or counital");
    for (std::size_t g = 0; g < 3; ++g) r.check("sigma_tilde." + gen_label(g), h.sigma_tilde[g]);
    residual_check(r, "jacobi", h.jacobi);
}

void run_verify(Instance& in, Report& r) {
    const CommutatorTable& t = ensure_table(in, r);
    hopf_checks(r, verify_hopf(in.hopf, t));
}

void run_quantize(Instance& in, Report& r) {
    const BialgebraSpec& spec = *in.spec;
    ConstraintSet cs = first_order_constraints(spec);
    r.set("constraints", cs.to_string());
    if (!spec.is_concrete()) {
        r.set("solve", "skipped (symbolic constants)");
        return;
    }
    r.check("constraints", cs.equations.empty(), std::nullopt, cs.equations.empty() ? "" : "violated");
    if (!cs.equations.empty()) return;
    std::optional<QuantizationResult> solved;
    try {
        solved = quantize(spec, in.order);
    } catch (const NoSolution& e) {
        r.check("solve", false, e.order(), e.what());
        return;
    }
    const QuantizationResult& q = *solved;
    r.check("solve", true);
    for (std::size_t i = 0; i < q.solved_orders.size(); ++i)
        r.set("freedom.z^" + std::to_string(q.solved_orders[i]), std::to_string(q.freedom[i]));
    add_table_values(r, q.table);
    for (const auto& line : q.log) r.text.push_back(line);
    HopfReport h = verify_hopf(q.hopf, q.table);
    r.check("hopf", h.ok());
    if (in.preset) {
        auto diff = compare_tables(q.table, in.preset->table);
        for (std::size_t p = 0; p < 3; ++p) residual_check(r, "catalog." + pair_label(p), diff[p]);
    }
}

LieAlgebra3 classical_algebra(const Instance& in) {
    if (!in.spec->is_concrete()) throw DomainError("classification needs concrete constants");
    return LieAlgebra3::from_table(in.spec->classical_table(2));
}

Cobracket classical_cobracket(const Instance& in) {
    return cobracket_of(extract_cocommutator(in.hopf));
}

void run_classify(Instance& in, Report& r) {
    LieAlgebra3 g = classical_algebra(in);
    JacobsonType type = jacobson_type(g);
    r.set("jacobson", type.to_string());
    r.set("derived_dimension", std::to_string(type.derived_dimension));
    if (in.preset && !in.preset->jacobson.empty())
        r.check("jacobson", std::string(to_string(type.kind)) == in.preset->jacobson, std::nullopt,
                "catalog says " + in.preset->jacobson);
    CocycleResiduals cc = cocycle_check(g, classical_cobracket(in));
    r.check("cocycle", cc.cocycle_ok());
    r.check("co_jacobi", cc.co_jacobi_ok());
    if (!cc.ok()) return;
    CoboundaryResult cb = coboundary_solve(g, classical_cobracket(in));
    r.set("coboundary", cb.feasible ? "feasible" : "infeasible");
    if (cb.feasible) {
        r.set("coboundary.r", cb.r.to_string());
        r.set("coboundary.dimension", std::to_string(cb.dimension()));
    }
}

void run_rmatrix(Instance& in, Report& r, const CaseDefinition& def) {
    LieAlgebra3 g = classical_algebra(in);
    Cobracket eta = classical_cobracket(in);
    std::optional<Bivector> candidate = def.r_matrix;
    if (!candidate && in.preset) candidate = in.preset->r_matrix;
    if (candidate) {
        SchoutenResult s = schouten_classify(*candidate, g);
        r.set("r", candidate->to_string());
        r.set("schouten", qalg::to_string(s.witness.value));
        r.set("schouten.class", std::string(to_string(s.kind)));
        if (in.preset && in.preset->r_matrix_kind) {
            SchoutenClass want = *in.preset->r_matrix_kind == RMatrixKind::standard ? SchoutenClass::mcybe_invariant
                                                                                    : SchoutenClass::cybe_zero;
            r.check("schouten.label", s.kind == want, std::nullopt,
                    "claimed " + std::string(to_string(*in.preset->r_matrix_kind)));
        }
    }
    CocycleResiduals cc = cocycle_check(g, eta);
    r.check("cocycle", cc.ok());
    if (!cc.ok()) return;
    CoboundaryResult cb = coboundary_solve(g, eta);
    if (cb.feasible) {
        r.set("coboundary", "feasible");
        r.set("coboundary.r", cb.r.to_string());
        r.set("coboundary.dimension", std::to_string(cb.dimension()));
    } else {
        r.set("coboundary", "non-coboundary: infeasible");
    }
    if (candidate && cb.feasible) {
        Cobracket induced = coboundary_of(g, *candidate);
        Bivector neg{{-(*candidate)[0], -(*candidate)[1], -(*candidate)[2]}};
        std::string rel = induced == eta ? "exact" : coboundary_of(g, neg) == eta ? "negated" : "other";
        r.set("r.coboundary_match", rel);
        r.check("r.spans_solution", rel != "other");
    }
    if (in.preset && in.preset->coboundary) {
        bool claim = *in.preset->coboundary;
        r.check("coboundary.claim", claim == cb.feasible, std::nullopt,
                claim ? (cb.feasible ? "coboundary as claimed" : "claimed coboundary but the equations are infeasible")
                      : (cb.feasible ? "claimed non-coboundary but a solution exists" : "non-coboundary as claimed"));
    }
}

void run_transform(Instance& in, Report& r, const CaseDefinition& def, const RunOptions& opt) {
    std::optional<TransformRequest> req = opt.transform ? opt.transform : def.transform;
    if (!req) throw DomainError("transform needs a transformation (--transform or a \"transform\" field)");
    TransformSpec spec = req->spec;
    if (!req->rho_given) {
        if (!in.rho.is_constant()) throw DomainError("transform needs a concrete rho");
        spec.rho = in.rho.constant_value();
    }
    spec.validate();
    const CommutatorTable& t = ensure_table(in, r);
    TransformResult out = apply_transformation(t, in.hopf, spec);
    r.set("family", std::string(to_string(spec.family)));
    r.set("z_rescale", qalg::to_string(Rational(1 / spec.alpha)));
    add_table_values(r, out.table);
    r.check("coproduct_invariant", same_coproduct(out.hopf, in.hopf));
    hopf_checks(r, verify_hopf(out.hopf, out.table));
}

}  // namespace

void Report::check(std::string name, bool pass, std::optional<int> lowest, std::string detail) {
    checks.push_back({std::move(name), pass, pass ? std::nullopt : lowest, std::move(detail)});
}

bool Report::passed() const {
    if (error) return false;
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

CaseDefinition parse_definition(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), "", line_of_offset(text, e.byte ? e.byte - 1 : 0));
    }
    if (!j.is_object()) throw ParseError("definition must be a JSON object", "", 1);

    static const std::set<std::string> allowed = {"name", "preset", "params",   "N",        "a1",       "a2",
                                                  "a3",   "b1",     "b2",       "b3",       "c1",       "c2",
                                                  "c3",   "rho",    "coproduct", "table",   "r_matrix", "transform"};
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ParseError("unknown field", k, line_of_key(text, k));

    CaseDefinition d;
    auto line = [&text](const std::string& k) { return line_of_key(text, k); };
    auto string_field = [&](const std::string& k) {
        if (!j.at(k).is_string()) throw ParseError("expected a string", k, line(k));
        return j.at(k).get<std::string>();
    };

    if (j.contains("preset")) {
        d.preset = string_field("preset");
        try {
            catalog_source(*d.preset);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), "preset", line("preset"));
        }
    }
    d.name = j.contains("name") ? string_field("name") : d.preset ? *d.preset : "custom";

    if (j.contains("N")) {
        if (!j.at("N").is_number_integer()) throw ParseError("expected an integer", "N", line("N"));
        int n = j.at("N").get<int>();
        if (n < 2) throw ParseError("truncation order must be at least 2", "N", line("N"));
        d.order = n;
    }

    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw ParseError("expected an object", "params", line("params"));
        for (const auto& [k, v] : j.at("params").items()) {
            auto p = param_from_name(k);
            if (!p) throw ParseError("unknown parameter '" + k + "'", "params", line(k));
            d.params[*p] = rational_value(v, "params." + k, line(k));
        }
    }

    bool any_constant = false;
    for (const auto& name : kConstantNames) any_constant = any_constant || j.contains(name);
    if (d.preset && any_constant)
        throw ParseError("structure constants cannot be combined with a preset; use \"params\"", "preset", line("preset"));
    if (!d.preset) {
        BialgebraSpec s;
        for (const auto& name : kConstantNames) {
            if (!j.contains(name)) throw ParseError("missing required field (or give a \"preset\")", name, 0);
            ParamPoly v = expression_value(j.at(name), name, line(name));
            Param p = *param_from_name(name);
            if (p == Param::rho) s.rho = v;
            else s.constant(p) = v;
        }
        d.spec = s;
        if (!d.params.empty()) throw ParseError("\"params\" applies to presets only", "params", line("params"));
    }

    if (j.contains("coproduct")) {
        std::string c = string_field("coproduct");
        if (c != "standard" && c != "primitive")
            throw ParseError("expected \"standard\" or \"primitive\"", "coproduct", line("coproduct"));
        d.coproduct = c;
    }
    if (j.contains("table")) {
        if (d.preset) throw ParseError("a preset already fixes the table", "table", line("table"));
        const json& t = j.at("table");
        if (!t.is_object()) throw ParseError("expected an object with ab, ac, bc", "table", line("table"));
        d.table_json = t.dump();
    }
    if (j.contains("r_matrix")) {
        const json& r = j.at("r_matrix");
        if (!r.is_object()) throw ParseError("expected an object with AB, AC, BC", "r_matrix", line("r_matrix"));
        Bivector b;
        const char* keys[3] = {"AB", "AC", "BC"};
        for (const auto& [k, v] : r.items()) {
            auto it = std::find_if(std::begin(keys), std::end(keys), [&k](const char* x) { return k == x; });
            if (it == std::end(keys)) throw ParseError("unknown component '" + k + "'", "r_matrix", line(k));
            b[static_cast<std::size_t>(it - std::begin(keys))] = rational_value(v, "r_matrix." + k, line(k));
        }
        d.r_matrix = b;
    }
    if (j.contains("transform")) {
        const json& t = j.at("transform");
        if (!t.is_object()) throw ParseError("expected an object", "transform", line("transform"));
        std::vector<std::pair<std::string, std::string>> kv;
        for (const auto& [k, v] : t.items()) {
            if (v.is_number_integer()) kv.emplace_back(k, std::to_string(v.get<long>()));
            else if (v.is_string()) kv.emplace_back(k, v.get<std::string>());
            else throw ParseError("expected a string for '" + k + "'", "transform", line(k));
        }
        d.transform = transform_from_pairs(kv, "transform", line("transform"));
    }
    return d;
}

CaseDefinition preset_definition(const std::string& id) {
    catalog_source(id);
    CaseDefinition d;
    d.name = id;
    d.preset = id;
    return d;
}

Bindings parse_params(std::string_view text) {
    Bindings out;
    for (const auto& [k, v] : split_pairs(text, "--params")) {
        auto p = param_from_name(k);
        if (!p) throw ParseError("unknown parameter '" + k + "'", "params");
        try {
            out[*p] = parse_rational(v);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), "params." + k);
        }
    }
    return out;
}

TransformRequest parse_transform(std::string_view text) {
    return transform_from_pairs(split_pairs(text, "--transform"), "transform", 0);
}

std::optional<Command> command_from_name(std::string_view name) {
    for (Command c : {Command::verify, Command::quantize, Command::classify, Command::rmatrix, Command::transform,
                      Command::catalog})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

std::string_view to_string(Command c) {
    switch (c) {
        case Command::verify: return "verify";
        case Command::quantize: return "quantize";
        case Command::classify: return "classify";
        case Command::rmatrix: return "rmatrix";
        case Command::transform: return "transform";
        case Command::catalog: return "catalog";
    }
    return "?";
}

Report dispatch(Command c, const CaseDefinition& def, const RunOptions& options) {
    Report r;
    r.command = std::string(to_string(c));
    r.subject = def.name;
    if (c == Command::catalog) return catalog_report(def.preset, options.order.value_or(4));
    Instance in = instantiate(def, options);
    r.order = in.order;
    if (in.preset) {
        for (const auto& [p, v] : in.preset->params) r.set("param." + std::string(param_name(p)), qalg::to_string(v));
    } else {
        r.set("rho", in.rho.to_string());
    }
    r.set("coproduct", def.coproduct.value_or("standard"));
    try {
        switch (c) {
            case Command::verify: run_verify(in, r); break;
            case Command::quantize: run_quantize(in, r); break;
            case Command::classify: run_classify(in, r); break;
            case Command::rmatrix: run_rmatrix(in, r, def); break;
            case Command::transform: run_transform(in, r, def, options); break;
            case Command::catalog: break;
        }
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError&) {
        throw;
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

std::vector<Report> dispatch_batch(Command c, const std::vector<CaseDefinition>& defs, const RunOptions& options) {
    std::vector<Report> out(defs.size());
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    for (std::size_t start = 0; start < defs.size(); start += jobs) {
        std::vector<std::future<Report>> batch;
        for (std::size_t i = start; i < std::min(defs.size(), start + jobs); ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       [&, i] { return dispatch(c, defs[i], options); }));
        for (std::size_t k = 0; k < batch.size(); ++k) out[start + k] = batch[k].get();
    }
    return out;
}

Report catalog_report(const std::optional<std::string>& id, int order) {
    Report r;
    r.command = "catalog";
    if (!id) {
        r.subject = "all";
        for (const auto& p : catalog_ids()) {
            CatalogCase c = catalog_table(p, {}, 2);
            r.set("preset." + p, c.title);
        }
        return r;
    }
    r.subject = *id;
    r.order = order;
    CatalogCase c = catalog_table(*id, {}, order);
    r.set("title", c.title);
    for (const auto& [p, v] : c.params) r.set("param." + std::string(param_name(p)), qalg::to_string(v));
    if (!c.jacobson.empty()) r.set("jacobson", c.jacobson);
    if (c.r_matrix) r.set("r_matrix", c.r_matrix->to_string());
    if (c.r_matrix_kind) r.set("r_matrix_kind", std::string(to_string(*c.r_matrix_kind)));
    if (c.coboundary) r.set("coboundary_claim", *c.coboundary ? "true" : "false");
    std::string gomez;
    for (const auto& g : c.gomez) gomez += (gomez.empty() ? "" : ",") + g;
    if (!gomez.empty()) r.set("gomez", gomez);
    add_table_values(r, c.table);
    if (!c.notes.empty()) r.set("notes", c.notes);
    return r;
}

std::string render(const std::vector<Report>& reports, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::machine) {
        out << "qalg-report/1\n";
        std::size_t failed = 0;
        for (const auto& r : reports) {
            out << "command=" << r.command << "\n";
            out << "case=" << r.subject << "\n";
            if (r.order) out << "order=" << r.order << "\n";
            for (const auto& [k, v] : r.values) out << k << "=" << v << "\n";
            for (const auto& c : r.checks) {
                out << "check." << c.name << "=" << (c.pass ? "pass" : "fail");
                if (c.lowest_order) out << ";lowest_order=" << *c.lowest_order;
                out << "\n";
            }
            if (r.error) out << "error=" << *r.error << "\n";
            out << "result=" << (r.passed() ? "pass" : "fail") << "\n";
            if (!r.passed()) ++failed;
        }
        out << "summary.cases=" << reports.size() << "\n";
        out << "summary.failed=" << failed << "\n";
        return out.str();
    }
    for (const auto& r : reports) {
        out << r.command << " " << r.subject;
        if (r.order) out << " (N=" << r.order << ")";
        out << "\n";
        for (const auto& [k, v] : r.values) out << "  " << k << ": " << v << "\n";
        for (const auto& line : r.text) out << "  | " << line << "\n";
        for (const auto& c : r.checks) {
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) out << " - " << c.detail;
            out << "\n";
        }
        if (r.error) out << "  error: " << *r.error << "\n";
        out << "  => " << (r.passed() ? "PASS" : "FAIL") << "\n";
    }
    return out.str();
}

int exit_code(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); }) ? 0 : 1;
}

}  // namespace qalg
