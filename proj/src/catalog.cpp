#include "qalg/catalog.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "qalg/errors.hpp"
#include "qalg/expression.hpp"
#include "qalg/generator_series.hpp"

namespace qalg {

namespace detail {
extern const std::vector<std::pair<std::string, std::string>> kCatalogData;
}

namespace {

using nlohmann::json;

const std::map<std::string, std::string>& sources() {
    static const std::map<std::string, std::string> m(detail::kCatalogData.begin(), detail::kCatalogData.end());
    return m;
}

const json& parsed(const std::string& id) {
    static std::map<std::string, json> cache = [] {
        std::map<std::string, json> out;
        for (const auto& [k, text] : detail::kCatalogData) out.emplace(k, json::parse(text));
        return out;
    }();
    auto it = cache.find(id);
    if (it == cache.end()) throw DomainError("unknown preset '" + id + "'");
    return it->second;
}

// Numeric order on dotted ids ("2.2.2.10" after "2.2.2.9").
bool id_less(const std::string& x, const std::string& y) {
    auto split = [](const std::string& s) {
        std::vector<int> v;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto dot = s.find('.', pos);
            if (dot == std::string::npos) dot = s.size();
            v.push_back(std::stoi(s.substr(pos, dot - pos)));
            pos = dot + 1;
        }
        return v;
    };
    return split(x) < split(y);
}

Rational constant_of(const std::string& expr, const Bindings& b, const std::string& what) {
    ParamPoly p = parse_expression(expr, b);
    if (!p.is_constant()) throw DomainError(what + " '" + expr + "' is not determined by the parameters");
    return p.constant_value();
}

Gen gen_of(const std::string& s) {
    if (s == "A") return Gen::A;
    if (s == "B") return Gen::B;
    if (s == "C") return Gen::C;
    throw DomainError("bad generator '" + s + "'");
}

// Entry on the symmetrized basis.
AlgElement build_entry(const json& terms, const Bindings& b, int order) {
    AlgElement out(order);
    for (const auto& t : terms) {
        const std::string kind = t.at("kind");
        ParamPoly coef(constant_of(t.at("coef"), b, "coefficient"));
        if (kind == "gen") {
            out += AlgElement::generator(gen_of(t.at("gen")), order) * coef;
            continue;
        }
        ParamPoly scale(constant_of(t.at("scale"), b, "scale"));
        if (kind == "sinh_over_z") {
            out += generator_series(Gen::A, SeriesKind::sinh_over_z, scale, order) * coef;
        } else if (kind == "sinh_over_scaled_z") {
            if (scale.is_zero()) throw DomainError("sinh_over_scaled_z with zero scale");
            out += generator_series(Gen::A, SeriesKind::sinh_over_scaled_z, scale, order) * coef;
        } else if (kind == "sym_cosh") {
            Gen g = gen_of(t.at("gen"));
            AlgElement cosh = generator_series(Gen::A, SeriesKind::cosh, scale, order);
            for (const auto& [m, s] : cosh.terms()) {
                Monomial key = m;
                key.power(g) += 1;
                ZSeries c = s;
                c *= coef;
                out.add(key, c);
            }
        } else {
            throw DomainError("unknown term kind '" + kind + "'");
        }
    }
    return out;
}

Param param_or_throw(const std::string& name) {
    auto p = param_from_name(name);
    if (!p) throw DomainError("unknown parameter '" + name + "'");
    return *p;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out = classified_case_ids();
        const auto& fam = family_ids();
        out.insert(out.end(), fam.begin(), fam.end());
        return out;
    }();
    return ids;
}

const std::vector<std::string>& classified_case_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, text] : sources())
            if (id.rfind("fam-", 0) != 0) out.push_back(id);
        std::sort(out.begin(), out.end(), id_less);
        return out;
    }();
    return ids;
}

const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, text] : sources())
            if (id.rfind("fam-", 0) == 0) out.push_back(id);
        return out;
    }();
    return ids;
}

const std::string& catalog_source(const std::string& id) {
    auto it = sources().find(id);
    if (it == sources().end()) throw DomainError("unknown preset '" + id + "'");
    return it->second;
}

Bindings catalog_defaults(const std::string& id) {
    Bindings out;
    for (const auto& [name, value] : parsed(id).at("params").items())
        out[param_or_throw(name)] = parse_rational(value.get<std::string>());
    return out;
}

CatalogCase catalog_table(const std::string& id, const Bindings& overrides, int order, bool verify) {
    if (order < 2) throw DomainError("truncation order must be at least 2");
    const json& j = parsed(id);
    Bindings b = catalog_defaults(id);
    std::vector<Param> fixed;
    for (const auto& f : j.at("fixed")) fixed.push_back(param_or_throw(f));
    for (const auto& [p, v] : overrides) {
        if (!b.count(p))
            throw DomainError("parameter '" + std::string(param_name(p)) + "' does not apply to preset " + id);
        if (std::find(fixed.begin(), fixed.end(), p) != fixed.end() && b.at(p) != v)
            throw DomainError("parameter '" + std::string(param_name(p)) + "' is fixed for preset " + id);
        b[p] = v;
    }
    for (const auto& c : j.at("constraints")) {
        const std::string expr = c;
        if (constant_of(expr, b, "constraint") == 0)
            throw DomainError("preset " + id + " requires " + expr + " != 0");
    }

    CatalogCase out{.id = id,
                    .title = j.at("title"),
                    .rho = b.at(Param::rho),
                    .params = b,
                    .table = CommutatorTable::abelian(order),
                    .hopf = HopfData::standard(ParamPoly(b.at(Param::rho)), order),
                    .r_matrix = std::nullopt,
                    .r_matrix_kind = std::nullopt,
                    .coboundary = std::nullopt,
                    .jacobson = j.at("jacobson").is_null() ? std::string() : j.at("jacobson").get<std::string>(),
                    .gomez = j.at("gomez").get<std::vector<std::string>>(),
                    .notes = j.at("notes")};

    const json& tab = j.at("table");
    out.table = CommutatorTable::from_sym({build_entry(tab.at("ab"), b, order), build_entry(tab.at("ac"), b, order),
                                           build_entry(tab.at("bc"), b, order)})
                    .with_params(b);

    if (!j.at("r_matrix").is_null()) {
        Bivector r;
        const char* keys[3] = {"AB", "AC", "BC"};
        for (std::size_t i = 0; i < 3; ++i) r[i] = constant_of(j.at("r_matrix").at(keys[i]), b, "r-matrix entry");
        out.r_matrix = r;
    }
    if (!j.at("r_matrix_kind").is_null())
        out.r_matrix_kind = j.at("r_matrix_kind") == "standard" ? RMatrixKind::standard : RMatrixKind::non_standard;
    if (!j.at("coboundary").is_null()) out.coboundary = j.at("coboundary").get<bool>();

    if (verify) {
        HopfReport rep = verify_hopf(out.hopf, out.table);
        if (!rep.ok()) throw Error("preset " + id + " fails the Hopf axioms at order " + std::to_string(order));
    }
    return out;
}

CommutatorTable table_from_json(const std::string& json_text, const Bindings& params, int order) {
    json tab = json::parse(json_text);
    for (const auto& [k, v] : tab.items())
        if (k != "ab" && k != "ac" && k != "bc") throw DomainError("unknown table entry '" + k + "'");
    auto entry = [&](const char* k) { return tab.contains(k) ? build_entry(tab.at(k), params, order) : AlgElement(order); };
    return CommutatorTable::from_sym({entry("ab"), entry("ac"), entry("bc")});
}

std::string_view to_string(RMatrixKind k) { return k == RMatrixKind::standard ? "standard" : "non-standard"; }

}  // namespace qalg
