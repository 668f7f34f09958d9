#pragma once

// JSON views of every public structure, plus parsers for the two structures
// users supply themselves (spectral families and fixed-locus models).
//
// Conventions: rational numbers are fraction strings ("1/6", "2"); maps keyed
// by slopes become objects with fraction-string keys in ascending slope
// order; weight multisets become arrays of {weight, multiplicity} pairs. All
// emitters use order-preserving objects so a document renders byte-identically
// on every run.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "pfl/catalog.hpp"
#include "pfl/errors.hpp"
#include "pfl/filtration.hpp"
#include "pfl/lattice.hpp"
#include "pfl/model.hpp"
#include "pfl/rational.hpp"
#include "pfl/spectral.hpp"
#include "pfl/ss_page.hpp"

namespace pfl::json_io {

using json = nlohmann::ordered_json;

// ----- parse helpers with field-name diagnostics --------------------------

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InvalidInput("expected an object carrying field '" + std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput("missing field '" + std::string(key) + "'");
    return *it;
}

inline long long int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw InvalidInput("field '" + std::string(key) + "' must be an integer");
    return v.get<long long>();
}

inline std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw InvalidInput("field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

inline bool bool_field(const json& j, const char* key, bool fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_boolean()) throw InvalidInput("field '" + std::string(key) + "' must be a boolean");
    return v.get<bool>();
}

// ----- spectral families ---------------------------------------------------

inline json term_json(const SpectralTerm& t) {
    return json{{"coeff", t.coeff == Coeff::Unit ? "unit" : "param"},
                {"zeta_exp", t.zeta_exp},
                {"z_exp", t.z_exp},
                {"dz_power", t.dz_power}};
}

inline json family_json(const SpectralFamily& f) {
    json terms = json::array();
    for (const auto& t : f.terms) terms.push_back(term_json(t));
    return json{{"fiber_degree", f.fiber_degree},
                {"terms", std::move(terms)},
                {"z_fixed_points", f.z_fixed_points},
                {"singular_fiber_count", f.singular_fiber_count}};
}

inline SpectralFamily family_from_json(const json& j) {
    SpectralFamily f;
    f.fiber_degree = static_cast<int>(int_field(j, "fiber_degree"));
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw InvalidInput("field 'terms' must be an array");
    f.terms.clear();
    for (const json& t : terms) {
        SpectralTerm term;
        std::string c = str_field(t, "coeff");
        if (c == "unit")
            term.coeff = Coeff::Unit;
        else if (c == "param")
            term.coeff = Coeff::Param;
        else
            throw InvalidInput("term field 'coeff' must be 'unit' or 'param', got '" + c + "'");
        term.zeta_exp = static_cast<int>(int_field(t, "zeta_exp"));
        term.z_exp = static_cast<int>(int_field(t, "z_exp"));
        term.dz_power = static_cast<int>(int_field(t, "dz_power"));
        f.terms.push_back(term);
    }
    f.z_fixed_points.clear();
    if (j.contains("z_fixed_points")) {
        const json& pts = j.at("z_fixed_points");
        if (!pts.is_array()) throw InvalidInput("field 'z_fixed_points' must be an array of strings");
        for (const json& p : pts) {
            if (!p.is_string()) throw InvalidInput("field 'z_fixed_points' must be an array of strings");
            f.z_fixed_points.push_back(p.get<std::string>());
        }
    }
    if (j.contains("singular_fiber_count"))
        f.singular_fiber_count = static_cast<int>(int_field(j, "singular_fiber_count"));
    return f;
}

inline json weights_json(const ActionWeights& w) {
    return json{{"w_z", w.w_z.convert_to<long long>()},
                {"w_zeta", w.w_zeta.convert_to<long long>()},
                {"w_b", w.w_b.convert_to<long long>()},
                {"s_omega", w.s_omega.convert_to<long long>()}};
}

inline json no_action_json(const NoAction& na) {
    return json{{"reason", to_string(na.reason)}, {"detail", na.detail}};
}

// ----- fixed-locus models ---------------------------------------------------

inline json component_json(const FixedComponent& c) {
    json weights = json::array();
    for (const auto& [k, mult] : c.weights)
        weights.push_back(json{{"weight", k}, {"multiplicity", mult}});
    return json{{"name", c.name},
                {"dim_c", c.dim_c},
                {"betti", c.betti},
                {"weights", std::move(weights)},
                {"is_min", c.is_min}};
}

inline json model_json(const CStarModel& m) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(component_json(c));
    json rays = json::array();
    for (const auto& r : m.rays)
        rays.push_back(json{{"base", r.base}, {"weight", r.weight}, {"hitchin_section", r.hitchin_section}});
    return json{{"dim_c", m.dim_c},
                {"components", std::move(comps)},
                {"rays", std::move(rays)},
                {"s_omega", m.s_omega.convert_to<long long>()},
                {"w_b", m.w_b.convert_to<long long>()},
                {"core_label", m.core_label}};
}

inline CStarModel model_from_json(const json& j) {
    CStarModel m;
    if (j.contains("dim_c")) m.dim_c = static_cast<int>(int_field(j, "dim_c"));
    const json& comps = field(j, "components");
    if (!comps.is_array()) throw InvalidInput("field 'components' must be an array");
    m.components.clear();
    for (const json& cj : comps) {
        FixedComponent c;
        c.name = str_field(cj, "name");
        c.dim_c = static_cast<int>(int_field(cj, "dim_c"));
        const json& betti = field(cj, "betti");
        if (!betti.is_array()) throw InvalidInput("component field 'betti' must be an array");
        c.betti.clear();
        for (const json& b : betti) {
            if (!b.is_number_integer()) throw InvalidInput("component field 'betti' must hold integers");
            c.betti.push_back(b.get<int>());
        }
        const json& ws = field(cj, "weights");
        if (!ws.is_array()) throw InvalidInput("component field 'weights' must be an array");
        for (const json& w : ws) {
            int k = static_cast<int>(int_field(w, "weight"));
            int mult = static_cast<int>(int_field(w, "multiplicity"));
            c.weights[k] += mult;
        }
        c.is_min = bool_field(cj, "is_min", false);
        m.components.push_back(std::move(c));
    }
    m.rays.clear();
    if (j.contains("rays")) {
        const json& rays = j.at("rays");
        if (!rays.is_array()) throw InvalidInput("field 'rays' must be an array");
        for (const json& rj : rays) {
            OuterRay r;
            r.base = str_field(rj, "base");
            r.weight = static_cast<int>(int_field(rj, "weight"));
            r.hitchin_section = bool_field(rj, "hitchin_section", false);
            m.rays.push_back(std::move(r));
        }
    }
    m.s_omega = Int(int_field(j, "s_omega"));
    m.w_b = Int(int_field(j, "w_b"));
    if (j.contains("core_label")) m.core_label = str_field(j, "core_label");
    return m;
}

// ----- filtration profiles --------------------------------------------------

inline json rank_map_json(const RankMap& m) {
    json out = json::object();
    for (const auto& [l, r] : m) out[rat_str(l)] = r;
    return out;
}

inline json degree_map_json(const std::map<int, int>& m) {
    json out = json::object();
    for (const auto& [d, v] : m) out[std::to_string(d)] = v;
    return out;
}

inline json profile_json(const FiltrationProfile& p) {
    json jumps = json::array();
    for (const auto& j : p.jumps)
        jumps.push_back(json{{"lambda", rat_str(j.lambda)},
                             {"increments", degree_map_json(j.increments)},
                             {"cumulative", degree_map_json(j.cumulative)}});
    json envelope = json::array();
    for (const auto& [lambda, row] : p.envelope) {
        json bounds = json::object();
        for (const auto& [d, b] : row)
            bounds[std::to_string(d)] = json{{"lower", b.lower}, {"upper", b.upper}};
        envelope.push_back(json{{"lambda", rat_str(lambda)}, {"bounds", std::move(bounds)}});
    }
    json hints = json::object();
    for (const auto& [l, names] : p.basis_hints) hints[rat_str(l)] = names;
    return json{{"jumps", std::move(jumps)},
                {"envelope", std::move(envelope)},
                {"basis_hints", std::move(hints)},
                {"total", p.total},
                {"fully_determined", p.fully_determined}};
}

inline json polynomial_json(const GeneratingPolynomial& g) {
    json terms = json::array();
    for (const auto& t : g.terms)
        terms.push_back(json{{"q_exp", rat_str(t.q_exp)}, {"t_exp", t.t_exp}, {"coeff", t.coeff}});
    return json{{"terms", std::move(terms)}, {"rendered", render_polynomial(g)}};
}

// ----- spectral-sequence pages ----------------------------------------------

inline json page_json(const E1Page& page) {
    json cols = json::array();
    for (const auto& col : page.columns) {
        json entries = json::array();
        for (const auto& e : col.entries)
            entries.push_back(json{{"kind", e.kind == E1Entry::Kind::Circle ? "circle" : "hypersurface"},
                                   {"base", e.base},
                                   {"shift", e.shift},
                                   {"ranks", e.ranks}});
        cols.push_back(json{{"period", rat_str(col.period)}, {"entries", std::move(entries)}});
    }
    return json{{"zero_column", page.zero_column},
                {"columns", std::move(cols)},
                {"placement_reconstructed", page.placement_reconstructed}};
}

// ----- lattices and comparisons ---------------------------------------------

inline json lattice_json(const CoreLattice& c) {
    json rows = json::array();
    for (int i = 0; i < c.intersection.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < c.intersection.cols; ++j)
            row.push_back(c.intersection.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    json mults = json::array();
    for (const auto& m : c.multiplicities) mults.push_back(m.convert_to<long long>());
    json out{{"label", c.label},
             {"component_names", c.component_names},
             {"intersection", std::move(rows)},
             {"multiplicities", std::move(mults)}};
    out["central"] = c.central ? json(*c.central) : json(nullptr);
    out["betti"] = c.betti;
    return out;
}

inline std::string pw_kind_name(PwKind k) {
    switch (k) {
        case PwKind::Trivial: return "trivial";
        case PwKind::TwoStepRankTwo: return "two-step-rank-two";
        case PwKind::TwoStepUnknownMiddle: return "two-step-unknown-middle";
        case PwKind::ParabolicCentral: return "parabolic-central";
    }
    return "trivial";
}

inline json pw_profile_json(const PwProfile& p) {
    json steps = json::array();
    for (const auto& s : p.steps) steps.push_back(s ? json(*s) : json(nullptr));
    return json{{"steps", std::move(steps)}};
}

inline json comparison_json(const FiltrationComparison& c) {
    return json{{"case_id", c.case_id},
                {"floer", rank_map_json(c.floer)},
                {"floer_source", c.floer_source},
                {"mult", rank_map_json(c.mult)},
                {"pw", pw_profile_json(c.pw)},
                {"relations",
                 json{{"rankwise_equal_fm", c.rankwise_equal_fm},
                      {"pw_refines_floer", c.pw_refines_floer},
                      {"pw_refines_mult", c.pw_refines_mult},
                      {"pw_strictly_finer", c.pw_strictly_finer},
                      {"floer_refines_pw", c.floer_refines_pw},
                      {"mult_refines_pw", c.mult_refines_pw},
                      {"coincide_all", c.coincide_all}}}};
}

// ----- case bundles ---------------------------------------------------------

inline json bundle_json(const CaseBundle& b) {
    json out;
    out["id"] = b.id;
    out["family"] = b.family ? family_json(*b.family) : json(nullptr);
    out["model"] = b.model ? model_json(*b.model) : json(nullptr);
    out["core"] = b.core ? lattice_json(*b.core) : json(nullptr);
    if (b.expected_weights) {
        auto [wz, wzeta, wb] = *b.expected_weights;
        out["expected_weights"] = json{{"w_z", wz}, {"w_zeta", wzeta}, {"w_b", wb}};
    } else {
        out["expected_weights"] = json(nullptr);
    }
    out["companion_floer"] = b.companion_floer ? rank_map_json(*b.companion_floer) : json(nullptr);
    json hints = json::object();
    for (const auto& [l, names] : b.basis_hints) hints[rat_str(l)] = names;
    out["basis_hints"] = std::move(hints);
    out["pw_kind"] = b.pw_kind ? json(pw_kind_name(*b.pw_kind)) : json(nullptr);
    out["pw_strict"] = b.pw_strict;
    out["coincide"] = b.coincide;
    out["painleve"] = b.painleve;
    out["parabolic"] = b.parabolic;
    out["table1_numeral"] = b.table1_numeral ? json(*b.table1_numeral) : json(nullptr);
    return out;
}

// Parse a document, mapping syntax errors to InvalidInput.
inline json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON document");
    return j;
}

} // namespace pfl::json_io
