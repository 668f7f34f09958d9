#pragma once

// Deterministic plain-text and JSON reports over the library's results.
// Everything routes through value types already computed elsewhere; this
// layer only formats. Rendering the same input twice yields identical bytes.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfl/catalog.hpp"
#include "pfl/errors.hpp"
#include "pfl/filtration.hpp"
#include "pfl/json_io.hpp"
#include "pfl/lattice.hpp"
#include "pfl/model.hpp"
#include "pfl/rational.hpp"
#include "pfl/spectral.hpp"
#include "pfl/ss_page.hpp"

namespace pfl::report {

// ----- small shared renderers ----------------------------------------------

inline std::string int_list(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string big_list(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

inline std::string rank_map_str(const RankMap& m) {
    std::string s;
    for (const auto& [l, r] : m) {
        if (!s.empty()) s += ", ";
        s += rat_str(l) + " -> " + std::to_string(r);
    }
    return s.empty() ? "(empty)" : s;
}

inline std::string pw_steps_str(const PwProfile& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.steps.size(); ++i) {
        if (i) s += ", ";
        s += p.steps[i] ? std::to_string(*p.steps[i]) : "?";
    }
    return s + ")";
}

inline std::string weight_multiset_str(const FixedComponent& c) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, mult] : c.weights)
        for (int i = 0; i < mult; ++i) {
            if (!first) s += ", ";
            s += std::to_string(k);
            first = false;
        }
    return s + "}";
}

inline std::string term_str(const SpectralTerm& t) {
    std::string s = t.coeff == Coeff::Param ? "b" : "";
    auto app = [&](const std::string& x) {
        if (!s.empty()) s += " ";
        s += x;
    };
    if (t.zeta_exp != 0) app(t.zeta_exp == 1 ? "zeta" : "zeta^" + std::to_string(t.zeta_exp));
    if (t.z_exp != 0) app("z^" + std::to_string(t.z_exp));
    if (t.dz_power != 0) app(t.dz_power == 1 ? "(dz)" : "(dz)^" + std::to_string(t.dz_power));
    return s.empty() ? "1" : s;
}

inline std::string family_equation(const SpectralFamily& f) {
    std::string s;
    for (const auto& t : f.terms) {
        if (!s.empty()) s += " + ";
        s += term_str(t);
    }
    return s + " = 0";
}

// right-aligned fixed-width table with two-space gutters
inline std::string grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<size_t> width;
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

// ----- the invariants table --------------------------------------------------

struct Table1Row {
    std::string numeral;
    std::optional<long long> omega_weight;
    std::optional<long long> base_weight;
    std::optional<std::string> polynomial;
};

// Printed order: VI down to I, every value computed live from the catalog.
inline std::vector<Table1Row> table1_rows() {
    std::vector<Table1Row> rows;
    for (const std::string id : {"PVI", "PV", "PIV", "PIII", "PII", "PI"}) {
        const CaseBundle& b = get_case(id);
        Table1Row row;
        row.numeral = b.table1_numeral.value_or(id);
        if (b.family) {
            auto res = solve_weights(*b.family);
            if (const auto* w = std::get_if<ActionWeights>(&res)) {
                row.omega_weight = w->s_omega.convert_to<long long>();
                row.base_weight = w->w_b.convert_to<long long>();
                if (b.model)
                    row.polynomial =
                        render_polynomial(generating_polynomial(assemble_filtration(*b.model)));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string render_table1(const std::vector<Table1Row>& rows) {
    std::string out = "X | w(Omega) | w(B) | P(q,t)\n";
    for (const auto& r : rows) {
        out += r.numeral;
        out += " | " + (r.omega_weight ? std::to_string(*r.omega_weight) : "∅");
        out += " | " + (r.base_weight ? std::to_string(*r.base_weight) : "∅");
        out += " | " + (r.polynomial ? *r.polynomial : "∅");
        out += "\n";
    }
    return out;
}

inline std::string table1_text() { return render_table1(table1_rows()); }

inline json_io::json table1_json() {
    json_io::json rows = json_io::json::array();
    for (const auto& r : table1_rows()) {
        json_io::json row;
        row["X"] = r.numeral;
        row["w_omega"] = r.omega_weight ? json_io::json(*r.omega_weight) : json_io::json(nullptr);
        row["w_b"] = r.base_weight ? json_io::json(*r.base_weight) : json_io::json(nullptr);
        row["polynomial"] = r.polynomial ? json_io::json(*r.polynomial) : json_io::json(nullptr);
        rows.push_back(std::move(row));
    }
    return json_io::json{{"columns", {"X", "w(Omega)", "w(B)", "P(q,t)"}}, {"rows", std::move(rows)}};
}

// Re-render the text table from its JSON form; used to check the round trip.
inline std::string table1_text_from_json(const json_io::json& j) {
    std::vector<Table1Row> rows;
    for (const auto& rj : json_io::field(j, "rows")) {
        Table1Row r;
        r.numeral = json_io::str_field(rj, "X");
        const auto& wo = json_io::field(rj, "w_omega");
        if (!wo.is_null()) r.omega_weight = wo.get<long long>();
        const auto& wb = json_io::field(rj, "w_b");
        if (!wb.is_null()) r.base_weight = wb.get<long long>();
        const auto& poly = json_io::field(rj, "polynomial");
        if (!poly.is_null()) r.polynomial = poly.get<std::string>();
        rows.push_back(std::move(r));
    }
    return render_table1(rows);
}

// ----- section renderers ------------------------------------------------------

inline void family_section(std::ostream& os, const CaseBundle& b, const std::optional<ActionWeights>& w,
                           const std::optional<NoAction>& na) {
    os << "\n[spectral family]\n";
    if (!b.family) {
        os << "none on record\n";
        return;
    }
    const SpectralFamily& f = *b.family;
    if (!f.terms.empty()) os << "equation: " << family_equation(f) << "\n";
    os << "fiber degree: " << f.fiber_degree << "; singular fibers: " << f.singular_fiber_count << "\n";
    if (!f.z_fixed_points.empty()) {
        os << "base points kept fixed:";
        for (const auto& p : f.z_fixed_points) os << " " << p;
        os << "\n";
    }
    if (na) {
        os << "torus action: none (" << to_string(na->reason) << ": " << na->detail << ")\n";
        return;
    }
    os << "torus action: w_z = " << w->w_z << ", w_zeta = " << w->w_zeta << ", w_b = " << w->w_b << "\n";
    os << "symplectic-form weight: s_omega = " << w->s_omega << "\n";
    if (w->w_z != 0)
        os << "note: the one-form zeta dz itself scales by w_zeta + w_z = " << (w->w_zeta + w->w_z)
           << "; the recorded s_omega follows the fiber-weight convention\n";
    auto rep = verify_equivariance(f, *w);
    os << "equivariance: every term scales by t^" << rep.overall_factor << (rep.ok ? " (ok)" : " (FAILED)")
       << "\n";
}

inline void model_section(std::ostream& os, const CStarModel& m) {
    os << "\n[fixed locus]\n";
    for (const auto& c : m.components) {
        os << c.name << ": " << (c.dim_c == 0 ? "point" : "curve") << ", weights "
           << weight_multiset_str(c);
        if (c.dim_c > 0) os << ", betti " << int_list(c.betti);
        if (c.is_min) os << ", minimal";
        os << ", downward-flow index " << morse_bott_index(c) << "\n";
    }
    os << "outer rays:";
    for (const auto& r : m.rays) {
        os << " (" << r.base << ", w=" << r.weight << (r.hitchin_section ? ", section" : "") << ")";
    }
    os << "\n";
    os << "ambient Betti numbers: " << int_list(frankel_betti(m)) << "\n";
    auto issues = validate_model(m);
    if (issues.empty()) {
        os << "validation: consistent\n";
    } else {
        os << "validation: " << issues.size() << " issue(s)\n";
        for (const auto& s : issues) os << "  - " << s << "\n";
    }
}

inline void profile_section(std::ostream& os, const FiltrationProfile& p) {
    os << "\n[filtration]\n";
    for (const auto& j : p.jumps) {
        os << "lambda = " << rat_str(j.lambda) << ":";
        for (const auto& [deg, inc] : j.increments)
            os << " H^" << deg << " -> " << j.cumulative.at(deg) << " (+" << inc << ")";
        auto hint = p.basis_hints.find(j.lambda);
        if (hint != p.basis_hints.end()) {
            os << "; entering classes:";
            for (const auto& name : hint->second) os << " " << name;
        }
        os << "\n";
    }
    os << "fully determined: " << (p.fully_determined ? "yes" : "no") << "\n";
    if (p.fully_determined)
        os << "P(q,t) = " << render_polynomial(generating_polynomial(p)) << "\n";
}

inline void page_section(std::ostream& os, const E1Page& page,
                         const std::vector<FeasibilityIssue>* audit) {
    os << "\n[first page]\n";
    long long lo = 0, hi = 0;
    for (size_t d = 0; d < page.zero_column.size(); ++d)
        if (page.zero_column[d] != 0) hi = std::max(hi, static_cast<long long>(d));
    for (const auto& col : page.columns)
        for (const auto& e : col.entries) {
            lo = std::min(lo, e.shift);
            hi = std::max(hi, e.shift + static_cast<long long>(e.ranks.size()) - 1);
        }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = {"deg", "T=0"};
    for (const auto& col : page.columns) header.push_back("T=" + rat_str(col.period));
    cells.push_back(header);
    for (long long d = hi; d >= lo; --d) {
        std::vector<std::string> row = {std::to_string(d)};
        int zc = (d >= 0 && d < static_cast<long long>(page.zero_column.size()))
                     ? page.zero_column[static_cast<size_t>(d)]
                     : 0;
        row.push_back(zc == 0 ? "." : std::to_string(zc));
        for (const auto& col : page.columns) {
            int sum = 0;
            for (const auto& e : col.entries) {
                long long off = d - e.shift;
                if (off >= 0 && off < static_cast<long long>(e.ranks.size()))
                    sum += e.ranks[static_cast<size_t>(off)];
            }
            row.push_back(sum == 0 ? "." : std::to_string(sum));
        }
        cells.push_back(std::move(row));
    }
    os << grid(cells);
    for (const auto& col : page.columns) {
        os << "T = " << rat_str(col.period) << ":";
        for (const auto& e : col.entries) {
            if (e.kind == E1Entry::Kind::Circle)
                os << " circle over " << e.base << " at degrees (" << e.shift << ", " << e.shift + 1
                   << ")";
            else
                os << " energy hypersurface, ranks " << int_list(e.ranks) << " from degree " << e.shift;
        }
        os << "\n";
    }
    if (page.placement_reconstructed)
        os << "note: integer-period columns are placed by the index formula at the section ray's "
              "convergence point\n";
    if (audit) {
        if (audit->empty()) {
            os << "annihilation audit: every jump has a reachable page entry one degree below\n";
        } else {
            os << "annihilation audit: " << audit->size() << " unexplained jump(s)\n";
            for (const auto& issue : *audit)
                os << "  - slope " << rat_str(issue.lambda) << ", degree " << issue.degree << "\n";
        }
    }
}

inline void lattice_section(std::ostream& os, const CoreLattice& c) {
    os << "\n[core fiber]\n";
    os << "type " << c.label << ": " << c.component_names.size() << " component(s), multiplicities "
       << big_list(c.multiplicities) << "\n";
    if (c.central) os << "central component: " << *c.central << "\n";
    os << "core Betti numbers: " << int_list(c.betti) << "\n";
    auto issues = validate_lattice(c);
    if (issues.empty()) {
        os << "lattice validation: consistent\n";
    } else {
        os << "lattice validation: " << issues.size() << " issue(s)\n";
        for (const auto& s : issues) os << "  - " << s << "\n";
    }
}

inline void comparison_section(std::ostream& os, const FiltrationComparison& c) {
    os << "\n[filtration comparison]\n";
    os << "floer ranks (" << c.floer_source << "): " << rank_map_str(c.floer) << "\n";
    os << "multiplicity ranks: " << rank_map_str(c.mult) << "\n";
    os << "perverse-type steps: " << pw_steps_str(c.pw) << "\n";
    auto flag = [&](const char* name, bool claimed) {
        if (claimed) os << "  " << name << ": yes\n";
    };
    os << "relations:\n";
    flag("RankwiseEqual(F, M)", c.rankwise_equal_fm);
    flag("Refines(PW, F)", c.pw_refines_floer);
    flag("Refines(PW, M)", c.pw_refines_mult);
    flag("PW strictly finer", c.pw_strictly_finer);
    flag("Refines(F, PW)", c.floer_refines_pw);
    flag("Refines(M, PW)", c.mult_refines_pw);
    flag("Coincide(F, M, PW)", c.coincide_all);
    auto bad = c.verify();
    if (bad.empty()) {
        os << "re-verification: all asserted relations hold on the stored rank maps\n";
    } else {
        os << "re-verification: FAILED for";
        for (const auto& s : bad) os << " " << s;
        os << "\n";
    }
    os << "note: refinement statements compare rank values only; no subspace identification is "
          "asserted\n";
}

// ----- whole-case analysis -----------------------------------------------------

struct AnalyzeResult {
    std::string text;
    json_io::json doc;
    bool no_action = false; // family present but no torus action survives
};

inline AnalyzeResult analyze(const std::string& id, std::optional<Rational> tmax_flag = std::nullopt,
                             const std::optional<CStarModel>& model_override = std::nullopt) {
    const CaseBundle& b = get_case(id);
    std::ostringstream os;
    os << "case " << b.id << "\n";

    AnalyzeResult result;
    json_io::json doc;
    doc["case"] = b.id;

    std::optional<ActionWeights> w;
    std::optional<NoAction> na;
    if (b.family) {
        auto res = solve_weights(*b.family);
        if (const auto* got = std::get_if<NoAction>(&res))
            na = *got;
        else
            w = std::get<ActionWeights>(res);
    }
    family_section(os, b, w, na);
    if (na) {
        result.no_action = true;
        doc["family"] = json_io::family_json(*b.family);
        doc["action"] = json_io::no_action_json(*na);
        result.text = os.str();
        result.doc = std::move(doc);
        return result;
    }
    if (b.family) {
        doc["family"] = json_io::family_json(*b.family);
        doc["action"] = json_io::weights_json(*w);
    } else {
        doc["family"] = json_io::json(nullptr);
        doc["action"] = json_io::json(nullptr);
    }

    const std::optional<CStarModel>& model = model_override ? model_override : b.model;
    std::optional<FiltrationProfile> profile;
    if (model) {
        model_section(os, *model);
        doc["model"] = json_io::model_json(*model);
        try {
            profile = assemble_filtration(*model);
            profile->basis_hints = b.basis_hints;
            profile_section(os, *profile);
            doc["profile"] = json_io::profile_json(*profile);
            if (profile->fully_determined)
                doc["polynomial"] = json_io::polynomial_json(generating_polynomial(*profile));
        } catch (const UnsupportedCase& e) {
            os << "\n[filtration]\n";
            os << "profile assembly out of scope: " << e.what() << "\n";
            doc["profile"] = json_io::json(nullptr);
        }
    } else {
        doc["model"] = json_io::json(nullptr);
        doc["profile"] = json_io::json(nullptr);
    }
    if (b.companion_floer) {
        if (!profile) {
            if (!model) os << "\n[filtration]\n";
            os << "middle-degree ranks (companion-work data): " << rank_map_str(*b.companion_floer)
               << "\n";
        }
        doc["companion_floer"] = json_io::rank_map_json(*b.companion_floer);
    }

    if (model && b.core) {
        Rational tmax = tmax_flag ? *tmax_flag
                                  : (profile && !profile->jumps.empty() ? profile->jumps.back().lambda
                                                                        : Rational(1));
        E1Page page = e1_page(*model, *b.core, tmax);
        std::optional<std::vector<FeasibilityIssue>> audit;
        if (profile) audit = annihilation_feasibility(page, *profile);
        page_section(os, page, audit ? &*audit : nullptr);
        doc["page"] = json_io::page_json(page);
    } else {
        doc["page"] = json_io::json(nullptr);
    }

    if (b.core) {
        lattice_section(os, *b.core);
        doc["core"] = json_io::lattice_json(*b.core);
    } else {
        doc["core"] = json_io::json(nullptr);
    }

    if (b.core && b.pw_kind && b.has_action()) {
        auto c = compare_filtrations(b.id);
        comparison_section(os, c);
        doc["comparison"] = json_io::comparison_json(c);
    } else {
        doc["comparison"] = json_io::json(nullptr);
    }

    result.text = os.str();
    result.doc = std::move(doc);
    return result;
}

inline std::string compare_text(const std::string& id) {
    auto c = compare_filtrations(id);
    std::ostringstream os;
    os << "case " << id << "\n";
    comparison_section(os, c);
    return os.str();
}

inline std::string dynkin_text(const std::string& label) {
    auto d = dynkin::diagram(label);
    auto cart = cartan_matrix(label);
    std::ostringstream os;
    os << "label: " << d.label << "\n";
    os << "vertices:";
    for (const auto& n : d.names) os << " " << n;
    if (d.central) os << " (" << d.names[static_cast<size_t>(*d.central)] << " central)";
    os << "\n";
    os << "edges:";
    if (d.edges.empty()) os << " none";
    for (const auto& [i, j] : d.edges)
        os << " " << d.names[static_cast<size_t>(i)] << "-" << d.names[static_cast<size_t>(j)];
    os << "\n";
    os << "cartan matrix:\n";
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < cart.rows; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < cart.cols; ++j) row.push_back(cart.at(i, j).str());
        cells.push_back(std::move(row));
    }
    os << grid(cells);
    os << "imaginary root: " << big_list(imaginary_root(label)) << "\n";
    IntMatrix neg(cart.rows, cart.cols);
    for (int i = 0; i < cart.rows; ++i)
        for (int j = 0; j < cart.cols; ++j) neg.at(i, j) = -cart.at(i, j);
    os << "fiber multiplicities from the negated matrix: " << big_list(multiplicities_from_lattice(neg))
       << "\n";
    return os.str();
}

inline json_io::json dynkin_json(const std::string& label) {
    auto d = dynkin::diagram(label);
    auto cart = cartan_matrix(label);
    json_io::json rows = json_io::json::array();
    for (int i = 0; i < cart.rows; ++i) {
        json_io::json row = json_io::json::array();
        for (int j = 0; j < cart.cols; ++j) row.push_back(cart.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    json_io::json edges = json_io::json::array();
    for (const auto& [i, j] : d.edges) edges.push_back(json_io::json::array({i, j}));
    json_io::json root = json_io::json::array();
    for (const auto& x : imaginary_root(label)) root.push_back(x.convert_to<long long>());
    json_io::json out;
    out["label"] = d.label;
    out["vertices"] = d.names;
    out["central"] = d.central ? json_io::json(d.names[static_cast<size_t>(*d.central)]) : json_io::json(nullptr);
    out["edges"] = std::move(edges);
    out["cartan"] = std::move(rows);
    out["imaginary_root"] = std::move(root);
    return out;
}

} // namespace pfl::report
