#pragma once

// Compiled-in case bundles: the six Painleve spectral families (plus the
// full-nilpotent form of the second), and the parabolic quotient cases G0 and
// GZ2..GZ6. Bundles are immutable; everything derivable is cross-validated at
// first access against the solvers, so a typo in one table cannot survive a
// test run.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/filtration.hpp"
#include "pfl/lattice.hpp"
#include "pfl/model.hpp"
#include "pfl/spectral.hpp"

namespace pfl {

struct CaseBundle {
    std::string id;
    std::optional<SpectralFamily> family;
    std::optional<CStarModel> model;
    std::optional<CoreLattice> core;

    // cross-check and companion data
    std::optional<std::array<long long, 3>> expected_weights; // (w_z, w_zeta, w_b)
    std::optional<RankMap> companion_floer;                   // middle-degree ranks from companion work
    std::map<Rational, std::vector<std::string>> basis_hints; // slope -> class labels
    std::optional<PwKind> pw_kind;
    bool pw_strict = false;   // perverse-type profile strictly finer than F and M
    bool coincide = false;    // all three filtrations coincide
    bool painleve = false;
    bool parabolic = false;
    std::optional<std::string> table1_numeral;

    bool has_action() const { return !family || family->singular_fiber_count <= 1; }
};

namespace detail {

inline SpectralTerm unit(int zeta, int z, int dz) { return {Coeff::Unit, zeta, z, dz}; }
inline SpectralTerm param(int zeta, int z, int dz) { return {Coeff::Param, zeta, z, dz}; }

inline SpectralFamily family(int r, std::vector<SpectralTerm> terms, std::vector<std::string> fixed = {},
                             int singular_fibers = 1) {
    SpectralFamily f;
    f.fiber_degree = r;
    f.terms = std::move(terms);
    f.z_fixed_points = std::move(fixed);
    f.singular_fiber_count = singular_fibers;
    return f;
}

inline FixedComponent point(const std::string& name, std::map<int, int> weights, bool is_min = false) {
    FixedComponent c;
    c.name = name;
    c.dim_c = 0;
    c.betti = {1};
    c.weights = std::move(weights);
    c.is_min = is_min;
    return c;
}

inline FixedComponent curve(const std::string& name, std::vector<int> betti, std::map<int, int> weights,
                            bool is_min = false) {
    FixedComponent c;
    c.name = name;
    c.dim_c = 1;
    c.betti = std::move(betti);
    c.weights = std::move(weights);
    c.is_min = is_min;
    return c;
}

inline CStarModel model_pi() {
    CStarModel m;
    m.components = {point("F0", {{2, 1}, {3, 1}}, true), point("F1", {{-1, 1}, {6, 1}})};
    m.rays = {{"F0", 2, false}, {"F0", 3, false}, {"F1", 6, true}};
    m.s_omega = 5;
    m.w_b = 6;
    m.core_label = "II";
    return m;
}

inline CStarModel model_pii() {
    CStarModel m;
    m.components = {point("F0", {{1, 1}, {2, 1}}, true), point("F1", {{-1, 1}, {4, 1}}),
                    point("F2", {{-1, 1}, {4, 1}})};
    m.rays = {{"F0", 2, false}, {"F1", 4, true}, {"F2", 4, false}};
    m.s_omega = 3;
    m.w_b = 4;
    m.core_label = "III";
    return m;
}

inline CStarModel model_piv() {
    CStarModel m;
    m.components = {point("F0", {{1, 2}}, true), point("F1", {{-1, 1}, {3, 1}}),
                    point("F2", {{-1, 1}, {3, 1}}), point("F3", {{-1, 1}, {3, 1}})};
    m.rays = {{"F1", 3, true}, {"F2", 3, false}, {"F3", 3, false}};
    m.s_omega = 2;
    m.w_b = 3;
    m.core_label = "IV";
    return m;
}

inline CStarModel model_pvi() {
    CStarModel m;
    m.components = {curve("F0", {1, 0, 1}, {{1, 1}}, true), point("F1", {{-1, 1}, {2, 1}}),
                    point("F2", {{-1, 1}, {2, 1}}), point("F3", {{-1, 1}, {2, 1}}),
                    point("F4", {{-1, 1}, {2, 1}})};
    m.rays = {{"F1", 2, true}, {"F2", 2, false}, {"F3", 2, false}, {"F4", 2, false}};
    m.s_omega = 1;
    m.w_b = 2;
    m.core_label = "I0*";
    return m;
}

inline CStarModel model_g0() {
    CStarModel m;
    m.components = {curve("E", {1, 2, 1}, {{1, 1}}, true)};
    m.rays = {{"E", 1, false}};
    m.s_omega = 1;
    m.w_b = 1;
    m.core_label = "Elliptic";
    return m;
}

inline RankMap rank_map(std::initializer_list<std::pair<Rational, int>> steps) {
    RankMap m;
    for (const auto& [l, r] : steps) m[l] = r;
    return m;
}

// Companion-work rank map for a quotient case: at k/|G| the rank counts the
// fiber components of multiplicity <= k, which is the multiplicity rank map.
inline RankMap companion_map(const CoreLattice& core) {
    return multiplicity_filtration(core);
}

inline std::vector<CaseBundle> build_catalog() {
    std::vector<CaseBundle> cases;

    {
        CaseBundle b;
        b.id = "PI";
        b.family = family(2, {unit(2, 0, 0), unit(0, -7, 2), param(0, -4, 2)});
        b.model = model_pi();
        b.core = core_lattice("II");
        b.expected_weights = {{-2, 5, 6}};
        b.pw_kind = PwKind::Trivial;
        b.painleve = true;
        b.table1_numeral = "I";
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "PII";
        b.family = family(2, {unit(2, 0, 0), unit(0, -8, 2), param(0, -4, 2)});
        b.model = model_pii();
        b.core = core_lattice("III");
        b.expected_weights = {{-1, 3, 4}};
        b.pw_kind = PwKind::TwoStepRankTwo;
        b.pw_strict = true;
        b.painleve = true;
        b.table1_numeral = "II";
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "PIIFN"; // full-nilpotent form of PII: same action geometry
        b.family = family(2, {unit(2, 0, 0), unit(0, -5, 2), param(0, -3, 2)});
        b.model = model_pii();
        b.core = core_lattice("III");
        b.expected_weights = {{-2, 3, 4}};
        b.pw_kind = PwKind::TwoStepRankTwo;
        b.pw_strict = true;
        b.painleve = true;
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "PIII"; // two singular fibers: no one-parameter action survives
        b.family = family(2, {}, {}, 2);
        b.painleve = true;
        b.table1_numeral = "III";
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "PIV";
        b.family = family(2, {unit(2, 0, 0), unit(0, -6, 2), param(0, -3, 2)});
        b.model = model_piv();
        b.core = core_lattice("IV");
        b.expected_weights = {{-1, 2, 3}};
        b.pw_kind = PwKind::TwoStepUnknownMiddle;
        b.pw_strict = true;
        b.painleve = true;
        b.table1_numeral = "IV";
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "PV";
        b.family = family(2, {}, {}, 2);
        b.painleve = true;
        b.table1_numeral = "V";
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "PVI";
        b.family = family(2, {unit(2, 0, 0), param(0, -3, 2)}, {"0", "1", "t", "inf"});
        b.model = model_pvi();
        b.core = core_lattice("I0*");
        b.expected_weights = {{0, 1, 2}};
        b.basis_hints[Rational(1, 2)] = {"[E_1]", "[E_2]", "[E_3]", "[E_4]"};
        b.pw_kind = PwKind::ParabolicCentral;
        b.coincide = true;
        b.painleve = true;
        b.parabolic = true;
        b.table1_numeral = "VI";
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "G0"; // cotangent bundle of an elliptic curve
        b.model = model_g0();
        b.core = core_lattice("Elliptic");
        b.companion_floer = companion_map(*b.core);
        b.pw_kind = PwKind::Trivial;
        b.parabolic = true;
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "GZ2"; // the Z/2 quotient case is the sixth Painleve space
        b.family = family(2, {unit(2, 0, 0), param(0, -3, 2)}, {"0", "1", "t", "inf"});
        b.model = model_pvi();
        b.core = core_lattice("I0*");
        b.expected_weights = {{0, 1, 2}};
        b.basis_hints[Rational(1, 2)] = {"[E_1]", "[E_2]", "[E_3]", "[E_4]"};
        b.pw_kind = PwKind::ParabolicCentral;
        b.coincide = true;
        b.parabolic = true;
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "GZ3";
        b.core = core_lattice("IV*");
        b.companion_floer = companion_map(*b.core);
        b.pw_kind = PwKind::ParabolicCentral;
        b.parabolic = true;
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "GZ4";
        b.core = core_lattice("III*");
        b.companion_floer = companion_map(*b.core);
        b.pw_kind = PwKind::ParabolicCentral;
        b.parabolic = true;
        cases.push_back(std::move(b));
    }
    {
        CaseBundle b;
        b.id = "GZ6";
        b.core = core_lattice("II*");
        b.companion_floer = companion_map(*b.core);
        b.pw_kind = PwKind::ParabolicCentral;
        b.parabolic = true;
        cases.push_back(std::move(b));
    }
    return cases;
}

inline bool betti_trim_equal(const std::vector<int>& a, const std::vector<int>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y) return false;
    }
    return true;
}

// Consistency of one bundle's independent data sources with each other.
inline std::vector<std::string> cross_validate(const CaseBundle& b) {
    std::vector<std::string> issues;
    if (b.family) {
        for (const auto& s : validate_family(*b.family)) issues.push_back(b.id + ": " + s);
        auto res = solve_weights(*b.family);
        if (b.expected_weights) {
            const auto* w = std::get_if<ActionWeights>(&res);
            if (!w) {
                issues.push_back(b.id + ": solver found no action but weights are on record");
            } else {
                auto [wz, wzeta, wb] = *b.expected_weights;
                if (w->w_z != wz || w->w_zeta != wzeta || w->w_b != wb)
                    issues.push_back(b.id + ": solved weights disagree with recorded weights");
                if (!verify_equivariance(*b.family, *w).ok)
                    issues.push_back(b.id + ": solved weights are not equivariant");
                if (b.model && (b.model->w_b != w->w_b || b.model->s_omega != w->s_omega))
                    issues.push_back(b.id + ": model weights disagree with solved weights");
            }
        }
    }
    if (b.model) {
        for (const auto& s : validate_model(*b.model)) issues.push_back(b.id + ": " + s);
        if (b.core) {
            if (b.model->core_label != b.core->label)
                issues.push_back(b.id + ": model core label disagrees with bundled lattice");
            if (!betti_trim_equal(frankel_betti(*b.model), b.core->betti))
                issues.push_back(b.id + ": fixed-locus Betti numbers disagree with core Betti numbers");
        }
    }
    if (b.core)
        for (const auto& s : validate_lattice(*b.core)) issues.push_back(b.id + ": " + s);
    return issues;
}

inline const std::vector<CaseBundle>& catalog() {
    static const std::vector<CaseBundle> cases = [] {
        auto c = build_catalog();
        for (const auto& b : c) {
            auto issues = cross_validate(b);
            if (!issues.empty()) throw Error("catalog cross-validation failed: " + issues.front());
        }
        return c;
    }();
    return cases;
}

} // namespace detail

inline const CaseBundle& get_case(const std::string& id) {
    for (const auto& b : detail::catalog())
        if (b.id == id) return b;
    throw UnknownCase("unknown case id '" + id + "'");
}

inline std::vector<std::string> list_cases(const std::string& filter = "") {
    std::vector<std::string> out;
    for (const auto& b : detail::catalog()) {
        if (filter == "painleve" && !b.painleve) continue;
        if (filter == "parabolic" && !b.parabolic) continue;
        if (filter == "has_action" && !b.has_action()) continue;
        if (!filter.empty() && filter != "painleve" && filter != "parabolic" && filter != "has_action")
            throw InvalidInput("unknown filter '" + filter + "'");
        out.push_back(b.id);
    }
    return out;
}

// Middle-degree Floer rank map and its provenance. Falls back to companion
// rank data when the model's profile assembly is out of scope (odd-degree
// cohomology, as for an abelian fibre).
inline std::pair<RankMap, std::string> floer_rank_map(const CaseBundle& b) {
    if (b.model) {
        try {
            FiltrationProfile p = assemble_filtration(*b.model);
            RankMap m;
            for (const auto& j : p.jumps) {
                auto it = j.cumulative.find(2);
                if (it != j.cumulative.end() && (m.empty() || m.rbegin()->second != it->second))
                    m[j.lambda] = it->second;
            }
            return {m, "computed"};
        } catch (const UnsupportedCase&) {
            if (!b.companion_floer) throw;
        }
    }
    if (b.companion_floer) return {*b.companion_floer, "companion-work data"};
    throw UnsupportedCase(b.id + ": no fixed-locus model and no companion rank data");
}

inline FiltrationComparison compare_filtrations(const std::string& id) {
    const CaseBundle& b = get_case(id);
    if (!b.has_action()) throw UnsupportedCase(id + ": no torus action, nothing to compare");
    if (!b.core || !b.pw_kind) throw UnsupportedCase(id + ": no fiber lattice data");
    FiltrationComparison c;
    c.case_id = id;
    auto [fmap, src] = floer_rank_map(b);
    c.floer = std::move(fmap);
    c.floer_source = src;
    c.mult = multiplicity_filtration(*b.core);
    c.pw = pw_profile(*b.pw_kind, *b.core);
    c.rankwise_equal_fm = true;
    if (b.painleve) {
        c.pw_refines_floer = true;
        c.pw_refines_mult = true;
        c.pw_strictly_finer = b.pw_strict;
    }
    if (b.parabolic) {
        c.floer_refines_pw = true;
        c.mult_refines_pw = true;
    }
    c.coincide_all = b.coincide;
    return c;
}

} // namespace pfl
