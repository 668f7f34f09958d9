#pragma once

// Degenerate-fiber lattices, affine Dynkin diagrams, and the multiplicity
// side of the filtration comparison.
//
// The affine diagrams are stored as star shapes (arms hanging off a center):
// D4~ = four arms of length 1, E6~ = three arms of length 2, E7~ = arms
// (3,3,1), E8~ = arms (5,2,1); A0~ degenerates to one vertex with Cartan
// matrix (0). Component multiplicities of the corresponding fibers are the
// labels of the imaginary root: the primitive positive generator of the
// Cartan matrix kernel, which is also the kernel of the negated intersection
// matrix. Refinement of filtrations is checked at the level of rank values
// only; subspaces are not part of the data and every report says so.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/int_matrix.hpp"
#include "pfl/rational.hpp"

namespace pfl {

struct CoreLattice {
    std::string label;                      // "II", "III", "IV", "I0*", "IV*", "III*", "II*", "A1^-" style fiber name
    std::vector<std::string> component_names;
    IntMatrix intersection;                 // symmetric; intersection * multiplicities = 0
    std::vector<Int> multiplicities;        // primitive positive kernel generator
    std::optional<std::string> central;     // vertex of maximal multiplicity for star fibers
    std::vector<int> betti;                 // H^* of the core as a topological space
};

namespace dynkin {

struct Diagram {
    std::string label;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    std::optional<int> central;
};

inline Diagram star(const std::string& label, const std::vector<int>& arm_lengths) {
    Diagram d;
    d.label = label;
    d.names.push_back("E0");
    d.central = 0;
    int next = 1;
    for (size_t a = 0; a < arm_lengths.size(); ++a) {
        int prev = 0;
        for (int i = 0; i < arm_lengths[a]; ++i) {
            d.names.push_back("E" + std::to_string(next));
            d.edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return d;
}

inline Diagram diagram(const std::string& label) {
    if (label == "A0~") {
        Diagram d;
        d.label = label;
        d.names = {"E0"};
        return d;
    }
    if (label == "D4~") return star(label, {1, 1, 1, 1});
    if (label == "E6~") return star(label, {2, 2, 2});
    if (label == "E7~") return star(label, {3, 3, 1});
    if (label == "E8~") return star(label, {5, 2, 1});
    throw UnknownLabel("unknown affine Dynkin label '" + label + "'");
}

} // namespace dynkin

// Cartan matrix from the adjacency data: 2 on the diagonal, -1 per edge.
// A0~ carries the degenerate 1x1 matrix (0) (its vertex has a self-loop).
inline IntMatrix cartan_matrix(const std::string& dynkin_label) {
    auto d = dynkin::diagram(dynkin_label);
    int n = static_cast<int>(d.names.size());
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    if (dynkin_label == "A0~") c.at(0, 0) = 0;
    for (auto [i, j] : d.edges) {
        c.at(i, j) = -1;
        c.at(j, i) = -1;
    }
    return c;
}

// Imaginary root: primitive positive generator of the Cartan kernel.
inline std::vector<Int> imaginary_root(const std::string& dynkin_label) {
    return primitive_positive_generator(cartan_matrix(dynkin_label));
}

// Component multiplicities of a degenerate fiber, extracted from its
// intersection lattice: the radical is one-dimensional for fiber lattices and
// its positive generator carries the multiplicities.
inline std::vector<Int> multiplicities_from_lattice(const IntMatrix& intersection) {
    return primitive_positive_generator(intersection);
}

namespace detail {

inline CoreLattice tree_core(const std::string& fiber_label, const std::string& dynkin_label) {
    auto d = dynkin::diagram(dynkin_label);
    CoreLattice c;
    c.label = fiber_label;
    c.component_names = d.names;
    IntMatrix cart = cartan_matrix(dynkin_label);
    c.intersection = IntMatrix(cart.rows, cart.cols);
    for (int i = 0; i < cart.rows; ++i)
        for (int j = 0; j < cart.cols; ++j) c.intersection.at(i, j) = -cart.at(i, j);
    c.multiplicities = multiplicities_from_lattice(c.intersection);
    if (d.central) c.central = d.names[static_cast<size_t>(*d.central)];
    c.betti = {1, 0, static_cast<int>(d.names.size())};
    return c;
}

} // namespace detail

// Intersection lattices of the degenerate fibers appearing as cores.
inline CoreLattice core_lattice(const std::string& label) {
    CoreLattice c;
    c.label = label;
    if (label == "II") { // one cuspidal rational curve, a topological sphere
        c.component_names = {"E0"};
        c.intersection = IntMatrix{{0}};
        c.multiplicities = {Int(1)};
        c.betti = {1, 0, 1};
        return c;
    }
    if (label == "III") { // two spheres meeting tangentially
        c.component_names = {"E0", "E1"};
        c.intersection = IntMatrix{{-2, 2}, {2, -2}};
        c.multiplicities = multiplicities_from_lattice(c.intersection);
        c.betti = {1, 0, 2};
        return c;
    }
    if (label == "IV") { // three spheres through one point
        c.component_names = {"E0", "E1", "E2"};
        c.intersection = IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}};
        c.multiplicities = multiplicities_from_lattice(c.intersection);
        c.betti = {1, 0, 3};
        return c;
    }
    if (label == "I0*") return detail::tree_core(label, "D4~");
    if (label == "IV*") return detail::tree_core(label, "E6~");
    if (label == "III*") return detail::tree_core(label, "E7~");
    if (label == "II*") return detail::tree_core(label, "E8~");
    if (label == "Elliptic") { // smooth elliptic fiber
        c.component_names = {"E0"};
        c.intersection = IntMatrix{{0}};
        c.multiplicities = {Int(1)};
        c.betti = {1, 2, 1};
        return c;
    }
    throw UnknownLabel("unknown fiber label '" + label + "'");
}

inline std::vector<std::string> validate_lattice(const CoreLattice& c) {
    std::vector<std::string> issues;
    if (!c.intersection.is_symmetric()) issues.push_back(c.label + ": intersection matrix not symmetric");
    if (static_cast<int>(c.component_names.size()) != c.intersection.rows)
        issues.push_back(c.label + ": component names do not match matrix size");
    if (c.multiplicities.size() != static_cast<size_t>(c.intersection.rows))
        issues.push_back(c.label + ": multiplicity vector does not match matrix size");
    else {
        for (const auto& v : c.intersection.apply(c.multiplicities))
            if (v != 0) {
                issues.push_back(c.label + ": multiplicities are not in the radical");
                break;
            }
        Int g = 0;
        for (const auto& x : c.multiplicities) {
            g = boost::multiprecision::gcd(g, x);
            if (x <= 0) issues.push_back(c.label + ": nonpositive multiplicity");
        }
        if (g != 1) issues.push_back(c.label + ": multiplicities not primitive");
    }
    return issues;
}

// Rank map of the multiplicity filtration: lambda -> #{ i : m_i / m <= lambda }
// recorded at each distinct normalized multiplicity.
inline std::map<Rational, int> multiplicity_filtration(const CoreLattice& c) {
    Int mmax = 0;
    for (const auto& m : c.multiplicities) mmax = std::max(mmax, m);
    if (mmax <= 0) throw InvalidInput("fiber has no positive multiplicities");
    std::map<Rational, int> out;
    std::vector<Int> sorted = c.multiplicities;
    std::sort(sorted.begin(), sorted.end());
    int count = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        ++count;
        if (i + 1 == sorted.size() || sorted[i + 1] != sorted[i]) out[Rational(sorted[i], mmax)] = count;
    }
    return out;
}

// Perverse-type profile of a case: ordered ranks of the filtration steps on
// middle cohomology. A step may be unknown (recorded, never used in an
// assertion).
struct PwProfile {
    std::vector<std::optional<int>> steps;
};

enum class PwKind {
    Trivial,              // single step, full middle rank
    TwoStepRankTwo,       // rank-2 middle cohomology: the chain (1, 2)
    TwoStepUnknownMiddle, // two steps, intermediate rank not pinned by available data
    ParabolicCentral      // (N-1, N): all components except the central one, then all
};

inline PwProfile pw_profile(PwKind kind, const CoreLattice& core) {
    int n = static_cast<int>(core.multiplicities.size());
    PwProfile p;
    switch (kind) {
        case PwKind::Trivial: p.steps = {n}; break;
        case PwKind::TwoStepRankTwo: p.steps = {1, 2}; break;
        case PwKind::TwoStepUnknownMiddle: p.steps = {std::nullopt, n}; break;
        case PwKind::ParabolicCentral:
            if (!core.central) throw UnsupportedCase(core.label + ": no central component");
            p.steps = {n - 1, n};
            break;
    }
    return p;
}

// ----- comparison of rank maps -------------------------------------------

using RankMap = std::map<Rational, int>; // slope -> cumulative rank, strictly increasing values

inline std::vector<int> rank_sequence(const RankMap& m) {
    std::vector<int> out;
    for (const auto& [l, r] : m)
        if (out.empty() || out.back() != r) out.push_back(r);
    return out;
}

inline std::vector<std::optional<int>> rank_sequence(const PwProfile& p) {
    std::vector<std::optional<int>> out(p.steps.begin(), p.steps.end());
    return out;
}

// Same chain of rank values; additionally pointwise equal when the maps share
// their jump set.
inline bool rankwise_equal(const RankMap& a, const RankMap& b) {
    if (rank_sequence(a) != rank_sequence(b)) return false;
    auto keys = [](const RankMap& m) {
        std::vector<Rational> k;
        for (const auto& [l, r] : m) k.push_back(l);
        return k;
    };
    if (keys(a) == keys(b)) {
        for (const auto& [l, r] : a)
            if (b.at(l) != r) return false;
    }
    return true;
}

// Every rank value of the coarser chain appears in the finer chain. Unknown
// steps can never witness containment.
inline bool refines(const std::vector<std::optional<int>>& finer, const std::vector<std::optional<int>>& coarser) {
    for (const auto& c : coarser) {
        if (!c) continue; // unknown coarse steps impose nothing
        bool found = false;
        for (const auto& f : finer) found = found || (f && *f == *c);
        if (!found) return false;
    }
    return true;
}

inline std::vector<std::optional<int>> as_optional_sequence(const RankMap& m) {
    std::vector<std::optional<int>> out;
    for (int r : rank_sequence(m)) out.emplace_back(r);
    return out;
}

struct FiltrationComparison {
    std::string case_id;
    RankMap floer;        // middle-degree Floer rank map
    std::string floer_source; // "computed" or "companion-work data"
    RankMap mult;         // multiplicity rank map
    PwProfile pw;
    bool pw_refines_floer = false; // Painleve direction
    bool pw_refines_mult = false;
    bool pw_strictly_finer = false;
    bool floer_refines_pw = false; // parabolic direction
    bool mult_refines_pw = false;
    bool rankwise_equal_fm = false;
    bool coincide_all = false;

    // Re-derive every asserted relation from the stored rank maps; reports
    // run this before printing.
    std::vector<std::string> verify() const {
        std::vector<std::string> bad;
        auto fs = as_optional_sequence(floer);
        auto ms = as_optional_sequence(mult);
        auto ps = rank_sequence(pw);
        if (rankwise_equal_fm != rankwise_equal(floer, mult)) bad.push_back("RankwiseEqual(F,M)");
        if (pw_refines_floer && !refines(ps, fs)) bad.push_back("Refines(PW,F)");
        if (pw_refines_mult && !refines(ps, ms)) bad.push_back("Refines(PW,M)");
        if (floer_refines_pw && !refines(fs, ps)) bad.push_back("Refines(F,PW)");
        if (mult_refines_pw && !refines(ms, ps)) bad.push_back("Refines(M,PW)");
        if (pw_strictly_finer && !(ps.size() > ms.size() && ps.size() > fs.size()))
            bad.push_back("strictness of PW");
        if (coincide_all) {
            bool same = rankwise_equal(floer, mult) && floer == mult;
            std::vector<std::optional<int>> fo = fs;
            same = same && (ps == fo);
            if (!same) bad.push_back("Coincide(F,M,PW)");
        }
        return bad;
    }
};

} // namespace pfl
