#pragma once

// First page of the Morse-Bott spectral sequence attached to the outer
// circle periods.
//
// At a fractional period T = k/n (lowest terms) the contributing manifolds
// are circles, one for each outer ray whose weight w satisfies T*w integral;
// the circle over a ray based at F sits in total degrees (shift, shift + 1)
// with
//
//     shift = codim_C(ray) - sum_i W(T * w_i) = 1 - sum_i W(T * w_i),
//
// the w_i running over the weights at the ray's convergence point and W
// evaluated exactly. At integer periods every outer orbit closes up, so the
// column carries the cohomology of the whole energy hypersurface B: for a
// total space with evenly-bounded support (H^k(Y) = 0 for k > n = dim_C Y),
//
//     H^k(B) = H^k(Y)                         for k <= n-2,
//     H^{n-1}(B) = H^n(B) = H^{n-1}(Y) (+) ker(intersection form on core),
//     H^k(B) = H^{2n-1-k}(Y)                  for k >= n+1.
//
// The figures those columns were drawn in are not part of the data here, so
// the integer column's vertical placement is reconstructed from the same
// index formula anchored at the Hitchin-section ray's convergence point; the
// rendering marks it as such. No differential is computed: the page offers a
// feasibility audit (a filtration jump in degree k needs some column at
// period <= lambda occupying total degree k-1), never a proof of collapse.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/filtration.hpp"
#include "pfl/int_matrix.hpp"
#include "pfl/lattice.hpp"
#include "pfl/model.hpp"

namespace pfl {

// Rays whose stabilizer contains Z/n, i.e. weight divisible by n.
inline std::vector<OuterRay> torsion_rays(const CStarModel& m, int n) {
    if (n < 2) throw InvalidInput("torsion order must be >= 2");
    std::vector<OuterRay> out;
    for (const auto& r : m.rays)
        if (r.weight % n == 0) out.push_back(r);
    return out;
}

struct E1Entry {
    enum class Kind { Circle, Hypersurface };
    Kind kind = Kind::Circle;
    std::string base;        // ray's convergence component (circles only)
    long long shift = 0;     // total degree of the lowest class
    std::vector<int> ranks;  // graded ranks upward from `shift`
};

struct E1Column {
    Rational period;
    std::vector<E1Entry> entries;
};

struct E1Page {
    std::vector<int> zero_column; // H^*(Y), degrees 0 .. 2 dim_c
    std::vector<E1Column> columns; // ascending period
    bool placement_reconstructed = false; // integer columns placed by the index formula
};

// Circle entries at a fractional period.
inline std::vector<E1Entry> circle_column(const CStarModel& m, const Rational& T) {
    if (T <= 0 || is_integer(T)) throw InvalidInput("circle periods are positive non-integers");
    std::vector<E1Entry> out;
    for (const auto& r : m.rays) {
        Rational tw = T * r.weight;
        if (!is_integer(tw) || tw <= 0) continue;
        const FixedComponent& base = m.component(r.base);
        Int shift = 1; // codim of an isolated ray in a surface-fibration total space
        for (const auto& [k, mult] : base.weights) shift -= Int(mult) * step_w(T * k, Limit::Exact);
        E1Entry e;
        e.kind = E1Entry::Kind::Circle;
        e.base = r.base;
        e.shift = shift.convert_to<long long>();
        e.ranks = {1, 1};
        out.push_back(std::move(e));
    }
    return out;
}

// H^*(B) of the energy hypersurface, valid for any energy level.
inline std::vector<int> hypersurface_cohomology(const CStarModel& m, const CoreLattice& core) {
    const int n = m.dim_c;
    std::vector<int> hy = frankel_betti(m);
    for (int k = n + 1; k < static_cast<int>(hy.size()); ++k)
        if (hy[static_cast<size_t>(k)] != 0)
            throw SupportHypothesisViolated("H^" + std::to_string(k) + "(Y) nonzero above degree " +
                                            std::to_string(n));
    int ker = static_cast<int>(integer_kernel(core.intersection).size());
    std::vector<int> out(static_cast<size_t>(2 * n), 0);
    for (int k = 0; k <= n - 2; ++k) out[static_cast<size_t>(k)] = hy[static_cast<size_t>(k)];
    int middle = (n - 1 >= 0 ? hy[static_cast<size_t>(n - 1)] : 0) + ker;
    if (n - 1 >= 0) out[static_cast<size_t>(n - 1)] = middle;
    out[static_cast<size_t>(n)] = middle;
    for (int k = n + 1; k <= 2 * n - 1; ++k) out[static_cast<size_t>(k)] = hy[static_cast<size_t>(2 * n - 1 - k)];
    return out;
}

namespace detail {

// Convergence point anchoring the integer columns: the Hitchin-section ray's
// base if flagged, the heaviest ray's base otherwise.
inline const FixedComponent& integer_column_anchor(const CStarModel& m) {
    const OuterRay* pick = nullptr;
    for (const auto& r : m.rays)
        if (r.hitchin_section) {
            pick = &r;
            break;
        }
    if (!pick)
        for (const auto& r : m.rays)
            if (!pick || r.weight > pick->weight) pick = &r;
    if (!pick) throw UnsupportedCase("model has no outer rays");
    return m.component(pick->base);
}

} // namespace detail

inline E1Page e1_page(const CStarModel& m, const CoreLattice& core, const Rational& t_max) {
    if (t_max <= 0) throw InvalidInput("t_max must be positive");
    E1Page page;
    page.zero_column = frankel_betti(m);
    std::vector<int> hyp = hypersurface_cohomology(m, core);
    const FixedComponent& anchor = detail::integer_column_anchor(m);

    for (const Rational& T : outer_periods(m, t_max)) {
        E1Column col;
        col.period = T;
        if (is_integer(T)) {
            Int shift = 0; // the hypersurface is all of B: codimension zero
            for (const auto& [k, mult] : anchor.weights) shift -= Int(mult) * step_w(T * k, Limit::Exact);
            E1Entry e;
            e.kind = E1Entry::Kind::Hypersurface;
            e.shift = shift.convert_to<long long>();
            e.ranks = hyp;
            col.entries.push_back(std::move(e));
            page.placement_reconstructed = true;
        } else {
            col.entries = circle_column(m, T);
        }
        page.columns.push_back(std::move(col));
    }
    return page;
}

// Alternating rank sum of one column (zero for every hypersurface column).
inline long long column_euler(const E1Column& col) {
    long long chi = 0;
    for (const auto& e : col.entries)
        for (size_t i = 0; i < e.ranks.size(); ++i) {
            long long deg = e.shift + static_cast<long long>(i);
            chi += (deg % 2 == 0 ? 1 : -1) * e.ranks[i];
        }
    return chi;
}

// Necessary condition for the profile to be explained by page differentials:
// a jump in degree k at slope lambda needs an entry of total degree k-1 in
// some column of period <= lambda. Returns the jumps that fail.
struct FeasibilityIssue {
    Rational lambda;
    int degree = 0;
};

inline std::vector<FeasibilityIssue> annihilation_feasibility(const E1Page& page,
                                                              const FiltrationProfile& profile) {
    std::vector<FeasibilityIssue> issues;
    for (const auto& j : profile.jumps)
        for (const auto& [deg, inc] : j.increments) {
            bool ok = false;
            for (const auto& col : page.columns) {
                if (col.period > j.lambda) break;
                for (const auto& e : col.entries) {
                    long long lo = e.shift;
                    long long hi = e.shift + static_cast<long long>(e.ranks.size()) - 1;
                    if (deg - 1 >= lo && deg - 1 <= hi &&
                        e.ranks[static_cast<size_t>(deg - 1 - lo)] > 0)
                        ok = true;
                }
            }
            if (!ok) issues.push_back({j.lambda, deg});
        }
    return issues;
}

} // namespace pfl
