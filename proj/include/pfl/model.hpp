#pragma once

// Fixed-locus data of a contracting C*-action on a holomorphic symplectic
// surface-fibration total space.
//
// Each fixed component F carries the weight decomposition of the normal
// bundle, as a multiset of nonzero integers; the tangent H_0 block of a
// positive-dimensional component is implicit (its dimension is dim_C F).
// The symplectic pairing identifies H_k with the dual of H_{s-k}, s the
// symplectic-form weight, hence dim H_k = dim H_{s-k}. Flowlines that leave
// the core along an isolated weight-w direction are recorded as outer rays;
// their reparametrized circle periods are the fractions j/w.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/rational.hpp"

namespace pfl {

struct FixedComponent {
    std::string name;
    int dim_c = 0;                       // complex dimension of the component
    std::vector<int> betti;              // b_0 .. b_{2 dim_c}
    std::map<int, int> weights;          // nonzero weight -> multiplicity
    bool is_min = false;                 // the component every point flows into as t -> 0

    int weight_multiplicity(int k) const {
        if (k == 0) return dim_c;        // tangent block
        auto it = weights.find(k);
        return it == weights.end() ? 0 : it->second;
    }
    int normal_dim() const {
        int n = 0;
        for (const auto& [k, m] : weights) n += m;
        return n;
    }
    int negative_count() const {
        int n = 0;
        for (const auto& [k, m] : weights)
            if (k < 0) n += m;
        return n;
    }
    int betti_at(int d) const {
        return (d >= 0 && d < static_cast<int>(betti.size())) ? betti[static_cast<size_t>(d)] : 0;
    }
};

struct OuterRay {
    std::string base;          // name of the fixed component the ray converges to
    int weight = 1;            // positive weight of the escaping direction
    bool hitchin_section = false;
};

struct CStarModel {
    int dim_c = 2;                       // complex dimension of the total space
    std::vector<FixedComponent> components;
    std::vector<OuterRay> rays;
    Int s_omega = 1;                     // symplectic-form weight
    Int w_b = 1;                         // base-parameter weight; every ray weight divides it
    std::string core_label;              // degenerate-fiber type of the core

    const FixedComponent& component(const std::string& name) const {
        for (const auto& c : components)
            if (c.name == name) return c;
        throw InvalidInput("no fixed component named '" + name + "'");
    }
    const FixedComponent& minimal() const {
        for (const auto& c : components)
            if (c.is_min) return c;
        throw InvalidInput("model has no minimal component");
    }
};

// Structural validation. Returns human-readable violations; empty means valid.
inline std::vector<std::string> validate_model(const CStarModel& m) {
    std::vector<std::string> issues;
    int mins = 0;
    for (const auto& c : m.components) {
        if (c.dim_c + c.normal_dim() != m.dim_c)
            issues.push_back(c.name + ": tangent+normal dimensions do not fill the ambient dimension");
        if (static_cast<int>(c.betti.size()) != 2 * c.dim_c + 1)
            issues.push_back(c.name + ": betti vector must have length 2*dim_c+1");
        bool all_positive = true;
        for (const auto& [k, mult] : c.weights) {
            if (k == 0) issues.push_back(c.name + ": zero normal weight");
            if (mult <= 0) issues.push_back(c.name + ": nonpositive weight multiplicity");
            if (k < 0) all_positive = false;
            // symplectic pairing H_k ~ H_{s-k}^dual
            long long partner = static_cast<long long>(num(m.s_omega).convert_to<long long>()) - k;
            int dk = c.weight_multiplicity(k);
            int dp = c.weight_multiplicity(static_cast<int>(partner));
            if (dk != dp)
                issues.push_back(c.name + ": pairing fails at weight " + std::to_string(k) + " (dim " +
                                 std::to_string(dk) + " vs dim " + std::to_string(dp) + " at weight " +
                                 std::to_string(partner) + ")");
        }
        if (c.dim_c > 0) {
            // the tangent block pairs with weight s
            long long s = num(m.s_omega).convert_to<long long>();
            if (c.weight_multiplicity(static_cast<int>(s)) != c.dim_c)
                issues.push_back(c.name + ": tangent block does not pair with weight " + std::to_string(s));
        }
        if (c.is_min) {
            ++mins;
            if (!all_positive) issues.push_back(c.name + ": minimal component has a negative weight");
        } else if (all_positive && c.normal_dim() > 0) {
            issues.push_back(c.name + ": all weights positive but not marked minimal");
        }
    }
    if (mins != 1) issues.push_back("model must have exactly one minimal component");
    for (const auto& r : m.rays) {
        bool found = false;
        for (const auto& c : m.components) found = found || c.name == r.base;
        if (!found) issues.push_back("ray based at unknown component '" + r.base + "'");
        if (r.weight <= 0) issues.push_back("ray weight must be positive");
        else if (m.w_b % r.weight != 0)
            issues.push_back("ray weight " + std::to_string(r.weight) + " does not divide w_b " + rat_str(Rational(m.w_b)));
    }
    return issues;
}

// Morse-Bott index: twice the number of negative normal weights.
inline int morse_bott_index(const FixedComponent& c) { return 2 * c.negative_count(); }

// Degree-k cohomology rank of the total space from the fixed-locus
// decomposition: H^k(Y) = sum_alpha H^{k - mu_alpha}(F_alpha).
inline std::vector<int> frankel_betti(const CStarModel& m) {
    std::vector<int> out(static_cast<size_t>(2 * m.dim_c + 1), 0);
    for (const auto& c : m.components) {
        int mu = morse_bott_index(c);
        for (int d = 0; d <= 2 * c.dim_c; ++d) {
            int deg = d + mu;
            if (deg >= 0 && deg < static_cast<int>(out.size())) out[static_cast<size_t>(deg)] += c.betti_at(d);
        }
    }
    return out;
}

// Ascending circle periods j/w, one entry per distinct value <= t_max.
inline std::vector<Rational> outer_periods(const CStarModel& m, const Rational& t_max) {
    std::vector<Rational> out;
    for (const auto& r : m.rays) {
        for (Int j = 1; Rational(j, r.weight) <= t_max; ++j) out.push_back(Rational(j, r.weight));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Smallest period after lambda (periods are unbounded, so this always exists
// when the model has at least one ray).
inline std::optional<Rational> next_outer_period(const CStarModel& m, const Rational& lambda) {
    std::optional<Rational> best;
    for (const auto& r : m.rays) {
        Int j = rat_floor(lambda * r.weight) + 1;
        Rational cand(j, r.weight);
        if (cand <= lambda) cand = Rational(j + 1, r.weight);
        if (!best || cand < *best) best = cand;
    }
    return best;
}

// Below 1/(largest weight of the minimal component) the filtration cannot meet
// the minimal component's cohomology.
inline Rational lambda_min(const CStarModel& m) {
    const FixedComponent& f = m.minimal();
    Int biggest = 0;
    for (const auto& [k, mult] : f.weights) {
        Int a = k < 0 ? Int(-k) : Int(k);
        if (a > biggest) biggest = a;
    }
    if (biggest == 0) throw InvalidInput("minimal component has no normal weights");
    return Rational(1, biggest);
}

} // namespace pfl
