#pragma once

// Filtration ranks from fixed-locus data.
//
// Everything here rests on the half-integer step function
//
//     W(x) = 2 floor(x) + 1   for x not an integer,
//     W(x) = 2 x              for integer x,
//
// and on the index of a fixed component F at slope lambda,
//
//     mu_lambda(F) = dim_C Y - dim_C F - sum_k dim(H_k) W(lambda k),
//
// the sum running over the normal weight decomposition. Slopes are evaluated
// either exactly or "just past" lambda: the one-sided value mu_{lambda+} is
// mu at lambda + delta for infinitesimal delta > 0, realized exactly by
// nudging every argument lambda*k in the direction of k's sign whenever it
// lands on an integer.
//
// The rank of the filtration on H^k at slope lambda is bounded below by
//
//     sum_alpha max(0, b_{k - mu_alpha}(F) - b_{k - mu_lambda(F)}(F)),
//
// out-of-range Betti numbers read as zero, and above by the total rank minus
// the minimal component's contribution while lambda < lambda_min (valid for
// evenly supported cohomology), with H^0 additionally pinned to enter exactly
// at the unit-entry slope when that slope is defined (2 when s = 1; 1 when
// s = 2 and the minimal component is a point). Ranks can only jump at outer
// circle periods or at the unit-entry slope, so scanning those candidates
// until every degree reaches its total rank assembles the whole profile.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/model.hpp"
#include "pfl/rational.hpp"

namespace pfl {

enum class Limit { Exact, Above, Below };

// W at x, or at x +/- epsilon for the one-sided variants.
inline Int step_w(const Rational& x, Limit side = Limit::Exact) {
    if (is_integer(x)) {
        Int n = num(x);
        switch (side) {
            case Limit::Exact: return 2 * n;
            case Limit::Above: return 2 * n + 1;
            case Limit::Below: return 2 * n - 1;
        }
    }
    return 2 * rat_floor(x) + 1;
}

// mu_lambda(F); right_limit selects the one-sided value mu_{lambda+}.
inline Int floer_index(const CStarModel& m, const FixedComponent& c, const Rational& lambda,
                       bool right_limit = true) {
    Int idx = Int(m.dim_c) - Int(c.dim_c);
    for (const auto& [k, mult] : c.weights) {
        Limit side = Limit::Exact;
        if (right_limit) side = k > 0 ? Limit::Above : Limit::Below;
        idx -= Int(mult) * step_w(lambda * k, side);
    }
    return idx;
}

// Lower bound for the rank of the slope-lambda filtration on H^k, evaluated
// one-sided at lambda+.
inline int rank_lower_bound(const CStarModel& m, const Rational& lambda, int degree) {
    int bound = 0;
    for (const auto& c : m.components) {
        int mu0 = morse_bott_index(c);
        long long mu = floer_index(m, c, lambda, true).convert_to<long long>();
        int lo = c.betti_at(degree - mu0);
        int hi = (mu >= degree - 2 * c.dim_c && mu <= degree)
                     ? c.betti_at(degree - static_cast<int>(mu))
                     : 0;
        bound += std::max(0, lo - hi);
    }
    return bound;
}

// Slope at which the unit 1 in H^0 enters the filtration, when the geometry
// pins it: 2 for s_omega = 1, 1 for s_omega = 2 with point minimum.
inline std::optional<Rational> unit_entry(const CStarModel& m) {
    if (m.s_omega == 1) return Rational(2);
    if (m.s_omega == 2 && m.minimal().dim_c == 0) return Rational(1);
    return std::nullopt;
}

struct Bounds {
    int lower = 0;
    int upper = 0;
    bool determined() const { return lower == upper; }
};

struct FiltrationProfile {
    struct Jump {
        Rational lambda;
        std::map<int, int> increments; // degree -> rank gained at this slope
        std::map<int, int> cumulative; // degree -> rank at this slope
    };
    std::vector<Jump> jumps;
    // every candidate slope examined, with per-degree bounds (jump or not)
    std::vector<std::pair<Rational, std::map<int, Bounds>>> envelope;
    std::map<Rational, std::vector<std::string>> basis_hints;
    std::vector<int> total; // ambient Betti numbers, degree 0 .. 2 dim_c
    bool fully_determined = true;

    int rank_at(const Rational& lambda, int degree) const {
        int r = 0;
        for (const auto& j : jumps) {
            if (j.lambda > lambda) break;
            auto it = j.cumulative.find(degree);
            if (it != j.cumulative.end()) r = it->second;
        }
        return r;
    }
};

inline FiltrationProfile assemble_filtration(const CStarModel& m) {
    FiltrationProfile p;
    p.total = frankel_betti(m);
    for (size_t d = 0; d < p.total.size(); ++d)
        if (d % 2 == 1 && p.total[d] != 0)
            throw UnsupportedCase("cohomology has odd-degree classes; the minimal-component exclusion needs even support");
    if (m.rays.empty()) throw UnsupportedCase("model has no outer rays; no circle periods to scan");

    const Rational lmin = lambda_min(m);
    const std::optional<Rational> ue = unit_entry(m);
    const FixedComponent& fmin = m.minimal();

    std::vector<int> degrees;
    for (int d = 0; d < static_cast<int>(p.total.size()); d += 2) degrees.push_back(d);

    std::map<int, int> monotone_lower, current;
    for (int d : degrees) {
        monotone_lower[d] = 0;
        current[d] = 0;
    }

    Rational lambda(0);
    const int max_steps = 4096;
    for (int step = 0; step < max_steps; ++step) {
        auto next = next_outer_period(m, lambda);
        if (!next) break;
        Rational cand = *next;
        if (ue && *ue > lambda && *ue < cand) cand = *ue;
        lambda = cand;

        std::map<int, Bounds> row;
        std::map<int, int> inc;
        bool done = true;
        for (int d : degrees) {
            int raw = rank_lower_bound(m, lambda, d);
            int lower = std::max(monotone_lower[d], raw);
            int upper = p.total[static_cast<size_t>(d)];
            if (lambda < lmin) upper -= fmin.betti_at(d); // minimal component excluded below lambda_min
            if (ue && d == 0) {
                if (lambda < *ue) upper = 0;
                else lower = std::max(lower, 1); // the unit enters exactly here
            }
            if (lower > upper)
                throw InvalidInput("rank bounds cross at slope " + rat_str(lambda) + " in degree " +
                                   std::to_string(d) + "; model data is inconsistent");
            monotone_lower[d] = lower;
            Bounds b{lower, upper};
            row[d] = b;
            if (!b.determined()) p.fully_determined = false;
            int newly_determined = b.determined() ? lower : current[d];
            if (newly_determined > current[d]) {
                inc[d] = newly_determined - current[d];
                current[d] = newly_determined;
            }
            if (current[d] < p.total[static_cast<size_t>(d)]) done = false;
        }
        p.envelope.emplace_back(lambda, row);
        if (!inc.empty()) {
            FiltrationProfile::Jump j;
            j.lambda = lambda;
            j.increments = inc;
            j.cumulative = current;
            p.jumps.push_back(std::move(j));
        }
        if (done) break;
    }

    for (int d : degrees)
        if (current[d] != p.total[static_cast<size_t>(d)]) p.fully_determined = false;
    return p;
}

// (q, t)-generating polynomial: one term q^lambda t^degree per rank increment.
struct GeneratingPolynomial {
    struct Term {
        Rational q_exp;
        int t_exp = 0;
        int coeff = 0;
    };
    std::vector<Term> terms; // sorted by (t_exp, q_exp)

    // sum of coefficients in each t-degree; q = 1 recovers the Betti numbers
    std::map<int, int> specialize_q1() const {
        std::map<int, int> out;
        for (const auto& t : terms) out[t.t_exp] += t.coeff;
        return out;
    }
};

inline GeneratingPolynomial generating_polynomial(const FiltrationProfile& p) {
    if (!p.fully_determined)
        throw ProfileUndetermined("profile has undetermined entries; polynomial would be a guess");
    GeneratingPolynomial g;
    for (const auto& j : p.jumps)
        for (const auto& [deg, inc] : j.increments) g.terms.push_back({j.lambda, deg, inc});
    std::sort(g.terms.begin(), g.terms.end(), [](const auto& a, const auto& b) {
        if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
        return a.q_exp < b.q_exp;
    });
    return g;
}

// Table-style rendering: "q^{1/3} t^0 + q^{1/6} t^2", integer exponents
// unbraced, coefficient 1 omitted, multi-term t-groups parenthesized.
inline std::string render_polynomial(const GeneratingPolynomial& g) {
    if (g.terms.empty()) return "0";
    auto q_str = [](const Rational& e) {
        return is_integer(e) ? "q^" + rat_str(e) : "q^{" + rat_str(e) + "}";
    };
    std::string out;
    size_t i = 0;
    while (i < g.terms.size()) {
        size_t j = i;
        while (j < g.terms.size() && g.terms[j].t_exp == g.terms[i].t_exp) ++j;
        std::string group;
        for (size_t k = i; k < j; ++k) {
            if (k > i) group += " + ";
            if (g.terms[k].coeff != 1) group += std::to_string(g.terms[k].coeff) + " ";
            group += q_str(g.terms[k].q_exp);
        }
        if (!out.empty()) out += " + ";
        if (j - i > 1) group = "(" + group + ")";
        out += group + " t^" + std::to_string(g.terms[i].t_exp);
        i = j;
    }
    return out;
}

} // namespace pfl
