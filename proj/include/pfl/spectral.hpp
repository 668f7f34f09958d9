#pragma once

// Torus-action weights on one-parameter spectral families.
//
// A family is a characteristic equation zeta^r + ... = 0 whose terms are
// Laurent monomials z^e (dz)^d times a power of the tautological one-form
// zeta, with coefficient either a fixed unit or the deformation parameter b.
// An action z -> t^{w_z} z, zeta -> t^{w_zeta} zeta, b -> t^{w_b} b rescales
// the term zeta^a z^e (dz)^d by a*w_zeta + (e+d)*w_z (dz carries weight w_z).
// Preserving the family means every unit term matches the monic term's weight
// r*w_zeta, which pins (w_z, w_zeta) up to scale; w_b is then forced by the
// parameter terms. The holomorphic symplectic form scales with the
// tautological one-form itself, so s_omega = w_zeta.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pfl/int_matrix.hpp"
#include "pfl/rational.hpp"

namespace pfl {

enum class Coeff { Unit, Param };

struct SpectralTerm {
    Coeff coeff = Coeff::Unit;
    int zeta_exp = 0;
    int z_exp = 0;
    int dz_power = 0;

    bool operator==(const SpectralTerm&) const = default;
};

struct SpectralFamily {
    int fiber_degree = 2;                   // r, the zeta-degree of the monic term
    std::vector<SpectralTerm> terms;
    std::vector<std::string> z_fixed_points; // base points that must stay fixed ("0", "1", "t", "inf")
    int singular_fiber_count = 1;

    bool operator==(const SpectralFamily&) const = default;
};

struct ActionWeights {
    Int w_z = 0;
    Int w_zeta = 1; // always >= 1
    Int w_b = 0;
    Int s_omega = 1; // = w_zeta

    bool operator==(const ActionWeights&) const = default;
};

struct NoAction {
    enum class Reason { TooManySingularFibers, Inconsistent };
    Reason reason = Reason::Inconsistent;
    std::string detail;
};

inline std::string to_string(NoAction::Reason r) {
    return r == NoAction::Reason::TooManySingularFibers ? "TooManySingularFibers" : "Inconsistent";
}

using WeightsResult = std::variant<ActionWeights, NoAction>;

inline bool is_finite_nonzero_point(const std::string& p) {
    return p != "0" && p != "inf" && p != "\xe2\x88\x9e"; // "∞"
}

// A one-dimensional scaling group on the base fixes only 0 and inf, so any
// other required fixed point kills the base weight.
inline bool forces_zero_base_weight(const SpectralFamily& f) {
    for (const auto& p : f.z_fixed_points)
        if (is_finite_nonzero_point(p)) return true;
    return false;
}

inline WeightsResult solve_weights(const SpectralFamily& f) {
    if (f.singular_fiber_count > 1)
        return NoAction{NoAction::Reason::TooManySingularFibers,
                        "family has " + std::to_string(f.singular_fiber_count) + " singular fibers"};

    const Int r = f.fiber_degree;
    // Rows of the homogeneous system A (w_zeta, w_z)^T = 0.
    std::vector<std::pair<Int, Int>> rows;
    for (const auto& t : f.terms) {
        if (t.coeff != Coeff::Unit) continue;
        Int a = Int(t.zeta_exp) - r;
        Int b = Int(t.z_exp) + Int(t.dz_power);
        if (a == 0 && b == 0) continue; // the monic term constrains nothing
        rows.emplace_back(a, b);
    }
    if (forces_zero_base_weight(f)) rows.emplace_back(Int(0), Int(1));

    Int w_zeta, w_z;
    if (rows.empty()) {
        w_zeta = 1; // underdetermined: canonical fiber scaling
        w_z = 0;
    } else {
        IntMatrix m(static_cast<int>(rows.size()), 2);
        for (int i = 0; i < m.rows; ++i) {
            m.at(i, 0) = rows[static_cast<size_t>(i)].first;
            m.at(i, 1) = rows[static_cast<size_t>(i)].second;
        }
        auto kernel = integer_kernel(m);
        if (kernel.empty())
            return NoAction{NoAction::Reason::Inconsistent, "weight constraints admit only the zero action"};
        if (kernel.size() > 1) { // all of Q^2: canonical fiber scaling
            w_zeta = 1;
            w_z = 0;
        } else {
            w_zeta = kernel[0][0];
            w_z = kernel[0][1];
            if (w_zeta < 0) {
                w_zeta = -w_zeta;
                w_z = -w_z;
            }
            if (w_zeta == 0)
                return NoAction{NoAction::Reason::Inconsistent, "no solution with positive fiber weight"};
        }
    }

    std::optional<Int> w_b;
    for (const auto& t : f.terms) {
        if (t.coeff != Coeff::Param) continue;
        Int candidate = r * w_zeta - (Int(t.zeta_exp) * w_zeta + (Int(t.z_exp) + Int(t.dz_power)) * w_z);
        if (w_b && *w_b != candidate)
            return NoAction{NoAction::Reason::Inconsistent, "parameter terms demand different parameter weights"};
        w_b = candidate;
    }

    ActionWeights w;
    w.w_z = w_z;
    w.w_zeta = w_zeta;
    w.w_b = w_b.value_or(Int(0));
    w.s_omega = w_zeta;
    return w;
}

struct EquivarianceReport {
    bool ok = false;
    Int overall_factor = 0;                  // exponent of t common to all terms when ok
    std::optional<size_t> offending_term;    // first term breaking homogeneity otherwise
    std::vector<Int> term_exponents;
};

// Substitute the action into every term and compare exponents of t.
inline EquivarianceReport verify_equivariance(const SpectralFamily& f, const ActionWeights& w) {
    EquivarianceReport rep;
    for (const auto& t : f.terms) {
        Int e = Int(t.zeta_exp) * w.w_zeta + (Int(t.z_exp) + Int(t.dz_power)) * w.w_z;
        if (t.coeff == Coeff::Param) e += w.w_b;
        rep.term_exponents.push_back(e);
    }
    rep.ok = true;
    for (size_t i = 1; i < rep.term_exponents.size(); ++i)
        if (rep.term_exponents[i] != rep.term_exponents[0]) {
            rep.ok = false;
            rep.offending_term = i;
            break;
        }
    if (rep.ok && !rep.term_exponents.empty()) rep.overall_factor = rep.term_exponents[0];
    return rep;
}

// Structural checks shared by the JSON importer and the catalog validator.
// Stubs (singular_fiber_count > 1, no terms) are legal: the no-action gate
// fires before the solver ever looks at terms.
inline std::vector<std::string> validate_family(const SpectralFamily& f) {
    std::vector<std::string> issues;
    if (f.fiber_degree < 1) issues.push_back("fiber_degree must be >= 1");
    if (f.singular_fiber_count < 0) issues.push_back("singular_fiber_count must be >= 0");
    int monic = 0;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        if (t.zeta_exp < 0) issues.push_back("term " + std::to_string(i) + ": zeta_exp must be >= 0");
        if (t.dz_power < 0) issues.push_back("term " + std::to_string(i) + ": dz_power must be >= 0");
        if (t.coeff == Coeff::Unit && t.zeta_exp == f.fiber_degree && t.dz_power == 0 && t.z_exp == 0) ++monic;
    }
    if (f.singular_fiber_count <= 1 && monic != 1)
        issues.push_back("family must contain exactly one monic unit term zeta^r");
    return issues;
}

} // namespace pfl
