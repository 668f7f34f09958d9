// Acceptance gate: one pass/fail line per shipped guarantee. Each block
// re-derives everything it checks from the public headers; expected values are
// frozen literals, not calls back into the code under test.

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pfl/catalog.hpp"
#include "pfl/report.hpp"

using namespace pfl;

namespace {

int failures = 0;

void report_line(int n, const std::string& label, const std::vector<std::string>& problems) {
    if (problems.empty()) {
        std::cout << "[PASS] criterion " << n << ": " << label << "\n";
    } else {
        std::cout << "[FAIL] criterion " << n << ": " << label << "\n";
        for (const auto& p : problems) std::cout << "         - " << p << "\n";
        ++failures;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational rat(long long n, long long d = 1) { return make_rational(Int(n), Int(d)); }

const CStarModel& model_of(const std::string& id) { return *get_case(id).model; }

// ---- criterion 1: invariants table ---------------------------------------------------------

void criterion_1() {
    std::vector<std::string> bad;
    const std::string golden = slurp(std::string(PFL_GOLDEN_DIR) + "/table1.txt");
    if (golden.empty()) bad.push_back("reference table file missing or empty");
    if (report::table1_text() != golden) bad.push_back("rendered table differs from the reference bytes");
    report_line(1, "invariants table matches the frozen reference text", bad);
}

// ---- criterion 2: weight solving ------------------------------------------------------------

void criterion_2() {
    std::vector<std::string> bad;
    const std::vector<std::pair<std::string, std::array<long long, 3>>> expected = {
        {"PI", {-2, 5, 6}}, {"PII", {-1, 3, 4}}, {"PIIFN", {-2, 3, 4}},
        {"PIV", {-1, 2, 3}}, {"PVI", {0, 1, 2}},
    };
    for (const auto& [id, tuple] : expected) {
        const SpectralFamily& f = *get_case(id).family;
        WeightsResult r = solve_weights(f);
        const auto* w = std::get_if<ActionWeights>(&r);
        if (!w) {
            bad.push_back(id + ": solver refused a weighted family");
            continue;
        }
        if (w->w_z != tuple[0] || w->w_zeta != tuple[1] || w->w_b != tuple[2])
            bad.push_back(id + ": weight tuple differs from the recorded one");
        if (!verify_equivariance(f, *w).ok)
            bad.push_back(id + ": equivariance audit failed on the solved weights");
    }
    for (const std::string id : {"PIII", "PV"}) {
        WeightsResult r = solve_weights(*get_case(id).family);
        if (!std::holds_alternative<NoAction>(r))
            bad.push_back(id + ": stub family was not refused");
    }
    report_line(2, "weight solver reproduces the recorded action weights; stub families refuse", bad);
}

// ---- criterion 3: filtration profiles -------------------------------------------------------

void criterion_3() {
    std::vector<std::string> bad;
    struct Expect {
        std::string id;
        std::vector<std::pair<Rational, std::map<int, int>>> jumps;
    };
    const std::vector<Expect> table = {
        {"PI", {{rat(1, 6), {{2, 1}}}, {rat(1, 3), {{0, 1}}}}},
        {"PII", {{rat(1, 4), {{2, 2}}}, {rat(1, 2), {{0, 1}}}}},
        {"PIIFN", {{rat(1, 4), {{2, 2}}}, {rat(1, 2), {{0, 1}}}}},
        {"PIV", {{rat(1, 3), {{2, 3}}}, {rat(1), {{0, 1}}}}},
        {"PVI", {{rat(1, 2), {{2, 4}}}, {rat(1), {{2, 1}}}, {rat(2), {{0, 1}}}}},
    };
    for (const auto& e : table) {
        FiltrationProfile p = assemble_filtration(model_of(e.id));
        if (!p.fully_determined) {
            bad.push_back(e.id + ": profile left undetermined");
            continue;
        }
        if (p.jumps.size() != e.jumps.size()) {
            bad.push_back(e.id + ": wrong number of rank jumps");
            continue;
        }
        for (size_t i = 0; i < e.jumps.size(); ++i) {
            if (p.jumps[i].lambda != e.jumps[i].first)
                bad.push_back(e.id + ": jump slope " + std::to_string(i) + " differs");
            if (p.jumps[i].increments != e.jumps[i].second)
                bad.push_back(e.id + ": jump increments " + std::to_string(i) + " differ");
        }
    }
    report_line(3, "filtration profiles are fully determined with the recorded jumps", bad);
}

// ---- criterion 4: index formulas ------------------------------------------------------------

void criterion_4() {
    std::vector<std::string> bad;
    struct Expect {
        std::string id;
        Rational lambda;
        long long mu;
    };
    const std::vector<Expect> table = {
        {"PI", rat(1, 6), 0},  {"PI", rat(1, 3), -2},
        {"PII", rat(1, 4), 0}, {"PII", rat(1, 2), -2},
        {"PIV", rat(1, 3), 0},
    };
    for (const auto& e : table) {
        const CStarModel& m = model_of(e.id);
        for (const auto& c : m.components) {
            Int mu = floer_index(m, c, e.lambda);
            if (mu != e.mu)
                bad.push_back(e.id + "/" + c.name + ": right-limit index differs from the recorded value");
        }
    }
    // At the right limit of zero the index must agree with the downward-flow index.
    for (const auto& id : list_cases()) {
        const CaseBundle& b = get_case(id);
        if (!b.model) continue;
        for (const auto& c : b.model->components)
            if (floer_index(*b.model, c, rat(0)) != morse_bott_index(c))
                bad.push_back(b.id + "/" + c.name + ": index at 0+ is not the downward-flow index");
    }
    report_line(4, "right-limit index values match the recorded table", bad);
}

// ---- criterion 5: first pages ---------------------------------------------------------------

void criterion_5() {
    std::vector<std::string> bad;
    struct Expect {
        std::string id;
        Rational period;
        size_t circles;
    };
    const std::vector<Expect> table = {
        {"PI", rat(1, 6), 1}, {"PI", rat(1, 3), 2}, {"PI", rat(1, 2), 2},
        {"PII", rat(1, 4), 2}, {"PII", rat(1, 2), 3},
        {"PIV", rat(1, 3), 3},
        {"PVI", rat(1, 2), 4},
    };
    for (const auto& e : table) {
        auto circles = circle_column(model_of(e.id), e.period);
        if (circles.size() != e.circles)
            bad.push_back(e.id + ": circle count at a fractional period differs");
        for (const auto& entry : circles)
            if (entry.ranks != std::vector<int>{1, 1})
                bad.push_back(e.id + ": a circle entry does not carry ranks (1, 1)");
    }
    for (const std::string id : {"PI", "PII", "PIV", "PVI"}) {
        const CaseBundle& b = get_case(id);
        auto h = hypersurface_cohomology(*b.model, *b.core);
        if (h != std::vector<int>{1, 1, 1, 1})
            bad.push_back(id + ": energy-hypersurface cohomology is not (1, 1, 1, 1)");
        if (integer_kernel(b.core->intersection).size() != 1)
            bad.push_back(id + ": core intersection form does not have a rank-one radical");
    }
    report_line(5, "first-page circle counts and hypersurface cohomology match the recorded data", bad);
}

// ---- criterion 6: lattice multiplicities ----------------------------------------------------

void criterion_6() {
    std::vector<std::string> bad;
    const std::vector<std::pair<std::string, long long>> labels = {
        {"D4~", 2}, {"E6~", 3}, {"E7~", 4}, {"E8~", 6}};
    for (const auto& [label, maximum] : labels) {
        IntMatrix cartan = cartan_matrix(label);
        IntMatrix neg(cartan.rows, cartan.cols);
        for (int i = 0; i < cartan.rows; ++i)
            for (int j = 0; j < cartan.cols; ++j) neg.at(i, j) = -cartan.at(i, j);
        std::vector<Int> mult = multiplicities_from_lattice(neg);
        if (mult != imaginary_root(label)) {
            bad.push_back(label + ": lattice multiplicities differ from the imaginary root");
            continue;
        }
        Int mx = 0;
        for (const auto& v : mult) {
            if (v <= 0) bad.push_back(label + ": a multiplicity is not positive");
            if (v > mx) mx = v;
        }
        if (mx != maximum) bad.push_back(label + ": maximal multiplicity differs");
        if (detail::vec_gcd(mult) != 1) bad.push_back(label + ": multiplicity vector is not primitive");
        for (int i = 0; i < cartan.rows; ++i) {
            Int dot = 0;
            for (int j = 0; j < cartan.cols; ++j) dot += cartan.at(i, j) * mult[static_cast<size_t>(j)];
            if (dot != 0) bad.push_back(label + ": multiplicity vector is not radical for the form");
        }
    }
    report_line(6, "affine lattice multiplicities equal the imaginary roots with maxima (2, 3, 4, 6)", bad);
}

// ---- criterion 7: three-way comparison ------------------------------------------------------

void criterion_7() {
    std::vector<std::string> bad;
    const std::vector<std::string> both_defined = {"PI",  "PII", "PIIFN", "PIV", "PVI",
                                                   "G0", "GZ3", "GZ4",   "GZ6"};
    for (const auto& id : both_defined) {
        FiltrationComparison c = compare_filtrations(id);
        if (!c.rankwise_equal_fm)
            bad.push_back(id + ": rank maps of the two computed filtrations are not asserted equal");
        if (!c.verify().empty())
            bad.push_back(id + ": stored rank maps contradict an asserted relation");
    }
    for (const std::string id : {"G0", "GZ2", "GZ3", "GZ4", "GZ6"}) {
        FiltrationComparison c = compare_filtrations(id);
        if (!c.mult_refines_pw || !c.floer_refines_pw)
            bad.push_back(id + ": refinement toward the perverse-type profile not asserted");
        if (!c.verify().empty())
            bad.push_back(id + ": stored rank maps contradict an asserted relation");
    }
    for (const std::string id : {"PII", "PIV"}) {
        if (!compare_filtrations(id).pw_strictly_finer)
            bad.push_back(id + ": perverse-type profile not asserted strictly finer");
    }
    FiltrationComparison pvi = compare_filtrations("PVI");
    const RankMap expected = {{rat(1, 2), 4}, {rat(1), 5}};
    if (!pvi.coincide_all) bad.push_back("PVI: full coincidence not asserted");
    if (pvi.floer != expected || pvi.mult != expected)
        bad.push_back("PVI: rank maps differ from {1/2 -> 4, 1 -> 5}");
    report_line(7, "three-way filtration comparisons assert and re-verify the recorded relations", bad);
}

// ---- criterion 8: property suites -----------------------------------------------------------

void criterion_8() {
    std::vector<std::string> bad;
    std::mt19937 rng(987654321u);

    // Step-function identities on 1000 random rationals.
    {
        std::uniform_int_distribution<long long> num(-60, 60), den(1, 12);
        int shift_bad = 0, odd_bad = 0;
        for (int i = 0; i < 1000; ++i) {
            Rational x = rat(num(rng), den(rng));
            if (step_w(x + 1) != step_w(x) + 2) ++shift_bad;
            if (step_w(-x) != -step_w(x)) ++odd_bad;
            if (step_w(-x, Limit::Above) != -step_w(x, Limit::Below)) ++odd_bad;
        }
        if (shift_bad) bad.push_back("step function: shift-by-one identity failed");
        if (odd_bad) bad.push_back("step function: oddness identity failed");
    }

    // Kernel correctness on 1000 random integer matrices.
    {
        std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
        int prod_bad = 0, prim_bad = 0;
        for (int i = 0; i < 1000; ++i) {
            IntMatrix m(dim(rng), dim(rng));
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) m.at(r, c) = entry(rng);
            for (const auto& v : integer_kernel(m)) {
                for (int r = 0; r < m.rows; ++r) {
                    Int dot = 0;
                    for (int c = 0; c < m.cols; ++c) dot += m.at(r, c) * v[static_cast<size_t>(c)];
                    if (dot != 0) ++prod_bad;
                }
                if (detail::vec_gcd(v) != 1) ++prim_bad;
            }
        }
        if (prod_bad) bad.push_back("kernel: a basis vector is not annihilated by its matrix");
        if (prim_bad) bad.push_back("kernel: a basis vector is not primitive");
    }

    // Weight pairing k <-> s - k at every fixed component of every catalog model.
    for (const auto& id : list_cases()) {
        const CaseBundle& b = get_case(id);
        if (!b.model) continue;
        if (!validate_model(*b.model).empty())
            bad.push_back(b.id + ": model validation reported a problem");
        long long s = static_cast<long long>(b.model->s_omega);
        for (const auto& c : b.model->components)
            for (const auto& [k, mult] : c.weights)
                if (c.weight_multiplicity(static_cast<int>(s - k)) != mult)
                    bad.push_back(b.id + "/" + c.name + ": weight pairing is asymmetric");
    }

    // Profile monotonicity, stability between outer periods, q = 1 specialization.
    for (const std::string id : {"PI", "PII", "PIIFN", "PIV", "PVI"}) {
        FiltrationProfile p = assemble_filtration(model_of(id));
        std::map<int, int> running;
        for (int d = 0; d < static_cast<int>(p.total.size()); d += 2) running[d] = 0;
        for (const auto& j : p.jumps) {
            for (const auto& [deg, inc] : j.increments) {
                if (inc <= 0) bad.push_back(id + ": non-positive rank increment");
                running[deg] += inc;
            }
            if (running != j.cumulative) bad.push_back(id + ": cumulative ranks drift from increments");
        }
        for (const auto& [deg, total] : running) {
            if (deg >= static_cast<int>(p.total.size()) || p.total[static_cast<size_t>(deg)] != total)
                bad.push_back(id + ": final ranks do not exhaust the ambient numbers");
        }
        std::uniform_int_distribution<size_t> pick(0, p.jumps.size() - 1);
        std::uniform_int_distribution<long long> tick(1, 999);
        for (int i = 0; i < 1000; ++i) {
            size_t k = pick(rng);
            Rational lo = p.jumps[k].lambda;
            Rational hi = k + 1 < p.jumps.size() ? p.jumps[k + 1].lambda : lo + 1;
            Rational mid = lo + (hi - lo) * rat(tick(rng), 1000);
            for (const auto& [deg, total] : p.jumps[k].cumulative)
                if (p.rank_at(mid, deg) != total)
                    bad.push_back(id + ": rank changed strictly between consecutive jump slopes");
        }
        GeneratingPolynomial g = generating_polynomial(p);
        std::map<int, int> q1 = g.specialize_q1();
        for (const auto& [deg, total] : running) {
            auto it = q1.find(deg);
            if ((it == q1.end() ? 0 : it->second) != total)
                bad.push_back(id + ": q = 1 specialization disagrees with the rank totals");
        }
        for (const auto& [deg, total] : q1)
            if (running.find(deg) == running.end())
                bad.push_back(id + ": q = 1 specialization invented a degree");
    }

    if (bad.size() > 8) bad.resize(8); // keep the failure report readable
    report_line(8, "randomized property suites hold (step identities, kernels, pairing, stability, q = 1)", bad);
}

} // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
        return 1;
    }
    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
