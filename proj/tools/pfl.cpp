// pfl: exact filtration invariants of one-parameter spectral families.
//
// Exit codes: 0 success; 1 the requested family admits no torus action (the
// report is still printed); 2 invalid input (unknown case/label, malformed
// file, unusable flags).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pfl/json_io.hpp"
#include "pfl/report.hpp"

namespace {

using pfl::Rational;
using pfl::json_io::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pfl::InvalidInput("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<pfl::CStarModel> load_model(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return pfl::json_io::model_from_json(pfl::json_io::parse_document(read_file(path)));
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact torus-action weights, filtration ranks, first spectral-sequence pages, and "
                 "fiber-lattice comparisons for one-parameter spectral families"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ----- analyze -----------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "full report for one catalog case");
    std::string an_case, an_format = "text", an_tmax, an_model;
    analyze->add_option("case", an_case, "case id (see 'list')")->required();
    analyze->add_option("--format", an_format, "output format")->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--tmax", an_tmax, "largest period to chart, as p/q");
    analyze->add_option("--model", an_model, "JSON file overriding the fixed-locus model");
    analyze->callback([&] {
        std::optional<Rational> tmax;
        if (!an_tmax.empty()) tmax = pfl::rat_parse(an_tmax);
        auto result = pfl::report::analyze(an_case, tmax, load_model(an_model));
        if (an_format == "json")
            print_json(result.doc);
        else
            std::cout << result.text;
        if (result.no_action) exit_code = 1;
    });

    // ----- table1 ------------------------------------------------------------
    auto* table1 = app.add_subcommand("table1", "invariants table of the six classical families");
    std::string t1_format = "text";
    table1->add_option("--format", t1_format, "output format")->check(CLI::IsMember({"text", "json"}));
    table1->callback([&] {
        if (t1_format == "json")
            print_json(pfl::report::table1_json());
        else
            std::cout << pfl::report::table1_text();
    });

    // ----- weights -----------------------------------------------------------
    auto* weights = app.add_subcommand("weights", "solve action weights for a family given as JSON");
    std::string w_file, w_format = "text";
    weights->add_option("file", w_file, "spectral-family JSON file")->required();
    weights->add_option("--format", w_format, "output format")->check(CLI::IsMember({"text", "json"}));
    weights->callback([&] {
        auto fam = pfl::json_io::family_from_json(pfl::json_io::parse_document(read_file(w_file)));
        auto issues = pfl::validate_family(fam);
        if (!issues.empty()) throw pfl::InvalidInput("invalid family: " + issues.front());
        auto res = pfl::solve_weights(fam);
        if (const auto* na = std::get_if<pfl::NoAction>(&res)) {
            if (w_format == "json")
                print_json(pfl::json_io::no_action_json(*na));
            else
                std::cout << "torus action: none (" << pfl::to_string(na->reason) << ": " << na->detail
                          << ")\n";
            exit_code = 1;
            return;
        }
        const auto& w = std::get<pfl::ActionWeights>(res);
        if (w_format == "json") {
            print_json(pfl::json_io::weights_json(w));
        } else {
            std::cout << "w_z = " << w.w_z << ", w_zeta = " << w.w_zeta << ", w_b = " << w.w_b << "\n";
            std::cout << "s_omega = " << w.s_omega << "\n";
        }
    });

    // ----- ss ------------------------------------------------------------------
    auto* ss = app.add_subcommand("ss", "first page of the period spectral sequence");
    std::string ss_case, ss_format = "text", ss_tmax = "1", ss_model;
    ss->add_option("case", ss_case, "case id")->required();
    ss->add_option("--format", ss_format, "output format")->check(CLI::IsMember({"text", "json"}));
    ss->add_option("--tmax", ss_tmax, "largest period to chart, as p/q");
    ss->add_option("--model", ss_model, "JSON file overriding the fixed-locus model");
    ss->callback([&] {
        const pfl::CaseBundle& b = pfl::get_case(ss_case);
        auto override_model = load_model(ss_model);
        const std::optional<pfl::CStarModel>& model = override_model ? override_model : b.model;
        if (!model) throw pfl::UnsupportedCase(ss_case + ": no fixed-locus model to chart");
        if (!b.core) throw pfl::UnsupportedCase(ss_case + ": no fiber lattice on record");
        auto page = pfl::e1_page(*model, *b.core, pfl::rat_parse(ss_tmax));
        if (ss_format == "json") {
            print_json(pfl::json_io::page_json(page));
        } else {
            std::ostringstream os;
            os << "case " << ss_case << ", periods up to " << ss_tmax << "\n";
            pfl::report::page_section(os, page, nullptr);
            std::cout << os.str();
        }
    });

    // ----- dynkin ---------------------------------------------------------------
    auto* dynkin = app.add_subcommand("dynkin", "affine diagram, Cartan matrix, imaginary root");
    std::string d_label, d_format = "text";
    dynkin->add_option("label", d_label, "A0~, D4~, E6~, E7~ or E8~")->required();
    dynkin->add_option("--format", d_format, "output format")->check(CLI::IsMember({"text", "json"}));
    dynkin->callback([&] {
        if (d_format == "json")
            print_json(pfl::report::dynkin_json(d_label));
        else
            std::cout << pfl::report::dynkin_text(d_label);
    });

    // ----- compare ----------------------------------------------------------------
    auto* compare = app.add_subcommand("compare", "three-filtration comparison for one case");
    std::string c_case, c_format = "text";
    compare->add_option("case", c_case, "case id")->required();
    compare->add_option("--format", c_format, "output format")->check(CLI::IsMember({"text", "json"}));
    compare->callback([&] {
        if (c_format == "json")
            print_json(pfl::json_io::comparison_json(pfl::compare_filtrations(c_case)));
        else
            std::cout << pfl::report::compare_text(c_case);
    });

    // ----- export-case ---------------------------------------------------------------
    auto* exp = app.add_subcommand("export-case", "emit one catalog bundle as JSON");
    std::string e_case;
    exp->add_option("case", e_case, "case id")->required();
    exp->callback([&] { print_json(pfl::json_io::bundle_json(pfl::get_case(e_case))); });

    // ----- list -------------------------------------------------------------------------
    auto* list = app.add_subcommand("list", "list catalog case ids");
    std::string l_filter, l_format = "text";
    list->add_option("--filter", l_filter, "painleve, parabolic or has_action");
    list->add_option("--format", l_format, "output format")->check(CLI::IsMember({"text", "json"}));
    list->callback([&] {
        auto ids = pfl::list_cases(l_filter);
        if (l_format == "json") {
            print_json(json(ids));
        } else {
            for (const auto& id : ids) std::cout << id << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const pfl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
