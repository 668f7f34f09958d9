#include <catch2/catch_amalgamated.hpp>

#include "pfl/catalog.hpp"

using namespace pfl;

namespace {

RankMap rm(std::initializer_list<std::pair<Rational, int>> steps) {
    RankMap m;
    for (const auto& [l, r] : steps) m[l] = r;
    return m;
}

} // namespace

TEST_CASE("case listing: order, size, filters") {
    const std::vector<std::string> all = {"PI",  "PII", "PIIFN", "PIII", "PIV", "PV",
                                          "PVI", "G0",  "GZ2",   "GZ3",  "GZ4", "GZ6"};
    CHECK(list_cases() == all);
    CHECK(list_cases("painleve") ==
          std::vector<std::string>{"PI", "PII", "PIIFN", "PIII", "PIV", "PV", "PVI"});
    CHECK(list_cases("parabolic") ==
          std::vector<std::string>{"PVI", "G0", "GZ2", "GZ3", "GZ4", "GZ6"});
    const auto with_action = list_cases("has_action");
    CHECK(with_action.size() == 10);
    for (const auto& id : with_action) {
        CHECK(id != "PIII");
        CHECK(id != "PV");
    }
    CHECK_THROWS_AS(list_cases("bogus"), InvalidInput);
}

TEST_CASE("case lookup") {
    CHECK(get_case("PI").id == "PI");
    CHECK(get_case("GZ6").id == "GZ6");
    CHECK_THROWS_AS(get_case("PVII"), UnknownCase);
}

TEST_CASE("every bundle is internally consistent") {
    for (const auto& id : list_cases()) {
        CAPTURE(id);
        CHECK(detail::cross_validate(get_case(id)).empty());
    }
}

TEST_CASE("torus-action availability per case") {
    for (const auto& id : {"PI", "PII", "PIIFN", "PIV", "PVI", "G0", "GZ2", "GZ3", "GZ4", "GZ6"})
        CHECK(get_case(id).has_action());
    CHECK_FALSE(get_case("PIII").has_action());
    CHECK_FALSE(get_case("PV").has_action());
}

TEST_CASE("recorded weight tuples and table numerals") {
    using W = std::array<long long, 3>;
    CHECK(get_case("PI").expected_weights == W{-2, 5, 6});
    CHECK(get_case("PII").expected_weights == W{-1, 3, 4});
    CHECK(get_case("PIIFN").expected_weights == W{-2, 3, 4});
    CHECK(get_case("PIV").expected_weights == W{-1, 2, 3});
    CHECK(get_case("PVI").expected_weights == W{0, 1, 2});
    CHECK(get_case("PI").table1_numeral == "I");
    CHECK(get_case("PVI").table1_numeral == "VI");
    CHECK_FALSE(get_case("PIIFN").table1_numeral.has_value());
    CHECK_FALSE(get_case("G0").table1_numeral.has_value());
}

TEST_CASE("the order-two quotient case aliases the sixth spectral family") {
    const CaseBundle& pvi = get_case("PVI");
    const CaseBundle& gz2 = get_case("GZ2");
    REQUIRE(gz2.family.has_value());
    CHECK(*gz2.family == *pvi.family);
    REQUIRE(gz2.model.has_value());
    CHECK(gz2.model->core_label == pvi.model->core_label);
    CHECK(gz2.model->s_omega == pvi.model->s_omega);
    CHECK(gz2.model->components.size() == pvi.model->components.size());
    CHECK(gz2.core->label == "I0*");
    CHECK(gz2.coincide);
    CHECK(gz2.parabolic);
    CHECK_FALSE(gz2.painleve);
}

TEST_CASE("middle-degree rank maps and their provenance") {
    auto check = [&](const std::string& id, const RankMap& expected, const std::string& source) {
        auto [m, src] = floer_rank_map(get_case(id));
        CAPTURE(id);
        CHECK(m == expected);
        CHECK(src == source);
    };
    check("PI", rm({{Rational(1, 6), 1}}), "computed");
    check("PII", rm({{Rational(1, 4), 2}}), "computed");
    check("PIIFN", rm({{Rational(1, 4), 2}}), "computed");
    check("PIV", rm({{Rational(1, 3), 3}}), "computed");
    check("PVI", rm({{Rational(1, 2), 4}, {Rational(1), 5}}), "computed");
    check("GZ2", rm({{Rational(1, 2), 4}, {Rational(1), 5}}), "computed");
    // no usable profile assembly: the recorded companion ranks take over
    check("G0", rm({{Rational(1), 1}}), "companion-work data");
    check("GZ3", rm({{Rational(1, 3), 3}, {Rational(2, 3), 6}, {Rational(1), 7}}),
          "companion-work data");
    check("GZ4",
          rm({{Rational(1, 4), 2}, {Rational(1, 2), 5}, {Rational(3, 4), 7}, {Rational(1), 8}}),
          "companion-work data");
    check("GZ6",
          rm({{Rational(1, 6), 1}, {Rational(1, 3), 3}, {Rational(1, 2), 5},
              {Rational(2, 3), 7}, {Rational(5, 6), 8}, {Rational(1), 9}}),
          "companion-work data");
}

TEST_CASE("filtration comparisons hold for every case with lattice data") {
    for (const auto& id : {"PI", "PII", "PIIFN", "PIV", "PVI", "G0", "GZ2", "GZ3", "GZ4", "GZ6"}) {
        CAPTURE(id);
        auto c = compare_filtrations(id);
        CHECK(c.verify().empty());
        CHECK(c.rankwise_equal_fm);
    }
    CHECK_THROWS_AS(compare_filtrations("PIII"), UnsupportedCase);
    CHECK_THROWS_AS(compare_filtrations("PV"), UnsupportedCase);
}

TEST_CASE("comparison flags follow the case type") {
    auto pii = compare_filtrations("PII");
    CHECK(pii.pw_refines_floer);
    CHECK(pii.pw_refines_mult);
    CHECK(pii.pw_strictly_finer);
    CHECK_FALSE(pii.floer_refines_pw);
    CHECK_FALSE(pii.coincide_all);

    auto pi = compare_filtrations("PI");
    CHECK(pi.pw_refines_floer);
    CHECK_FALSE(pi.pw_strictly_finer);

    auto piv = compare_filtrations("PIV");
    CHECK(piv.pw_strictly_finer);

    auto pvi = compare_filtrations("PVI");
    CHECK(pvi.pw_refines_floer);
    CHECK(pvi.floer_refines_pw);
    CHECK(pvi.mult_refines_pw);
    CHECK(pvi.coincide_all);
    CHECK(pvi.floer == rm({{Rational(1, 2), 4}, {Rational(1), 5}}));
    CHECK(pvi.floer == pvi.mult);

    auto gz3 = compare_filtrations("GZ3");
    CHECK(gz3.floer_refines_pw);
    CHECK(gz3.mult_refines_pw);
    CHECK_FALSE(gz3.pw_refines_floer);
    CHECK(gz3.floer_source == "companion-work data");

    auto g0 = compare_filtrations("G0");
    CHECK(g0.floer_refines_pw);
    CHECK(g0.mult_refines_pw);
}

TEST_CASE("basis hints name the plane classes entering at the half-period") {
    const std::vector<std::string> planes = {"[E_1]", "[E_2]", "[E_3]", "[E_4]"};
    CHECK(get_case("PVI").basis_hints.at(Rational(1, 2)) == planes);
    CHECK(get_case("GZ2").basis_hints.at(Rational(1, 2)) == planes);
    CHECK(get_case("PI").basis_hints.empty());
}

TEST_CASE("strictness flags") {
    CHECK_FALSE(get_case("PI").pw_strict);
    CHECK(get_case("PII").pw_strict);
    CHECK(get_case("PIIFN").pw_strict);
    CHECK(get_case("PIV").pw_strict);
    CHECK_FALSE(get_case("PVI").pw_strict);
}
