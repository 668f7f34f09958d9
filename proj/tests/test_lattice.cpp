#include <catch2/catch_amalgamated.hpp>

#include "pfl/lattice.hpp"

using namespace pfl;

namespace {

Int max_entry(const std::vector<Int>& v) {
    Int m = 0;
    for (const auto& x : v) m = std::max(m, x);
    return m;
}

} // namespace

TEST_CASE("affine diagrams: shapes and Cartan matrices") {
    auto d4 = dynkin::diagram("D4~");
    CHECK(d4.names.size() == 5);
    CHECK(d4.edges.size() == 4);
    REQUIRE(d4.central.has_value());
    CHECK(d4.names[static_cast<size_t>(*d4.central)] == "E0");

    CHECK(dynkin::diagram("E6~").names.size() == 7);
    CHECK(dynkin::diagram("E7~").names.size() == 8);
    CHECK(dynkin::diagram("E8~").names.size() == 9);
    CHECK(dynkin::diagram("A0~").names == std::vector<std::string>{"E0"});
    CHECK_THROWS_AS(dynkin::diagram("B2~"), UnknownLabel);

    auto c = cartan_matrix("D4~");
    REQUIRE(c.rows == 5);
    CHECK(c.is_symmetric());
    for (int i = 0; i < 5; ++i) CHECK(c.at(i, i) == 2);
    for (int j = 1; j < 5; ++j) {
        CHECK(c.at(0, j) == -1); // every arm vertex hangs off the center
        CHECK(c.at(j, 0) == -1);
    }
    CHECK(cartan_matrix("A0~") == IntMatrix{{0}});
}

TEST_CASE("imaginary roots carry the classical multiplicity labels") {
    CHECK(imaginary_root("A0~") == std::vector<Int>{1});
    CHECK(imaginary_root("D4~") == std::vector<Int>{2, 1, 1, 1, 1});
    CHECK(imaginary_root("E6~") == std::vector<Int>{3, 2, 1, 2, 1, 2, 1});
    CHECK(imaginary_root("E7~") == std::vector<Int>{4, 3, 2, 1, 3, 2, 1, 2});
    CHECK(imaginary_root("E8~") == std::vector<Int>{6, 5, 4, 3, 2, 1, 4, 2, 3});
    CHECK(max_entry(imaginary_root("D4~")) == 2);
    CHECK(max_entry(imaginary_root("E6~")) == 3);
    CHECK(max_entry(imaginary_root("E7~")) == 4);
    CHECK(max_entry(imaginary_root("E8~")) == 6);
}

TEST_CASE("imaginary root annihilates its Cartan matrix") {
    for (const std::string label : {"A0~", "D4~", "E6~", "E7~", "E8~"}) {
        CAPTURE(label);
        auto root = imaginary_root(label);
        for (const auto& v : cartan_matrix(label).apply(root)) CHECK(v == 0);
    }
}

TEST_CASE("fiber multiplicities equal the imaginary root of the matching diagram") {
    const std::pair<std::string, std::string> pairs[] = {
        {"I0*", "D4~"}, {"IV*", "E6~"}, {"III*", "E7~"}, {"II*", "E8~"}};
    for (const auto& [fiber, diag] : pairs) {
        CAPTURE(fiber);
        CHECK(multiplicities_from_lattice(core_lattice(fiber).intersection) == imaginary_root(diag));
    }
}

TEST_CASE("fiber lattices: frozen matrices, multiplicities, topology") {
    auto ii = core_lattice("II");
    CHECK(ii.intersection == IntMatrix{{0}});
    CHECK(ii.multiplicities == std::vector<Int>{1});
    CHECK(ii.betti == std::vector<int>{1, 0, 1});
    CHECK_FALSE(ii.central.has_value());

    auto iii = core_lattice("III");
    CHECK(iii.intersection == IntMatrix{{-2, 2}, {2, -2}});
    CHECK(iii.multiplicities == std::vector<Int>{1, 1});
    CHECK(iii.betti == std::vector<int>{1, 0, 2});

    auto iv = core_lattice("IV");
    CHECK(iv.intersection == IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
    CHECK(iv.multiplicities == std::vector<Int>{1, 1, 1});
    CHECK(iv.betti == std::vector<int>{1, 0, 3});

    auto i0s = core_lattice("I0*");
    CHECK(i0s.multiplicities == std::vector<Int>{2, 1, 1, 1, 1});
    CHECK(i0s.central == "E0");
    CHECK(i0s.betti == std::vector<int>{1, 0, 5});
    // intersection is the negated affine Cartan matrix
    auto cart = cartan_matrix("D4~");
    for (int i = 0; i < cart.rows; ++i)
        for (int j = 0; j < cart.cols; ++j) CHECK(i0s.intersection.at(i, j) == -cart.at(i, j));

    CHECK(core_lattice("IV*").multiplicities.size() == 7);
    CHECK(core_lattice("III*").multiplicities.size() == 8);
    CHECK(core_lattice("II*").multiplicities.size() == 9);

    auto ell = core_lattice("Elliptic");
    CHECK(ell.intersection == IntMatrix{{0}});
    CHECK(ell.betti == std::vector<int>{1, 2, 1});

    CHECK_THROWS_AS(core_lattice("I7"), UnknownLabel);
}

TEST_CASE("lattice validation accepts the built-ins and flags tampering") {
    for (const std::string label : {"II", "III", "IV", "I0*", "IV*", "III*", "II*", "Elliptic"}) {
        CAPTURE(label);
        CHECK(validate_lattice(core_lattice(label)).empty());
    }

    auto broken = core_lattice("III");
    broken.intersection.at(0, 1) = 3; // symmetric partner left at 2
    auto issues = validate_lattice(broken);
    bool symmetric_flagged = false;
    for (const auto& s : issues) symmetric_flagged = symmetric_flagged || s.find("not symmetric") != std::string::npos;
    CHECK(symmetric_flagged);

    auto off_radical = core_lattice("I0*");
    off_radical.multiplicities = {Int(1), Int(1), Int(1), Int(1), Int(1)};
    issues = validate_lattice(off_radical);
    bool radical_flagged = false;
    for (const auto& s : issues) radical_flagged = radical_flagged || s.find("radical") != std::string::npos;
    CHECK(radical_flagged);

    auto imprimitive = core_lattice("III");
    imprimitive.multiplicities = {Int(2), Int(2)};
    issues = validate_lattice(imprimitive);
    bool primitive_flagged = false;
    for (const auto& s : issues) primitive_flagged = primitive_flagged || s.find("primitive") != std::string::npos;
    CHECK(primitive_flagged);
}

TEST_CASE("multiplicity filtration: slope -> component count") {
    using RM = std::map<Rational, int>;
    CHECK(multiplicity_filtration(core_lattice("II")) == RM{{Rational(1), 1}});
    CHECK(multiplicity_filtration(core_lattice("III")) == RM{{Rational(1), 2}});
    CHECK(multiplicity_filtration(core_lattice("IV")) == RM{{Rational(1), 3}});
    CHECK(multiplicity_filtration(core_lattice("I0*")) == RM{{Rational(1, 2), 4}, {Rational(1), 5}});
    CHECK(multiplicity_filtration(core_lattice("IV*")) ==
          RM{{Rational(1, 3), 3}, {Rational(2, 3), 6}, {Rational(1), 7}});
    CHECK(multiplicity_filtration(core_lattice("III*")) ==
          RM{{Rational(1, 4), 2}, {Rational(1, 2), 5}, {Rational(3, 4), 7}, {Rational(1), 8}});
    CHECK(multiplicity_filtration(core_lattice("II*")) ==
          RM{{Rational(1, 6), 1}, {Rational(1, 3), 3}, {Rational(1, 2), 5},
             {Rational(2, 3), 7}, {Rational(5, 6), 8}, {Rational(1), 9}});
    CHECK(multiplicity_filtration(core_lattice("Elliptic")) == RM{{Rational(1), 1}});
}

TEST_CASE("perverse-type profiles per kind") {
    using Steps = std::vector<std::optional<int>>;
    CHECK(pw_profile(PwKind::Trivial, core_lattice("II")).steps == Steps{1});
    CHECK(pw_profile(PwKind::TwoStepRankTwo, core_lattice("III")).steps == Steps{1, 2});
    CHECK(pw_profile(PwKind::TwoStepUnknownMiddle, core_lattice("IV")).steps == Steps{std::nullopt, 3});
    CHECK(pw_profile(PwKind::ParabolicCentral, core_lattice("I0*")).steps == Steps{4, 5});
    CHECK(pw_profile(PwKind::ParabolicCentral, core_lattice("IV*")).steps == Steps{6, 7});
    CHECK(pw_profile(PwKind::ParabolicCentral, core_lattice("III*")).steps == Steps{7, 8});
    CHECK(pw_profile(PwKind::ParabolicCentral, core_lattice("II*")).steps == Steps{8, 9});
    CHECK_THROWS_AS(pw_profile(PwKind::ParabolicCentral, core_lattice("II")), UnsupportedCase);
}

TEST_CASE("rank-map comparison semantics") {
    RankMap a{{Rational(1, 6), 1}, {Rational(1, 3), 2}};
    RankMap same_chain{{Rational(1, 2), 1}, {Rational(1), 2}};
    RankMap same_keys_other_values{{Rational(1, 6), 1}, {Rational(1, 3), 3}};
    RankMap shorter{{Rational(1), 2}};

    CHECK(rankwise_equal(a, a));
    CHECK(rankwise_equal(a, same_chain)); // rank chains agree; jump sets differ
    CHECK_FALSE(rankwise_equal(a, same_keys_other_values));
    CHECK_FALSE(rankwise_equal(a, shorter));

    // repeated values collapse in the chain
    RankMap plateau{{Rational(1, 6), 1}, {Rational(1, 4), 1}, {Rational(1, 3), 2}};
    CHECK(rank_sequence(plateau) == std::vector<int>{1, 2});
    CHECK(rankwise_equal(a, plateau));

    using Seq = std::vector<std::optional<int>>;
    CHECK(refines(Seq{1, 2, 3}, Seq{2}));
    CHECK(refines(Seq{1, 2, 3}, Seq{1, 3}));
    CHECK_FALSE(refines(Seq{1, 3}, Seq{2}));
    CHECK(refines(Seq{1, 3}, Seq{std::nullopt, 3})); // unknown coarse steps impose nothing
    CHECK_FALSE(refines(Seq{std::nullopt, 3}, Seq{1})); // unknown fine steps witness nothing
    CHECK(refines(Seq{1}, Seq{}));
}

TEST_CASE("comparison records re-derive their own claims") {
    FiltrationComparison c;
    c.case_id = "synthetic";
    c.floer = {{Rational(1, 2), 4}, {Rational(1), 5}};
    c.mult = {{Rational(1, 2), 4}, {Rational(1), 5}};
    c.pw.steps = {4, 5};
    c.rankwise_equal_fm = true;
    c.pw_refines_floer = true;
    c.pw_refines_mult = true;
    c.floer_refines_pw = true;
    c.mult_refines_pw = true;
    c.coincide_all = true;
    CHECK(c.verify().empty());

    FiltrationComparison strict = c;
    strict.coincide_all = false;
    strict.pw_strictly_finer = true; // false claim: same number of steps
    auto bad = strict.verify();
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "strictness of PW");

    FiltrationComparison wrong_eq = c;
    wrong_eq.coincide_all = false;
    wrong_eq.rankwise_equal_fm = false; // false claim in the other direction
    bad = wrong_eq.verify();
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "RankwiseEqual(F,M)");

    FiltrationComparison divergent = c;
    divergent.mult = {{Rational(1), 7}};
    divergent.pw_refines_mult = true; // 4 and 5 are not values of {7}
    bad = divergent.verify();
    CHECK_FALSE(bad.empty());
}
