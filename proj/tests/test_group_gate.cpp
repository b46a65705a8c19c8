#include "conformal/errors.hpp"
#include "conformal/group_gate.hpp"

#include <doctest.h>

using namespace conformal;

TEST_CASE("degree duality") {
    CHECK(degree_duality_check({"S_4", {1, 2, 3, 4}}));
    CHECK(degree_duality_check({"B_3", {2, 4, 6}}));
    CHECK_FALSE(degree_duality_check({"D_4", {2, 4, 4, 6}}));
    CHECK_FALSE(degree_duality_check({"H_3", {2, 6, 10}}));
    CHECK_FALSE(degree_duality_check({"I_{2,3}", {2, 3}}));
    CHECK(degree_duality_check({"I_{2,4}", {2, 4}}));
    CHECK(degree_duality_check({"x", {5}}));
    CHECK_THROWS_AS(degree_duality_check({"x", {}}), RangeError);
}

TEST_CASE("distinct roots of binary forms") {
    using V = std::vector<Rational>;
    CHECK(distinct_root_count(V{0, 0, 1, 0}) == 2);      // x1^2 x2
    CHECK(distinct_root_count(V{1, 2, 1}) == 1);         // (x1 + x2)^2
    CHECK(distinct_root_count(V{-1, 0, 1}) == 2);        // x1^2 - x2^2
    CHECK(distinct_root_count(V{1, 0, 1}) == 2);         // complex pair
    CHECK(distinct_root_count(real_power_form(3)) == 3);
    CHECK(distinct_root_count(radial_power_form(3)) == 2);
    CHECK_THROWS_AS(distinct_root_count(V{0, 0}), RangeError);
}

TEST_CASE("power forms") {
    // Re (x1 + i x2)^2 = x1^2 - x2^2
    CHECK(real_power_form(2) == std::vector<Rational>{-1, 0, 1});
    // Im (x1 + i x2)^3 = 3 x1^2 x2 - x2^3
    CHECK(imag_power_form(3) == std::vector<Rational>{-1, 0, 3, 0});
    CHECK(radial_power_form(2) == std::vector<Rational>{1, 0, 2, 0, 1});
}

TEST_CASE("two-root search") {
    auto w = two_root_search({real_power_form(4), radial_power_form(2)});
    REQUIRE(w);
    CHECK(std::abs((*w)[0]) + std::abs((*w)[1]) == 2);
    CHECK_FALSE(two_root_search({real_power_form(3)}));
    CHECK_FALSE(two_root_search({real_power_form(6), radial_power_form(3)}));
    CHECK_FALSE(two_root_search({}));
    // the quadratic power alone is not a new generator
    CHECK_FALSE(two_root_search({radial_power_form(2)}, 0));
    auto c4 = two_root_search({real_power_form(4), imag_power_form(4), radial_power_form(2)}, 2);
    REQUIRE(c4);
    CHECK(((*c4)[0] != 0 || (*c4)[1] != 0));
}

TEST_CASE("catalog parsing") {
    CHECK(catalog_entry("S_3").group.degrees == std::vector<unsigned>{1, 2, 3});
    CHECK(catalog_entry("I2_5").group.name == "I_{2,5}");
    CHECK(catalog_entry("I_{2,5}").group.degrees == std::vector<unsigned>{2, 5});
    CHECK(catalog_entry("D_4").group.degrees == std::vector<unsigned>{2, 4, 4, 6});
    CHECK(catalog_entry("G_2").group.degrees == std::vector<unsigned>{2, 6});
    CHECK(catalog_entry("A_4").dependent_extra);
    CHECK_THROWS_AS(catalog_entry("E_8"), UnknownGroupError);
    CHECK_THROWS_AS(catalog_entry("D_1"), UnknownGroupError);
    CHECK_THROWS_AS(catalog_entry("I_{2,1}"), UnknownGroupError);
}

TEST_CASE("builtin catalog verdicts") {
    auto cat = builtin_catalog();
    CHECK(cat.size() >= 20);
    for (const auto& e : cat) {
        auto c = classify(e);
        INFO(c.name);
        CHECK(c.agrees());
    }
    auto d4 = classify(catalog_entry("D_4"));
    CHECK_FALSE(d4.raw_duality);
    CHECK(d4.dual_duality);
    CHECK(classify(catalog_entry("H_3")).computed == Verdict::DoesNot);
    CHECK(classify(catalog_entry("I_{2,4}")).computed == Verdict::Admits);
    CHECK(classify(catalog_entry("C_3")).computed == Verdict::DoesNot);
    CHECK(verdict_name(Verdict::DoesNot) == "does_not");
}
