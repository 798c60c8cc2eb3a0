#include "cob1/io.hpp"

#include "cob1/search.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace cob1;

TEST_CASE("the documented example parses")
{
    const std::string text = R"({"degree": 3, "mode": "so", "components": [
        {"target_genus": 1,
         "handles": [{"a": [1,2,0], "b": [0,2,1]}],
         "branch_points": [{"cycle": [0,1,2], "sign": 1}]}]})";
    auto set = io::parse_document(text);
    CHECK(set.degree == 3);
    CHECK(set.mode == Mode::SO);
    REQUIRE(set.components.size() == 1);
    CHECK(set.components[0].target_genus == 1);
    CHECK(set.components[0].handles[0].a == std::vector<int>{1, 2, 0});
    CHECK(set.components[0].branch_points[0].cycle == std::vector<int>{0, 1, 2});
    CHECK(set.components[0].branch_points[0].sign == 1);
}

TEST_CASE("serialization round trips")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int k = 0, g = 0, r = 0;
        testing::feasible_cell(seed, k, g, r);
        Mode mode = seed % 2 == 0 ? Mode::SO : Mode::O;
        auto d = search::random_valid_data(seed, k, g, r, mode);
        BranchedCoveringSet set{k, mode, {d}};

        CHECK(io::parse_document(io::serialize(set)) == set);
        CHECK(io::parse_document(io::serialize(set, false)) == set);
        // serialization is stable across a round trip
        CHECK(io::serialize(io::parse_document(io::serialize(set))) == io::serialize(set));
    }
}

TEST_CASE("sign handling per mode")
{
    const std::string unsigned_doc = R"({"degree": 2, "mode": "o", "components": [
        {"target_genus": 0, "handles": [],
         "branch_points": [{"cycle": [0,1]}, {"cycle": [0,1]}]}]})";
    auto set = io::parse_document(unsigned_doc);
    CHECK(set.mode == Mode::O);
    CHECK(validate(set).empty());

    const std::string sign_in_o = R"({"degree": 2, "mode": "o", "components": [
        {"target_genus": 0, "handles": [],
         "branch_points": [{"cycle": [0,1], "sign": 1}, {"cycle": [0,1]}]}]})";
    CHECK_THROWS_AS(io::parse_document(sign_in_o), InvalidDataError);

    const std::string missing_sign = R"({"degree": 2, "mode": "so", "components": [
        {"target_genus": 0, "handles": [],
         "branch_points": [{"cycle": [0,1]}, {"cycle": [0,1], "sign": -1}]}]})";
    CHECK_THROWS_AS(io::parse_document(missing_sign), InvalidDataError);
}

TEST_CASE("structural violations are collected, not raised one at a time")
{
    const std::string broken = R"({"degree": "x", "mode": "maybe", "extra": 1, "components": [
        {"target_genus": 0, "handles": [{"a": [0, "q"], "b": [1, 0]}],
         "branch_points": [{"cycle": [0, 1]}]}]})";
    try {
        io::parse_document(broken);
        FAIL("expected InvalidDataError");
    } catch (const InvalidDataError& e) {
        CHECK(e.violations().size() >= 4);
    }
}

TEST_CASE("parse failures")
{
    CHECK_THROWS_AS(io::parse_document("not json at all"), InvalidDataError);
    CHECK_THROWS_AS(io::parse_document("[1,2,3]"), InvalidDataError);
    CHECK_THROWS_AS(io::parse_document(R"({"degree": 2, "mode": "so"})"), InvalidDataError);
}

TEST_CASE("structural parse does not hide semantic validation")
{
    // parses fine, but the relation fails; validate() reports it
    const std::string text = R"({"degree": 3, "mode": "so", "components": [
        {"target_genus": 0, "handles": [],
         "branch_points": [{"cycle": [0,1,2], "sign": 1}]}]})";
    auto set = io::parse_document(text);
    auto violations = validate(set);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("relation") != std::string::npos);
}
