#include "cob1/hurwitz.hpp"

#include "cob1/cob2.hpp"
#include "cob1/search.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <numeric>

using namespace cob1;

namespace {

// two type-2 points over the sphere, padded with trivial sheets to degree k
HurwitzData two_point_sphere(int k, Mode mode = Mode::SO)
{
    HurwitzData d;
    d.degree = k;
    d.mode = mode;
    d.branch_points = {{{0, 1}, +1}, {{0, 1}, +1}};
    return d;
}

} // namespace

TEST_CASE("validation of the worked examples")
{
    SUBCASE("two equal type-2 points close up")
    {
        CHECK(validate(two_point_sphere(2)).empty());
        CHECK(validate(two_point_sphere(5)).empty());
    }

    SUBCASE("a single branch point cannot satisfy the relation")
    {
        HurwitzData d;
        d.degree = 3;
        d.branch_points = {{{0, 1, 2}, +1}};
        auto violations = validate(d);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("relation") != std::string::npos);
    }

    SUBCASE("the trivial double covering is valid")
    {
        HurwitzData d;
        d.degree = 2;
        CHECK(validate(d).empty());
    }
}

TEST_CASE("validation reports every violation")
{
    HurwitzData d;
    d.degree = 3;
    d.target_genus = 1;
    d.handles = {{{0, 0, 1}, {1, 0, 2}}};       // 'a' is not a bijection
    d.branch_points = {{{0, 0}, +1},            // repeated cycle entry
                       {{1, 2}, 7}};            // bad sign
    auto violations = validate(d);
    CHECK(violations.size() == 3);

    HurwitzData genus_mismatch;
    genus_mismatch.degree = 2;
    genus_mismatch.target_genus = 2;
    genus_mismatch.handles = {{{0, 1}, {0, 1}}};
    CHECK(validate(genus_mismatch).size() == 1);

    HurwitzData tiny;
    tiny.degree = 1;
    CHECK(validate(tiny).size() == 1);

    // one transposition: the relation fails and the orbit {0,1} has odd defect
    HurwitzData odd_defect;
    odd_defect.degree = 2;
    odd_defect.branch_points = {{{0, 1}, +1}};
    auto odd_violations = validate(odd_defect);
    REQUIRE(odd_violations.size() == 2);
    CHECK(odd_violations[0].find("relation") != std::string::npos);
    CHECK(odd_violations[1].find("odd") != std::string::npos);
}

TEST_CASE("source components")
{
    for (int k = 2; k <= 6; ++k) {
        auto comps = source_components(two_point_sphere(k));
        CHECK(comps.size() == static_cast<std::size_t>(k - 1));
        CHECK(comps[0] == std::vector<int>{0, 1});
    }

    HurwitzData nothing;
    nothing.degree = 3;
    CHECK(source_components(nothing).size() == 3);

    // a genus-1 witness whose handle commutator is a 3-cycle: the branch
    // point closing it up makes the datum transitive
    bool found = false;
    for (int ia = 0; ia < 6 && !found; ++ia)
        for (int ib = 0; ib < 6 && !found; ++ib) {
            std::vector<int> imgs_a{0, 1, 2}, imgs_b{0, 1, 2};
            for (int t = 0; t < ia; ++t)
                std::next_permutation(imgs_a.begin(), imgs_a.end());
            for (int t = 0; t < ib; ++t)
                std::next_permutation(imgs_b.begin(), imgs_b.end());
            Perm a(imgs_a), b(imgs_b);
            Perm c = commutator(a, b);
            if (!c.is_single_j_cycle(3))
                continue;
            HurwitzData d;
            d.degree = 3;
            d.target_genus = 1;
            d.handles = {{a.images(), b.images()}};
            d.branch_points = {{c.inverse().cycles()[0], +1}};
            REQUIRE(validate(d).empty());
            CHECK(source_components(d).size() == 1);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("euler characteristics and genus")
{
    SUBCASE("two-point sphere data")
    {
        auto tops = euler_characteristics(two_point_sphere(2));
        REQUIRE(tops.size() == 1);
        CHECK(tops[0].euler_characteristic == 2);
        CHECK(tops[0].genus == 0);
    }

    SUBCASE("one type-3 point over the torus gives a genus-2 source")
    {
        auto witness = cob2::search_minimal(3, 3, Mode::SO);
        REQUIRE(witness.has_value());
        auto tops = euler_characteristics(witness->components.at(0));
        REQUIRE(tops.size() == 1);
        CHECK(tops[0].euler_characteristic == -2);
        CHECK(tops[0].genus == 2);
    }

    SUBCASE("type {2,4} over the torus gives a genus-3 source")
    {
        auto witness = cob2::search_minimal(4, 4, Mode::SO);
        REQUIRE(witness.has_value());
        auto tops = euler_characteristics(witness->components.at(0));
        REQUIRE(tops.size() == 1);
        CHECK(tops[0].euler_characteristic == -4);
        CHECK(tops[0].genus == 3);
    }

    SUBCASE("invalid data are rejected")
    {
        HurwitzData d;
        d.degree = 3;
        d.branch_points = {{{0, 1, 2}, +1}};
        CHECK_THROWS_AS(euler_characteristics(d), InvalidDataError);
    }
}

TEST_CASE("disjoint union and negation")
{
    BranchedCoveringSet empty{4, Mode::SO, {}};
    BranchedCoveringSet f2{4, Mode::SO, {two_point_sphere(4)}};

    CHECK(disjoint_union(empty, f2) == f2);
    CHECK(disjoint_union(f2, empty) == f2);
    CHECK(negate(negate(f2)) == f2);

    auto c = cob2::invariant(negate(f2));
    CHECK(c.entries == std::vector<std::int64_t>{-2, 0, 0});

    BranchedCoveringSet other_degree{5, Mode::SO, {}};
    BranchedCoveringSet other_mode{4, Mode::O, {}};
    CHECK_THROWS_AS(disjoint_union(f2, other_degree), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_union(f2, other_mode), std::invalid_argument);

    BranchedCoveringSet unoriented{4, Mode::O, {two_point_sphere(4, Mode::O)}};
    CHECK(negate(unoriented) == unoriented);
}

TEST_CASE("randomized data satisfy the Riemann-Hurwitz bookkeeping")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int k = 0, g = 0, r = 0;
        testing::feasible_cell(seed, k, g, r);
        auto d = search::random_valid_data(seed, k, g, r, Mode::SO);
        REQUIRE(validate(d).empty());

        int defect = 0;
        for (const auto& bp : d.branch_points)
            defect += static_cast<int>(bp.cycle.size()) - 1;
        CHECK(defect % 2 == 0);

        int chi_sum = 0;
        for (const auto& top : euler_characteristics(d)) {
            CHECK(top.euler_characteristic % 2 == 0);
            CHECK(top.genus >= 0);
            CHECK(top.euler_characteristic == 2 - 2 * top.genus);
            chi_sum += top.euler_characteristic;
        }
        CHECK(chi_sum == k * (2 - 2 * g) - defect);
    }
}
