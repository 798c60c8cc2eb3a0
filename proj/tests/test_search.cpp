#include "cob1/search.hpp"
#include "test_support.hpp"

#include "cob1/cob2.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace cob1;
using namespace cob1::search;

namespace {

std::vector<HurwitzData> collect(const EnumSpec& spec)
{
    std::vector<HurwitzData> out;
    enumerate(spec, [&out](const HurwitzData& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

// all simultaneous conjugates of a datum, as a set of serialized keys
std::size_t conjugacy_orbit_size(const HurwitzData& d)
{
    std::vector<int> images(static_cast<std::size_t>(d.degree));
    std::iota(images.begin(), images.end(), 0);
    std::set<std::vector<std::vector<int>>> orbit;
    do {
        Perm g(images);
        std::vector<std::vector<int>> key;
        for (const HandlePair& h : d.handles) {
            std::vector<int> a(h.a.size()), b(h.b.size());
            for (std::size_t x = 0; x < h.a.size(); ++x) {
                a[static_cast<std::size_t>(g(static_cast<int>(x)))] = g(h.a[x]);
                b[static_cast<std::size_t>(g(static_cast<int>(x)))] = g(h.b[x]);
            }
            key.push_back(a);
            key.push_back(b);
        }
        for (const BranchPoint& bp : d.branch_points) {
            std::vector<int> c(bp.cycle.size());
            for (std::size_t t = 0; t < bp.cycle.size(); ++t)
                c[t] = g(bp.cycle[t]);
            auto min_it = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), min_it, c.end());
            key.push_back(c);
        }
        orbit.insert(std::move(key));
    } while (std::next_permutation(images.begin(), images.end()));
    return orbit.size();
}

} // namespace

TEST_CASE("enumeration of small sphere cells")
{
    SUBCASE("two type-3 points in degree 3 include the inverse pair")
    {
        EnumSpec spec;
        spec.degree = 3;
        spec.points = 2;
        spec.types = {3};
        auto data = collect(spec);
        bool found = false;
        for (const auto& d : data) {
            REQUIRE(validate(d).empty());
            if (d.branch_points[0].cycle == std::vector<int>{0, 1, 2} &&
                d.branch_points[1].cycle == std::vector<int>{0, 2, 1})
                found = true;
        }
        CHECK(found);
    }

    SUBCASE("a single branch point never closes up")
    {
        EnumSpec spec;
        spec.degree = 3;
        spec.points = 1;
        CHECK(count(spec) == 0);
    }

    SUBCASE("the empty cell holds exactly the trivial covering")
    {
        EnumSpec spec;
        spec.degree = 2;
        spec.points = 0;
        auto data = collect(spec);
        REQUIRE(data.size() == 1);
        CHECK(data[0].branch_points.empty());
        CHECK(data[0].handles.empty());
    }

    SUBCASE("every emitted datum is valid and unoriented")
    {
        EnumSpec spec;
        spec.degree = 4;
        spec.points = 3;
        for (const auto& d : collect(spec)) {
            CHECK(d.mode == Mode::O);
            CHECK(validate(d).empty());
        }
    }
}

TEST_CASE("enumeration bounds are enforced")
{
    EnumSpec too_big;
    too_big.degree = 7;
    too_big.points = 1;
    CHECK_THROWS_AS(count(too_big), std::invalid_argument);

    EnumSpec too_many;
    too_many.degree = 3;
    too_many.points = 5;
    CHECK_THROWS_AS(count(too_many), std::invalid_argument);

    too_many.max_points = 5;
    CHECK(count(too_many) >= 0);

    EnumSpec bad_type;
    bad_type.degree = 3;
    bad_type.points = 1;
    bad_type.types = {9};
    CHECK_THROWS_AS(count(bad_type), std::invalid_argument);
}

TEST_CASE("transitive filter")
{
    EnumSpec spec;
    spec.degree = 3;
    spec.points = 2;
    spec.types = {2};
    spec.transitive_only = true;
    CHECK(count(spec) == 0);   // two sheets move, one stays put

    spec.types = {3};
    CHECK(count(spec) > 0);
}

TEST_CASE("genus-1 cells include handle monodromies")
{
    EnumSpec spec;
    spec.degree = 2;
    spec.points = 2;
    spec.target_genus = 1;
    auto data = collect(spec);
    CHECK(!data.empty());
    for (const auto& d : data) {
        CHECK(d.handles.size() == 1);
        CHECK(validate(d).empty());
    }
    // every branch pair must be (01),(01) and every handle pair closes to id
    CHECK(data.size() == 4);
}

TEST_CASE("symmetry reduction counts multiply back with orbit sizes")
{
    for (int k = 2; k <= 4; ++k)
        for (int r = 0; r <= 2; ++r) {
            EnumSpec plain;
            plain.degree = k;
            plain.points = r;
            std::uint64_t all = count(plain);

            EnumSpec reduced = plain;
            reduced.reduce_symmetry = true;
            std::uint64_t rebuilt = 0;
            enumerate(reduced, [&](const HurwitzData& d) {
                rebuilt += conjugacy_orbit_size(d);
                return true;
            });
            CHECK(rebuilt == all);
        }
}

TEST_CASE("non-existence findings")
{
    for (int k = 2; k <= 5; ++k) {
        auto report = verify_nonexistence(k);
        CHECK(report.consistent());
        for (const auto& [type, n] : report.single_point)
            CHECK(n == 0);
        for (const auto& [pair, n] : report.mixed_pairs)
            CHECK(n == 0);
        for (const auto& [type, n] : report.equal_pairs)
            CHECK(n > 0);
    }

    auto smallest = verify_nonexistence(2);
    CHECK(smallest.equal_pairs.at(2) == 1);   // only the two-transposition datum
    CHECK(smallest.mixed_pairs.empty());
}

TEST_CASE("parity sweep")
{
    auto report = verify_parity(4, 3);
    CHECK(report.violations == 0);
    CHECK(report.instances > 0);

    auto tiny = verify_parity(2, 4);
    CHECK(tiny.violations == 0);
    CHECK(tiny.instances == 3);   // point counts 0, 2 and 4

    auto vacuous = verify_parity(3, 0);
    CHECK(vacuous.instances == 1);
    CHECK(vacuous.violations == 0);
}

TEST_CASE("random data generation")
{
    SUBCASE("deterministic in the seed")
    {
        auto a = random_valid_data(42, 5, 1, 3, Mode::SO);
        auto b = random_valid_data(42, 5, 1, 3, Mode::SO);
        CHECK(a == b);
        auto c = random_valid_data(43, 5, 1, 3, Mode::SO);
        CHECK(a != c);
    }

    SUBCASE("outputs validate across a seed sweep")
    {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            int k = 0, g = 0, r = 0;
            testing::feasible_cell(seed, k, g, r);
            Mode mode = seed % 2 == 0 ? Mode::SO : Mode::O;
            auto d = random_valid_data(seed, k, g, r, mode);
            CHECK(validate(d).empty());
            CHECK(d.branch_points.size() == static_cast<std::size_t>(r));
        }
    }

    SUBCASE("impossible cells exhaust the retry budget")
    {
        // one sphere branch point can never close the relation
        CHECK_THROWS_AS(random_valid_data(5, 3, 0, 1, Mode::SO), std::runtime_error);
    }

    SUBCASE("closing a genus-1 relation with one cycle")
    {
        auto d = random_valid_data(7, 3, 1, 1, Mode::SO);
        REQUIRE(validate(d).empty());
        Perm closing = Perm::from_cycle(3, d.branch_points[0].cycle);
        Perm handle_part = commutator(Perm(d.handles[0].a), Perm(d.handles[0].b));
        CHECK(compose(handle_part, closing).is_identity());
    }

    SUBCASE("argument validation")
    {
        CHECK_THROWS_AS(random_valid_data(1, 1, 0, 2, Mode::SO), std::invalid_argument);
        CHECK_THROWS_AS(random_valid_data(1, 3, -1, 2, Mode::SO), std::invalid_argument);
    }
}

TEST_CASE("sphere cells witness every basis class by sign assignment")
{
    // For each basis index there is an enumerated sphere datum that carries
    // the basis vector once signs are chosen suitably.
    for (int k = 2; k <= 5; ++k)
        for (int i = 2; i <= k; ++i) {
            EnumSpec spec;
            spec.degree = k;
            if (i == 2) {
                spec.points = 2;
                spec.types = {2};
            } else if (i % 2 == 1) {
                spec.points = 3;
                spec.types = {i};
            } else {
                spec.points = 4;
                spec.types = {2, i - 1, i};
            }
            auto target = cob2::basis_row(i, k, Mode::SO);
            bool witnessed = false;
            enumerate(spec, [&](const HurwitzData& d) {
                const std::size_t r = d.branch_points.size();
                for (std::uint32_t mask = 0; mask < (1u << r) && !witnessed; ++mask) {
                    HurwitzData signed_data = d;
                    signed_data.mode = Mode::SO;
                    for (std::size_t t = 0; t < r; ++t)
                        signed_data.branch_points[t].sign = (mask >> t) & 1 ? -1 : +1;
                    auto c = cob2::invariant(BranchedCoveringSet{k, Mode::SO, {signed_data}});
                    if (c == target)
                        witnessed = true;
                }
                return !witnessed;
            });
            CHECK(witnessed);
        }
}
