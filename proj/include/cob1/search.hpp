#pragma once

#include "cob1/hurwitz.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

namespace cob1::search {

/// What to enumerate: all valid data of the given degree over a genus-g
/// target with `points` branch points whose types lie in `types` (empty =
/// every type 2..degree). The degree/points guards keep accidental huge runs
/// out; raise them explicitly for bigger sweeps.
struct EnumSpec {
    int degree = 2;
    int points = 0;
    std::vector<int> types;
    int target_genus = 0;
    bool transitive_only = false;
    bool reduce_symmetry = false;
    int max_degree = 6;
    int max_points = 4;
};

/// Emits every valid datum in a fixed deterministic order (handle tuples,
/// then branch-cycle tuples, each lexicographic); the last branch cycle is
/// forced by the surface relation. Emitted data are unoriented (mode O).
/// Return false from the callback to stop early.
void enumerate(const EnumSpec& spec, const std::function<bool(const HurwitzData&)>& emit);

std::uint64_t count(const EnumSpec& spec);

/// Sphere data with very few branch points: one point never closes up, two
/// points of different types never close up, two points of equal type always
/// exist. The report holds the exhaustive counts behind those three claims.
struct NonexistenceReport {
    int degree = 2;
    std::map<int, std::uint64_t> single_point;              // type -> count (expected 0)
    std::map<std::pair<int, int>, std::uint64_t> mixed_pairs;   // {j,h}, j<h -> count (expected 0)
    std::map<int, std::uint64_t> equal_pairs;               // type -> count (expected > 0)

    bool consistent() const;
};

NonexistenceReport verify_nonexistence(int k);

/// Exhaustive check over sphere data with at most max_points branch points:
/// every valid datum has an even number of even-type branch points.
struct ParityReport {
    int degree = 2;
    int max_points = 0;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
};

ParityReport verify_parity(int k, int max_points);

/// Deterministic-in-seed random valid datum: handles and all but the last
/// branch cycle are drawn uniformly, the last cycle is forced by the relation
/// and the draw is retried (with derived sub-seeds) until it is a single
/// cycle. Throws std::runtime_error when the retry budget runs out.
HurwitzData random_valid_data(std::uint64_t seed, int k, int g, int r, Mode mode);

} // namespace cob1::search
