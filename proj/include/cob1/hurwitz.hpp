#pragma once

#include "cob1/common.hpp"
#include "cob1/perm.hpp"

#include <vector>

namespace cob1 {

/// One branch point: its monodromy is the single j-cycle given by `cycle`
/// (distinct sheet indices, read cyclically left to right). The sign orients
/// the singular point in SO mode and is ignored in O mode.
struct BranchPoint {
    std::vector<int> cycle;
    int sign = +1;

    bool operator==(const BranchPoint&) const = default;
};

/// Monodromies of one handle of the target surface (raw image arrays; they
/// are checked by validate(), not on construction).
struct HandlePair {
    std::vector<int> a;
    std::vector<int> b;

    bool operator==(const HandlePair&) const = default;
};

/// Monodromy data of a k-fold simple branched covering over a connected
/// closed oriented surface of genus target_genus. The defining relation is
///
///   [a_1,b_1] ... [a_g,b_g] sigma_1 ... sigma_r = id
///
/// with all products taken left to right in the listed order.
struct HurwitzData {
    int degree = 2;
    Mode mode = Mode::SO;
    int target_genus = 0;
    std::vector<HandlePair> handles;
    std::vector<BranchPoint> branch_points;

    bool operator==(const HurwitzData&) const = default;
};

/// Covering data over a disjoint union of connected targets; all components
/// share the set's degree and mode. May be empty.
struct BranchedCoveringSet {
    int degree = 2;
    Mode mode = Mode::SO;
    std::vector<HurwitzData> components;

    bool operator==(const BranchedCoveringSet&) const = default;
};

/// Reports every violated invariant (empty result = valid). Never throws on
/// bad data; malformed permutations suppress only the checks that need them.
std::vector<std::string> validate(const HurwitzData& d);
std::vector<std::string> validate(const BranchedCoveringSet& s);

void require_valid(const HurwitzData& d);          // throws InvalidDataError
void require_valid(const BranchedCoveringSet& s);  // throws InvalidDataError

/// All monodromy generators (handle pairs then branch cycles) as permutations.
/// Pre: the raw arrays are well-formed.
std::vector<Perm> monodromy_generators(const HurwitzData& d);

/// The left-to-right product of handle commutators and branch cycles.
Perm relation_product(const HurwitzData& d);

/// Partition of the sheets into orbits of the generated subgroup; one orbit
/// per connected component of the source surface.
std::vector<std::vector<int>> source_components(const HurwitzData& d);

struct ComponentTopology {
    std::vector<int> orbit;
    int euler_characteristic = 2;
    int genus = 0;
};

/// Per-component Euler characteristic and genus: over a genus-g target,
/// chi = |orbit| * (2 - 2g) - sum (j - 1) over branch cycles inside the orbit.
std::vector<ComponentTopology> euler_characteristics(const HurwitzData& d);

BranchedCoveringSet disjoint_union(const BranchedCoveringSet& s, const BranchedCoveringSet& t);

/// Orientation reversal: flips every branch-point sign in SO mode and leaves
/// the data untouched in O mode.
BranchedCoveringSet negate(const BranchedCoveringSet& s);

} // namespace cob1
