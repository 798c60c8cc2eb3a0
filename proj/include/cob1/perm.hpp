#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cob1 {

/// A permutation of the sheets {0, ..., k-1}, stored as its image array:
/// images()[i] is where sheet i goes.
class Perm {
public:
    /// Identity permutation of the given degree (degree >= 1).
    explicit Perm(int degree);

    /// Builds from an image array; throws std::invalid_argument unless the
    /// array is a bijection of {0, ..., k-1}.
    explicit Perm(std::vector<int> images);

    /// Promotes a single cycle, written as a list of distinct sheet indices
    /// read cyclically left to right, to a permutation of the given degree.
    static Perm from_cycle(int degree, const std::vector<int>& cycle);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;

    /// Full cycle decomposition including fixed points; every cycle starts at
    /// its smallest element and cycles are ordered by that element.
    std::vector<std::vector<int>> cycles() const;

    /// Cycle lengths in decreasing order; they sum to degree().
    std::vector<int> cycle_type() const;

    /// True iff the cycle type is {j, 1, ..., 1}, i.e. exactly one j-cycle
    /// and fixed points elsewhere.
    bool is_single_j_cycle(int j) const;

    /// +1 for even permutations, -1 for odd ones.
    int sign() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> images_;
};

/// "Apply p, then q": the result maps i to q(p(i)). This left-to-right
/// convention is used everywhere, in particular in the surface relation.
Perm compose(const Perm& p, const Perm& q);

/// a b a^-1 b^-1, composed left to right.
Perm commutator(const Perm& a, const Perm& b);

/// Orbits of the subgroup generated by the given permutations, as a partition
/// of {0, ..., degree-1}; each orbit sorted, orbits ordered by smallest element.
std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& generators);

/// Cycle notation with fixed points omitted, e.g. "(0 1)(2 4 3)"; "()" for id.
std::string to_cycle_string(const Perm& p);

} // namespace cob1
