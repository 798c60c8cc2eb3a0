#pragma once

#include "cob1/hurwitz.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cob1::cob2 {

/// The complete invariant of 2-dimensional covering data: entries[j-2] is
/// c_j, the signed (SO) or mod-2 (O) count of branch points of type j, for
/// j = 2..k.
struct ClassVector {
    int degree = 2;
    Mode mode = Mode::SO;
    std::vector<std::int64_t> entries;

    bool operator==(const ClassVector&) const = default;
};

/// Coordinates with respect to the distinguished basis rows: lambda_2 ..
/// lambda_k in SO mode, lambda_3 .. lambda_k in O mode (there is no basis
/// class of type 2 in the unoriented group).
struct BasisCoeffs {
    int degree = 2;
    Mode mode = Mode::SO;
    std::vector<std::int64_t> coeffs;

    bool operator==(const BasisCoeffs&) const = default;
};

ClassVector zero_vector(int k, Mode mode);

/// The basis row for index i: type 2 contributes (2,0,...,0); odd i the unit
/// vector at i; even i > 2 a 1 at position 2 and a 1 at position i.
ClassVector basis_row(int i, int k, Mode mode);

ClassVector invariant(const BranchedCoveringSet& s);

/// The image condition: the sum of the even-type entries is even (SO) or
/// zero (O). Exactly the vectors of valid covering data satisfy it.
bool in_image(const ClassVector& c);

bool cobordant(const BranchedCoveringSet& a, const BranchedCoveringSet& b);

BasisCoeffs decompose(const ClassVector& c);   // throws NotInImageError
ClassVector recompose(const BasisCoeffs& lambda);

/// Canonical sphere witness of the i-th basis class in degree k: every
/// component has target genus 0; signed points cancel so that the invariant
/// is exactly basis_row(i, k, mode). In O mode i must be >= 3.
BranchedCoveringSet generator(int i, int k, Mode mode);

/// A sphere representative of any in-image class vector, as a disjoint union
/// of generator witnesses (negated for negative coefficients).
BranchedCoveringSet realize(const ClassVector& c);   // throws NotInImageError

struct MinimalSearchOptions {
    std::uint64_t budget = 10'000'000;   // handle pairs visited before giving up
    int threads = 1;                     // deterministic result requires 1
};

/// Searches for a witness of the i-th basis class with the minimum number of
/// branch points: one i-point over a torus for odd i, a 2-point and an
/// i-point over a torus for even i > 2, and the two-point sphere witness for
/// i = 2. Nullopt when the budget runs out.
std::optional<BranchedCoveringSet> search_minimal(int i, int k, Mode mode,
                                                  MinimalSearchOptions opts = {});

std::string format_class_vector(const ClassVector& c);
ClassVector parse_class_vector(int k, Mode mode, const std::string& csv);
std::string format_basis_coeffs(const BasisCoeffs& lambda);

} // namespace cob1::cob2
