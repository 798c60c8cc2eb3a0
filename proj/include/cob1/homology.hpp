#pragma once

#include "cob1/common.hpp"
#include "cob1/fgab.hpp"

#include <vector>

namespace cob1::homology {

/// Low-degree homology of the symmetric group on j letters, as the order of
/// the cyclic group H_i(BS_j): 0 encodes Z, 1 the trivial group, 2 encodes
/// Z/2. Defined for i in {0, 1, 2} and every j >= 0 (S_0 and S_1 are trivial).
fgab::Int sym_group_homology_order(int i, int j);

/// A connecting map of the pair (total space, covering stratum), written on
/// the direct-sum presentation with one column per branch type j = 2..k.
/// Columns the literature does not pin down are flagged unknown and stored
/// as zero; they are never used for image computations.
struct BoundaryMap {
    fgab::Homomorphism hom;
    std::vector<bool> column_known;
};

/// i = 2: per-type H_0 summands -> H_1(BS_k); i = 3: per-type H_1 summands
/// -> H_2(BS_k). Even-type columns of the i = 2 map hit the generator, odd
/// ones vanish; only the type-2 column of the i = 3 map is pinned.
BoundaryMap boundary_matrix(int i, int k, Mode mode);

struct ExactSequenceTrace {
    int k = 2;
    Mode mode = Mode::SO;
    fgab::FGAbelianGroup term_rel3;    // direct sum of H_1(BS_{k-j}), j = 2..k
    fgab::FGAbelianGroup term_h2_sym;  // H_2(BS_k)
    fgab::FGAbelianGroup term_rel2;    // direct sum of H_0(BS_{k-j}) (mod 2 in O mode)
    fgab::FGAbelianGroup term_h1_sym;  // H_1(BS_k)
    BoundaryMap d3;
    BoundaryMap d2;
    fgab::FGAbelianGroup result;       // the middle group H_2 of the total space
};

/// Runs the five-term exact sequence: checks that the known part of d3
/// already surjects onto H_2(BS_k) (so the inflow map is zero), then reads
/// the middle group off as the kernel of d2. Throws std::logic_error if the
/// surjectivity check ever fails.
ExactSequenceTrace exact_sequence(int k, Mode mode);

/// The group of 2-dimensional cobordism classes of k-fold data, computed
/// through the exact sequence (never from a closed form).
fgab::FGAbelianGroup h2_classifying(int k, Mode mode);

} // namespace cob1::homology
