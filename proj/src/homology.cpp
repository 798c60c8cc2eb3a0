#include "cob1/homology.hpp"

#include <stdexcept>

namespace cob1::homology {

using fgab::FGAbelianGroup;
using fgab::Int;
using fgab::IntMatrix;

Int sym_group_homology_order(int i, int j)
{
    if (j < 0)
        throw std::invalid_argument("symmetric group index must be >= 0");
    switch (i) {
    case 0:
        return 0;                      // H_0 = Z always
    case 1:
        return j <= 1 ? Int(1) : Int(2);   // abelianization: trivial, then Z/2
    case 2:
        return j <= 3 ? Int(1) : Int(2);   // Schur multiplier: trivial up to S_3, then Z/2
    default:
        throw std::invalid_argument("homology degree must be 0, 1 or 2");
    }
}

BoundaryMap boundary_matrix(int i, int k, Mode mode)
{
    if (k < 2)
        throw std::invalid_argument("degree must be >= 2");
    if (i != 2 && i != 3)
        throw std::invalid_argument("boundary index must be 2 or 3");

    BoundaryMap out;
    const int cols = k - 1;   // one column per type j = 2..k
    std::vector<Int> source(static_cast<std::size_t>(cols));
    for (int j = 2; j <= k; ++j) {
        Int order = sym_group_homology_order(i - 2, k - j);
        if (mode == Mode::O && order == 0)
            order = 2;   // summands are tensored with Z/2 in the unoriented case
        source[static_cast<std::size_t>(j - 2)] = order;
    }
    std::vector<Int> target = {sym_group_homology_order(i - 1, k)};

    IntMatrix matrix(1, cols);
    out.column_known.assign(static_cast<std::size_t>(cols), true);
    for (int j = 2; j <= k; ++j) {
        const std::size_t col = static_cast<std::size_t>(j - 2);
        if (j % 2 == 1)
            continue;   // odd types map to zero
        if (target[0] == 1 || source[col] == 1)
            continue;   // trivial summand, entry forced to zero
        if (i == 2 || j == 2) {
            matrix.at(0, j - 2) = 1;   // hits the generator
        } else {
            // Higher even-type products in H_2(BS_k) are not pinned down;
            // record the column as unknown instead of guessing.
            out.column_known[col] = false;
        }
    }

    out.hom = fgab::Homomorphism{std::move(source), std::move(target), std::move(matrix)};
    return out;
}

ExactSequenceTrace exact_sequence(int k, Mode mode)
{
    if (k < 2)
        throw std::invalid_argument("degree must be >= 2");

    ExactSequenceTrace trace;
    trace.k = k;
    trace.mode = mode;
    trace.d3 = boundary_matrix(3, k, mode);
    trace.d2 = boundary_matrix(2, k, mode);
    trace.term_rel3 = FGAbelianGroup::from_orders(trace.d3.hom.source);
    trace.term_h2_sym = FGAbelianGroup::from_orders(trace.d3.hom.target);
    trace.term_rel2 = FGAbelianGroup::from_orders(trace.d2.hom.source);
    trace.term_h1_sym = FGAbelianGroup::from_orders(trace.d2.hom.target);

    // The middle group injects into Ker d2 once the map from H_2(BS_k) into
    // it is zero, i.e. once d3 surjects onto H_2(BS_k). Only the known
    // columns of d3 may be used; their image is a lower bound, so a trivial
    // cokernel of the restricted map settles the question exactly.
    fgab::Homomorphism d3_known;
    d3_known.target = trace.d3.hom.target;
    for (std::size_t col = 0; col < trace.d3.column_known.size(); ++col)
        if (trace.d3.column_known[col])
            d3_known.source.push_back(trace.d3.hom.source[col]);
    d3_known.matrix = trace.d3.hom.matrix.select_cols(trace.d3.column_known);
    if (!fgab::cokernel(d3_known).is_trivial())
        throw std::logic_error("the pinned columns of the degree-3 boundary map do not "
                               "surject onto H_2(BS_k); the middle group is not determined");

    trace.result = fgab::kernel(trace.d2.hom).group;
    return trace;
}

FGAbelianGroup h2_classifying(int k, Mode mode)
{
    return exact_sequence(k, mode).result;
}

} // namespace cob1::homology
