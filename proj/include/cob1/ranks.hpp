#pragma once

#include "cob1/common.hpp"
#include "cob1/fgab.hpp"

namespace cob1::ranks {

/// Number of partitions of i into positive integers, pi(0) = 1.
fgab::Int partition_count(int i);

/// pi(0), ..., pi(max_i) in one table.
std::vector<fgab::Int> partition_counts_up_to(int max_i);

struct RankQuery {
    int n = 0;      // dimension, >= 0
    int k = 2;      // covering degree, >= 2
    Mode mode = Mode::SO;
};

/// The rank of the degree-k cobordism group in dimension n, split into the
/// rank of the n-dimensional oriented bordism group and the per-type summand
/// coming from the (n-2)-dimensional singular locus, counted k-1 times.
struct RankBreakdown {
    fgab::Int total;
    fgab::Int omega_n;
    fgab::Int summand;
    int multiplicity = 0;   // k - 1
};

RankBreakdown rank_cob(const RankQuery& q);

} // namespace cob1::ranks
