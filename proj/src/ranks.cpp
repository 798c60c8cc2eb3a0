#include "cob1/ranks.hpp"

#include <stdexcept>

namespace cob1::ranks {

using fgab::Int;

std::vector<Int> partition_counts_up_to(int max_i)
{
    if (max_i < 0)
        throw std::invalid_argument("partition argument must be non-negative");
    // Coin DP over part sizes 1..max_i.
    std::vector<Int> table(static_cast<std::size_t>(max_i) + 1, 0);
    table[0] = 1;
    for (int part = 1; part <= max_i; ++part)
        for (int s = part; s <= max_i; ++s)
            table[static_cast<std::size_t>(s)] += table[static_cast<std::size_t>(s - part)];
    return table;
}

Int partition_count(int i)
{
    return partition_counts_up_to(i)[static_cast<std::size_t>(i)];
}

namespace {

// Sum of pi(0..limit); empty when limit < 0.
Int partition_prefix_sum(const std::vector<Int>& table, int limit)
{
    Int sum = 0;
    for (int i = 0; i <= limit; ++i)
        sum += table[static_cast<std::size_t>(i)];
    return sum;
}

Int closed_form(const std::vector<Int>& table, int n, int k, Mode mode)
{
    if (n % 4 == 0) {
        int m = n / 4;
        return Int(k - 1) * partition_prefix_sum(table, m - 1) + table[static_cast<std::size_t>(m)];
    }
    if (mode == Mode::SO && n % 4 == 2) {
        int m = (n + 2) / 4;
        return Int(k - 1) * partition_prefix_sum(table, m - 1);
    }
    return 0;
}

} // namespace

RankBreakdown rank_cob(const RankQuery& q)
{
    if (q.n < 0)
        throw std::invalid_argument("dimension must be non-negative");
    if (q.k < 2)
        throw std::invalid_argument("covering degree must be >= 2");

    auto table = partition_counts_up_to(q.n / 4 + 1);

    RankBreakdown out;
    out.multiplicity = q.k - 1;
    out.omega_n = (q.n % 4 == 0) ? table[static_cast<std::size_t>(q.n / 4)] : Int(0);
    if (q.mode == Mode::SO) {
        // Bordism of the oriented normal-bundle classifying space in dimension
        // n-2: a partition prefix sum for even n >= 2, zero otherwise.
        out.summand = (q.n % 2 == 0 && q.n >= 2) ? partition_prefix_sum(table, (q.n - 2) / 4) : Int(0);
    } else {
        // Twisted bordism of the unoriented classifying space: only survives
        // in dimensions divisible by 4.
        out.summand = (q.n % 4 == 0 && q.n >= 4) ? partition_prefix_sum(table, (q.n - 1) / 4) : Int(0);
    }
    out.total = out.omega_n + Int(out.multiplicity) * out.summand;

    // The breakdown must reproduce the one-line closed form; a mismatch means
    // an internal error, not bad input.
    if (out.total != closed_form(table, q.n, q.k, q.mode))
        throw std::logic_error("rank breakdown disagrees with the closed form");
    return out;
}

} // namespace cob1::ranks
