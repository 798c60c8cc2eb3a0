#include "cob1/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cob1::search {

namespace {

std::vector<int> sorted_types(const EnumSpec& spec)
{
    std::vector<int> types = spec.types;
    if (types.empty()) {
        for (int j = 2; j <= spec.degree; ++j)
            types.push_back(j);
        return types;
    }
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    for (int j : types)
        if (j < 2 || j > spec.degree)
            throw std::invalid_argument("branch type " + std::to_string(j) + " out of range 2..k");
    return types;
}

// All single cycles of the given length in lex order: supports in subset-lex
// order, the smallest support element first, remaining entries permuted.
void append_cycles_of_length(int degree, int length, std::vector<std::vector<int>>& out)
{
    std::vector<int> support(static_cast<std::size_t>(length));
    std::iota(support.begin(), support.end(), 0);
    for (;;) {
        std::vector<int> rest(support.begin() + 1, support.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> cycle{support[0]};
            cycle.insert(cycle.end(), rest.begin(), rest.end());
            out.push_back(std::move(cycle));
        } while (std::next_permutation(rest.begin(), rest.end()));
        // next support subset in lex order
        int pos = length - 1;
        while (pos >= 0 && support[static_cast<std::size_t>(pos)] == degree - length + pos)
            --pos;
        if (pos < 0)
            break;
        ++support[static_cast<std::size_t>(pos)];
        for (int t = pos + 1; t < length; ++t)
            support[static_cast<std::size_t>(t)] = support[static_cast<std::size_t>(t - 1)] + 1;
    }
}

std::vector<std::vector<int>> all_cycles(int degree, const std::vector<int>& types)
{
    std::vector<std::vector<int>> out;
    for (int j : types)
        append_cycles_of_length(degree, j, out);
    return out;
}

// The unique nontrivial cycle of p, min-first, when p is a single cycle of an
// allowed length; empty otherwise.
std::vector<int> closing_cycle(const Perm& p, const std::vector<bool>& type_allowed)
{
    std::vector<int> cycle;
    int moved = -1;
    for (int i = 0; i < p.degree(); ++i)
        if (p(i) != i) {
            moved = i;
            break;
        }
    if (moved < 0)
        return cycle;
    int x = moved;
    do {
        cycle.push_back(x);
        x = p(x);
    } while (x != moved);
    // all other points must be fixed
    int moved_count = 0;
    for (int i = 0; i < p.degree(); ++i)
        if (p(i) != i)
            ++moved_count;
    if (moved_count != static_cast<int>(cycle.size()))
        return {};
    if (!type_allowed[cycle.size()])
        return {};
    return cycle;
}

std::vector<int> conjugated_cycle(const std::vector<int>& cycle, const Perm& g)
{
    std::vector<int> out(cycle.size());
    for (std::size_t t = 0; t < cycle.size(); ++t)
        out[t] = g(cycle[t]);
    auto min_it = std::min_element(out.begin(), out.end());
    std::rotate(out.begin(), min_it, out.end());
    return out;
}

std::vector<int> conjugated_images(const std::vector<int>& images, const Perm& g)
{
    std::vector<int> out(images.size());
    for (std::size_t x = 0; x < images.size(); ++x)
        out[static_cast<std::size_t>(g(static_cast<int>(x)))] = g(images[x]);
    return out;
}

// Comparison key under simultaneous conjugation: handle arrays then cycles.
std::vector<std::vector<int>> conjugacy_key(const HurwitzData& d, const Perm& g)
{
    std::vector<std::vector<int>> key;
    for (const HandlePair& h : d.handles) {
        key.push_back(conjugated_images(h.a, g));
        key.push_back(conjugated_images(h.b, g));
    }
    for (const BranchPoint& bp : d.branch_points)
        key.push_back(conjugated_cycle(bp.cycle, g));
    return key;
}

bool is_canonical_representative(const HurwitzData& d, const std::vector<Perm>& full_group)
{
    const Perm id(d.degree);
    auto base = conjugacy_key(d, id);
    for (const Perm& g : full_group)
        if (conjugacy_key(d, g) < base)
            return false;
    return true;
}

std::vector<Perm> symmetric_group(int degree)
{
    std::vector<Perm> out;
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    do {
        out.push_back(Perm(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

} // namespace

void enumerate(const EnumSpec& spec, const std::function<bool(const HurwitzData&)>& emit)
{
    if (spec.degree < 2)
        throw std::invalid_argument("degree must be >= 2");
    if (spec.points < 0 || spec.target_genus < 0)
        throw std::invalid_argument("points and target genus must be >= 0");
    if (spec.degree > spec.max_degree)
        throw std::invalid_argument("degree exceeds the enumeration bound (" +
                                    std::to_string(spec.max_degree) + "); raise it explicitly");
    if (spec.points > spec.max_points)
        throw std::invalid_argument("branch point count exceeds the enumeration bound (" +
                                    std::to_string(spec.max_points) + "); raise it explicitly");

    const int k = spec.degree;
    const int r = spec.points;
    const int g = spec.target_genus;
    const std::vector<int> types = sorted_types(spec);
    std::vector<bool> type_allowed(static_cast<std::size_t>(k) + 1, false);
    for (int j : types)
        type_allowed[static_cast<std::size_t>(j)] = true;

    const auto cycles = all_cycles(k, types);
    std::vector<Perm> cycle_perms;
    cycle_perms.reserve(cycles.size());
    for (const auto& c : cycles)
        cycle_perms.push_back(Perm::from_cycle(k, c));

    const std::vector<Perm> group = symmetric_group(k);
    const Perm id(k);

    // Handle tuples (a_1, b_1, ..., a_g, b_g) by odometer over the group.
    std::vector<std::size_t> handle_idx(static_cast<std::size_t>(2 * g), 0);
    bool handles_done = false;
    while (!handles_done) {
        Perm base = id;
        for (int t = 0; t < g; ++t)
            base = compose(base, commutator(group[handle_idx[static_cast<std::size_t>(2 * t)]],
                                            group[handle_idx[static_cast<std::size_t>(2 * t + 1)]]));

        auto build_and_emit = [&](const std::vector<std::size_t>& prefix,
                                  const std::vector<int>& last_cycle) -> bool {
            HurwitzData d;
            d.degree = k;
            d.mode = Mode::O;
            d.target_genus = g;
            for (int t = 0; t < g; ++t)
                d.handles.push_back({group[handle_idx[static_cast<std::size_t>(2 * t)]].images(),
                                     group[handle_idx[static_cast<std::size_t>(2 * t + 1)]].images()});
            for (std::size_t idx : prefix)
                d.branch_points.push_back({cycles[idx], +1});
            if (!last_cycle.empty())
                d.branch_points.push_back({last_cycle, +1});
            if (spec.transitive_only && source_components(d).size() != 1)
                return true;
            if (spec.reduce_symmetry && !is_canonical_representative(d, group))
                return true;
            return emit(d);
        };

        if (r == 0) {
            if (base.is_identity() && !build_and_emit({}, {}))
                return;
        } else if (!cycles.empty()) {
            // Choose the first r-1 cycles freely; the relation forces the last.
            std::vector<std::size_t> prefix(static_cast<std::size_t>(r - 1), 0);
            std::vector<Perm> running{base};   // running[t] = base * c_1 * ... * c_t
            for (int t = 0; t < r - 1; ++t)
                running.push_back(compose(running.back(), cycle_perms[0]));
            for (;;) {
                std::vector<int> last = closing_cycle(running.back().inverse(), type_allowed);
                if (!last.empty() && !build_and_emit(prefix, last))
                    return;
                // advance the odometer, refreshing running products
                int pos = r - 2;
                while (pos >= 0 && prefix[static_cast<std::size_t>(pos)] + 1 == cycles.size())
                    --pos;
                if (pos < 0)
                    break;
                ++prefix[static_cast<std::size_t>(pos)];
                for (int t = pos + 1; t < r - 1; ++t)
                    prefix[static_cast<std::size_t>(t)] = 0;
                for (int t = pos; t < r - 1; ++t)
                    running[static_cast<std::size_t>(t) + 1] =
                        compose(running[static_cast<std::size_t>(t)],
                                cycle_perms[prefix[static_cast<std::size_t>(t)]]);
            }
        }

        // advance the handle odometer
        int pos = 2 * g - 1;
        while (pos >= 0 && handle_idx[static_cast<std::size_t>(pos)] + 1 == group.size())
            --pos;
        if (pos < 0) {
            handles_done = true;
        } else {
            ++handle_idx[static_cast<std::size_t>(pos)];
            for (int t = pos + 1; t < 2 * g; ++t)
                handle_idx[static_cast<std::size_t>(t)] = 0;
        }
    }
}

std::uint64_t count(const EnumSpec& spec)
{
    std::uint64_t n = 0;
    enumerate(spec, [&n](const HurwitzData&) {
        ++n;
        return true;
    });
    return n;
}

bool NonexistenceReport::consistent() const
{
    for (const auto& [type, n] : single_point)
        if (n != 0)
            return false;
    for (const auto& [pair, n] : mixed_pairs)
        if (n != 0)
            return false;
    for (const auto& [type, n] : equal_pairs)
        if (n == 0)
            return false;
    return !equal_pairs.empty();
}

NonexistenceReport verify_nonexistence(int k)
{
    NonexistenceReport report;
    report.degree = k;
    for (int j = 2; j <= k; ++j) {
        EnumSpec spec;
        spec.degree = k;
        spec.points = 1;
        spec.types = {j};
        report.single_point[j] = count(spec);
    }
    for (int j = 2; j <= k; ++j)
        for (int h = j + 1; h <= k; ++h) {
            EnumSpec spec;
            spec.degree = k;
            spec.points = 2;
            spec.types = {j, h};
            std::uint64_t mixed = 0;
            enumerate(spec, [&](const HurwitzData& d) {
                if (d.branch_points[0].cycle.size() != d.branch_points[1].cycle.size())
                    ++mixed;
                return true;
            });
            report.mixed_pairs[{j, h}] = mixed;
        }
    for (int j = 2; j <= k; ++j) {
        EnumSpec spec;
        spec.degree = k;
        spec.points = 2;
        spec.types = {j};
        report.equal_pairs[j] = count(spec);
    }
    return report;
}

ParityReport verify_parity(int k, int max_points)
{
    ParityReport report;
    report.degree = k;
    report.max_points = max_points;
    for (int r = 0; r <= max_points; ++r) {
        EnumSpec spec;
        spec.degree = k;
        spec.points = r;
        spec.max_points = std::max(r, spec.max_points);
        enumerate(spec, [&](const HurwitzData& d) {
            int even_type = 0;
            for (const BranchPoint& bp : d.branch_points)
                if (bp.cycle.size() % 2 == 0)
                    ++even_type;
            ++report.instances;
            if (even_type % 2 != 0)
                ++report.violations;
            return true;
        });
    }
    return report;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt)
{
    // splitmix64 step keeps retries decorrelated from the base seed
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (attempt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int rand_below(std::mt19937_64& eng, int n)
{
    return static_cast<int>(eng() % static_cast<std::uint64_t>(n));
}

std::vector<int> random_images(std::mt19937_64& eng, int degree)
{
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int i = degree - 1; i > 0; --i)
        std::swap(images[static_cast<std::size_t>(i)],
                  images[static_cast<std::size_t>(rand_below(eng, i + 1))]);
    return images;
}

// Uniform over all single cycles of length 2..k: length weighted by the
// number of cycles of that length, then support and arrangement uniform.
std::vector<int> random_cycle(std::mt19937_64& eng, int k)
{
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t total = 0;
    for (int j = 2; j <= k; ++j) {
        std::uint64_t w = 1;
        for (int t = 0; t < j; ++t)
            w = w * static_cast<std::uint64_t>(k - t) / static_cast<std::uint64_t>(t + 1);
        for (int t = 2; t < j; ++t)
            w *= static_cast<std::uint64_t>(t);
        weight[static_cast<std::size_t>(j)] = w;
        total += w;
    }
    std::uint64_t pick = eng() % total;
    int length = 2;
    while (pick >= weight[static_cast<std::size_t>(length)]) {
        pick -= weight[static_cast<std::size_t>(length)];
        ++length;
    }
    std::vector<int> pool(static_cast<std::size_t>(k));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < length; ++i)
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(i + rand_below(eng, k - i))]);
    std::vector<int> cycle(pool.begin(), pool.begin() + length);
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    return cycle;
}

} // namespace

HurwitzData random_valid_data(std::uint64_t seed, int k, int g, int r, Mode mode)
{
    if (k < 2)
        throw std::invalid_argument("degree must be >= 2");
    if (k > 20)
        throw std::invalid_argument("random generation supports degree <= 20");
    if (g < 0 || r < 0)
        throw std::invalid_argument("genus and branch point count must be >= 0");

    constexpr std::uint64_t max_attempts = 4096;
    std::vector<bool> any_type(static_cast<std::size_t>(k) + 1, true);
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::mt19937_64 eng(mix_seed(seed, attempt));
        HurwitzData d;
        d.degree = k;
        d.mode = mode;
        d.target_genus = g;
        Perm product(k);
        for (int t = 0; t < g; ++t) {
            HandlePair h{random_images(eng, k), random_images(eng, k)};
            product = compose(product, commutator(Perm(h.a), Perm(h.b)));
            d.handles.push_back(std::move(h));
        }
        if (r == 0) {
            if (!product.is_identity())
                continue;
        } else {
            for (int t = 0; t < r - 1; ++t) {
                std::vector<int> cycle = random_cycle(eng, k);
                product = compose(product, Perm::from_cycle(k, cycle));
                d.branch_points.push_back({std::move(cycle), +1});
            }
            std::vector<int> last = closing_cycle(product.inverse(), any_type);
            if (last.empty())
                continue;
            d.branch_points.push_back({std::move(last), +1});
        }
        if (mode == Mode::SO)
            for (BranchPoint& bp : d.branch_points)
                bp.sign = rand_below(eng, 2) == 0 ? +1 : -1;
        return d;
    }
    throw std::runtime_error("random_valid_data: no single-cycle closure found within the retry "
                             "budget for this (k, g, r) combination");
}

} // namespace cob1::search
