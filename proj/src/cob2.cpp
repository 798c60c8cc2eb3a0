#include "cob1/cob2.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cob1::cob2 {

namespace {

void require_vector_shape(const ClassVector& c)
{
    if (c.degree < 2)
        throw std::invalid_argument("class vector degree must be >= 2");
    if (static_cast<int>(c.entries.size()) != c.degree - 1)
        throw std::invalid_argument("class vector must have k-1 entries (c_2..c_k)");
    if (c.mode == Mode::O)
        for (std::int64_t e : c.entries)
            if (e != 0 && e != 1)
                throw std::invalid_argument("unoriented class vector entries must be 0 or 1");
}

void require_coeff_shape(const BasisCoeffs& lambda)
{
    if (lambda.degree < 2)
        throw std::invalid_argument("coefficient vector degree must be >= 2");
    const int expected = lambda.mode == Mode::SO ? lambda.degree - 1 : lambda.degree - 2;
    if (static_cast<int>(lambda.coeffs.size()) != expected)
        throw std::invalid_argument("coefficient vector has the wrong length for its mode");
    if (lambda.mode == Mode::O)
        for (std::int64_t e : lambda.coeffs)
            if (e != 0 && e != 1)
                throw std::invalid_argument("unoriented coefficients must be 0 or 1");
}

// The lowest basis index available in the given mode.
int min_basis_index(Mode mode)
{
    return mode == Mode::SO ? 2 : 3;
}

std::vector<int> single_cycle_list(const Perm& p)
{
    for (const auto& cyc : p.cycles())
        if (cyc.size() >= 2)
            return cyc;
    throw std::logic_error("expected a non-identity permutation");
}

std::vector<int> embedded_images(const Perm& p, int degree)
{
    std::vector<int> images = p.images();
    for (int v = p.degree(); v < degree; ++v)
        images.push_back(v);
    return images;
}

} // namespace

ClassVector zero_vector(int k, Mode mode)
{
    if (k < 2)
        throw std::invalid_argument("degree must be >= 2");
    return ClassVector{k, mode, std::vector<std::int64_t>(static_cast<std::size_t>(k - 1), 0)};
}

ClassVector basis_row(int i, int k, Mode mode)
{
    if (i < min_basis_index(mode) || i > k)
        throw std::invalid_argument("basis index out of range");
    ClassVector row = zero_vector(k, mode);
    if (i == 2) {
        row.entries[0] = 2;
    } else if (i % 2 == 1) {
        row.entries[static_cast<std::size_t>(i - 2)] = 1;
    } else {
        row.entries[0] = 1;
        row.entries[static_cast<std::size_t>(i - 2)] = 1;
    }
    return row;
}

ClassVector invariant(const BranchedCoveringSet& s)
{
    require_valid(s);
    ClassVector c = zero_vector(s.degree, s.mode);
    for (const HurwitzData& d : s.components)
        for (const BranchPoint& bp : d.branch_points) {
            std::size_t slot = bp.cycle.size() - 2;
            if (s.mode == Mode::SO)
                c.entries[slot] += bp.sign;
            else
                c.entries[slot] ^= 1;
        }
    return c;
}

bool in_image(const ClassVector& c)
{
    require_vector_shape(c);
    std::int64_t even_sum = 0;
    for (int j = 2; j <= c.degree; ++j)
        if (j % 2 == 0)
            even_sum += c.entries[static_cast<std::size_t>(j - 2)];
    return even_sum % 2 == 0;
}

bool cobordant(const BranchedCoveringSet& a, const BranchedCoveringSet& b)
{
    if (a.degree != b.degree)
        throw std::invalid_argument("cobordant: degree mismatch");
    if (a.mode != b.mode)
        throw std::invalid_argument("cobordant: mode mismatch");
    return invariant(a) == invariant(b);
}

BasisCoeffs decompose(const ClassVector& c)
{
    if (!in_image(c))
        throw NotInImageError("class vector is not in the image subgroup: the sum of "
                              "even-type entries must be even");
    BasisCoeffs lambda{c.degree, c.mode, {}};
    if (c.mode == Mode::SO) {
        std::int64_t high_even = 0;
        for (int i = 4; i <= c.degree; i += 2)
            high_even += c.entries[static_cast<std::size_t>(i - 2)];
        lambda.coeffs.push_back((c.entries[0] - high_even) / 2);
        for (int i = 3; i <= c.degree; ++i)
            lambda.coeffs.push_back(c.entries[static_cast<std::size_t>(i - 2)]);
    } else {
        for (int i = 3; i <= c.degree; ++i)
            lambda.coeffs.push_back(c.entries[static_cast<std::size_t>(i - 2)]);
    }
    if (recompose(lambda) != c)
        throw std::logic_error("decompose failed to reproduce the class vector");
    return lambda;
}

ClassVector recompose(const BasisCoeffs& lambda)
{
    require_coeff_shape(lambda);
    ClassVector c = zero_vector(lambda.degree, lambda.mode);
    const int first = min_basis_index(lambda.mode);
    for (int i = first; i <= lambda.degree; ++i) {
        std::int64_t coeff = lambda.coeffs[static_cast<std::size_t>(i - first)];
        if (coeff == 0)
            continue;
        if (i == 2) {
            c.entries[0] += 2 * coeff;
        } else if (i % 2 == 1) {
            c.entries[static_cast<std::size_t>(i - 2)] += coeff;
        } else {
            c.entries[0] += coeff;
            c.entries[static_cast<std::size_t>(i - 2)] += coeff;
        }
    }
    if (lambda.mode == Mode::O)
        for (std::int64_t& e : c.entries)
            e &= 1;
    return c;
}

BranchedCoveringSet generator(int i, int k, Mode mode)
{
    if (k < 2)
        throw std::invalid_argument("degree must be >= 2");
    if (i < min_basis_index(mode) || i > k)
        throw std::invalid_argument(mode == Mode::O && i == 2
                                        ? "type-2 generator does not exist in the unoriented basis"
                                        : "generator index out of range");

    HurwitzData d;
    d.degree = k;
    d.mode = mode;
    d.target_genus = 0;

    if (i == 2) {
        d.branch_points = {{{0, 1}, +1}, {{0, 1}, +1}};
    } else if (i % 2 == 1) {
        // sigma, sigma, sigma^-2: an odd cycle squared twice back, so the
        // product is the identity and the signed type-i count is 1.
        std::vector<int> sigma_cycle(static_cast<std::size_t>(i));
        std::iota(sigma_cycle.begin(), sigma_cycle.end(), 0);
        Perm sigma = Perm::from_cycle(k, sigma_cycle);
        Perm sigma_minus2 = compose(sigma.inverse(), sigma.inverse());
        d.branch_points = {{sigma_cycle, +1}, {sigma_cycle, +1}, {single_cycle_list(sigma_minus2), -1}};
    } else {
        // tau, sigma, delta^-2, delta with delta = tau*sigma an (i-1)-cycle:
        // the two type-(i-1) points cancel, leaving one 2-point and one i-point.
        std::vector<int> sigma_cycle(static_cast<std::size_t>(i));
        std::iota(sigma_cycle.begin(), sigma_cycle.end(), 0);
        Perm tau = Perm::from_cycle(k, {0, 1});
        Perm sigma = Perm::from_cycle(k, sigma_cycle);
        Perm delta = compose(tau, sigma);
        Perm delta_minus2 = compose(delta.inverse(), delta.inverse());
        d.branch_points = {{{0, 1}, +1},
                           {sigma_cycle, +1},
                           {single_cycle_list(delta_minus2), -1},
                           {single_cycle_list(delta), +1}};
    }
    if (mode == Mode::O)
        for (BranchPoint& bp : d.branch_points)
            bp.sign = +1;
    return BranchedCoveringSet{k, mode, {std::move(d)}};
}

BranchedCoveringSet realize(const ClassVector& c)
{
    BasisCoeffs lambda = decompose(c);
    BranchedCoveringSet out{c.degree, c.mode, {}};
    const int first = min_basis_index(c.mode);
    for (int i = first; i <= c.degree; ++i) {
        std::int64_t coeff = lambda.coeffs[static_cast<std::size_t>(i - first)];
        if (coeff == 0)
            continue;
        BranchedCoveringSet witness = generator(i, c.degree, c.mode);
        if (coeff < 0)
            witness = negate(witness);
        for (std::int64_t copy = 0; copy < std::abs(coeff); ++copy)
            out = disjoint_union(out, witness);
    }
    return out;
}

namespace {

// Enumerates pairs (a, b) in S_support^2 with [a, b] equal to the required
// closing permutation; shared budget, first hit wins.
struct CommutatorSearch {
    std::vector<Perm> group;    // all permutations of the support, lex order
    Perm required = Perm(1);    // the commutator we need
    std::atomic<std::uint64_t> visited{0};
    std::uint64_t budget = 0;
    std::atomic<bool> found{false};
    std::mutex result_mutex;
    std::optional<std::pair<Perm, Perm>> result;

    void scan(std::size_t begin, std::size_t end)
    {
        for (std::size_t ia = begin; ia < end && !found.load(std::memory_order_relaxed); ++ia) {
            const Perm& a = group[ia];
            if (a.is_identity() && !required.is_identity()) {
                visited.fetch_add(group.size(), std::memory_order_relaxed);
                continue;
            }
            for (const Perm& b : group) {
                if (found.load(std::memory_order_relaxed))
                    return;
                if (visited.fetch_add(1, std::memory_order_relaxed) >= budget)
                    return;
                if (commutator(a, b) == required) {
                    std::lock_guard<std::mutex> lock(result_mutex);
                    if (!result)
                        result = std::make_pair(a, b);
                    found.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    }
};

std::optional<std::pair<Perm, Perm>> find_commutator_pair(int support, const Perm& required,
                                                          const MinimalSearchOptions& opts)
{
    CommutatorSearch search;
    search.required = required;
    search.budget = opts.budget;
    std::vector<int> images(static_cast<std::size_t>(support));
    std::iota(images.begin(), images.end(), 0);
    do {
        search.group.push_back(Perm(images));
    } while (std::next_permutation(images.begin(), images.end()));

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        search.scan(0, search.group.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (search.group.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::size_t begin = std::min(search.group.size(), chunk * static_cast<std::size_t>(t));
            std::size_t end = std::min(search.group.size(), begin + chunk);
            pool.emplace_back([&search, begin, end] { search.scan(begin, end); });
        }
        for (auto& worker : pool)
            worker.join();
    }
    return search.result;
}

} // namespace

std::optional<BranchedCoveringSet> search_minimal(int i, int k, Mode mode, MinimalSearchOptions opts)
{
    if (k < 2)
        throw std::invalid_argument("degree must be >= 2");
    if (i < min_basis_index(mode) || i > k)
        throw std::invalid_argument("basis index out of range");

    // The type-2 class keeps its minimal witness over the sphere.
    if (i == 2)
        return generator(2, k, mode);

    std::vector<int> sigma_cycle(static_cast<std::size_t>(i));
    std::iota(sigma_cycle.begin(), sigma_cycle.end(), 0);
    const Perm sigma_support = Perm::from_cycle(i, sigma_cycle);

    HurwitzData d;
    d.degree = k;
    d.mode = mode;
    d.target_genus = 1;

    Perm required(1);
    if (i % 2 == 1) {
        // One branch point sigma; the handle commutator must close it up.
        required = sigma_support.inverse();
        d.branch_points = {{sigma_cycle, +1}};
    } else {
        // Branch points tau, sigma; the handle commutator closes their product.
        const Perm tau = Perm::from_cycle(i, {0, 1});
        required = compose(tau, sigma_support).inverse();
        d.branch_points = {{{0, 1}, +1}, {sigma_cycle, +1}};
    }

    auto pair = find_commutator_pair(i, required, opts);
    if (!pair)
        return std::nullopt;
    d.handles = {{embedded_images(pair->first, k), embedded_images(pair->second, k)}};
    return BranchedCoveringSet{k, mode, {std::move(d)}};
}

std::string format_class_vector(const ClassVector& c)
{
    std::string out;
    for (std::size_t t = 0; t < c.entries.size(); ++t) {
        if (t > 0)
            out += ',';
        out += std::to_string(c.entries[t]);
    }
    return out;
}

ClassVector parse_class_vector(int k, Mode mode, const std::string& csv)
{
    ClassVector c{k, mode, {}};
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("class vector entry '" + item + "' is not an integer");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::invalid_argument("class vector entry '" + item + "' is not an integer");
        c.entries.push_back(value);
    }
    require_vector_shape(c);
    return c;
}

std::string format_basis_coeffs(const BasisCoeffs& lambda)
{
    std::string out;
    for (std::size_t t = 0; t < lambda.coeffs.size(); ++t) {
        if (t > 0)
            out += ',';
        out += std::to_string(lambda.coeffs[t]);
    }
    return out;
}

} // namespace cob1::cob2
