// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exit code 0 iff all pass.

#include "cob1/cob2.hpp"
#include "cob1/fgab.hpp"
#include "cob1/homology.hpp"
#include "cob1/hurwitz.hpp"
#include "cob1/ranks.hpp"
#include "cob1/search.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

namespace {

using namespace cob1;
using fgab::Int;
using fgab::IntMatrix;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what)
{
    if (!condition)
        throw Failure(what);
}

// ---------------------------------------------------------------- criterion 1

void criterion_groups()
{
    auto start = std::chrono::steady_clock::now();
    for (int k = 2; k <= 12; ++k) {
        auto oriented = homology::h2_classifying(k, Mode::SO);
        require(isomorphic(oriented, fgab::FGAbelianGroup::free(k - 1)),
                "oriented group mismatch at k=" + std::to_string(k) + ": got " +
                    oriented.to_string());
        auto unoriented = homology::h2_classifying(k, Mode::O);
        std::vector<Int> twos(static_cast<std::size_t>(k - 2), Int(2));
        require(isomorphic(unoriented, fgab::FGAbelianGroup::from_orders(twos)),
                "unoriented group mismatch at k=" + std::to_string(k) + ": got " +
                    unoriented.to_string());
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(elapsed < 5.0, "group computation exceeded 5 s");
}

// ---------------------------------------------------------------- criterion 2

Int oracle_partitions(int remaining, int max_part)
{
    if (remaining == 0)
        return 1;
    Int total = 0;
    for (int first = std::min(remaining, max_part); first >= 1; --first)
        total += oracle_partitions(remaining - first, first);
    return total;
}

Int oracle_rank(int n, int k, Mode mode)
{
    // the one-line closed form, evaluated with the enumeration-based counts
    auto pi = [](int i) { return oracle_partitions(i, std::max(i, 1)); };
    if (n % 4 == 0) {
        int m = n / 4;
        Int sum = 0;
        for (int i = 0; i < m; ++i)
            sum += pi(i);
        return Int(k - 1) * sum + pi(m);
    }
    if (mode == Mode::SO && n % 4 == 2) {
        int m = (n + 2) / 4;
        Int sum = 0;
        for (int i = 0; i < m; ++i)
            sum += pi(i);
        return Int(k - 1) * sum;
    }
    return 0;
}

void criterion_ranks()
{
    for (int n = 0; n <= 40; ++n)
        for (int k = 2; k <= 10; ++k)
            for (Mode mode : {Mode::SO, Mode::O}) {
                Int got = ranks::rank_cob({n, k, mode}).total;
                Int expected = oracle_rank(n, k, mode);
                require(got == expected,
                        "rank mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
                if (n % 2 == 1)
                    require(got == 0, "odd dimension must have rank 0");
            }
    for (int k = 2; k <= 10; ++k) {
        require(ranks::rank_cob({2, k, Mode::SO}).total == k - 1, "dimension-2 oriented rank");
        require(Int(homology::h2_classifying(k, Mode::SO).rank()) == k - 1,
                "sequence rank disagrees with the closed form");
    }
    require(ranks::rank_cob({4, 2, Mode::O}).total == 2, "rank of the (4,2) unoriented group");
}

// ---------------------------------------------------------------- criterion 3

cob2::ClassVector seeded_in_image(std::mt19937_64& rng, int k, Mode mode)
{
    cob2::ClassVector c = cob2::zero_vector(k, mode);
    for (auto& e : c.entries)
        e = mode == Mode::SO ? static_cast<std::int64_t>(rng() % 19) - 9
                             : static_cast<std::int64_t>(rng() % 2);
    std::int64_t even_sum = 0;
    for (int j = 2; j <= k; j += 2)
        even_sum += c.entries[static_cast<std::size_t>(j - 2)];
    if (((even_sum % 2) + 2) % 2 != 0)
        c.entries[0] = mode == Mode::SO ? c.entries[0] + 1 : (c.entries[0] ^ 1);
    return c;
}

void criterion_invariant_mechanics()
{
    auto start = std::chrono::steady_clock::now();
    for (int k = 2; k <= 8; ++k)
        for (Mode mode : {Mode::SO, Mode::O}) {
            std::mt19937_64 rng(90000 + static_cast<unsigned>(k) * 2 + (mode == Mode::O));
            for (int trial = 0; trial < 1000; ++trial) {
                auto c = seeded_in_image(rng, k, mode);
                require(cob2::in_image(c), "seeded vector escaped the image subgroup");
                require(cob2::invariant(cob2::realize(c)) == c, "realize/invariants round trip");
            }
            for (int trial = 0; trial < 1000; ++trial) {
                cob2::BasisCoeffs lambda{k, mode, {}};
                int count = mode == Mode::SO ? k - 1 : k - 2;
                for (int t = 0; t < count; ++t)
                    lambda.coeffs.push_back(mode == Mode::SO
                                                ? static_cast<std::int64_t>(rng() % 19) - 9
                                                : static_cast<std::int64_t>(rng() % 2));
                require(cob2::decompose(cob2::recompose(lambda)) == lambda,
                        "decompose(recompose) is not the identity");
            }
        }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        // sample only cells that admit a single-cycle closure: in degree 2
        // the point count must be even, and one sphere point never closes
        int k = 2 + static_cast<int>(seed % 7);
        int g = static_cast<int>(seed % 3);
        int r = 1 + static_cast<int>(seed % 4);
        if (k == 2 && r % 2 == 1)
            ++r;
        if (g == 0 && r == 1)
            r = 2;
        Mode mode = seed % 2 == 0 ? Mode::SO : Mode::O;
        auto d = search::random_valid_data(seed, k, g, r, mode);
        require(validate(d).empty(), "random datum failed validation");
        require(cob2::in_image(cob2::invariant(BranchedCoveringSet{k, mode, {d}})),
                "random datum invariant escaped the image subgroup");
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(elapsed < 10.0, "invariant mechanics exceeded 10 s");
}

// ---------------------------------------------------------------- criterion 4

void criterion_generators()
{
    for (int k = 2; k <= 8; ++k)
        for (int i = 2; i <= k; ++i) {
            require(cob2::invariant(cob2::generator(i, k, Mode::SO)) ==
                        cob2::basis_row(i, k, Mode::SO),
                    "sphere generator invariant mismatch");
            if (i >= 3)
                require(cob2::invariant(cob2::generator(i, k, Mode::O)) ==
                            cob2::basis_row(i, k, Mode::O),
                        "unoriented sphere generator invariant mismatch");
        }

    for (int k = 2; k <= 5; ++k)
        for (int i = 2; i <= k; ++i) {
            auto witness = cob2::search_minimal(i, k, Mode::SO);
            require(witness.has_value(), "minimal witness search failed");
            require(validate(*witness).empty(), "minimal witness is invalid");
            require(cob2::invariant(*witness) == cob2::basis_row(i, k, Mode::SO),
                    "minimal witness invariant mismatch");
            const auto& d = witness->components.at(0);
            const std::size_t expected_points = i % 2 == 1 ? 1 : 2;
            require(d.branch_points.size() == expected_points, "minimal witness point count");

            // nontrivial component: genus 0 for the two-point sphere witness
            // of type 2, (i+1)/2 for odd i over the torus, i/2+1 for even i
            int expected_genus = i == 2 ? 0 : (i % 2 == 1 ? (i + 1) / 2 : i / 2 + 1);
            auto tops = euler_characteristics(d);
            require(tops.at(0).genus == expected_genus, "minimal witness source genus");
            require(tops.at(0).euler_characteristic == 2 - 2 * expected_genus,
                    "minimal witness Euler characteristic");
            int support = i;
            require(static_cast<int>(tops.at(0).orbit.size()) == support,
                    "minimal witness must be transitive on its support");
        }
}

// ---------------------------------------------------------------- criterion 5

void criterion_nonexistence()
{
    auto start = std::chrono::steady_clock::now();
    for (int k = 2; k <= 5; ++k) {
        auto report = search::verify_nonexistence(k);
        for (const auto& [type, n] : report.single_point)
            require(n == 0, "found a sphere datum with one branch point");
        for (const auto& [pair, n] : report.mixed_pairs)
            require(n == 0, "found a sphere datum with two points of different types");
        for (const auto& [type, n] : report.equal_pairs)
            require(n > 0, "missing the two-point datum of type " + std::to_string(type));
        require(report.consistent(), "inconsistent report");
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(elapsed < 30.0, "non-existence oracle exceeded 30 s");
}

// ---------------------------------------------------------------- criterion 6

void criterion_parity()
{
    for (int k = 2; k <= 4; ++k) {
        auto report = search::verify_parity(k, 3);
        require(report.violations == 0,
                "valid datum with an odd number of even-type points at k=" + std::to_string(k));
        require(report.instances > 0, "parity sweep enumerated nothing");
    }
}

// ---------------------------------------------------------------- criterion 7

// brute-force model of a finite abelian group given by cyclic orders
struct FiniteGroup {
    std::vector<int> orders;

    std::size_t size() const
    {
        std::size_t n = 1;
        for (int d : orders)
            n *= static_cast<std::size_t>(d);
        return n;
    }

    std::vector<int> element(std::size_t index) const
    {
        std::vector<int> x(orders.size());
        for (std::size_t t = 0; t < orders.size(); ++t) {
            x[t] = static_cast<int>(index % static_cast<std::size_t>(orders[t]));
            index /= static_cast<std::size_t>(orders[t]);
        }
        return x;
    }

    std::size_t index_of(const std::vector<int>& x) const
    {
        std::size_t index = 0;
        for (std::size_t t = orders.size(); t-- > 0;)
            index = index * static_cast<std::size_t>(orders[t]) + static_cast<std::size_t>(x[t]);
        return index;
    }

    std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) const
    {
        std::vector<int> z(orders.size());
        for (std::size_t t = 0; t < orders.size(); ++t)
            z[t] = (x[t] + y[t]) % orders[t];
        return z;
    }

    bool killed_by(const std::vector<int>& x, int e) const
    {
        for (std::size_t t = 0; t < orders.size(); ++t)
            if ((static_cast<long long>(e) * x[t]) % orders[t] != 0)
                return false;
        return true;
    }
};

// #elements of the claimed group killed by e: product of gcd(e, d_i)
Int killed_count(const fgab::FGAbelianGroup& claimed, int e)
{
    Int count = 1;
    for (const Int& d : claimed.orders())
        count *= boost::multiprecision::gcd(Int(e), d);
    return count;
}

void check_structure_matches(const FiniteGroup& ambient, const std::vector<std::size_t>& subset,
                             const fgab::FGAbelianGroup& claimed, const std::string& label)
{
    require(claimed.rank() == 0, label + ": claimed group must be finite");
    require(Int(subset.size()) == claimed.order(), label + ": order mismatch");
    for (int e = 1; e <= 512; ++e) {
        std::size_t killed = 0;
        for (std::size_t index : subset)
            if (ambient.killed_by(ambient.element(index), e))
                ++killed;
        require(Int(killed) == killed_count(claimed, e),
                label + ": element-order statistics differ at e=" + std::to_string(e));
    }
}

void criterion_algebra_engine()
{
    std::mt19937_64 rng(777);

    // Smith normal form identities on random matrices
    for (int trial = 0; trial < 10000; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        IntMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                a.at(i, j) = static_cast<long long>(rng() % 41) - 20;
        auto snf = fgab::smith_normal_form(a);
        require(snf.u * a * snf.v == snf.d, "UAV != D");
        Int du = fgab::determinant(snf.u);
        Int dv = fgab::determinant(snf.v);
        require(du == 1 || du == -1, "U is not unimodular");
        require(dv == 1 || dv == -1, "V is not unimodular");
        const int limit = std::min(rows, cols);
        for (int t = 0; t < limit; ++t) {
            require(snf.d.at(t, t) >= 0, "negative invariant factor");
            if (t + 1 < limit && snf.d.at(t + 1, t + 1) != 0)
                require(snf.d.at(t, t) != 0 && snf.d.at(t + 1, t + 1) % snf.d.at(t, t) == 0,
                        "divisibility chain broken");
        }
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j)
                    require(snf.d.at(i, j) == 0, "D is not diagonal");
    }

    // kernel / image / cokernel against exhaustive enumeration
    auto random_orders = [&rng]() {
        std::vector<int> orders;
        std::size_t product = 1;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < count; ++t) {
            int d = 2 + static_cast<int>(rng() % 7);
            if (product * static_cast<std::size_t>(d) > 512)
                break;
            product *= static_cast<std::size_t>(d);
            orders.push_back(d);
        }
        if (orders.empty())
            orders.push_back(2);
        return orders;
    };

    for (int trial = 0; trial < 100; ++trial) {
        FiniteGroup source{random_orders()};
        FiniteGroup target{random_orders()};
        const int s = static_cast<int>(source.orders.size());
        const int t = static_cast<int>(target.orders.size());

        fgab::Homomorphism h;
        for (int j = 0; j < s; ++j)
            h.source.push_back(source.orders[static_cast<std::size_t>(j)]);
        for (int i = 0; i < t; ++i)
            h.target.push_back(target.orders[static_cast<std::size_t>(i)]);
        h.matrix = IntMatrix(t, s);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < s; ++j) {
                int b = target.orders[static_cast<std::size_t>(i)];
                int a = source.orders[static_cast<std::size_t>(j)];
                int g = std::gcd(a, b);
                int step = b / g;
                h.matrix.at(i, j) = step * static_cast<int>(rng() % static_cast<unsigned>(g));
            }
        require(fgab::is_well_defined(h), "random homomorphism must be well defined");

        auto apply = [&](const std::vector<int>& x) {
            std::vector<int> y(static_cast<std::size_t>(t));
            for (int i = 0; i < t; ++i) {
                long long acc = 0;
                for (int j = 0; j < s; ++j)
                    acc += static_cast<long long>(h.matrix.at(i, j).convert_to<long long>()) *
                           x[static_cast<std::size_t>(j)];
                int b = target.orders[static_cast<std::size_t>(i)];
                y[static_cast<std::size_t>(i)] = static_cast<int>(((acc % b) + b) % b);
            }
            return y;
        };

        std::vector<std::size_t> kernel_set;
        std::vector<char> in_image(target.size(), 0);
        for (std::size_t index = 0; index < source.size(); ++index) {
            auto y = apply(source.element(index));
            bool zero = true;
            for (int v : y)
                if (v != 0)
                    zero = false;
            if (zero)
                kernel_set.push_back(index);
            in_image[target.index_of(y)] = 1;
        }
        std::vector<std::size_t> image_set;
        for (std::size_t index = 0; index < target.size(); ++index)
            if (in_image[index])
                image_set.push_back(index);

        auto ker = fgab::kernel(h);
        check_structure_matches(source, kernel_set, ker.group, "kernel");
        check_structure_matches(target, image_set, fgab::image(h), "image");

        // the returned kernel generators generate exactly the kernel set
        std::vector<char> reached(source.size(), 0);
        reached[source.index_of(std::vector<int>(static_cast<std::size_t>(s), 0))] = 1;
        std::vector<std::size_t> frontier{source.index_of(std::vector<int>(static_cast<std::size_t>(s), 0))};
        std::vector<std::vector<int>> gens;
        for (int c = 0; c < ker.generators.cols(); ++c) {
            std::vector<int> g(static_cast<std::size_t>(s));
            for (int row = 0; row < s; ++row) {
                int a = source.orders[static_cast<std::size_t>(row)];
                long long value = ker.generators.at(row, c).convert_to<long long>();
                g[static_cast<std::size_t>(row)] = static_cast<int>(((value % a) + a) % a);
            }
            gens.push_back(std::move(g));
        }
        while (!frontier.empty()) {
            std::size_t index = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                std::size_t next = source.index_of(source.add(source.element(index), g));
                if (!reached[next]) {
                    reached[next] = 1;
                    frontier.push_back(next);
                }
            }
        }
        std::vector<std::size_t> generated;
        for (std::size_t index = 0; index < source.size(); ++index)
            if (reached[index])
                generated.push_back(index);
        require(generated == kernel_set, "kernel generators span the wrong subgroup");

        // cokernel: order statistics of target / image
        auto coker = fgab::cokernel(h);
        require(coker.rank() == 0, "cokernel of finite groups must be finite");
        require(Int(target.size() / image_set.size()) == coker.order(), "cokernel order");
        for (int e = 1; e <= 512; ++e) {
            std::size_t killed = 0;
            for (std::size_t index = 0; index < target.size(); ++index) {
                auto scaled = target.element(index);
                for (std::size_t slot = 0; slot < scaled.size(); ++slot)
                    scaled[slot] = static_cast<int>(
                        (static_cast<long long>(scaled[slot]) * e) %
                        target.orders[slot]);
                if (in_image[target.index_of(scaled)])
                    ++killed;
            }
            require(Int(killed / image_set.size()) == killed_count(coker, e),
                    "cokernel order statistics differ at e=" + std::to_string(e));
        }
    }
}

// ---------------------------------------------------------------- criterion 8

void criterion_partitions()
{
    require(ranks::partition_count(0) == 1, "pi(0)");
    require(ranks::partition_count(4) == 5, "pi(4)");
    require(ranks::partition_count(10) == 42, "pi(10)");
    for (int i = 0; i <= 40; ++i)
        require(ranks::partition_count(i) == oracle_partitions(i, std::max(i, 1)),
                "partition count disagrees with enumeration at i=" + std::to_string(i));
}

} // namespace

int main()
{
    struct Criterion {
        std::string name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {"1: exact-sequence groups, k=2..12, both modes", criterion_groups},
        {"2: rank formulas vs closed-form oracle, n<=40, k<=10", criterion_ranks},
        {"3: invariant completeness mechanics, 1000 samples/cell", criterion_invariant_mechanics},
        {"4: generators and minimal witnesses", criterion_generators},
        {"5: sphere non-existence oracle, k<=5", criterion_nonexistence},
        {"6: parity oracle, k<=4, r<=3", criterion_parity},
        {"7: algebra engine vs brute force", criterion_algebra_engine},
        {"8: partition oracle, i<=40", criterion_partitions},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            criterion.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.name << "  ("
             << std::fixed << elapsed << " s)";
        if (!ok)
            line << "  -- " << detail;
        std::cout << line.str() << "\n";
        if (!ok)
            ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
