#include "cob1/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cob1 {

Perm::Perm(int degree)
{
    if (degree < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images)
    : images_(std::move(images))
{
    const int k = degree();
    if (k < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int v : images_) {
        if (v < 0 || v >= k)
            throw std::invalid_argument("permutation image out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::from_cycle(int degree, const std::vector<int>& cycle)
{
    if (degree < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    const std::size_t j = cycle.size();
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (std::size_t t = 0; t < j; ++t) {
        int from = cycle[t];
        int to = cycle[(t + 1) % j];
        if (from < 0 || from >= degree)
            throw std::invalid_argument("cycle entry out of range");
        if (seen[static_cast<std::size_t>(from)])
            throw std::invalid_argument("cycle entries must be distinct");
        seen[static_cast<std::size_t>(from)] = 1;
        images[static_cast<std::size_t>(from)] = to;
    }
    return Perm(std::move(images));
}

bool Perm::is_identity() const
{
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

Perm Perm::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i)
        inv[static_cast<std::size_t>((*this)(i))] = i;
    return Perm(std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            cyc.push_back(x);
            x = (*this)(x);
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_type() const
{
    std::vector<int> lengths;
    for (const auto& cyc : cycles())
        lengths.push_back(static_cast<int>(cyc.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return lengths;
}

bool Perm::is_single_j_cycle(int j) const
{
    if (j < 2 || j > degree())
        return false;
    auto type = cycle_type();
    if (type.front() != j)
        return false;
    for (std::size_t t = 1; t < type.size(); ++t)
        if (type[t] != 1)
            return false;
    return true;
}

int Perm::sign() const
{
    // (-1)^(degree - #cycles): each cycle of length L contributes (-1)^(L-1).
    int transpositions = degree() - static_cast<int>(cycles().size());
    return transpositions % 2 == 0 ? +1 : -1;
}

Perm compose(const Perm& p, const Perm& q)
{
    if (p.degree() != q.degree())
        throw std::invalid_argument("cannot compose permutations of different degrees");
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i)
        images[static_cast<std::size_t>(i)] = q(p(i));
    return Perm(std::move(images));
}

Perm commutator(const Perm& a, const Perm& b)
{
    return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& generators)
{
    std::vector<int> parent(static_cast<std::size_t>(degree));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& g : generators) {
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree mismatch");
        for (int i = 0; i < degree; ++i) {
            int a = find(i);
            int b = find(g(i));
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(static_cast<std::size_t>(degree), -1);
    for (int i = 0; i < degree; ++i) {
        int root = find(i);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(i);
    }
    return out;
}

std::string to_cycle_string(const Perm& p)
{
    std::string out;
    for (const auto& cyc : p.cycles()) {
        if (cyc.size() < 2)
            continue;
        out += '(';
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            if (t > 0)
                out += ' ';
            out += std::to_string(cyc[t]);
        }
        out += ')';
    }
    if (out.empty())
        out = "()";
    return out;
}

} // namespace cob1
