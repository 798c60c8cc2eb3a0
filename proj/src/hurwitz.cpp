#include "cob1/hurwitz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cob1 {

namespace {

bool is_image_array(const std::vector<int>& images, int degree)
{
    if (static_cast<int>(images.size()) != degree)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (int v : images) {
        if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_cycle_list(const std::vector<int>& cycle, int degree)
{
    if (cycle.size() < 2 || static_cast<int>(cycle.size()) > degree)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (int v : cycle) {
        if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

} // namespace

std::vector<std::string> validate(const HurwitzData& d)
{
    std::vector<std::string> violations;
    if (d.degree < 2) {
        violations.push_back("degree must be >= 2 (got " + std::to_string(d.degree) + ")");
        return violations;
    }
    if (d.target_genus < 0)
        violations.push_back("target genus must be >= 0");
    if (static_cast<int>(d.handles.size()) != d.target_genus)
        violations.push_back("expected " + std::to_string(d.target_genus) + " handle pair(s), got " +
                             std::to_string(d.handles.size()));

    bool perms_ok = true;
    for (std::size_t h = 0; h < d.handles.size(); ++h) {
        if (!is_image_array(d.handles[h].a, d.degree)) {
            violations.push_back("handle " + std::to_string(h) + ": 'a' is not a permutation of 0.." +
                                 std::to_string(d.degree - 1));
            perms_ok = false;
        }
        if (!is_image_array(d.handles[h].b, d.degree)) {
            violations.push_back("handle " + std::to_string(h) + ": 'b' is not a permutation of 0.." +
                                 std::to_string(d.degree - 1));
            perms_ok = false;
        }
    }
    for (std::size_t m = 0; m < d.branch_points.size(); ++m) {
        const BranchPoint& bp = d.branch_points[m];
        if (!is_cycle_list(bp.cycle, d.degree)) {
            violations.push_back("branch point " + std::to_string(m) +
                                 ": cycle must list 2..k distinct sheet indices");
            perms_ok = false;
        }
        if (d.mode == Mode::SO && bp.sign != 1 && bp.sign != -1)
            violations.push_back("branch point " + std::to_string(m) + ": sign must be +1 or -1");
    }
    if (!perms_ok || d.target_genus < 0 || static_cast<int>(d.handles.size()) != d.target_genus)
        return violations;

    if (!relation_product(d).is_identity())
        violations.push_back("surface relation fails: the product of handle commutators "
                             "and branch cycles is not the identity");

    // Per-component parity: the branch cycles inside one orbit multiply to an
    // even permutation, so sum (j-1) over them must be even.
    auto comps = source_components(d);
    std::vector<int> orbit_of(static_cast<std::size_t>(d.degree), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int sheet : comps[c])
            orbit_of[static_cast<std::size_t>(sheet)] = static_cast<int>(c);
    std::vector<int> defect(comps.size(), 0);
    for (const BranchPoint& bp : d.branch_points)
        defect[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(bp.cycle.front())])] +=
            static_cast<int>(bp.cycle.size()) - 1;
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (defect[c] % 2 != 0)
            violations.push_back("component containing sheet " + std::to_string(comps[c].front()) +
                                 ": total branching defect is odd");
    return violations;
}

std::vector<std::string> validate(const BranchedCoveringSet& s)
{
    std::vector<std::string> violations;
    if (s.degree < 2)
        violations.push_back("degree must be >= 2 (got " + std::to_string(s.degree) + ")");
    for (std::size_t c = 0; c < s.components.size(); ++c) {
        const HurwitzData& d = s.components[c];
        if (d.degree != s.degree)
            violations.push_back("component " + std::to_string(c) + ": degree differs from the set degree");
        if (d.mode != s.mode)
            violations.push_back("component " + std::to_string(c) + ": mode differs from the set mode");
        for (const std::string& v : validate(d))
            violations.push_back("component " + std::to_string(c) + ": " + v);
    }
    return violations;
}

void require_valid(const HurwitzData& d)
{
    auto violations = validate(d);
    if (!violations.empty())
        throw InvalidDataError(std::move(violations));
}

void require_valid(const BranchedCoveringSet& s)
{
    auto violations = validate(s);
    if (!violations.empty())
        throw InvalidDataError(std::move(violations));
}

std::vector<Perm> monodromy_generators(const HurwitzData& d)
{
    std::vector<Perm> gens;
    for (const HandlePair& h : d.handles) {
        gens.push_back(Perm(h.a));
        gens.push_back(Perm(h.b));
    }
    for (const BranchPoint& bp : d.branch_points)
        gens.push_back(Perm::from_cycle(d.degree, bp.cycle));
    return gens;
}

Perm relation_product(const HurwitzData& d)
{
    Perm product(d.degree);
    for (const HandlePair& h : d.handles)
        product = compose(product, commutator(Perm(h.a), Perm(h.b)));
    for (const BranchPoint& bp : d.branch_points)
        product = compose(product, Perm::from_cycle(d.degree, bp.cycle));
    return product;
}

std::vector<std::vector<int>> source_components(const HurwitzData& d)
{
    return orbits(d.degree, monodromy_generators(d));
}

std::vector<ComponentTopology> euler_characteristics(const HurwitzData& d)
{
    require_valid(d);
    auto comps = source_components(d);
    std::vector<int> orbit_of(static_cast<std::size_t>(d.degree), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int sheet : comps[c])
            orbit_of[static_cast<std::size_t>(sheet)] = static_cast<int>(c);

    std::vector<ComponentTopology> out(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        out[c].orbit = comps[c];
        out[c].euler_characteristic = static_cast<int>(comps[c].size()) * (2 - 2 * d.target_genus);
    }
    for (const BranchPoint& bp : d.branch_points)
        out[static_cast<std::size_t>(orbit_of[static_cast<std::size_t>(bp.cycle.front())])]
            .euler_characteristic -= static_cast<int>(bp.cycle.size()) - 1;
    for (auto& comp : out) {
        if (comp.euler_characteristic % 2 != 0 || comp.euler_characteristic > 2)
            throw std::logic_error("component Euler characteristic out of range for a closed "
                                   "orientable surface");
        comp.genus = (2 - comp.euler_characteristic) / 2;
    }
    return out;
}

BranchedCoveringSet disjoint_union(const BranchedCoveringSet& s, const BranchedCoveringSet& t)
{
    if (s.degree != t.degree)
        throw std::invalid_argument("disjoint_union: degree mismatch");
    if (s.mode != t.mode)
        throw std::invalid_argument("disjoint_union: mode mismatch");
    BranchedCoveringSet out = s;
    out.components.insert(out.components.end(), t.components.begin(), t.components.end());
    return out;
}

BranchedCoveringSet negate(const BranchedCoveringSet& s)
{
    BranchedCoveringSet out = s;
    if (s.mode == Mode::SO)
        for (HurwitzData& d : out.components)
            for (BranchPoint& bp : d.branch_points)
                bp.sign = -bp.sign;
    return out;
}

} // namespace cob1
