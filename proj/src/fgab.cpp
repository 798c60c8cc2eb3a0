#include "cob1/fgab.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cob1::fgab {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be non-negative");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be non-negative");
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw std::invalid_argument("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const Int& lhs_it = at(i, t);
            if (lhs_it == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += lhs_it * rhs.at(t, j);
        }
    return out;
}

void IntMatrix::swap_rows(int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j)
{
    if (i == j)
        return;
    for (int r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const Int& c)
{
    for (int t = 0; t < cols_; ++t)
        at(i, t) += c * at(j, t);
}

void IntMatrix::add_col(int i, int j, const Int& c)
{
    for (int t = 0; t < rows_; ++t)
        at(t, i) += c * at(t, j);
}

void IntMatrix::negate_row(int i)
{
    for (int t = 0; t < cols_; ++t)
        at(i, t) = -at(i, t);
}

IntMatrix IntMatrix::column(int j) const
{
    IntMatrix out(rows_, 1);
    for (int i = 0; i < rows_; ++i)
        out.at(i, 0) = at(i, j);
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& rhs) const
{
    if (rows_ != rhs.rows_)
        throw std::invalid_argument("hstack row count mismatch");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols_; ++j)
            out.at(i, cols_ + j) = rhs.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::top_rows(int count) const
{
    if (count < 0 || count > rows_)
        throw std::invalid_argument("top_rows count out of range");
    IntMatrix out(count, cols_);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j);
    return out;
}

IntMatrix IntMatrix::select_cols(const std::vector<bool>& mask) const
{
    if (static_cast<int>(mask.size()) != cols_)
        throw std::invalid_argument("select_cols mask size mismatch");
    int kept = static_cast<int>(std::count(mask.begin(), mask.end(), true));
    IntMatrix out(rows_, kept);
    int c = 0;
    for (int j = 0; j < cols_; ++j) {
        if (!mask[static_cast<std::size_t>(j)])
            continue;
        for (int i = 0; i < rows_; ++i)
            out.at(i, c) = at(i, j);
        ++c;
    }
    return out;
}

namespace {

Int abs_int(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

// Locates the entry of smallest nonzero absolute value in the submatrix
// starting at (t, t); returns false when that submatrix is zero.
bool find_pivot(const IntMatrix& a, int t, int& pi, int& pj)
{
    bool found = false;
    Int best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0)
                continue;
            Int ax = abs_int(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& a)
{
    SmithNormalForm out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    const int limit = std::min(a.rows(), a.cols());
    for (int t = 0; t < limit; ++t) {
        int pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj))
            break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            bool dirty = false;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (d.at(i, t) != 0) {
                    // Remainder smaller than the pivot: promote it and restart.
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            // Clear row t right of the pivot.
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                    break;
                }
            }
            if (dirty)
                continue;
            // Pivot must divide every remaining entry for the invariant-factor
            // chain; if not, fold the offending row in and reduce again.
            bool divides = true;
            for (int i = t + 1; i < d.rows() && divides; ++i)
                for (int j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }

        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

Int determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant requires a square matrix");
    const int n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (m.at(t, t) == 0) {
            int swap = -1;
            for (int i = t + 1; i < n; ++i)
                if (m.at(i, t) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            m.swap_rows(t, swap);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j)) / prev;
        prev = m.at(t, t);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntMatrix kernel_lattice(const IntMatrix& a)
{
    SmithNormalForm snf = smith_normal_form(a);
    const int limit = std::min(a.rows(), a.cols());
    std::vector<bool> keep(static_cast<std::size_t>(a.cols()), false);
    for (int j = 0; j < a.cols(); ++j)
        keep[static_cast<std::size_t>(j)] = (j >= limit) || snf.d.at(j, j) == 0;
    return snf.v.select_cols(keep);
}

IntMatrix lattice_basis(const IntMatrix& generators)
{
    if (generators.cols() == 0)
        return IntMatrix(generators.rows(), 0);
    SmithNormalForm snf = smith_normal_form(generators);
    IntMatrix reduced = generators * snf.v;
    const int limit = std::min(generators.rows(), generators.cols());
    std::vector<bool> keep(static_cast<std::size_t>(generators.cols()), false);
    for (int j = 0; j < limit; ++j)
        keep[static_cast<std::size_t>(j)] = snf.d.at(j, j) != 0;
    return reduced.select_cols(keep);
}

IntMatrix solve_in_basis(const IntMatrix& basis, const IntMatrix& rhs)
{
    if (basis.rows() != rhs.rows())
        throw std::invalid_argument("solve_in_basis row count mismatch");
    const int m = basis.cols();
    if (m > basis.rows())
        throw std::invalid_argument("solve_in_basis requires full column rank");
    SmithNormalForm snf = smith_normal_form(basis);
    for (int j = 0; j < m; ++j)
        if (snf.d.at(j, j) == 0)
            throw std::invalid_argument("solve_in_basis requires full column rank");
    IntMatrix lifted = snf.u * rhs;
    IntMatrix z(m, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
        for (int i = 0; i < basis.rows(); ++i) {
            if (i < m) {
                if (lifted.at(i, c) % snf.d.at(i, i) != 0)
                    throw std::domain_error("solve_in_basis: column not in the lattice");
                z.at(i, c) = lifted.at(i, c) / snf.d.at(i, i);
            } else if (lifted.at(i, c) != 0) {
                throw std::domain_error("solve_in_basis: column not in the lattice");
            }
        }
    }
    return snf.v * z;
}

FGAbelianGroup FGAbelianGroup::from_orders(const std::vector<Int>& cyclic_orders)
{
    for (const Int& d : cyclic_orders)
        if (d < 0)
            throw std::invalid_argument("cyclic orders must be non-negative");
    // Quotient of Z^s by the diagonal relation lattice; SNF merges coprime
    // factors and produces the divisibility chain.
    const int s = static_cast<int>(cyclic_orders.size());
    int relations = 0;
    for (const Int& d : cyclic_orders)
        if (d != 0)
            ++relations;
    IntMatrix rel(s, relations);
    int c = 0;
    for (int j = 0; j < s; ++j)
        if (cyclic_orders[static_cast<std::size_t>(j)] != 0)
            rel.at(j, c++) = cyclic_orders[static_cast<std::size_t>(j)];
    SmithNormalForm snf = smith_normal_form(rel);
    FGAbelianGroup out;
    for (int t = 0; t < relations; ++t)
        if (snf.d.at(t, t) >= 2)
            out.orders_.push_back(snf.d.at(t, t));
    for (int t = 0; t < s - relations; ++t)
        out.orders_.push_back(0);
    return out;
}

FGAbelianGroup FGAbelianGroup::free(int rank)
{
    if (rank < 0)
        throw std::invalid_argument("rank must be non-negative");
    FGAbelianGroup out;
    out.orders_.assign(static_cast<std::size_t>(rank), 0);
    return out;
}

int FGAbelianGroup::rank() const
{
    return static_cast<int>(std::count(orders_.begin(), orders_.end(), Int(0)));
}

std::vector<Int> FGAbelianGroup::torsion_orders() const
{
    std::vector<Int> out;
    for (const Int& d : orders_)
        if (d != 0)
            out.push_back(d);
    return out;
}

Int FGAbelianGroup::order() const
{
    if (rank() > 0)
        return 0;
    Int n = 1;
    for (const Int& d : orders_)
        n *= d;
    return n;
}

std::string FGAbelianGroup::to_string() const
{
    if (orders_.empty())
        return "0";
    std::string out;
    int r = rank();
    if (r == 1)
        out = "Z";
    else if (r > 1)
        out = "Z^" + std::to_string(r);
    for (const Int& d : torsion_orders()) {
        if (!out.empty())
            out += " ⊕ ";
        out += "Z/" + d.str();
    }
    return out;
}

bool isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h)
{
    return g.orders() == h.orders();
}

namespace {

// Columns {d_i e_i : d_i != 0} of the relation lattice of a cyclic
// presentation (order-1 factors contribute a relation as well).
IntMatrix relation_columns(const std::vector<Int>& orders)
{
    const int n = static_cast<int>(orders.size());
    int count = 0;
    for (const Int& d : orders)
        if (d != 0)
            ++count;
    IntMatrix out(n, count);
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (orders[static_cast<std::size_t>(i)] != 0)
            out.at(i, c++) = orders[static_cast<std::size_t>(i)];
    return out;
}

// Structure of lattice(numerator_basis) / lattice(sub_generators); the
// sublattice must be contained in the numerator lattice.
FGAbelianGroup quotient_structure(const IntMatrix& numerator_basis, const IntMatrix& sub_generators)
{
    const int m = numerator_basis.cols();
    if (m == 0)
        return FGAbelianGroup();
    IntMatrix w = solve_in_basis(numerator_basis, sub_generators);
    SmithNormalForm snf = smith_normal_form(w);
    std::vector<Int> orders;
    const int limit = std::min(w.rows(), w.cols());
    int nonzero = 0;
    for (int t = 0; t < limit; ++t)
        if (snf.d.at(t, t) != 0) {
            orders.push_back(snf.d.at(t, t));
            ++nonzero;
        }
    for (int t = 0; t < m - nonzero; ++t)
        orders.push_back(0);
    return FGAbelianGroup::from_orders(orders);
}

void require_well_defined(const Homomorphism& h)
{
    if (!is_well_defined(h))
        throw std::invalid_argument("homomorphism is not well defined on the given presentation");
}

} // namespace

bool is_well_defined(const Homomorphism& h)
{
    const int s = static_cast<int>(h.source.size());
    const int t = static_cast<int>(h.target.size());
    if (h.matrix.rows() != t || h.matrix.cols() != s)
        return false;
    for (const Int& d : h.source)
        if (d < 0)
            return false;
    for (const Int& d : h.target)
        if (d < 0)
            return false;
    for (int j = 0; j < s; ++j) {
        const Int& a = h.source[static_cast<std::size_t>(j)];
        if (a == 0)
            continue;
        for (int i = 0; i < t; ++i) {
            const Int& b = h.target[static_cast<std::size_t>(i)];
            Int scaled = h.matrix.at(i, j) * a;
            if (b == 0 ? scaled != 0 : scaled % b != 0)
                return false;
        }
    }
    return true;
}

Kernel kernel(const Homomorphism& h)
{
    require_well_defined(h);
    const int s = static_cast<int>(h.source.size());
    IntMatrix target_rel = relation_columns(h.target);
    // x is in the kernel iff M x lands in the target relation lattice.
    IntMatrix combined = h.matrix.hstack(target_rel);
    IntMatrix solutions = kernel_lattice(combined);
    IntMatrix lifted_gens = solutions.top_rows(s);
    IntMatrix basis = lattice_basis(lifted_gens);
    IntMatrix source_rel = relation_columns(h.source);
    Kernel out;
    out.group = quotient_structure(basis, source_rel);
    out.generators = basis;
    return out;
}

FGAbelianGroup image(const Homomorphism& h)
{
    require_well_defined(h);
    IntMatrix target_rel = relation_columns(h.target);
    IntMatrix span = h.matrix.hstack(target_rel);
    return quotient_structure(lattice_basis(span), target_rel);
}

FGAbelianGroup cokernel(const Homomorphism& h)
{
    require_well_defined(h);
    const int t = static_cast<int>(h.target.size());
    IntMatrix rel = h.matrix.hstack(relation_columns(h.target));
    SmithNormalForm snf = smith_normal_form(rel);
    std::vector<Int> orders;
    const int limit = std::min(rel.rows(), rel.cols());
    int nonzero = 0;
    for (int i = 0; i < limit; ++i)
        if (snf.d.at(i, i) != 0) {
            orders.push_back(snf.d.at(i, i));
            ++nonzero;
        }
    for (int i = 0; i < t - nonzero; ++i)
        orders.push_back(0);
    return FGAbelianGroup::from_orders(orders);
}

} // namespace cob1::fgab
