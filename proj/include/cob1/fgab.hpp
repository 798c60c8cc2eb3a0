#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cob1::fgab {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return entries_[index(i, j)]; }
    const Int& at(int i, int j) const { return entries_[index(i, j)]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    /// row i += c * row j
    void add_row(int i, int j, const Int& c);
    /// col i += c * col j
    void add_col(int i, int j, const Int& c);
    void negate_row(int i);

    IntMatrix column(int j) const;
    /// Horizontal concatenation [this | rhs] (row counts must match).
    IntMatrix hstack(const IntMatrix& rhs) const;
    /// Copy of the first `count` rows.
    IntMatrix top_rows(int count) const;
    /// Copy keeping only the columns with mask[j] set.
    IntMatrix select_cols(const std::vector<bool>& mask) const;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

/// u * a * v == d with u, v unimodular and d diagonal, d_1 | d_2 | ..., all
/// diagonal entries non-negative, zeros last.
struct SmithNormalForm {
    IntMatrix u, d, v;
};

SmithNormalForm smith_normal_form(const IntMatrix& a);

/// Exact determinant (Bareiss fraction-free elimination); square input only.
Int determinant(const IntMatrix& a);

/// Columns form a basis of the lattice {x : a * x = 0} in Z^cols.
IntMatrix kernel_lattice(const IntMatrix& a);

/// Columns form a basis of the lattice spanned by the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Solves basis * w = rhs over the integers, column by column. `basis` must
/// have full column rank; throws std::domain_error if some column of rhs is
/// not in the lattice spanned by `basis`.
IntMatrix solve_in_basis(const IntMatrix& basis, const IntMatrix& rhs);

/// A finitely generated abelian group in invariant-factor form: the orders
/// list is d_1 | d_2 | ... (each >= 2) followed by one 0 per infinite cyclic
/// factor. The default-constructed group is trivial.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;

    /// Normalizes an arbitrary cyclic decomposition (orders >= 0, order 1
    /// factors allowed and dropped).
    static FGAbelianGroup from_orders(const std::vector<Int>& cyclic_orders);
    static FGAbelianGroup free(int rank);

    const std::vector<Int>& orders() const { return orders_; }
    int rank() const;
    std::vector<Int> torsion_orders() const;
    bool is_trivial() const { return orders_.empty(); }
    /// Number of elements; 0 when the group is infinite.
    Int order() const;

    /// "0", "Z", "Z^r", "Z/d", joined with " (+) " for direct sums.
    std::string to_string() const;

    bool operator==(const FGAbelianGroup&) const = default;

private:
    std::vector<Int> orders_;
};

bool isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h);

/// A map between f.g. abelian groups presented by cyclic generators. The
/// source/target order lists need not be normalized (0 = infinite factor,
/// 1 = trivial placeholder). Column j of the matrix is the image of the j-th
/// source generator in target coordinates.
struct Homomorphism {
    std::vector<Int> source;
    std::vector<Int> target;
    IntMatrix matrix;
};

/// Checks matrix shape and the relation-compatibility condition
/// m_ij * a_j == 0 in the i-th target factor, for every torsion source factor.
bool is_well_defined(const Homomorphism& h);

struct Kernel {
    FGAbelianGroup group;
    /// One column per generator of the kernel, in source coordinates.
    IntMatrix generators;
};

Kernel kernel(const Homomorphism& h);
FGAbelianGroup image(const Homomorphism& h);
FGAbelianGroup cokernel(const Homomorphism& h);

} // namespace cob1::fgab
