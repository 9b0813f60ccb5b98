#pragma once

// Exact integer matrix algebra: Smith normal form and the lattice questions
// it answers (membership, minimal multipliers, intersections).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace veronese {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);
  static IntMatrix from_columns(std::size_t rows,
                                std::span<const std::vector<long>> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  /// Horizontal concatenation [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntMatrix& a);

/// u * a * v = diag(d). u_inv and v_inv are the exact inverses of u and v.
struct SnfResult {
  std::vector<Integer> d;  // length min(rows, cols), nonnegative, d[i] | d[i+1]
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;

  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// True iff v is an integer combination of the columns of basis_cols.
bool lattice_contains(const IntMatrix& basis_cols, const IntVector& v);

/// Smallest d >= 1 with d*v in the column lattice, or nullopt when v is not
/// in the rational span of the columns. v must be nonzero.
std::optional<Integer> minimal_multiplier(const IntMatrix& basis_cols, const IntVector& v);

/// Rank of the column lattice.
std::size_t lattice_rank(const IntMatrix& cols);

/// A basis (as columns) of the lattice spanned by the given columns.
IntMatrix lattice_basis(const IntMatrix& cols);

/// A basis (as columns) of the intersection of the two column lattices.
IntMatrix lattice_intersection(const IntMatrix& a_cols, const IntMatrix& b_cols);

/// Integer coefficients x with basis_cols * x = v, if any.
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis_cols, const IntVector& v);

IntVector to_int_vector(std::span<const long> v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
bool is_zero(const IntVector& v);

}  // namespace veronese
