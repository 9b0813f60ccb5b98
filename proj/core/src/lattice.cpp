#include "veronese/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace veronese {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  std::span<const std::vector<long>> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; }));
}

namespace {

// Working state of the diagonalization. Every elementary operation is
// mirrored on the transform and on its inverse.
class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& a)
      : a_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  SnfResult run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
      if (!diagonalize_from(t)) break;
      if (a_(t, t) < 0) negate_row(t);
    }
    SnfResult out;
    out.d.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.d[i] = a_(i, i);
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inv = std::move(u_inv_);
    out.v_inv = std::move(v_inv_);
    return out;
  }

 private:
  // Clears row t and column t, leaving a pivot dividing the trailing block.
  // Returns false when the trailing block is entirely zero.
  bool diagonalize_from(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    for (;;) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a_(i, j) == 0) continue;
          if (pr == m || abs(a_(i, j)) < abs(a_(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) return false;
      if (pr != t) swap_rows(t, pr);
      if (pc != t) swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a_(i, t) == 0) continue;
        Integer q = a_(i, t) / a_(t, t);
        add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a_(t, j) == 0) continue;
        Integer q = a_(t, j) / a_(t, t);
        add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_(i, j) % a_(t, t) != 0) {
            add_row(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides) return true;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
  }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) += k * a_(j, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) += k * u_(j, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, j) -= k * u_inv_(r, i);
  }

  // col_j += k * col_i
  void add_col(std::size_t j, std::size_t i, const Integer& k) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, j) += k * a_(r, i);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, j) += k * v_(r, i);
    for (std::size_t c = 0; c < v_inv_.cols(); ++c) v_inv_(i, c) -= k * v_inv_(j, c);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  IntMatrix a_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) { return SnfWorker(a).run(); }

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis_cols, const IntVector& v) {
  if (v.size() != basis_cols.rows())
    throw std::invalid_argument("lattice_coordinates: vector length mismatch");
  const SnfResult snf = smith_normal_form(basis_cols);
  const IntVector c = snf.u * v;
  const std::size_t r = snf.rank();
  for (std::size_t i = r; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  IntVector y(basis_cols.cols(), Integer(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (c[i] % snf.d[i] != 0) return std::nullopt;
    y[i] = c[i] / snf.d[i];
  }
  return snf.v * y;
}

bool lattice_contains(const IntMatrix& basis_cols, const IntVector& v) {
  return lattice_coordinates(basis_cols, v).has_value();
}

std::optional<Integer> minimal_multiplier(const IntMatrix& basis_cols, const IntVector& v) {
  if (v.size() != basis_cols.rows())
    throw std::invalid_argument("minimal_multiplier: vector length mismatch");
  if (is_zero(v)) throw std::invalid_argument("minimal_multiplier: zero vector");
  const SnfResult snf = smith_normal_form(basis_cols);
  const IntVector c = snf.u * v;
  const std::size_t r = snf.rank();
  for (std::size_t i = r; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  Integer mult = 1;
  for (std::size_t i = 0; i < r; ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), snf.d[i].get_mpz_t(), c[i].get_mpz_t());
    Integer need = snf.d[i] / g;
    mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), need.get_mpz_t());
  }
  return mult;
}

std::size_t lattice_rank(const IntMatrix& cols) { return smith_normal_form(cols).rank(); }

IntMatrix lattice_basis(const IntMatrix& cols) {
  const SnfResult snf = smith_normal_form(cols);
  const std::size_t r = snf.rank();
  IntMatrix basis(cols.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < cols.rows(); ++i) basis(i, j) = snf.u_inv(i, j) * snf.d[j];
  return basis;
}

IntMatrix lattice_intersection(const IntMatrix& a_cols, const IntMatrix& b_cols) {
  if (a_cols.rows() != b_cols.rows())
    throw std::invalid_argument("lattice_intersection: ambient dimension mismatch");
  IntMatrix neg_b = b_cols;
  for (std::size_t i = 0; i < neg_b.rows(); ++i)
    for (std::size_t j = 0; j < neg_b.cols(); ++j) neg_b(i, j) = -neg_b(i, j);
  const IntMatrix stacked = a_cols.hconcat(neg_b);
  const SnfResult snf = smith_normal_form(stacked);
  const std::size_t r = snf.rank();

  // Kernel of [A | -B] is spanned by the trailing columns of v; project to A.
  std::vector<IntVector> images;
  for (std::size_t j = r; j < stacked.cols(); ++j) {
    IntVector coeffs(a_cols.cols());
    for (std::size_t i = 0; i < a_cols.cols(); ++i) coeffs[i] = snf.v(i, j);
    IntVector w = a_cols * coeffs;
    if (!is_zero(w)) images.push_back(std::move(w));
  }
  if (images.empty()) return IntMatrix(a_cols.rows(), 0);
  return lattice_basis(IntMatrix::from_columns(a_cols.rows(), std::span<const IntVector>(images)));
}

IntVector to_int_vector(std::span<const long> v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace veronese
