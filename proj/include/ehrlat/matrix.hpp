#pragma once

#include <optional>
#include <vector>

#include "ehrlat/rational.hpp"

namespace ehrlat {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, Int(0)) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be >= 1");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Builds the matrix whose j-th column is cols[j].
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }

  IntVec column(int j) const {
    IntVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntVec row(int i) const {
    IntVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  void set_column(int j, const IntVec& c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

private:
  int rows_, cols_;
  std::vector<Int> entries_;
};

/// U * S * W == input, |det U| = |det W| = 1, S diagonal non-negative with
/// s_i | s_{i+1}.
struct SmithDecomposition {
  IntMatrix U, S, W;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

/// Smith normal form of a square nonsingular matrix.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Smith normal form of an arbitrary matrix; trailing diagonal entries of S
/// may be zero when the rank is deficient.
SmithDecomposition smith_normal_form_general(const IntMatrix& m);

/// LLL-reduces the columns of B (delta in (1/4, 1)). The output columns span
/// the same lattice. Exact rational Gram-Schmidt throughout.
IntMatrix lll_reduce(const IntMatrix& b, const Rat& delta = Rat(3, 4));

/// Dense rational matrix, row-major.
class RatMatrix {
public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, Rat(0)) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be >= 1");
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
    return r;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }

  RatVec column(int j) const {
    RatVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

private:
  int rows_, cols_;
  std::vector<Rat> entries_;
};

/// Unique solution of a square system A x = b, or nullopt when A is singular.
std::optional<RatVec> solve_square(const RatMatrix& a, const RatVec& b);

/// Any solution of a (possibly rectangular) consistent system A x = b;
/// nullopt when inconsistent.
std::optional<RatVec> solve_any(const RatMatrix& a, const RatVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

int rank(const RatMatrix& a);

/// Basis of the kernel {x : A x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& a);

}  // namespace ehrlat
