#include "ehrlat/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace ehrlat {

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty() || cols[0].empty()) throw DimensionError("from_columns: empty input");
  IntMatrix m(int(cols[0].size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols[0].size())
      throw DimensionError("from_columns: ragged columns");
    for (size_t i = 0; i < cols[j].size(); ++i) m.at(int(i), int(j)) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  IntMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
  const int n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

// Elementary operations on S with U, W kept in sync so that U*S*W is invariant.
struct SnfState {
  IntMatrix u, s, w;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < s.cols(); ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int r = 0; r < u.rows(); ++r) std::swap(u.at(r, i), u.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int c = 0; c < w.cols(); ++c) std::swap(w.at(i, c), w.at(j, c));
  }
  // row i += c * row j
  void add_row(int i, int j, const Int& c) {
    for (int col = 0; col < s.cols(); ++col) s.at(i, col) += c * s.at(j, col);
    for (int r = 0; r < u.rows(); ++r) u.at(r, j) -= c * u.at(r, i);
  }
  // col j += c * col i
  void add_col(int j, int i, const Int& c) {
    for (int r = 0; r < s.rows(); ++r) s.at(r, j) += c * s.at(r, i);
    for (int col = 0; col < w.cols(); ++col) w.at(i, col) -= c * w.at(j, col);
  }
  void negate_row(int i) {
    for (int c = 0; c < s.cols(); ++c) s.at(i, c) = -s.at(i, c);
    for (int r = 0; r < u.rows(); ++r) u.at(r, i) = -u.at(r, i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form_general(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  SnfState st{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  const int steps = std::min(r, c);
  for (int k = 0; k < steps; ++k) {
    for (;;) {
      // Pivot: minimal nonzero |entry| in the trailing block, lowest (row, col)
      // on ties.
      int pi = -1, pj = -1;
      Int best;
      for (int i = k; i < r; ++i)
        for (int j = k; j < c; ++j) {
          if (st.s.at(i, j) == 0) continue;
          Int v = abs(st.s.at(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        // trailing block all zero
        k = steps;
        break;
      }
      st.swap_rows(k, pi);
      st.swap_cols(k, pj);
      bool clean = true;
      for (int i = k + 1; i < r; ++i) {
        if (st.s.at(i, k) == 0) continue;
        Int q = floor_div(st.s.at(i, k), st.s.at(k, k));
        st.add_row(i, k, -q);
        if (st.s.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < c; ++j) {
        if (st.s.at(k, j) == 0) continue;
        Int q = floor_div(st.s.at(k, j), st.s.at(k, k));
        st.add_col(j, k, -q);
        if (st.s.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry; fold a violating row in.
      int bi = -1;
      for (int i = k + 1; i < r && bi < 0; ++i)
        for (int j = k + 1; j < c; ++j)
          if (mod_floor(st.s.at(i, j), st.s.at(k, k)) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      st.add_row(k, bi, 1);
    }
    if (k >= steps) break;
  }
  for (int i = 0; i < steps; ++i)
    if (st.s.at(i, i) < 0) st.negate_row(i);
  return {st.u, st.s, st.w};
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("smith_normal_form: matrix not square");
  if (det(m) == 0) throw SingularMatrixError("smith_normal_form: singular matrix");
  return smith_normal_form_general(m);
}

namespace {

Int round_nearest(const Rat& q) {
  return rat_floor(q + Rat(1, 2));
}

struct Gso {
  std::vector<RatVec> bstar;
  std::vector<RatVec> mu;    // mu[i][j], j < i
  RatVec norm;               // |bstar_i|^2

  void compute(const IntMatrix& b) {
    const int n = b.rows(), m = b.cols();
    bstar.assign(m, RatVec(n));
    mu.assign(m, RatVec(m, Rat(0)));
    norm.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
      RatVec v = to_rat_vec(b.column(i));
      for (int j = 0; j < i; ++j) {
        Rat num = 0;
        for (int t = 0; t < n; ++t) num += Rat(b.at(t, i)) * bstar[j][t];
        if (norm[j] == 0) throw RankError("lll_reduce: dependent columns");
        mu[i][j] = num / norm[j];
        for (int t = 0; t < n; ++t) v[t] -= mu[i][j] * bstar[j][t];
      }
      bstar[i] = v;
      norm[i] = dot(v, v);
      if (norm[i] == 0) throw RankError("lll_reduce: dependent columns");
    }
  }
};

}  // namespace

IntMatrix lll_reduce(const IntMatrix& b, const Rat& delta) {
  if (delta <= Rat(1, 4) || delta >= 1)
    throw DomainError("lll_reduce: delta must lie in (1/4, 1)");
  IntMatrix a = b;
  const int m = a.cols();
  Gso gso;
  gso.compute(a);
  int k = 1;
  while (k < m) {
    for (int j = k - 1; j >= 0; --j) {
      Int q = round_nearest(gso.mu[k][j]);
      if (q != 0) {
        for (int t = 0; t < a.rows(); ++t) a.at(t, k) -= q * a.at(t, j);
        gso.compute(a);
      }
    }
    Rat lhs = gso.norm[k];
    Rat rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.norm[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      for (int t = 0; t < a.rows(); ++t) std::swap(a.at(t, k), a.at(t, k - 1));
      gso.compute(a);
      k = std::max(k - 1, 1);
    }
  }
  return a;
}

namespace {

// Row echelon form; returns pivot column per row (reduced in place).
std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(p, j));
    Rat inv = 1 / a.at(row, col);
    for (int j = 0; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve_square(const RatMatrix& a, const RatVec& b) {
  if (a.rows() != a.cols() || int(b.size()) != a.rows())
    throw DimensionError("solve_square: dimension mismatch");
  auto x = solve_any(a, b);
  if (!x) return std::nullopt;
  RatMatrix c = a;
  if (int(rref(c).size()) < a.cols()) return std::nullopt;  // underdetermined
  return x;
}

std::optional<RatVec> solve_any(const RatMatrix& a, const RatVec& b) {
  if (int(b.size()) != a.rows()) throw DimensionError("solve_any: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == a.cols()) return std::nullopt;  // 0 = 1 row
  RatVec x(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), a.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  const int n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (int(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

int rank(const RatMatrix& a) {
  RatMatrix c = a;
  return int(rref(c).size());
}

std::vector<RatVec> nullspace(const RatMatrix& a) {
  RatMatrix c = a;
  auto pivots = rref(c);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVec v(a.cols(), Rat(0));
    v[j] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c.at(int(r), j);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace ehrlat
