#include "ehrlat/cones.hpp"

#include <algorithm>

namespace ehrlat {

Int pert_floor(const Pert& p) {
  Int f = rat_floor(p.v);
  if (p.v == f) {
    // Exactly integral rational part: the infinitesimal tail decides.
    bool negative = p.e < 0 || (p.e == 0 && p.d < 0);
    if (negative) f -= 1;
  }
  return f;
}

Int index(const HalfOpenCone& c) {
  if (c.generators.empty()) throw DimensionError("index: cone has no generators");
  if (c.generators.size() != c.apex.size())
    throw DimensionError("index: cone not full-dimensional");
  return abs(det(IntMatrix::from_columns(c.generators)));
}

namespace {

constexpr long kIndexCap = 100000000L;

// Full-dimensional enumeration: y in Z^d with G^{-1}(y - apex) in [0,1)^d.
std::vector<IntVec> enumerate_square(const IntMatrix& g, const PertVec& apex) {
  const int d = g.rows();
  if (det(g) == 0) throw RankError("parallelepiped enumeration: dependent generators");
  auto snf = smith_normal_form(g);
  auto ginv_opt = inverse(RatMatrix::from_int(g));
  const RatMatrix& ginv = *ginv_opt;

  Int total = 1;
  for (int i = 0; i < d; ++i) total *= snf.S.at(i, i);
  if (total > kIndexCap) throw ResourceError("parallelepiped too large to enumerate");

  std::vector<IntVec> out;
  IntVec t(d, Int(0));
  for (;;) {
    // Coset representative r = U * t.
    IntVec r(d, Int(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r[i] += snf.U.at(i, j) * t[j];
    // Unique shift m with lambda + m in [0,1)^d.
    IntVec m(d);
    for (int i = 0; i < d; ++i) {
      Pert lam;
      for (int j = 0; j < d; ++j) lam += ginv.at(i, j) * (Pert(Rat(r[j])) - apex[j]);
      m[i] = -pert_floor(lam);
    }
    IntVec y = r;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) y[i] += g.at(i, j) * m[j];
    out.push_back(std::move(y));

    int pos = d - 1;
    while (pos >= 0) {
      t[pos] += 1;
      if (t[pos] < snf.S.at(pos, pos)) break;
      t[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IntVec> parallelepiped_points_at(const std::vector<IntVec>& generators,
                                             const PertVec& apex) {
  const int n = int(apex.size());
  if (generators.empty()) {
    for (const Pert& p : apex)
      if (!p.is_rational() || !is_integer(p.v)) return {};
    IntVec x(n);
    for (int i = 0; i < n; ++i) x[i] = apex[i].v.get_num();
    return {x};
  }
  const int d = int(generators.size());
  for (const auto& gcol : generators)
    if (int(gcol.size()) != n)
      throw DimensionError("parallelepiped enumeration: generator dimension mismatch");

  if (d == n) return enumerate_square(IntMatrix::from_columns(generators), apex);
  if (d > n) throw RankError("parallelepiped enumeration: dependent generators");

  // Lower-dimensional cone: pass to saturation coordinates y = U^{-1} x in
  // which the generator matrix becomes (diag(s) * W over zeros).
  IntMatrix b = IntMatrix::from_columns(generators);
  auto snf = smith_normal_form_general(b);
  for (int i = 0; i < d; ++i)
    if (snf.S.at(i, i) == 0)
      throw RankError("parallelepiped enumeration: dependent generators");
  auto uinv_opt = inverse(RatMatrix::from_int(snf.U));
  const RatMatrix& uinv = *uinv_opt;

  PertVec ap(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ap[i] += uinv.at(i, j) * apex[j];
  // Tail coordinates are fixed; they must be integral rationals.
  for (int i = d; i < n; ++i)
    if (!ap[i].is_rational() || !is_integer(ap[i].v)) return {};

  IntMatrix g2(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g2.at(i, j) = snf.S.at(i, i) * snf.W.at(i, j);
  PertVec head(ap.begin(), ap.begin() + d);
  auto ys = enumerate_square(g2, head);

  std::vector<IntVec> out;
  for (const auto& yh : ys) {
    IntVec y(n);
    for (int i = 0; i < d; ++i) y[i] = yh[i];
    for (int i = d; i < n; ++i) y[i] = ap[i].v.get_num();
    IntVec x(n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x[i] += snf.U.at(i, j) * y[j];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParallelepipedPoints parallelepiped_points(const HalfOpenCone& c) {
  const int n = int(c.apex.size());
  if (!c.open_flags.empty() && c.open_flags.size() != c.generators.size())
    throw DimensionError("parallelepiped_points: open_flags size mismatch");
  PertVec apex(n);
  for (int i = 0; i < n; ++i) apex[i] = Pert(c.apex[i]);
  for (size_t j = 0; j < c.generators.size(); ++j) {
    if (c.open_flags.empty() || !c.open_flags[j]) continue;
    // Shifting the apex by delta * generator turns lambda_j in [0,1) into
    // (0,1] for the unshifted apex.
    for (int i = 0; i < n; ++i) apex[i].d += Rat(c.generators[j][i]);
  }
  ParallelepipedPoints pp;
  pp.points = parallelepiped_points_at(c.generators, apex);
  return pp;
}

std::map<Int, Int> heights(const ParallelepipedPoints& pp) {
  std::map<Int, Int> h;
  for (const auto& p : pp.points) {
    if (p.empty()) throw DimensionError("heights: empty point");
    h[p.back()] += 1;
  }
  return h;
}

bool cone_contains(const HalfOpenCone& c, const IntVec& x) {
  const int n = int(c.apex.size());
  if (int(x.size()) != n) throw DimensionError("cone_contains: point dimension mismatch");
  if (c.generators.empty()) {
    for (int i = 0; i < n; ++i)
      if (Rat(x[i]) != c.apex[i]) return false;
    return true;
  }
  RatMatrix b(n, int(c.generators.size()));
  for (size_t j = 0; j < c.generators.size(); ++j)
    for (int i = 0; i < n; ++i) b.at(i, int(j)) = c.generators[j][i];
  RatVec rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = Rat(x[i]) - c.apex[i];
  auto lam = solve_any(b, rhs);
  if (!lam) return false;
  // Verify (solve_any ignores rank-deficient residuals only when
  // inconsistent, but be safe for d < n).
  for (int i = 0; i < n; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < c.generators.size(); ++j) s += b.at(i, int(j)) * (*lam)[j];
    if (s != rhs[i]) return false;
  }
  for (size_t j = 0; j < c.generators.size(); ++j) {
    bool open = !c.open_flags.empty() && c.open_flags[j];
    if (open ? !((*lam)[j] > 0) : !((*lam)[j] >= 0)) return false;
  }
  return true;
}

}  // namespace ehrlat
