#include "ehrlat/barvinok.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ehrlat {

namespace {

RatMatrix columns_matrix(const std::vector<IntVec>& gens, const std::vector<int>& idx,
                         int n) {
  RatMatrix m(n, int(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, int(j)) = gens[idx[j]][i];
  return m;
}

bool cone_is_pointed(const std::vector<IntVec>& gens, int n) {
  // Pointed iff 0 is not a nontrivial nonnegative combination of generators.
  const int m = int(gens.size());
  std::vector<LinRow> ineqs, eqs;
  for (int j = 0; j < m; ++j) {
    LinRow r;
    r.b = 0;
    r.a.assign(m, Rat(0));
    r.a[j] = 1;
    ineqs.push_back(std::move(r));
  }
  LinRow sum;
  sum.b = -1;
  sum.a.assign(m, Rat(1));
  eqs.push_back(std::move(sum));
  for (int i = 0; i < n; ++i) {
    LinRow r;
    r.b = 0;
    r.a.resize(m);
    for (int j = 0; j < m; ++j) r.a[j] = gens[j][i];
    eqs.push_back(std::move(r));
  }
  return !fm_feasible(m, ineqs, eqs);
}

// Facet normal of span(face) inside span(basis_idx), oriented positive on
// opposite_gen.
RatVec face_normal(const std::vector<IntVec>& gens, const std::vector<int>& face,
                   const std::vector<int>& basis_idx, int opposite_gen, int n) {
  const int r = int(basis_idx.size());
  RatMatrix sys(int(face.size()), r);
  for (size_t i = 0; i < face.size(); ++i)
    for (int j = 0; j < r; ++j) {
      Rat s = 0;
      for (int t = 0; t < n; ++t) s += Rat(gens[face[i]][t]) * Rat(gens[basis_idx[j]][t]);
      sys.at(int(i), j) = s;
    }
  auto ker = nullspace(sys);
  if (ker.size() != 1) throw InternalError("triangulation: facet normal not unique");
  RatVec eta(n, Rat(0));
  for (int j = 0; j < r; ++j)
    for (int t = 0; t < n; ++t) eta[t] += ker[0][j] * Rat(gens[basis_idx[j]][t]);
  Rat side = 0;
  for (int t = 0; t < n; ++t) side += eta[t] * Rat(gens[opposite_gen][t]);
  if (side == 0) throw InternalError("triangulation: degenerate facet orientation");
  if (side < 0)
    for (Rat& q : eta) q = -q;
  return eta;
}

}  // namespace

SignedConeList triangulate_cone(const std::vector<IntVec>& generators) {
  std::vector<IntVec> gens;
  for (const auto& g : generators) {
    bool zero = true;
    for (const Int& v : g)
      if (v != 0) zero = false;
    if (zero) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  if (gens.empty()) {
    SignedCone pt;
    pt.sign = 1;
    pt.cone.apex.clear();
    return {pt};
  }
  const int n = int(gens[0].size());
  if (!cone_is_pointed(gens, n)) throw DomainError("triangulate_cone: cone contains a line");

  // Placing triangulation: insert generators in order, coning visible
  // boundary faces over the new generator.
  std::vector<std::vector<int>> cells;
  std::vector<int> inserted;
  std::vector<int> basis;  // maximal independent subset of inserted
  int cur_rank = 0;
  for (int idx = 0; idx < int(gens.size()); ++idx) {
    std::vector<int> with = inserted;
    with.push_back(idx);
    int r_new = rank(columns_matrix(gens, with, n));
    if (r_new > cur_rank) {
      if (cells.empty()) {
        cells.push_back({idx});
      } else {
        for (auto& c : cells) c.push_back(idx);
      }
      cur_rank = r_new;
      inserted.push_back(idx);
      basis.push_back(idx);
      continue;
    }
    // Boundary faces of the current triangulation appear in exactly one cell.
    std::map<std::vector<int>, std::pair<int, int>> faces;  // face -> (count, opposite)
    for (const auto& c : cells)
      for (size_t drop = 0; drop < c.size(); ++drop) {
        std::vector<int> f;
        for (size_t t = 0; t < c.size(); ++t)
          if (t != drop) f.push_back(c[t]);
        std::sort(f.begin(), f.end());
        auto it = faces.find(f);
        if (it == faces.end()) faces.emplace(std::move(f), std::make_pair(1, c[drop]));
        else it->second.first += 1;
      }
    std::vector<std::vector<int>> fresh;
    for (const auto& [f, info] : faces) {
      if (info.first != 1) continue;
      if (cur_rank == 1) {
        // Faces are the apex itself; g is visible iff it points opposite to
        // the single inserted ray, which pointedness already excludes.
        continue;
      }
      RatVec eta = face_normal(gens, f, basis, info.second, n);
      Rat side = 0;
      for (int t = 0; t < n; ++t) side += eta[t] * Rat(gens[idx][t]);
      if (side >= 0) continue;
      std::vector<int> cell = f;
      cell.push_back(idx);
      fresh.push_back(std::move(cell));
    }
    inserted.push_back(idx);
    for (auto& c : fresh) cells.push_back(std::move(c));
  }

  // Half-open facet assignment by a generic interior direction.
  Int maxabs = 1;
  for (const auto& g : gens)
    for (const Int& v : g) maxabs = std::max(maxabs, Int(abs(v)));
  Int m0 = maxabs + 1;
  for (Int m = m0;; m *= m0) {
    RatVec w(n, Rat(0));
    Int coef = m;
    for (const auto& g : gens) {
      for (int t = 0; t < n; ++t) w[t] += Rat(coef * g[t]);
      coef *= m;
    }
    std::vector<std::vector<bool>> flags(cells.size());
    bool ok = true;
    for (size_t ci = 0; ci < cells.size() && ok; ++ci) {
      RatMatrix b = columns_matrix(gens, cells[ci], n);
      auto sigma = solve_any(b, w);
      if (!sigma) throw InternalError("triangulation: interior direction outside span");
      for (const Rat& q : *sigma)
        if (q == 0) ok = false;
      if (!ok) break;
      flags[ci].resize(cells[ci].size());
      for (size_t j = 0; j < cells[ci].size(); ++j) flags[ci][j] = (*sigma)[j] < 0;
    }
    if (!ok) continue;
    SignedConeList out;
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      SignedCone sc;
      sc.sign = 1;
      sc.cone.apex.assign(n, Rat(0));
      for (int j : cells[ci]) sc.cone.generators.push_back(gens[j]);
      sc.cone.open_flags = flags[ci];
      out.push_back(std::move(sc));
    }
    return out;
  }
}

SignedConeList brion(const Polyhedron& p) {
  VertexSet vs = vertices(p);
  SignedConeList out;
  for (const auto& v : vs.vertices) {
    if (v.edge_dirs.empty()) {
      SignedCone sc;
      sc.sign = 1;
      sc.cone.apex = v.point;
      out.push_back(std::move(sc));
      continue;
    }
    for (auto& sc : triangulate_cone(v.edge_dirs)) {
      sc.cone.apex = v.point;
      out.push_back(std::move(sc));
    }
  }
  return out;
}

// -- signed decomposition ---------------------------------------------------

namespace {

struct Decomposer {
  int d;
  RatVec s;  // apex-shift direction
  Int target;
  std::vector<SignedGens> leaves;
  DecompositionStats stats;
  bool degenerate = false;

  void run(const IntMatrix& v, int sign, int depth) {
    if (degenerate) return;
    stats.max_depth = std::max(stats.max_depth, depth);
    Int dt = det(v);
    if (dt == 0) throw RankError("barvinok: dependent generators");
    auto vinv_opt = inverse(RatMatrix::from_int(v));
    const RatMatrix& vinv = *vinv_opt;
    for (int i = 0; i < d; ++i) {
      Rat sigma = 0;
      for (int j = 0; j < d; ++j) sigma += vinv.at(i, j) * s[j];
      if (sigma == 0) {
        degenerate = true;
        return;
      }
    }
    if (abs(dt) <= target) {
      SignedGens leaf;
      leaf.sign = sign;
      for (int j = 0; j < d; ++j) leaf.generators.push_back(v.column(j));
      leaves.push_back(std::move(leaf));
      ++stats.leaves;
      return;
    }

    // Short vector: LLL on the columns of det * V^{-1}; lambda = column / det
    // must have all |lambda_i| < 1 so child indices strictly decrease.
    IntMatrix scaled(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rat q = dt * vinv.at(i, j);
        if (!is_integer(q)) throw InternalError("barvinok: adjugate not integral");
        scaled.at(i, j) = q.get_num();
      }
    IntMatrix red = lll_reduce(scaled);

    std::optional<RatVec> best;
    auto consider = [&](const IntVec& c) {
      RatVec lam(d);
      bool zero = true;
      Rat maxabs = 0;
      for (int i = 0; i < d; ++i) {
        lam[i] = make_rat(c[i], dt);
        if (lam[i] != 0) zero = false;
        Rat a = abs(lam[i]);
        if (a > maxabs) maxabs = a;
      }
      if (zero || maxabs >= 1) return;
      // Orientation: all nonzero coordinates negative is invalid (the signed
      // identity then carries a whole-space correction), so flip in that
      // case; with mixed signs both orientations work and the
      // lexicographically smaller lambda is canonical.
      bool all_pos = true, all_neg = true;
      for (int i = 0; i < d; ++i) {
        if (lam[i] > 0) all_neg = false;
        if (lam[i] < 0) all_pos = false;
      }
      RatVec neg(d);
      for (int i = 0; i < d; ++i) neg[i] = -lam[i];
      if (all_neg) {
        lam = std::move(neg);
      } else if (!all_pos &&
                 std::lexicographical_compare(neg.begin(), neg.end(), lam.begin(),
                                              lam.end())) {
        lam = std::move(neg);
      }
      if (!best) {
        best = std::move(lam);
        return;
      }
      Rat bm = 0;
      for (const Rat& q : *best) bm = std::max(bm, Rat(abs(q)));
      if (maxabs < bm ||
          (maxabs == bm &&
           std::lexicographical_compare(lam.begin(), lam.end(), best->begin(), best->end())))
        best = std::move(lam);
    };
    for (int j = 0; j < d; ++j) consider(red.column(j));
    if (!best) {
      // Fall back to small integer combinations of the reduced basis.
      std::vector<int> coef(d, -1);
      for (;;) {
        IntVec c(d, Int(0));
        for (int j = 0; j < d; ++j)
          if (coef[j] != 0)
            for (int i = 0; i < d; ++i) c[i] += coef[j] * red.at(i, j);
        consider(c);
        int pos = d - 1;
        while (pos >= 0 && coef[pos] == 1) coef[pos--] = -1;
        if (pos < 0) break;
        coef[pos] += 1;
      }
      if (!best) throw InternalError("barvinok: no admissible short vector found");
    }

    IntVec u(d, Int(0));
    for (int j = 0; j < d; ++j) {
      Rat q = 0;
      for (int i = 0; i < d; ++i) q += Rat(v.at(j, i)) * (*best)[i];
      if (!is_integer(q)) throw InternalError("barvinok: short vector not integral");
      u[j] = q.get_num();
    }
    for (int i = 0; i < d; ++i) {
      if ((*best)[i] == 0) continue;
      IntMatrix child = v;
      child.set_column(i, u);
      Int child_idx = abs(det(child));
      if (child_idx >= abs(dt))
        throw InternalError("barvinok: index failed to decrease");
      run(child, (*best)[i] > 0 ? sign : -sign, depth + 1);
      if (degenerate) return;
    }
  }
};

}  // namespace

std::optional<std::vector<SignedGens>> decompose_with_direction(
    const std::vector<IntVec>& generators, const IntVec& s, const Int& target_index,
    DecompositionStats* stats) {
  const int d = int(generators.size());
  if (d == 0 || int(generators[0].size()) != d)
    throw DimensionError("decompose_with_direction: generators must be square full rank");
  Decomposer dec;
  dec.d = d;
  dec.s = to_rat_vec(s);
  dec.target = target_index < 1 ? Int(1) : target_index;
  dec.run(IntMatrix::from_columns(generators), 1, 0);
  if (dec.degenerate) return std::nullopt;
  if (stats) *stats = dec.stats;
  return std::move(dec.leaves);
}

SignedConeList barvinok_decompose(const HalfOpenCone& c, const Int& target_index,
                                  DecompositionStats* stats) {
  const int n = int(c.apex.size());
  const int d = int(c.generators.size());
  if (d == 0) return {{1, c}};
  if (!c.open_flags.empty() && c.open_flags.size() != c.generators.size())
    throw DimensionError("barvinok_decompose: open_flags size mismatch");

  // Work in saturation coordinates when the cone is lower-dimensional.
  std::vector<IntVec> work;                 // d x d generator columns
  std::optional<IntMatrix> back;            // ambient lift of y-coordinates
  if (d == n) {
    work = c.generators;
    if (det(IntMatrix::from_columns(work)) == 0)
      throw RankError("barvinok_decompose: dependent generators");
  } else if (d < n) {
    IntMatrix b = IntMatrix::from_columns(c.generators);
    auto snf = smith_normal_form_general(b);
    for (int i = 0; i < d; ++i)
      if (snf.S.at(i, i) == 0) throw RankError("barvinok_decompose: dependent generators");
    for (int j = 0; j < d; ++j) {
      IntVec col(d);
      for (int i = 0; i < d; ++i) col[i] = snf.S.at(i, i) * snf.W.at(i, j);
      work.push_back(std::move(col));
    }
    back = snf.U;
  } else {
    throw RankError("barvinok_decompose: dependent generators");
  }

  Int maxabs = 1;
  for (const auto& g : work)
    for (const Int& v : g) maxabs = std::max(maxabs, Int(abs(v)));
  Int m0 = maxabs + 1;
  std::optional<std::vector<SignedGens>> leaves;
  for (Int m = m0; !leaves; m *= m0) {
    IntVec s(d, Int(0));
    Int coef = 1;
    for (int j = d - 1; j >= 0; --j) {
      coef *= m;
      bool open = !c.open_flags.empty() && c.open_flags[j];
      for (int i = 0; i < d; ++i) s[i] += (open ? coef : -coef) * work[j][i];
    }
    leaves = decompose_with_direction(work, s, target_index, stats);
    if (!leaves) continue;

    SignedConeList out;
    for (const auto& leaf : *leaves) {
      SignedCone sc;
      sc.sign = leaf.sign;
      sc.cone.apex = c.apex;
      auto vinv = inverse(RatMatrix::from_int(IntMatrix::from_columns(leaf.generators)));
      for (int i = 0; i < d; ++i) {
        Rat sigma = 0;
        for (int j = 0; j < d; ++j) sigma += vinv->at(i, j) * Rat(s[j]);
        sc.cone.open_flags.push_back(sigma > 0);
      }
      for (const auto& g : leaf.generators) {
        if (!back) {
          sc.cone.generators.push_back(g);
        } else {
          IntVec amb(n, Int(0));
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) amb[i] += back->at(i, j) * g[j];
          sc.cone.generators.push_back(std::move(amb));
        }
      }
      out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(), [](const SignedCone& a, const SignedCone& b) {
      if (a.sign != b.sign) return a.sign < b.sign;
      return a.cone.generators < b.cone.generators;
    });
    return out;
  }
  throw InternalError("barvinok_decompose: unreachable");
}

}  // namespace ehrlat
