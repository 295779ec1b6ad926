#include "ehrlat/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

namespace ehrlat {

Rat row_value(const LinRow& row, const RatVec& x) {
  return row.b + dot(row.a, x);
}

bool row_holds(const LinRow& row, const RatVec& x, bool as_equation) {
  Rat v = row_value(row, x);
  if (as_equation) return v == 0;
  return row.strict ? v > 0 : v >= 0;
}

bool contains(const Polyhedron& p, const RatVec& x) {
  if (int(x.size()) != p.dim) throw DimensionError("contains: point dimension mismatch");
  for (const auto& r : p.equations)
    if (!row_holds(r, x, true)) return false;
  for (const auto& r : p.inequalities)
    if (!row_holds(r, x, false)) return false;
  return true;
}

Polyhedron closure(const Polyhedron& p) {
  Polyhedron c = p;
  for (auto& r : c.inequalities) r.strict = false;
  for (auto& r : c.equations) r.strict = false;
  return c;
}

Polyhedron dilate(const Polyhedron& p, const Int& k) {
  if (k < 1) throw DomainError("dilate: factor must be >= 1");
  Polyhedron d = p;
  for (auto& r : d.inequalities) r.b *= k;
  for (auto& r : d.equations) r.b *= k;
  return d;
}

// -- Fourier-Motzkin --------------------------------------------------------

namespace {

struct FmRow {
  Rat b;
  RatVec a;
  bool strict;
};

bool is_zero(const RatVec& a) {
  for (const Rat& q : a)
    if (q != 0) return false;
  return true;
}

// Scales (b, a) by a positive rational so that a becomes a primitive integer
// vector. Constant rows (a = 0) are left alone.
void normalize_row(FmRow& r) {
  if (is_zero(r.a)) return;
  IntVec prim = primitive_vector(r.a);
  Rat scale;
  for (size_t i = 0; i < r.a.size(); ++i)
    if (r.a[i] != 0) {
      scale = Rat(prim[i]) / r.a[i];
      break;
    }
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = prim[i];
  r.b *= scale;
}

// Returns false when a constant row is violated. Deduplicates rows with equal
// normal, keeping the strongest bound.
bool compress_rows(std::vector<FmRow>& rows) {
  std::map<IntVec, std::pair<Rat, bool>> best;
  for (auto& r : rows) {
    normalize_row(r);
    if (is_zero(r.a)) {
      if (r.b < 0 || (r.b == 0 && r.strict)) return false;
      continue;
    }
    IntVec key(r.a.size());
    for (size_t i = 0; i < r.a.size(); ++i) key[i] = r.a[i].get_num();
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), std::make_pair(r.b, r.strict));
    } else {
      auto& [b, strict] = it->second;
      if (r.b < b || (r.b == b && r.strict && !strict)) {
        b = r.b;
        strict = r.strict;
      }
    }
  }
  rows.clear();
  for (const auto& [key, bs] : best) {
    FmRow r;
    r.b = bs.first;
    r.a = to_rat_vec(key);
    r.strict = bs.second;
    rows.push_back(std::move(r));
  }
  return true;
}

}  // namespace

bool fm_feasible(int dim, const std::vector<LinRow>& inequalities,
                 const std::vector<LinRow>& equations) {
  std::vector<FmRow> ineqs;
  for (const auto& r : inequalities) {
    if (int(r.a.size()) != dim) throw DimensionError("fm_feasible: row dimension mismatch");
    ineqs.push_back({r.b, r.a, r.strict});
  }
  std::vector<FmRow> eqs;
  for (const auto& r : equations) {
    if (int(r.a.size()) != dim) throw DimensionError("fm_feasible: row dimension mismatch");
    eqs.push_back({r.b, r.a, false});
  }

  // Eliminate variables by equation substitution first.
  std::vector<bool> alive(dim, true);
  while (!eqs.empty()) {
    FmRow eq = std::move(eqs.back());
    eqs.pop_back();
    int j = -1;
    for (int t = 0; t < dim; ++t)
      if (eq.a[t] != 0) {
        j = t;
        break;
      }
    if (j < 0) {
      if (eq.b != 0) return false;
      continue;
    }
    auto substitute = [&](FmRow& r) {
      if (r.a[j] == 0) return;
      Rat f = r.a[j] / eq.a[j];
      r.b -= f * eq.b;
      for (int t = 0; t < dim; ++t) r.a[t] -= f * eq.a[t];
    };
    for (auto& r : ineqs) substitute(r);
    for (auto& r : eqs) substitute(r);
    alive[j] = false;
  }

  if (!compress_rows(ineqs)) return false;

  for (;;) {
    // Pick the variable whose elimination creates the fewest products.
    int var = -1;
    long best_cost = 0;
    for (int j = 0; j < dim; ++j) {
      if (!alive[j]) continue;
      long pos = 0, neg = 0, seen = 0;
      for (const auto& r : ineqs) {
        if (r.a[j] > 0) ++pos;
        else if (r.a[j] < 0) ++neg;
        if (r.a[j] != 0) ++seen;
      }
      if (seen == 0) {
        alive[j] = false;
        continue;
      }
      long cost = pos * neg;
      if (var < 0 || cost < best_cost) {
        var = j;
        best_cost = cost;
      }
    }
    if (var < 0) break;

    std::vector<FmRow> lowers, uppers, rest;
    for (auto& r : ineqs) {
      if (r.a[var] > 0) lowers.push_back(std::move(r));
      else if (r.a[var] < 0) uppers.push_back(std::move(r));
      else rest.push_back(std::move(r));
    }
    ineqs = std::move(rest);
    for (const auto& l : lowers)
      for (const auto& u : uppers) {
        FmRow r;
        r.strict = l.strict || u.strict;
        Rat cl = -u.a[var];  // positive
        Rat cu = l.a[var];   // positive
        r.b = cl * l.b + cu * u.b;
        r.a.resize(dim);
        for (int t = 0; t < dim; ++t) r.a[t] = cl * l.a[t] + cu * u.a[t];
        ineqs.push_back(std::move(r));
      }
    alive[var] = false;
    if (!compress_rows(ineqs)) return false;
  }
  return true;
}

bool is_empty(const Polyhedron& p) {
  return !fm_feasible(p.dim, p.inequalities, p.equations);
}

bool is_bounded(const Polyhedron& p) {
  // Recession cone: drop constants, equations stay equations, strictness is
  // irrelevant. Bounded iff no coordinate direction admits a recession vector.
  std::vector<LinRow> rec_ineq;
  for (const auto& r : p.inequalities) rec_ineq.push_back({Rat(0), r.a, false});
  std::vector<LinRow> rec_eq;
  for (const auto& r : p.equations) rec_eq.push_back({Rat(0), r.a, false});
  for (int j = 0; j < p.dim; ++j) {
    for (int sign : {1, -1}) {
      LinRow probe;
      probe.b = -1;
      probe.a.assign(p.dim, Rat(0));
      probe.a[j] = sign;
      rec_ineq.push_back(probe);
      bool feasible = fm_feasible(p.dim, rec_ineq, rec_eq);
      rec_ineq.pop_back();
      if (feasible) return false;
    }
  }
  return true;
}

// -- vertex enumeration -----------------------------------------------------

namespace {

// One constraint prepared for enumeration. shift is the coefficient of -eps:
// the row reads b - shift*eps + a.x >= 0 (or = 0 for equations).
struct VRow {
  RatVec a;
  Rat b;
  Rat shift;
  bool is_eq;
};

// Incremental elimination state for enumerating row subsets whose normals are
// independent. Each entry is reduced against all earlier entries and carries
// both right-hand sides along.
struct ElimEntry {
  RatVec a;
  Rat c0, c1;
  int pivot;
  int row_index;
};

struct SubsetEnumerator {
  const std::vector<VRow>& rows;
  int n;
  std::vector<ElimEntry> stack;
  std::vector<std::pair<RatVec, RatVec>> found;  // (x0, x1), deduped later

  explicit SubsetEnumerator(const std::vector<VRow>& r, int dim) : rows(r), n(dim) {}

  void recurse(int next) {
    if (int(stack.size()) == n) {
      emit();
      return;
    }
    int need = n - int(stack.size());
    for (int i = next; i + need <= int(rows.size()); ++i) {
      RatVec a = rows[i].a;
      Rat c0 = -rows[i].b;
      Rat c1 = rows[i].shift;
      for (const auto& e : stack) {
        if (a[e.pivot] == 0) continue;
        Rat f = a[e.pivot] / e.a[e.pivot];
        for (int t = 0; t < n; ++t) a[t] -= f * e.a[t];
        c0 -= f * e.c0;
        c1 -= f * e.c1;
      }
      int pivot = -1;
      for (int t = 0; t < n; ++t)
        if (a[t] != 0) {
          pivot = t;
          break;
        }
      if (pivot < 0) continue;  // dependent on chosen rows
      stack.push_back({std::move(a), std::move(c0), std::move(c1), pivot, i});
      recurse(i + 1);
      stack.pop_back();
    }
  }

  void emit() {
    RatVec x0(n, Rat(0)), x1(n, Rat(0));
    for (int k = n - 1; k >= 0; --k) {
      const auto& e = stack[k];
      Rat s0 = e.c0, s1 = e.c1;
      for (int t = 0; t < n; ++t) {
        if (t == e.pivot || e.a[t] == 0) continue;
        s0 -= e.a[t] * x0[t];
        s1 -= e.a[t] * x1[t];
      }
      x0[e.pivot] = s0 / e.a[e.pivot];
      x1[e.pivot] = s1 / e.a[e.pivot];
    }
    found.emplace_back(std::move(x0), std::move(x1));
  }
};

// Lexicographic sign of val0 + eps*val1 against zero.
bool eps_nonneg(const Rat& val0, const Rat& val1) {
  return val0 > 0 || (val0 == 0 && val1 >= 0);
}

bool eps_zero(const Rat& val0, const Rat& val1) { return val0 == 0 && val1 == 0; }

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Candidate vertices with their tight row sets, shared by the bounded and the
// line-free enumeration paths.
struct VertexScan {
  std::vector<VRow> rows;
  std::vector<PerturbedVertex> verts;  // edge_dirs left empty
  std::vector<std::vector<int>> tight;
};

VertexScan scan_vertices(const Polyhedron& p, const char* who) {
  const int n = p.dim;
  if (n < 1) throw DimensionError(std::string(who) + ": dimension must be >= 1");
  if (is_empty(p)) throw EmptyError("vertex enumeration on an empty polyhedron");

  std::vector<VRow> rows;
  for (const auto& r : p.equations) rows.push_back({r.a, r.b, Rat(0), true});
  for (const auto& r : p.inequalities)
    rows.push_back({r.a, r.b, r.strict ? Rat(1) : Rat(0), false});
  for (const auto& r : rows)
    if (int(r.a.size()) != n)
      throw DimensionError(std::string(who) + ": row dimension mismatch");

  SubsetEnumerator en(rows, n);
  en.recurse(0);

  std::set<std::pair<RatVec, RatVec>> unique;
  for (auto& cand : en.found) {
    bool ok = true;
    for (const auto& r : rows) {
      Rat v0 = r.b + dot(r.a, cand.first);
      Rat v1 = dot(r.a, cand.second) - r.shift;
      if (r.is_eq ? !eps_zero(v0, v1) : !eps_nonneg(v0, v1)) {
        ok = false;
        break;
      }
    }
    if (ok) unique.insert(std::move(cand));
  }

  std::vector<PerturbedVertex> verts;
  for (const auto& [x0, x1] : unique) verts.push_back({x0, x1, {}});

  // Tight rows per vertex.
  const int m = int(rows.size());
  std::vector<std::vector<int>> tight(verts.size());
  for (size_t v = 0; v < verts.size(); ++v)
    for (int r = 0; r < m; ++r) {
      Rat v0 = rows[r].b + dot(rows[r].a, verts[v].point0);
      Rat v1 = dot(rows[r].a, verts[v].point1) - rows[r].shift;
      if (eps_zero(v0, v1)) tight[v].push_back(r);
    }

  return {std::move(rows), std::move(verts), std::move(tight)};
}

}  // namespace

std::vector<PerturbedVertex> perturbed_vertices(const Polyhedron& p) {
  if (!is_bounded(p)) throw UnboundedError("vertex enumeration on an unbounded polyhedron");
  auto [rows, verts, tight] = scan_vertices(p, "perturbed_vertices");
  const int n = p.dim;

  // Edges: vertex pairs whose common tight rows have normal rank n - 1.
  for (size_t i = 0; i < verts.size(); ++i) {
    std::set<IntVec, decltype([](const IntVec& a, const IntVec& b) {
               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
             })>
        dirs;
    for (size_t j = 0; j < verts.size(); ++j) {
      if (i == j) continue;
      std::vector<int> common;
      std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(),
                            tight[j].end(), std::back_inserter(common));
      int rk = 0;
      if (!common.empty()) {
        RatMatrix cm(int(common.size()), n);
        for (size_t r = 0; r < common.size(); ++r)
          for (int t = 0; t < n; ++t) cm.at(int(r), t) = rows[common[r]].a[t];
        rk = rank(cm);
      }
      if (rk != n - 1) continue;
      RatVec d0(n), d1(n);
      bool zero0 = true;
      for (int t = 0; t < n; ++t) {
        d0[t] = verts[j].point0[t] - verts[i].point0[t];
        d1[t] = verts[j].point1[t] - verts[i].point1[t];
        if (d0[t] != 0) zero0 = false;
      }
      dirs.insert(primitive_vector(zero0 ? d1 : d0));
    }
    verts[i].edge_dirs.assign(dirs.begin(), dirs.end());
  }

  return verts;
}

std::vector<PerturbedVertex> tangent_cones(const Polyhedron& p) {
  auto [rows, verts, tight] = scan_vertices(p, "tangent_cones");
  const int n = p.dim;

  {
    RatMatrix nm(std::max<int>(1, int(rows.size())), n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int t = 0; t < n; ++t) nm.at(int(r), t) = rows[r].a[t];
    if (rank(nm) < n) throw DomainError("tangent_cones: polyhedron contains a line");
  }
  if (verts.empty()) throw DomainError("tangent_cones: no vertex found");

  for (size_t v = 0; v < verts.size(); ++v) {
    const auto& tv = tight[v];
    std::set<IntVec> dirs;
    // A direction d is an extreme ray of the tangent cone when some n-1 tight
    // normals of rank n-1 vanish on it and every tight row admits it.
    auto admits = [&](const IntVec& d) {
      for (int r : tv) {
        Rat s = 0;
        for (int t = 0; t < n; ++t) s += rows[r].a[t] * Rat(d[t]);
        if (rows[r].is_eq ? s != 0 : s < 0) return false;
      }
      return true;
    };
    std::vector<int> pick;
    std::function<void(size_t)> rec = [&](size_t next) {
      if (int(pick.size()) == n - 1) {
        RatMatrix m(n - 1, n);
        for (size_t r = 0; r < pick.size(); ++r)
          for (int t = 0; t < n; ++t) m.at(int(r), t) = rows[pick[r]].a[t];
        auto kern = nullspace(m);
        if (kern.size() != 1) return;
        IntVec d = primitive_vector(kern[0]);
        if (admits(d)) dirs.insert(d);
        for (Int& x : d) x = -x;
        if (admits(d)) dirs.insert(d);
        return;
      }
      for (size_t i = next; i < tv.size(); ++i) {
        pick.push_back(tv[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    if (n == 1) {
      for (IntVec d : {IntVec{1}, IntVec{-1}})
        if (admits(d)) dirs.insert(d);
    } else {
      rec(0);
    }
    verts[v].edge_dirs.assign(dirs.begin(), dirs.end());
  }

  return verts;
}

VertexSet vertices(const Polyhedron& p) {
  auto pv = perturbed_vertices(closure(p));
  VertexSet vs;
  for (auto& v : pv) vs.vertices.push_back({std::move(v.point0), std::move(v.edge_dirs)});
  std::sort(vs.vertices.begin(), vs.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return lex_less(a.point, b.point); });
  return vs;
}

Int vertex_denominator_lcm(const Polyhedron& p) {
  Int l = 1;
  for (const auto& v : vertices(p).vertices)
    for (const Rat& q : v.point) l = lcm(l, q.get_den());
  return l;
}

ConeOverData cone_over(const Polyhedron& p) {
  VertexSet vs = vertices(p);
  Int l = 1;
  for (const auto& v : vs.vertices)
    for (const Rat& q : v.point) l = lcm(l, q.get_den());
  ConeOverData c;
  c.ell = l;
  for (const auto& v : vs.vertices) {
    IntVec g(p.dim + 1);
    for (int t = 0; t < p.dim; ++t) {
      Rat s = v.point[t] * l;
      g[t] = s.get_num();
    }
    g[p.dim] = l;
    c.generators.push_back(std::move(g));
  }
  return c;
}

int affine_dimension(const Polyhedron& p) {
  VertexSet vs = vertices(p);
  if (vs.vertices.size() <= 1) return 0;
  const int n = p.dim;
  RatMatrix m(int(vs.vertices.size()) - 1, n);
  for (size_t i = 1; i < vs.vertices.size(); ++i)
    for (int t = 0; t < n; ++t)
      m.at(int(i) - 1, t) = vs.vertices[i].point[t] - vs.vertices[0].point[t];
  return rank(m);
}

Polyhedron relative_interior(const Polyhedron& p) {
  Polyhedron c = closure(p);
  Polyhedron out;
  out.dim = c.dim;
  out.equations = c.equations;
  for (size_t i = 0; i < c.inequalities.size(); ++i) {
    // Implied equality: the row cannot be strictly positive anywhere on P.
    std::vector<LinRow> probe = c.inequalities;
    probe[i].strict = true;
    if (fm_feasible(c.dim, probe, c.equations)) {
      LinRow r = c.inequalities[i];
      r.strict = true;
      out.inequalities.push_back(std::move(r));
    } else {
      out.equations.push_back(c.inequalities[i]);
    }
  }
  return out;
}

}  // namespace ehrlat
