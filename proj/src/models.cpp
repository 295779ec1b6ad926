#include "ehrlat/models.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ehrlat/genfunc.hpp"

namespace ehrlat {

namespace {

void check_simple(const Graph& g, const char* who) {
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      throw DomainError(std::string(who) + ": edge endpoint out of range");
    if (u == v) throw DomainError(std::string(who) + ": self-loop not allowed");
  }
}

Atom var_atom(int dim, int i, Rat dil, Rel rel) {
  Atom a;
  a.coeffs.assign(dim, Rat(0));
  a.coeffs[i] = 1;
  a.dilation_coeff = std::move(dil);
  a.rel = rel;
  return a;
}

QuasiPolynomial formula_qp(const Formula& f, int dim) {
  auto compiled = compile_formula(f, dim);
  return ehrhart_qp(compiled.at(1), QpMethod::Interpolation);
}

// Underlying simple edge set; parallel edges do not change colorings.
std::vector<std::pair<int, int>> simple_edges(const Graph& g) {
  std::set<std::pair<int, int>> s;
  for (auto [u, v] : g.edges) s.insert({std::min(u, v), std::max(u, v)});
  return {s.begin(), s.end()};
}

}  // namespace

bool eval_formula(const Formula& f, const IntVec& x, const Int& k) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      Rat v = f.atom.dilation_coeff * Rat(k);
      for (size_t i = 0; i < f.atom.coeffs.size(); ++i) v += f.atom.coeffs[i] * Rat(x[i]);
      switch (f.atom.rel) {
        case Rel::LT: return v < 0;
        case Rel::LE: return v <= 0;
        case Rel::EQ: return v == 0;
        case Rel::NE: return v != 0;
        case Rel::GE: return v >= 0;
        case Rel::GT: return v > 0;
      }
      return false;
    }
    case Formula::Kind::And:
      for (const auto& c : f.children)
        if (!eval_formula(c, x, k)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children)
        if (eval_formula(c, x, k)) return true;
      return false;
    case Formula::Kind::Not:
      return !eval_formula(f.children[0], x, k);
  }
  return false;
}

QuasiPolynomial chromatic_qp(const Graph& g) {
  check_simple(g, "chromatic_qp");
  const int n = g.vertices;
  if (n == 0) return {1, 0, {{Rat(1)}}};
  std::vector<Formula> parts;
  for (int v = 0; v < n; ++v) {
    parts.push_back(Formula::make_atom(var_atom(n, v, Rat(0), Rel::GT)));
    parts.push_back(Formula::make_atom(var_atom(n, v, Rat(-1), Rel::LE)));
  }
  for (auto [u, v] : simple_edges(g)) {
    Atom a = var_atom(n, u, Rat(0), Rel::NE);
    a.coeffs[v] = -1;
    parts.push_back(Formula::make_atom(a));
  }
  return formula_qp(Formula::make_and(std::move(parts)), n);
}

QuasiPolynomial chromatic_shifted_qp(const Graph& g) {
  QuasiPolynomial qp = chromatic_qp(g);
  for (auto& c : qp.constituents) c = poly_compose_affine(c, Rat(1), Rat(-1));
  return qp;
}

QuasiPolynomial chromatic_oracle(const Graph& g) {
  check_simple(g, "chromatic_oracle");
  const int n = g.vertices;
  // Deletion-contraction over (vertex count, simple edge list).
  std::function<Poly(int, std::vector<std::pair<int, int>>)> chi =
      [&](int verts, std::vector<std::pair<int, int>> edges) -> Poly {
    for (auto [u, v] : edges)
      if (u == v) return Poly{Rat(0)};
    if (edges.empty()) {
      Poly p(verts + 1, Rat(0));
      p[verts] = 1;
      return p;
    }
    auto [eu, ev] = edges.back();
    edges.pop_back();
    Poly del = chi(verts, edges);
    // contract the larger endpoint into the smaller, moving the last label
    // into the freed slot
    const int keep = std::min(eu, ev), gone = std::max(eu, ev);
    std::vector<std::pair<int, int>> merged;
    std::set<std::pair<int, int>> seen;
    auto relabel = [&](int w) {
      if (w == gone) return keep;
      if (w == verts - 1) return gone;
      return w;
    };
    for (auto [a, b] : edges) {
      int x = relabel(a), y = relabel(b);
      auto e = std::make_pair(std::min(x, y), std::max(x, y));
      if (x == y || seen.insert(e).second) merged.push_back(x == y ? std::make_pair(x, x) : e);
    }
    Poly con = chi(verts - 1, std::move(merged));
    Poly out = poly_add(del, poly_scale(con, Rat(-1)));
    out.resize(n + 1, Rat(0));
    return out;
  };
  Poly p = chi(n, simple_edges(g));
  p.resize(n + 1, Rat(0));
  return {1, n, {std::move(p)}};
}

Int acyclic_orientation_count(const Graph& g) {
  check_simple(g, "acyclic_orientation_count");
  auto edges = simple_edges(g);
  const int m = int(edges.size());
  if (m > 24) throw ResourceError("acyclic_orientation_count: too many edges");
  Int total = 0;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<std::vector<int>> adj(g.vertices);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if (mask & (1L << e)) adj[u].push_back(v);
      else adj[v].push_back(u);
    }
    // cycle detection by coloring DFS
    std::vector<int> state(g.vertices, 0);
    bool acyclic = true;
    std::function<void(int)> dfs = [&](int u) {
      state[u] = 1;
      for (int w : adj[u]) {
        if (state[w] == 1) acyclic = false;
        else if (state[w] == 0 && acyclic) dfs(w);
      }
      state[u] = 2;
    };
    for (int v = 0; v < g.vertices && acyclic; ++v)
      if (state[v] == 0) dfs(v);
    if (acyclic) total += 1;
  }
  return total;
}

QuasiPolynomial restricted_partition_qp(int m) {
  if (m < 1) throw DomainError("restricted_partition_qp: m must be >= 1");
  Polyhedron p;
  p.dim = m;
  for (int i = 0; i + 1 < m; ++i) {
    LinRow r;
    r.b = 0;
    r.a.assign(m, Rat(0));
    r.a[i] = 1;
    r.a[i + 1] = -1;
    p.inequalities.push_back(std::move(r));
  }
  LinRow last;
  last.b = 0;
  last.a.assign(m, Rat(0));
  last.a[m - 1] = 1;
  p.inequalities.push_back(std::move(last));
  LinRow sum;
  sum.b = -1;
  sum.a.assign(m, Rat(1));
  p.equations.push_back(std::move(sum));
  return ehrhart_qp(p, QpMethod::Interpolation);
}

bool partition_reciprocity_check(int m, const Int& k) {
  QuasiPolynomial qp = restricted_partition_qp(m);
  Int val = reciprocity(qp, k);
  return abs(val) == distinct_partition_count(k, m);
}

QuasiPolynomial modular_flow_qp(const Graph& g) {
  if (!g.directed) throw DomainError("modular_flow_qp: graph must be directed");
  check_simple(g, "modular_flow_qp");
  const int e_count = int(g.edges.size());
  if (e_count == 0) return {1, 0, {{Rat(1)}}};

  std::vector<int> indeg(g.vertices, 0), outdeg(g.vertices, 0);
  for (auto [u, v] : g.edges) {
    outdeg[u]++;
    indeg[v]++;
  }
  std::vector<int> lo(g.vertices), hi(g.vertices);
  for (int v = 0; v < g.vertices; ++v) {
    if (indeg[v] == 0 && outdeg[v] == 0) {
      lo[v] = hi[v] = 0;
    } else {
      lo[v] = -outdeg[v] + 1;
      hi[v] = indeg[v] - 1;
    }
  }

  PartialComplex pc;
  std::vector<int> b(g.vertices);
  std::function<void(int)> pick = [&](int v) {
    if (v == g.vertices) {
      Polyhedron p;
      p.dim = e_count;
      for (int e = 0; e < e_count; ++e) {
        LinRow low, high;
        low.b = 0;
        low.a.assign(e_count, Rat(0));
        low.a[e] = 1;
        low.strict = true;
        high.b = 1;
        high.a.assign(e_count, Rat(0));
        high.a[e] = -1;
        high.strict = true;
        p.inequalities.push_back(std::move(low));
        p.inequalities.push_back(std::move(high));
      }
      for (int w = 0; w < g.vertices; ++w) {
        LinRow r;
        r.b = -b[w];
        r.a.assign(e_count, Rat(0));
        for (int e = 0; e < e_count; ++e) {
          if (g.edges[e].second == w) r.a[e] += 1;
          if (g.edges[e].first == w) r.a[e] -= 1;
        }
        p.equations.push_back(std::move(r));
      }
      if (!is_empty(p)) pc.push_back({1, std::move(p)});
      return;
    }
    for (b[v] = lo[v]; b[v] <= hi[v]; ++b[v]) pick(v + 1);
  };
  pick(0);
  return ehrhart_qp(pc, QpMethod::Interpolation);
}

QuasiPolynomial scheduling_qp(const SchedulingProblem& s) {
  if (s.jobs < 1) throw DomainError("scheduling_qp: jobs must be >= 1");
  const int d = s.jobs;
  std::vector<Formula> parts;
  for (int i = 0; i < d; ++i) {
    parts.push_back(Formula::make_atom(var_atom(d, i, Rat(0), Rel::GT)));
    parts.push_back(Formula::make_atom(var_atom(d, i, Rat(-1), Rel::LE)));
  }
  parts.push_back(s.formula);
  return formula_qp(Formula::make_and(std::move(parts)), d);
}

Int partition_count_oracle(const Int& k, int m) {
  // partitions of k into at most m parts
  long n = k.get_si();
  if (n < 0) return 0;
  std::vector<std::vector<Int>> p(n + 1, std::vector<Int>(m + 1, 0));
  for (int j = 0; j <= m; ++j) p[0][j] = 1;
  for (long i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      p[i][j] = p[i][j - 1];
      if (i >= j) p[i][j] += p[i - j][j];
    }
  return p[n][m];
}

Int distinct_partition_count(const Int& k, int m) {
  std::function<Int(long, int, long)> rec = [&](long left, int parts, long low) -> Int {
    if (parts == 0) return left == 0 ? 1 : 0;
    Int total = 0;
    for (long a = low; a <= left; ++a) total += rec(left - a, parts - 1, a + 1);
    return total;
  };
  return rec(k.get_si(), m, 1);
}

Int flow_count_oracle(const Graph& g, const Int& k) {
  if (!g.directed) throw DomainError("flow_count_oracle: graph must be directed");
  const int m = int(g.edges.size());
  long kk = k.get_si();
  if (m == 0) return 1;
  if (kk < 2) return 0;
  Int total = 0;
  std::vector<long> y(m, 1);
  while (true) {
    bool ok = true;
    for (int v = 0; v < g.vertices && ok; ++v) {
      long s = 0;
      for (int e = 0; e < m; ++e) {
        if (g.edges[e].second == v) s += y[e];
        if (g.edges[e].first == v) s -= y[e];
      }
      if (((s % kk) + kk) % kk != 0) ok = false;
    }
    if (ok) total += 1;
    int pos = 0;
    while (pos < m && y[pos] == kk - 1) y[pos++] = 1;
    if (pos == m) break;
    y[pos]++;
  }
  return total;
}

Int scheduling_oracle(const SchedulingProblem& s, const Int& k) {
  const int d = s.jobs;
  long kk = k.get_si();
  Int total = 0;
  IntVec x(d, 1);
  while (true) {
    if (eval_formula(s.formula, x, k)) total += 1;
    int pos = 0;
    while (pos < d && x[pos] == kk) x[pos++] = 1;
    if (pos == d) break;
    x[pos] += 1;
  }
  return total;
}

}  // namespace ehrlat
