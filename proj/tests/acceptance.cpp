// End-to-end acceptance checks. Each criterion prints one pass/fail line;
// the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ehrlat/euclid.hpp"
#include "ehrlat/genfunc.hpp"
#include "ehrlat/models.hpp"
#include "ehrlat/oracle.hpp"

using namespace ehrlat;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s (%s)\n", n, ok ? "pass" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// -- random polytope corpus --------------------------------------------------

struct CorpusEntry {
  Polyhedron p;
  Rat volume;
  int dim;
};

Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return make_rat(num(rng), den(rng));
}

// H-representation of the simplex on affinely independent points.
bool simplex_from_points(const std::vector<RatVec>& pts, Polyhedron& out, Rat& vol) {
  const int d = int(pts[0].size());
  RatMatrix diff(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) diff.at(j, i) = pts[i + 1][j] - pts[0][j];
  if (rank(diff) != d) return false;

  out = Polyhedron{};
  out.dim = d;
  for (int skip = 0; skip <= d; ++skip) {
    RatMatrix sys(d, d + 1);
    int r = 0;
    for (int i = 0; i <= d; ++i) {
      if (i == skip) continue;
      for (int j = 0; j < d; ++j) sys.at(r, j) = pts[i][j];
      sys.at(r, d) = 1;
      ++r;
    }
    auto ker = nullspace(sys);
    if (ker.size() != 1) return false;
    RatVec a(ker[0].begin(), ker[0].begin() + d);
    Rat b = ker[0][d];
    Rat side = dot(a, pts[skip]) + b;
    if (side == 0) return false;
    if (side < 0) {
      for (Rat& q : a) q = -q;
      b = -b;
    }
    out.inequalities.push_back({b, a, false});
  }

  // |det| of the edge matrix over d!
  Int l = 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) l = lcm(l, diff.at(i, j).get_den());
  IntMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = Rat(diff.at(i, j) * l).get_num();
  Rat fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  Int power = 1;
  for (int i = 0; i < d; ++i) power *= l;
  vol = make_rat(Int(abs(det(m))), power) / fact;
  return true;
}

CorpusEntry random_simplex(std::mt19937& rng, int d, bool integral) {
  while (true) {
    std::vector<RatVec> pts(d + 1, RatVec(d));
    for (auto& p : pts)
      for (auto& c : p) {
        c = rnd_rat(rng);
        if (integral) c = rat_floor(c);
      }
    CorpusEntry e;
    e.dim = d;
    if (simplex_from_points(pts, e.p, e.volume)) return e;
  }
}

CorpusEntry random_box(std::mt19937& rng, int d, bool integral) {
  while (true) {
    CorpusEntry e;
    e.dim = d;
    e.p.dim = d;
    e.volume = 1;
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      Rat lo = rnd_rat(rng), hi = rnd_rat(rng);
      if (integral) {
        lo = rat_floor(lo);
        hi = rat_floor(hi);
      }
      if (lo > hi) std::swap(lo, hi);
      if (lo == hi) ok = false;
      RatVec up(d, Rat(0)), down(d, Rat(0));
      up[i] = 1;
      down[i] = -1;
      e.p.inequalities.push_back({-lo, up, false});
      e.p.inequalities.push_back({hi, down, false});
      e.volume *= hi - lo;
    }
    if (ok) return e;
  }
}

std::vector<CorpusEntry> build_corpus(std::mt19937& rng) {
  std::vector<CorpusEntry> corpus;
  for (int d = 1; d <= 3; ++d) {
    for (int i = 0; i < 40; ++i) corpus.push_back(random_simplex(rng, d, false));
    for (int i = 0; i < 30; ++i) corpus.push_back(random_box(rng, d, false));
  }
  return corpus;
}

// -- criteria ----------------------------------------------------------------

void criterion_1(const std::vector<CorpusEntry>& corpus) {
  long checked = 0;
  for (const auto& e : corpus) {
    DilationCounter fpp({{1, e.p}}, GfMethod::Fpp);
    DilationCounter bar({{1, e.p}}, GfMethod::Barvinok);
    for (Int k = 1; k <= 4; k += 1) {
      Int want = count_dilate(e.p, k);
      if (fpp.count(k) != want || bar.count(k) != want) {
        report(1, false, "count mismatch at k=" + k.get_str());
        return;
      }
      ++checked;
    }
  }
  report(1, true,
         std::to_string(corpus.size()) + " random polytopes, " +
             std::to_string(checked) + " dilate counts, both methods");
}

void criterion_2() {
  long max_leaves = 0;
  for (long a = 1; a <= 50; ++a) {
    HalfOpenCone c;
    c.apex = {Rat(0), Rat(0), Rat(0)};
    c.generators = {{1, 0, 0}, {0, 1, 0}, {1, 1, a}};
    if (Int(parallelepiped_points(c).points.size()) != a) {
      report(2, false, "parallelepiped count wrong at a=" + std::to_string(a));
      return;
    }
    auto dec = barvinok_decompose(c);
    max_leaves = std::max(max_leaves, long(dec.size()));
    if (dec.size() > 3) {
      report(2, false, "more than 3 leaves at a=" + std::to_string(a));
      return;
    }
    for (const auto& sc : dec)
      if (index(sc.cone) != 1) {
        report(2, false, "non-unimodular leaf at a=" + std::to_string(a));
        return;
      }
    IntVec x(3);
    for (x[0] = 0; x[0] < 6; x[0] += 1)
      for (x[1] = 0; x[1] < 6; x[1] += 1)
        for (x[2] = 0; x[2] < 6 * a; x[2] += 1) {
          int want = cone_contains(c, x) ? 1 : 0;
          int got = 0;
          for (const auto& sc : dec) got += sc.sign * (cone_contains(sc.cone, x) ? 1 : 0);
          if (got != want) {
            report(2, false, "pointwise mismatch at a=" + std::to_string(a));
            return;
          }
        }
  }
  report(2, true, "a=1..50, <= " + std::to_string(max_leaves) + " unimodular leaves, grids match");
}

void criterion_3() {
  for (int d = 1; d <= 6; ++d) {
    Polyhedron simplex;
    simplex.dim = d;
    for (int i = 0; i < d; ++i) {
      RatVec a(d, Rat(0));
      a[i] = 1;
      simplex.inequalities.push_back({Rat(0), a, false});
    }
    simplex.inequalities.push_back({Rat(1), RatVec(d, Rat(-1)), false});

    QuasiPolynomial qp = ehrhart_qp(simplex, QpMethod::HStar);
    for (Int k = 1; k <= 10; k += 1) {
      Rat binom = 1;
      for (int i = 1; i <= d; ++i) binom *= make_rat(k + i, i);
      if (qp_evaluate(qp, k) != binom) {
        report(3, false, "value mismatch at d=" + std::to_string(d));
        return;
      }
    }
    RatVec h = hstar_vector(qp, d);
    for (int i = 0; i <= d; ++i)
      if (h[i] != (i == 0 ? 1 : 0)) {
        report(3, false, "hstar mismatch at d=" + std::to_string(d));
        return;
      }
  }
  report(3, true, "standard simplices d=1..6, values and hstar");
}

void criterion_4() {
  for (int m = 1; m <= 4; ++m) {
    QuasiPolynomial qp = restricted_partition_qp(m);
    Int period_bound = 1;
    for (int i = 2; i <= m; ++i) period_bound = lcm(period_bound, i);
    if (mod_floor(period_bound, qp.period) != 0) {
      report(4, false, "period does not divide lcm at m=" + std::to_string(m));
      return;
    }
    for (Int k = 1; k <= 30; k += 1)
      if (qp_evaluate(qp, k) != partition_count_oracle(k, m)) {
        report(4, false, "count mismatch at m=" + std::to_string(m));
        return;
      }
  }
  for (int m = 1; m <= 3; ++m)
    for (Int k = 1; k <= 20; k += 1)
      if (!partition_reciprocity_check(m, k)) {
        report(4, false, "reciprocity failed at m=" + std::to_string(m));
        return;
      }
  report(4, true, "m<=4 counts, period divisors, m<=3 distinct-part reciprocity");
}

// Graphs on n labeled vertices as edge bitmasks; canonical form = minimum
// over all vertex permutations.
long canonical_mask(int n, long mask, const std::vector<std::pair<int, int>>& slots) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  long best = mask;
  do {
    long img = 0;
    for (size_t s = 0; s < slots.size(); ++s) {
      if (!(mask & (1L << s))) continue;
      int u = perm[slots[s].first], v = perm[slots[s].second];
      if (u > v) std::swap(u, v);
      for (size_t t = 0; t < slots.size(); ++t)
        if (slots[t] == std::make_pair(u, v)) img |= 1L << t;
    }
    best = std::min(best, img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void criterion_5() {
  long graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<long> reps;
    for (long mask = 0; mask < (1L << slots.size()); ++mask)
      reps.insert(canonical_mask(n, mask, slots));
    for (long mask : reps) {
      Graph g;
      g.vertices = n;
      for (size_t s = 0; s < slots.size(); ++s)
        if (mask & (1L << s)) g.edges.push_back(slots[s]);
      QuasiPolynomial qp = chromatic_qp(g);
      if (!qp_equal(qp_trim(qp), qp_trim(chromatic_oracle(g)))) {
        report(5, false, "pipeline != deletion-contraction at n=" + std::to_string(n));
        return;
      }
      Int chi = reciprocity(qp, 1);
      if (Int(abs(chi)) != acyclic_orientation_count(g)) {
        report(5, false, "orientation reciprocity failed at n=" + std::to_string(n));
        return;
      }
      ++graphs;
    }
  }
  report(5, true, std::to_string(graphs) + " graphs up to isomorphism, <= 5 vertices");
}

void criterion_6() {
  // Digraphs on <= 3 labeled vertices with <= 5 arcs (parallel arcs allowed,
  // no loops), plus a random sample on 4 vertices.
  long digraphs = 0;
  auto check = [&](const Graph& g) {
    QuasiPolynomial qp = modular_flow_qp(g);
    for (Int k = 1; k <= 6; k += 1)
      if (qp_evaluate(qp, k) != flow_count_oracle(g, k)) return false;
    ++digraphs;
    return true;
  };

  for (int n = 2; n <= 3; ++n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) arcs.emplace_back(u, v);
    // multisets of at most 5 arcs, lexicographically nondecreasing
    std::function<bool(Graph&, size_t)> rec = [&](Graph& g, size_t from) {
      if (!check(g)) return false;
      if (g.edges.size() == 5) return true;
      for (size_t i = from; i < arcs.size(); ++i) {
        g.edges.push_back(arcs[i]);
        bool ok = rec(g, i);
        g.edges.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    Graph g;
    g.vertices = n;
    g.directed = true;
    if (!rec(g, 0)) {
      report(6, false, "mismatch on " + std::to_string(n) + "-vertex corpus");
      return;
    }
  }

  std::mt19937 rng(271);
  std::uniform_int_distribution<int> vtx(0, 3), cnt(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g;
    g.vertices = 4;
    g.directed = true;
    int e = cnt(rng);
    while (int(g.edges.size()) < e) {
      int u = vtx(rng), v = vtx(rng);
      if (u != v) g.edges.emplace_back(u, v);
    }
    if (!check(g)) {
      report(6, false, "mismatch on a 4-vertex sample digraph");
      return;
    }
  }
  report(6, true, std::to_string(digraphs) + " digraphs with <= 5 arcs, k <= 6");
}

void criterion_7(const std::vector<CorpusEntry>& corpus,
                 std::vector<QuasiPolynomial>& qps) {
  for (const auto& e : corpus) {
    qps.push_back(ehrhart_qp(e.p, QpMethod::Interpolation));
    const QuasiPolynomial& qp = qps.back();
    for (Int k = 1; k <= 3; k += 1) {
      Int inner = reciprocity(qp, k);
      if (e.dim % 2 == 1) inner = -inner;
      if (inner != count_interior(e.p, k)) {
        report(7, false, "interior mismatch at k=" + k.get_str());
        return;
      }
    }
  }
  report(7, true, std::to_string(corpus.size()) + " polytopes, k=1..3 vs interior oracle");
}

void criterion_8(const std::vector<CorpusEntry>& corpus,
                 const std::vector<QuasiPolynomial>& qps, std::mt19937& rng) {
  for (size_t i = 0; i < corpus.size(); ++i) {
    const QuasiPolynomial& qp = qps[i];
    if (qp.degree != corpus[i].dim) {
      report(8, false, "degree != dimension");
      return;
    }
    for (const auto& c : qp.constituents)
      if (c[qp.degree] != corpus[i].volume) {
        report(8, false, "leading coefficient != volume");
        return;
      }
  }
  long integral = 0;
  for (int d = 1; d <= 3; ++d)
    for (int i = 0; i < 12; ++i) {
      CorpusEntry e = i % 2 ? random_box(rng, d, true) : random_simplex(rng, d, true);
      RatVec h = hstar_vector(ehrhart_qp(e.p, QpMethod::HStar), d);
      for (const Rat& q : h)
        if (q < 0) {
          report(8, false, "negative hstar entry on an integral polytope");
          return;
        }
      ++integral;
    }
  report(8, true,
         std::to_string(corpus.size()) + " degree/volume checks, " +
             std::to_string(integral) + " integral hstar checks");
}

void criterion_9() {
  std::mt19937_64 rng(9001);
  std::uniform_int_distribution<long> d(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    Int a = d(rng), b = d(rng);
    auto c = gcd_certificate(a, b);
    if (c.bezout.first * a + c.bezout.second * b != c.g || c.g != gcd(a, b) ||
        c.segment_points != c.g + 1) {
      report(9, false, "bezout identity failed");
      return;
    }
    if (a <= 2000) {
      Int on_segment = 0;
      for (Int x = 0; x <= a; x += 1)
        if (mod_floor(x * b, a) == 0) on_segment += 1;
      if (on_segment != c.segment_points) {
        report(9, false, "segment count failed");
        return;
      }
    }
  }

  auto fig = gcd_certificate(9, 6);
  bool certs = fig.g == 3 && fig.closest == std::make_pair(Int(2), Int(1)) &&
               fig.bezout == std::make_pair(Int(-1), Int(2)) &&
               gcd_certificate(3, 2).closest == std::make_pair(Int(2), Int(1)) &&
               gcd_certificate(7, 5).bezout == std::make_pair(Int(-2), Int(3));
  if (!certs) {
    report(9, false, "reference certificates not reproduced");
    return;
  }

  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b <= a; ++b) {
      std::set<IntVec> want;
      for (Int x = 0; x <= a; x += 1)
        for (Int y = 0; Int(a) * y <= Int(b) * x; y += 1) want.insert({x, y});
      auto dec = staircase_decomposition(a, b);
      std::set<IntVec> covered;
      for (size_t i = 0; i < dec.pieces.size(); ++i)
        for (auto& p : staircase_piece_points(dec.pieces[i], i + 1 == dec.pieces.size()))
          if (!covered.insert(p).second) {
            report(9, false, "staircase pieces overlap");
            return;
          }
      if (covered != want) {
        report(9, false, "staircase point set wrong at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
        return;
      }
    }
  report(9, true, "10^4 bezout pairs, certificates, staircases up to a=40 incl. (12,7)");
}

void criterion_10() {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> entry(-100, 100);
  std::ostringstream detail;
  int cones = 0;
  while (cones < 5) {
    std::vector<IntVec> gens(3, IntVec(3));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    Int idx = abs(det(IntMatrix::from_columns(gens)));
    if (idx < 10000 || idx > 1000000) continue;

    HalfOpenCone c;
    c.apex = {Rat(0), Rat(0), Rat(0)};
    c.generators = gens;
    DecompositionStats stats;
    auto t0 = std::chrono::steady_clock::now();
    // the recursion itself verifies that the index strictly decreases along
    // every edge and raises an internal error otherwise
    auto dec = barvinok_decompose(c, 1, &stats);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& sc : dec)
      if (index(sc.cone) != 1) {
        report(10, false, "non-unimodular leaf, index " + idx.get_str());
        return;
      }
    if (secs > 60) {
      report(10, false, "decomposition over a minute, index " + idx.get_str());
      return;
    }
    detail << (cones ? ", " : "") << "index " << idx.get_str() << ": depth "
           << stats.max_depth << ", " << dec.size() << " leaves";
    ++cones;
  }
  report(10, true, detail.str());
}

}  // namespace

int main() {
  std::mt19937 rng(20240817);
  auto corpus = build_corpus(rng);

  criterion_1(corpus);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  std::vector<QuasiPolynomial> qps;
  criterion_7(corpus, qps);
  criterion_8(corpus, qps, rng);
  criterion_9();
  criterion_10();

  return failures;
}
