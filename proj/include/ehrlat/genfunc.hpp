#pragma once

#include <vector>

#include "ehrlat/barvinok.hpp"
#include "ehrlat/polyhedron.hpp"
#include "ehrlat/quasipoly.hpp"

namespace ehrlat {

/// Sum of sign * (sum_p z^p) / prod_b (1 - z^b) terms.
struct GenFuncTerm {
  int sign = 1;
  std::vector<IntVec> num;
  std::vector<IntVec> den;  // nonzero exponent vectors
};

struct GenFunc {
  std::vector<GenFuncTerm> terms;
};

enum class GfMethod { Fpp, Barvinok };

/// Multivariate generating function of the lattice points, via Brion vertex
/// cones. Fpp keeps one term per triangulation cell with the full
/// parallelepiped as numerator; Barvinok further decomposes to unimodular
/// cones. Polyhedra must be line-free; complexes must have bounded pieces.
GenFunc gen_func(const Polyhedron& p, GfMethod method);
GenFunc gen_func(const PartialComplex& pc, GfMethod method);

/// Exact cardinality of the finite set represented by g.
Int specialize_count(const GenFunc& g);

/// Prepared dilation counter: the cone structure is computed once, each
/// dilate only re-enumerates numerator points against the scaled apexes.
class DilationCounter {
 public:
  DilationCounter(const PartialComplex& pc, GfMethod method);
  GenFunc at(const Int& k) const;  // k >= 1
  Int count(const Int& k) const;
  /// lcm of closure vertex denominators over the pieces; a period multiple.
  const Int& period_multiple() const { return ell_; }
  /// Largest affine dimension among the (nonempty) pieces.
  int dimension() const { return dim_; }

 private:
  struct Term {
    int sign;
    std::vector<IntVec> generators;
    RatVec apex0, apex1;  // vertex = apex0 * k + eps * apex1
    RatVec apex_delta;    // facet-genericity shift from open flags
  };
  std::vector<Term> terms_;
  Int ell_ = 1;
  int dim_ = 0;
};

/// Ehrhart series data: sum_k ehr(k) q^k = (sum_i hstar[i] q^i) / (1-q^ell)^d
/// with d = dim P + 1 cone generators.
struct EhrhartSeries {
  std::vector<Int> hstar;  // length d * ell
  Int ell;
  int d;
};

EhrhartSeries ehrhart_series(const Polyhedron& p);

enum class QpMethod { Interpolation, HStar };

/// gf selects the counting backend used by the interpolation method; the
/// h* method ignores it.
QuasiPolynomial ehrhart_qp(const Polyhedron& p, QpMethod method,
                           GfMethod gf = GfMethod::Barvinok);
QuasiPolynomial ehrhart_qp(const PartialComplex& pc, QpMethod method,
                           GfMethod gf = GfMethod::Barvinok);

}  // namespace ehrlat
