#pragma once

#include <vector>

#include "ehrlat/rational.hpp"

namespace ehrlat {

/// Dense polynomial over Q, coefficients ascending.
using Poly = RatVec;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
/// Substitutes k -> (inner_scale * k + inner_shift).
Poly poly_compose_affine(const Poly& a, const Rat& inner_scale, const Rat& inner_shift);
Rat poly_eval(const Poly& a, const Rat& x);
/// Binomial coefficient polynomial C(k + shift, d) in k.
Poly binomial_poly(const Rat& shift, int d);

/// Quasipolynomial of period ell: constituent r applies when k = r mod ell.
struct QuasiPolynomial {
  Int period = 1;
  int degree = 0;
  std::vector<Poly> constituents;  // size period, each of length degree + 1
};

Rat qp_evaluate(const QuasiPolynomial& qp, const Int& k);
QuasiPolynomial qp_align(const QuasiPolynomial& qp, const Int& period, int degree);
QuasiPolynomial qp_add(const QuasiPolynomial& a, const QuasiPolynomial& b);
QuasiPolynomial qp_scale(const QuasiPolynomial& a, const Rat& s);
bool qp_equal(const QuasiPolynomial& a, const QuasiPolynomial& b);
/// Drops trailing all-zero coefficients (degree may shrink).
QuasiPolynomial qp_trim(const QuasiPolynomial& qp);

/// Evaluation at -k (k >= 1); the result must be an integer.
Int reciprocity(const QuasiPolynomial& qp, const Int& k);

/// Basis change for polynomial (period 1) Ehrhart functions with degree bound
/// d: p(k) = sum_i h_i * C(k + d - i, d) and p(k) = sum_i f_i * C(k - 1, i).
RatVec hstar_vector(const QuasiPolynomial& qp, int d);
RatVec fstar_vector(const QuasiPolynomial& qp, int d);

}  // namespace ehrlat
