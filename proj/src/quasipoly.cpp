#include "ehrlat/quasipoly.hpp"

#include <algorithm>

#include "ehrlat/matrix.hpp"

namespace ehrlat {

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_scale(const Poly& a, const Rat& s) {
  Poly r = a;
  for (Rat& c : r) c *= s;
  return r;
}

Poly poly_compose_affine(const Poly& a, const Rat& inner_scale, const Rat& inner_shift) {
  // Horner over the outer polynomial with the affine inner argument.
  Poly r;
  Poly inner = {inner_shift, inner_scale};
  for (size_t i = a.size(); i-- > 0;) {
    r = poly_mul(r, inner);
    if (r.empty()) r.push_back(Rat(0));
    r[0] += a[i];
  }
  return r;
}

Rat poly_eval(const Poly& a, const Rat& x) {
  Rat v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

Poly binomial_poly(const Rat& shift, int d) {
  if (d < 0) throw DomainError("binomial_poly: negative lower index");
  // C(k + shift, d) = prod_{i=0}^{d-1} (k + shift - i) / d!.
  Poly r = {Rat(1)};
  Int fact = 1;
  for (int i = 0; i < d; ++i) {
    r = poly_mul(r, Poly{shift - i, Rat(1)});
    fact *= i + 1;
  }
  return poly_scale(r, Rat(1, fact));
}

Rat qp_evaluate(const QuasiPolynomial& qp, const Int& k) {
  Int r = mod_floor(k, qp.period);
  return poly_eval(qp.constituents[r.get_ui()], Rat(k));
}

QuasiPolynomial qp_align(const QuasiPolynomial& qp, const Int& period, int degree) {
  if (mod_floor(period, qp.period) != 0 || degree < qp.degree)
    throw DomainError("qp_align: not a refinement");
  QuasiPolynomial out;
  out.period = period;
  out.degree = degree;
  for (Int r = 0; r < period; r += 1) {
    Poly c = qp.constituents[mod_floor(r, qp.period).get_ui()];
    c.resize(degree + 1, Rat(0));
    out.constituents.push_back(std::move(c));
  }
  return out;
}

QuasiPolynomial qp_add(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  Int period = lcm(a.period, b.period);
  int degree = std::max(a.degree, b.degree);
  QuasiPolynomial aa = qp_align(a, period, degree);
  QuasiPolynomial bb = qp_align(b, period, degree);
  for (size_t r = 0; r < aa.constituents.size(); ++r)
    aa.constituents[r] = poly_add(aa.constituents[r], bb.constituents[r]);
  return aa;
}

QuasiPolynomial qp_scale(const QuasiPolynomial& a, const Rat& s) {
  QuasiPolynomial r = a;
  for (auto& c : r.constituents) c = poly_scale(c, s);
  return r;
}

bool qp_equal(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  Int period = lcm(a.period, b.period);
  int degree = std::max(a.degree, b.degree);
  return qp_align(a, period, degree).constituents ==
         qp_align(b, period, degree).constituents;
}

QuasiPolynomial qp_trim(const QuasiPolynomial& qp) {
  int deg = 0;
  for (const auto& c : qp.constituents)
    for (int i = qp.degree; i > deg; --i)
      if (c[i] != 0) {
        deg = std::max(deg, i);
        break;
      }
  QuasiPolynomial out;
  out.period = qp.period;
  out.degree = deg;
  for (const auto& c : qp.constituents)
    out.constituents.emplace_back(c.begin(), c.begin() + deg + 1);
  return out;
}

Int reciprocity(const QuasiPolynomial& qp, const Int& k) {
  if (k < 1) throw DomainError("reciprocity: k must be positive");
  Rat v = qp_evaluate(qp, -k);
  if (!is_integer(v)) throw InternalError("reciprocity: non-integer value");
  return v.get_num();
}

RatVec hstar_vector(const QuasiPolynomial& qp, int d) {
  if (qp.period != 1) throw DomainError("hstar_vector: period must be 1");
  // Values at k = 0..d determine the coefficients in the shifted binomial
  // basis; solve the triangular-by-construction linear system.
  RatMatrix m(d + 1, d + 1);
  RatVec rhs(d + 1);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= d; ++i) m.at(k, i) = poly_eval(binomial_poly(Rat(d - i), d), Rat(k));
    rhs[k] = poly_eval(qp.constituents[0], Rat(k));
  }
  auto sol = solve_square(m, rhs);
  if (!sol) throw InternalError("hstar_vector: singular basis matrix");
  return *sol;
}

RatVec fstar_vector(const QuasiPolynomial& qp, int d) {
  if (qp.period != 1) throw DomainError("fstar_vector: period must be 1");
  // f_i is the i-th forward difference of the polynomial at k = 1.
  RatVec vals(d + 1);
  for (int k = 0; k <= d; ++k) vals[k] = poly_eval(qp.constituents[0], Rat(k + 1));
  RatVec f(d + 1);
  for (int i = 0; i <= d; ++i) {
    f[i] = vals[0];
    for (int k = 0; k + 1 < int(vals.size()); ++k) vals[k] = vals[k + 1] - vals[k];
    vals.pop_back();
  }
  return f;
}

}  // namespace ehrlat
