#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ehrlat/errors.hpp"

namespace ehrlat {

// Exact scalars. Int is an arbitrary-precision integer, Rat a rational kept
// in lowest terms with positive denominator (gmpxx canonical form).
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Int rat_ceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational: '" + s + "'");
  }
}

/// Canonical form: "p" for integers, "p/q" otherwise.
inline std::string format_rat(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

/// Scales a rational vector to a primitive integer vector (gcd of entries 1),
/// preserving direction. The zero vector maps to itself.
inline IntVec primitive_vector(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) l = lcm(l, q.get_den());
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (l / v[i].get_den());
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

}  // namespace ehrlat
