#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace strtop {

// Exact arbitrary-precision integer. Torsion orders grow factorially with
// the degree, so fixed-width arithmetic is not an option anywhere.
using Int = mpz_class;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Quotient rounded to nearest (ties toward zero). Used as the reduction
// step in Smith elimination to keep coefficients small.
inline Int div_round_nearest(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs_int(r) > abs_int(b)) q += (b > 0 ? 1 : -1);
  return q;
}

// Representative of a mod n in [0, n), n > 0.
inline Int mod_floor(const Int& a, const Int& n) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int factorial_int(long k) {
  Int f = 1;
  for (long i = 2; i <= k; ++i) f *= i;
  return f;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace strtop
