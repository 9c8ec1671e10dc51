#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace permcount {

// All arithmetic in this library is exact. Integers are arbitrary
// precision, rationals are always kept in lowest terms (gmp canonical
// form). There is no floating-point code path anywhere.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

inline ExactInt factorial(unsigned long k) {
  ExactInt f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

/// 0!, 1!, ..., n! as a table; builders index it by (n - c).
inline std::vector<ExactInt> factorial_table(unsigned long n) {
  std::vector<ExactInt> t(n + 1);
  t[0] = 1;
  for (unsigned long k = 1; k <= n; ++k) t[k] = t[k - 1] * static_cast<long>(k);
  return t;
}

inline ExactRational make_rational(long num, long den) {
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace permcount
