#pragma once
// Exact evaluation of factored products, used as an oracle for the
// cyclotomic normal form.

#include "qoinv/zeta.hpp"

#include <random>

namespace qoinv::testing {

inline CycloProduct random_product(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> key(1, 24), exp(-4, 4), count(0, 4);
  CycloProduct p;
  for (long i = count(rng); i > 0; --i)
    p = mul(p, CycloProduct::factor(key(rng), exp(rng)));
  return p;
}

inline ExactRational power(const ExactRational& x, BigInt k) {
  ExactRational out(1), base = x;
  if (k < 0) {
    base = ExactRational(1) / base;
    k = -k;
  }
  for (; k > 0; --k)
    out *= base;
  return out;
}

inline ExactRational eval(const CycloProduct& p, const ExactRational& t) {
  ExactRational out(1);
  for (const auto& [a, e] : p.factors())
    out *= power(power(t, a) - ExactRational(1), e);
  return out;
}

inline long moebius(long n) {
  long result = 1;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q)
      continue;
    n /= q;
    if (n % q == 0)
      return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// Phi_d(t) = prod_{k | d} (t^k - 1)^mu(d/k).
inline ExactRational cyclotomic(long d, const ExactRational& t) {
  ExactRational out(1);
  for (long k = 1; k <= d; ++k)
    if (d % k == 0)
      out *= power(power(t, k) - ExactRational(1), moebius(d / k));
  return out;
}

} // namespace qoinv::testing
