#include "qoinv/zeta.hpp"

#include "qoinv/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace qoinv {

CycloProduct::CycloProduct(std::initializer_list<std::pair<long, long>> factors) {
  for (const auto& [a, e] : factors) {
    if (a < 1)
      throw InvalidInput("cyclotomic factor t^a - 1 needs a >= 1");
    accumulate(a, e);
  }
}

CycloProduct CycloProduct::factor(const BigInt& a, const BigInt& e) {
  if (a < 1)
    throw InvalidInput("cyclotomic factor t^a - 1 needs a >= 1");
  CycloProduct p;
  p.accumulate(a, e);
  return p;
}

BigInt CycloProduct::exponent(const BigInt& a) const {
  auto it = factors_.find(a);
  return it == factors_.end() ? BigInt(0) : it->second;
}

void CycloProduct::accumulate(const BigInt& a, const BigInt& e) {
  if (e == 0)
    return;
  auto [it, inserted] = factors_.try_emplace(a, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0)
      factors_.erase(it);
  }
}

CycloProduct mul(const CycloProduct& p, const CycloProduct& q) {
  CycloProduct out = p;
  for (const auto& [a, e] : q.factors_)
    out.accumulate(a, e);
  return out;
}

CycloProduct pow(const CycloProduct& p, const BigInt& k) {
  CycloProduct out;
  if (k == 0)
    return out;
  for (const auto& [a, e] : p.factors_)
    out.factors_.emplace(a, e * k);
  return out;
}

CycloProduct substitute(const CycloProduct& p, const BigInt& b) {
  if (b < 1)
    throw InvalidInput("substitute: t -> t^b needs b >= 1");
  CycloProduct out;
  for (const auto& [a, e] : p.factors_)
    out.factors_.emplace(a * b, e);
  return out;
}

BigInt tm1_multiplicity(const CycloProduct& p) {
  BigInt total = 0;
  for (const auto& [a, e] : p.factors())
    total += e;
  return total;
}

BigInt degree_sum(const CycloProduct& p) {
  BigInt total = 0;
  for (const auto& [a, e] : p.factors())
    total += a * e;
  return total;
}

namespace {

// Brent's variant of Pollard rho; n must be composite and odd.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long seed = 1;; ++seed) {
    BigInt y = seed + 1, c = seed, m = 128, g = 1, r = 1, q = 1, x, ys;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i)
        step(y);
      BigInt k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (BigInt i = 0; i < m && i < r - k; ++i) {
          step(y);
          BigInt diff = abs(x - y);
          q = q * diff % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& primes) {
  if (n == 1)
    return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++primes[n];
    return;
  }
  BigInt f = pollard_brent(n);
  factor_into(f, primes);
  factor_into(n / f, primes);
}

std::map<BigInt, unsigned> factorize(BigInt n) {
  std::map<BigInt, unsigned> primes;
  for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++primes[BigInt(p)];
      n /= p;
    }
  }
  factor_into(n, primes);
  return primes;
}

} // namespace

std::vector<BigInt> divisors(const BigInt& n) {
  if (n < 1)
    throw InvalidInput("divisors: n must be positive");
  std::vector<BigInt> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned i = 0; i < k; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j)
        out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<BigInt, BigInt> cyclotomic_normal_form(const CycloProduct& p) {
  std::map<BigInt, BigInt> out;
  for (const auto& [a, e] : p.factors()) {
    for (const auto& d : divisors(a)) {
      auto& slot = out[d];
      slot += e;
      if (slot == 0)
        out.erase(d);
    }
  }
  return out;
}

CycloProduct horizontal_zeta_base(const LevelInvariants& inv, Axis axis) {
  const BigInt& n = inv.n(other(axis));
  const BigInt& b = inv.b(axis);
  CycloProduct out = CycloProduct::factor(inv.d_bullet, 1);
  out = mul(out, CycloProduct::factor(n * b, 1));
  return mul(out, CycloProduct::factor(n * inv.d_bullet, -b));
}

CycloProduct vertical_zeta_base(const LevelInvariants& inv, Axis axis) {
  const BigInt nb = inv.n(other(axis)) * inv.b(axis);
  if (!mpz_divisible_p(nb.get_mpz_t(), inv.c_bullet.get_mpz_t()))
    throw TheoremViolation("vertical zeta: n*b = " + nb.get_str() + " is not divisible by c = " +
                           inv.c_bullet.get_str());
  CycloProduct out = CycloProduct::factor(1, inv.d_bullet);
  return mul(out, CycloProduct::factor(nb / inv.c_bullet, -inv.c_bullet * (inv.d_bullet - 1)));
}

CycloProduct horizontal_zeta(const DerivationSequence& seq) {
  const std::size_t e = seq.size();
  if (e == 0)
    return {};
  const auto degrees = suffix_degrees(seq);
  CycloProduct h = horizontal_zeta_base(seq[e - 1].inv, seq.axis);
  for (std::size_t k = e - 1; k-- > 0;) {
    const BigInt& next_degree = degrees[k + 1];
    const BigInt& b = seq[k].inv.b(seq.axis);
    CycloProduct base = substitute(horizontal_zeta_base(seq[k].inv, seq.axis), next_degree);
    h = mul(mul(base, pow(h, b)), CycloProduct::factor(next_degree, -b));
  }
  return h;
}

std::vector<CycloProduct> vertical_zeta_levels(const DerivationSequence& seq) {
  const std::size_t e = seq.size();
  std::vector<CycloProduct> v(e);
  if (e == 0)
    return v;
  const auto degrees = suffix_degrees(seq);
  v[e - 1] = vertical_zeta_base(seq[e - 1].inv, seq.axis);
  for (std::size_t k = e - 1; k-- > 0;) {
    const BigInt& next_degree = degrees[k + 1];
    const BigInt& b = seq[k].inv.b(seq.axis);
    CycloProduct base = pow(vertical_zeta_base(seq[k].inv, seq.axis), next_degree);
    v[k] = mul(mul(base, substitute(v[k + 1], b)), CycloProduct::factor(b, -next_degree));
  }
  return v;
}

CycloProduct vertical_zeta(const DerivationSequence& seq) {
  auto levels = vertical_zeta_levels(seq);
  return levels.empty() ? CycloProduct{} : levels.front();
}

} // namespace qoinv
