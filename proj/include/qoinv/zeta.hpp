#pragma once

// Monodromy zeta functions in factored form prod_a (t^a - 1)^{e_a}.
//
// Nothing is ever expanded into coefficients: the queries
// (multiplicity of t - 1, degree, equality) read straight off the factors.

#include "qoinv/branch.hpp"
#include "qoinv/exact.hpp"

#include <initializer_list>
#include <map>
#include <utility>

namespace qoinv {

class CycloProduct {
public:
  using Factors = std::map<BigInt, BigInt>;

  CycloProduct() = default;
  /// Entries with the same key are summed; zero exponents are dropped.
  CycloProduct(std::initializer_list<std::pair<long, long>> factors);

  /// (t^a - 1)^e as a single factor. Requires a >= 1.
  static CycloProduct factor(const BigInt& a, const BigInt& e);

  const Factors& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// Exponent of (t^a - 1); zero when absent.
  BigInt exponent(const BigInt& a) const;

  friend bool operator==(const CycloProduct&, const CycloProduct&) = default;

private:
  void accumulate(const BigInt& a, const BigInt& e);

  Factors factors_;

  friend CycloProduct mul(const CycloProduct&, const CycloProduct&);
  friend CycloProduct pow(const CycloProduct&, const BigInt&);
  friend CycloProduct substitute(const CycloProduct&, const BigInt&);
};

CycloProduct mul(const CycloProduct& p, const CycloProduct& q);
CycloProduct pow(const CycloProduct& p, const BigInt& k);
/// t -> t^b. Requires b >= 1.
CycloProduct substitute(const CycloProduct& p, const BigInt& b);

/// Order of vanishing at t = 1: every t^a - 1 carries one factor t - 1.
BigInt tm1_multiplicity(const CycloProduct& p);
/// Degree of the rational function, sum of a*e_a.
BigInt degree_sum(const CycloProduct& p);

/// Exponents of the cyclotomic polynomials Phi_d, using
/// t^a - 1 = prod_{d | a} Phi_d.
std::map<BigInt, BigInt> cyclotomic_normal_form(const CycloProduct& p);

/// Positive divisors of n >= 1 in increasing order.
std::vector<BigInt> divisors(const BigInt& n);

/// H_bullet at one level: (t^d - 1)(t^{n b} - 1) / (t^{n d} - 1)^b with
/// n = n_{i~}, b = b_i.
CycloProduct horizontal_zeta_base(const LevelInvariants& inv, Axis axis);

/// V_bullet at one level: (t - 1)^d / (t^{n b / c} - 1)^{c (d - 1)}.
/// Throws TheoremViolation if n b / c is not an integer.
CycloProduct vertical_zeta_base(const LevelInvariants& inv, Axis axis);

/// H(axis) for the level-0 surface of `seq`:
///   H^(k)(t) = H_bullet^(k)(t^{d^(k+1)}) * H^(k+1)(t)^{b} / (t^{d^(k+1)} - 1)^{b}
CycloProduct horizontal_zeta(const DerivationSequence& seq);

/// V(axis) for the level-0 surface of `seq`:
///   V^(k)(t) = V_bullet^(k)(t)^{d^(k+1)} * V^(k+1)(t^b) / (t^b - 1)^{d^(k+1)}
CycloProduct vertical_zeta(const DerivationSequence& seq);

/// V^(k)(axis) for every level k = 0..e-1.
std::vector<CycloProduct> vertical_zeta_levels(const DerivationSequence& seq);

} // namespace qoinv
