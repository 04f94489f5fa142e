#pragma once

// Characteristic tuples of prototype branches
//
//   zeta = sum_j x1^{l1j} x2^{l2j},   j = 1..e
//
// and the derivation recursion that turns a branch with e terms into a
// branch with e - 1 terms, relative to a chosen axis. Iterating it gives
// one row S -> S'(i) -> ... -> S^(e-1)(i) of the basic diagram per axis.

#include "qoinv/error.hpp"
#include "qoinv/exact.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qoinv {

enum class Axis { One = 1, Two = 2 };

/// The complementary axis (written i~ in formulas).
constexpr Axis other(Axis a) { return a == Axis::One ? Axis::Two : Axis::One; }
constexpr int index(Axis a) { return static_cast<int>(a); }

struct ExponentPair {
  ExactRational x1;
  ExactRational x2;

  const ExactRational& at(Axis a) const { return a == Axis::One ? x1 : x2; }
  ExactRational& at(Axis a) { return a == Axis::One ? x1 : x2; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

struct CharacteristicTuple {
  std::vector<ExponentPair> terms;

  std::size_t size() const { return terms.size(); }
  const ExponentPair& leading() const { return terms.front(); }

  friend bool operator==(const CharacteristicTuple&, const CharacteristicTuple&) = default;
};

/// "[(2/7, 4/5), (5/14, 1)]"
std::string to_string(const CharacteristicTuple& t);

enum class ValidationCode {
  Empty,
  NegativeExponent,
  NotReduced,
  NotIncreasing,
  NotEssential,
};

std::string_view to_string(ValidationCode code);

class InvalidTuple : public InvalidInput {
public:
  InvalidTuple(ValidationCode code, std::size_t term, const std::string& what);
  ValidationCode code() const { return code_; }
  /// 0-based index of the offending term.
  std::size_t term() const { return term_; }

private:
  ValidationCode code_;
  std::size_t term_;
};

/// Checks the standing assumptions on a prototype: e >= 1, exponents >= 0,
/// both leading exponents nonzero (reduced), and each term strictly larger
/// than its predecessor in the componentwise order. With `strict`, also
/// requires every term to be essential: it must not lie in the subgroup of
/// Q^2 generated by Z^2 and the preceding terms.
/// Returns `t` unchanged, or throws InvalidTuple.
const CharacteristicTuple& validate(const CharacteristicTuple& t, bool strict = false);

/// Lowest-terms data of the leading exponent pair and everything derived
/// from it. Both completions are stored; axis i uses (r_i, s_i), which
/// completes the row (m_i~, n_i~).
struct LevelInvariants {
  BigInt n1, m1, n2, m2;
  BigInt d_bullet;  // lcm(m1, m2)
  BigInt b1, b2;    // d_bullet / m2, d_bullet / m1
  BigInt c_bullet;  // gcd(n1, n2)
  BigInt r1, s1;    // m2*s1 - n2*r1 == 1
  BigInt r2, s2;    // m1*s2 - n1*r2 == 1

  const BigInt& n(Axis a) const { return a == Axis::One ? n1 : n2; }
  const BigInt& m(Axis a) const { return a == Axis::One ? m1 : m2; }
  const BigInt& b(Axis a) const { return a == Axis::One ? b1 : b2; }
  const BigInt& r(Axis a) const { return a == Axis::One ? r1 : r2; }
  const BigInt& s(Axis a) const { return a == Axis::One ? s1 : s2; }

  friend bool operator==(const LevelInvariants&, const LevelInvariants&) = default;
};

LevelInvariants level_invariants(const CharacteristicTuple& t);

/// The one-term branch made of the leading pair.
CharacteristicTuple truncate(const CharacteristicTuple& t);

/// One derivation step relative to `axis`. Throws CannotDerive when e == 1.
CharacteristicTuple derive(const CharacteristicTuple& t, Axis axis);

struct DerivationLevel {
  CharacteristicTuple branch;
  LevelInvariants inv;
};

struct DerivationSequence {
  Axis axis = Axis::One;
  std::vector<DerivationLevel> levels;  // levels[k] holds S^(k)(axis)

  std::size_t size() const { return levels.size(); }
  const DerivationLevel& operator[](std::size_t k) const { return levels[k]; }
};

/// Validates (non-strict) and derives down to a single term.
DerivationSequence derivation_sequence(const CharacteristicTuple& t, Axis axis);

/// d = product of all truncation degrees d_bullet^(k).
BigInt surface_degree(const DerivationSequence& seq);

/// d^(k) for k = 0..e-1, i.e. the degrees of the derived surfaces; entry 0 is d.
std::vector<BigInt> suffix_degrees(const DerivationSequence& seq);

/// Euler characteristic of the truncation's transverse fiber at one level:
/// d_bullet + d_bullet*l - d_bullet^2*l, where l is the leading exponent
/// along the complementary axis.
ExactRational truncation_euler(const LevelInvariants& inv, Axis axis);

/// Euler characteristics chi^(k)(axis), k = 0..e-1, by the descending
/// recursion chi^(k) = d^(k+1)*chi_bullet^(k) + b^(k)*(chi^(k+1) - d^(k+1)).
std::vector<ExactRational> transverse_euler(const DerivationSequence& seq);

} // namespace qoinv
