#pragma once

// Exact scalars for the invariant pipeline: big integers, reduced rationals,
// and the 2x2 rational matrices used to compare the two derivation sequences.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qoinv {

using BigInt = mpz_class;

class ExactRational {
public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}
  ExactRational(const BigInt& value) : q_(value) {}

  /// Reduced fraction num/den with positive denominator. Throws
  /// InvalidInput when den == 0.
  static ExactRational reduce(const BigInt& num, const BigInt& den);

  /// Parses "[+-]digits[/digits]". Throws InvalidInput on anything else.
  static ExactRational parse(std::string_view text);

  // gmpxx hands out references to the canonical num/den pair.
  const BigInt& numerator() const { return q_.get_num(); }
  const BigInt& denominator() const { return q_.get_den(); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return sgn(q_); }

  /// Numerator when is_integer(); throws TheoremViolation otherwise.
  BigInt to_integer() const;

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

inline ExactRational reduce(const BigInt& num, const BigInt& den) { return ExactRational::reduce(num, den); }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Nonnegative (r, s) with m*s - n*r = 1, i.e. [[m, n], [r, s]] in SL(2, Z).
struct Completion {
  BigInt r;
  BigInt s;
  friend bool operator==(const Completion&, const Completion&) = default;
};

/// Smallest nonnegative completion of the row (m, n). Among the family
/// (r + t*m, s + t*n) this picks the least s with r >= 0 as well; for n == 1
/// that means s = 1, r = m - 1 rather than the residue s = 0.
/// Requires m, n >= 1 and gcd(m, n) == 1, else InvalidInput.
Completion unimodular_completion(const BigInt& m, const BigInt& n);

using Vec2 = std::array<ExactRational, 2>;

struct Mat2 {
  ExactRational a11{0}, a12{0}, a21{0}, a22{0};

  static Mat2 identity() { return {1, 0, 0, 1}; }

  ExactRational det() const { return a11 * a22 - a12 * a21; }
  bool is_integral() const;
  Vec2 operator*(const Vec2& v) const { return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// The swap transform: [[det/u22, u12/u22], [-u21/u22, 1/u22]].
/// If (x1, y2) = U (x2, y1) then (x1, y1) = sw(U) (x2, y2).
/// det(sw(U)) = u11/u22. Throws SingularSwap when u22 == 0.
Mat2 sw(const Mat2& u);

} // namespace qoinv
