#include "qoinv/exact.hpp"

#include "qoinv/error.hpp"

#include <cctype>
#include <ostream>

namespace qoinv {

ExactRational ExactRational::reduce(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw InvalidInput("zero denominator");
  ExactRational r;
  r.q_ = mpq_class(num, den);
  r.q_.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

ExactRational ExactRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw InvalidInput("malformed fraction '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0)
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return reduce(n, d);
}

BigInt ExactRational::to_integer() const {
  if (!is_integer())
    throw TheoremViolation("expected an integer, got " + str());
  return numerator();
}

std::string ExactRational::str() const {
  if (is_integer())
    return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  q_ += o.q_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  q_ -= o.q_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  q_ *= o.q_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.q_ == 0)
    throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.q_ = -q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Completion unimodular_completion(const BigInt& m, const BigInt& n) {
  if (m < 1 || n < 1)
    throw InvalidInput("unimodular completion needs positive entries, got (" + m.get_str() + ", " +
                       n.get_str() + ")");
  if (gcd(m, n) != 1)
    throw InvalidInput("unimodular completion needs coprime entries, got (" + m.get_str() + ", " +
                       n.get_str() + ")");

  // m*s == 1 (mod n) fixes s up to multiples of n; take the least residue
  // and step once if that makes r negative (only when n == 1).
  BigInt s;
  if (n == 1) {
    s = 0;
  } else {
    mpz_invert(s.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  }
  BigInt r = (m * s - 1) / n;
  if (r < 0) {
    s += n;
    r += m;
  }
  return {r, s};
}

bool Mat2::is_integral() const {
  return a11.is_integer() && a12.is_integer() && a21.is_integer() && a22.is_integer();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
}

Mat2 sw(const Mat2& u) {
  if (u.a22 == 0)
    throw SingularSwap("sw: bottom-right entry is zero");
  return {u.det() / u.a22, u.a12 / u.a22, -u.a21 / u.a22, ExactRational(1) / u.a22};
}

} // namespace qoinv
