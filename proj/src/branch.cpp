#include "qoinv/branch.hpp"

#include "qoinv/error.hpp"

#include <sstream>

namespace qoinv {

std::string to_string(const CharacteristicTuple& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j)
      os << ", ";
    os << '(' << t.terms[j].x1 << ", " << t.terms[j].x2 << ')';
  }
  os << ']';
  return os.str();
}

std::string_view to_string(ValidationCode code) {
  switch (code) {
  case ValidationCode::Empty:
    return "empty";
  case ValidationCode::NegativeExponent:
    return "negative-exponent";
  case ValidationCode::NotReduced:
    return "not-reduced";
  case ValidationCode::NotIncreasing:
    return "not-increasing";
  case ValidationCode::NotEssential:
    return "not-essential";
  }
  return "unknown";
}

InvalidTuple::InvalidTuple(ValidationCode code, std::size_t term, const std::string& what)
    : InvalidInput(std::string(to_string(code)) + ": " + what), code_(code), term_(term) {}

namespace {

// Subgroup of Z^2 kept as the row basis {(a, b), (0, c)}, a, c > 0,
// 0 <= b < c. Starts full rank because the caller seeds it with D*Z^2.
class PlaneLattice {
public:
  explicit PlaneLattice(const BigInt& scale) : a_(scale), b_(0), c_(scale) {}

  bool contains(const BigInt& x, const BigInt& y) const {
    if (x % a_ != 0)
      return false;
    BigInt q = x / a_;
    BigInt rest = y - q * b_;
    return rest % c_ == 0;
  }

  void add(const BigInt& x, const BigInt& y) {
    BigInt g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a_.get_mpz_t(), x.get_mpz_t());
    // u*(a, b) + v*(x, y) = (g, u*b + v*y); the kernel combination
    // (a/g)*(x, y) - (x/g)*(a, b) lands on the second axis.
    BigInt new_b = u * b_ + v * y;
    BigInt second = (a_ / g) * y - (x / g) * b_;
    c_ = gcd(c_, second);
    a_ = g;
    mpz_fdiv_r(b_.get_mpz_t(), new_b.get_mpz_t(), c_.get_mpz_t());
  }

private:
  BigInt a_, b_, c_;
};

void check_essential(const CharacteristicTuple& t) {
  BigInt denom = 1;
  for (const auto& p : t.terms)
    denom = lcm(lcm(denom, p.x1.denominator()), p.x2.denominator());
  auto scaled = [&](const ExactRational& q) { return (q * ExactRational(denom)).to_integer(); };

  PlaneLattice lattice(denom);
  for (std::size_t j = 0; j < t.size(); ++j) {
    BigInt x = scaled(t.terms[j].x1);
    BigInt y = scaled(t.terms[j].x2);
    if (lattice.contains(x, y))
      throw InvalidTuple(ValidationCode::NotEssential, j,
                         "term " + std::to_string(j + 1) +
                             " lies in the group generated by Z^2 and the earlier terms");
    lattice.add(x, y);
  }
}

} // namespace

const CharacteristicTuple& validate(const CharacteristicTuple& t, bool strict) {
  if (t.terms.empty())
    throw InvalidTuple(ValidationCode::Empty, 0, "a branch needs at least one term");

  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t.terms[j].x1.sign() < 0 || t.terms[j].x2.sign() < 0)
      throw InvalidTuple(ValidationCode::NegativeExponent, j,
                         "term " + std::to_string(j + 1) + " has a negative exponent");
  }

  // Both axes must be singular components: l11 != 0 and l21 != 0.
  if (t.leading().x1.sign() == 0 || t.leading().x2.sign() == 0)
    throw InvalidTuple(ValidationCode::NotReduced, 0,
                       "leading exponents must both be nonzero, got " + t.leading().x1.str() + ", " +
                           t.leading().x2.str());

  for (std::size_t j = 1; j < t.size(); ++j) {
    const auto& prev = t.terms[j - 1];
    const auto& cur = t.terms[j];
    bool monotone = prev.x1 <= cur.x1 && prev.x2 <= cur.x2;
    bool strict_step = prev.x1 < cur.x1 || prev.x2 < cur.x2;
    if (!monotone || !strict_step)
      throw InvalidTuple(ValidationCode::NotIncreasing, j,
                         "term " + std::to_string(j + 1) + " does not strictly exceed term " +
                             std::to_string(j));
  }

  if (strict)
    check_essential(t);
  return t;
}

LevelInvariants level_invariants(const CharacteristicTuple& t) {
  const auto& lead = t.leading();
  LevelInvariants inv;
  inv.n1 = lead.x1.numerator();
  inv.m1 = lead.x1.denominator();
  inv.n2 = lead.x2.numerator();
  inv.m2 = lead.x2.denominator();
  inv.d_bullet = lcm(inv.m1, inv.m2);
  inv.b1 = inv.d_bullet / inv.m2;
  inv.b2 = inv.d_bullet / inv.m1;
  inv.c_bullet = gcd(inv.n1, inv.n2);
  auto c1 = unimodular_completion(inv.m2, inv.n2);
  inv.r1 = c1.r;
  inv.s1 = c1.s;
  auto c2 = unimodular_completion(inv.m1, inv.n1);
  inv.r2 = c2.r;
  inv.s2 = c2.s;
  return inv;
}

CharacteristicTuple truncate(const CharacteristicTuple& t) { return {{t.leading()}}; }

CharacteristicTuple derive(const CharacteristicTuple& t, Axis axis) {
  if (t.size() < 2)
    throw CannotDerive("a one-term branch has no derived surface");

  const LevelInvariants inv = level_invariants(t);
  const Axis i = axis;
  const Axis it = other(axis);
  const ExactRational d(inv.d_bullet);

  // T(s)_j = s_{j+1} - s_1 + d*s_1
  auto shift = [&](Axis a, std::size_t j) {
    const ExactRational& s1 = t.leading().at(a);
    return t.terms[j + 1].at(a) - s1 + d * s1;
  };

  const ExactRational m_it(inv.m(it));
  const ExactRational b_i(inv.b(i));
  const ExactRational coupling = b_i * ExactRational(inv.r(i)) * t.leading().at(i);

  CharacteristicTuple out;
  out.terms.resize(t.size() - 1);
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    // The complementary line is computed first and feeds the axis line.
    ExactRational along_it = m_it * shift(it, j);
    out.terms[j].at(i) = b_i * shift(i, j) + coupling * along_it;
    out.terms[j].at(it) = std::move(along_it);
  }
  return out;
}

DerivationSequence derivation_sequence(const CharacteristicTuple& t, Axis axis) {
  validate(t);
  DerivationSequence seq;
  seq.axis = axis;
  seq.levels.reserve(t.size());
  CharacteristicTuple current = t;
  while (true) {
    LevelInvariants inv = level_invariants(current);
    bool last = current.size() == 1;
    CharacteristicTuple next = last ? CharacteristicTuple{} : derive(current, axis);
    seq.levels.push_back({std::move(current), std::move(inv)});
    if (last)
      break;
    current = std::move(next);
  }
  return seq;
}

BigInt surface_degree(const DerivationSequence& seq) {
  BigInt d = 1;
  for (const auto& level : seq.levels)
    d *= level.inv.d_bullet;
  return d;
}

std::vector<BigInt> suffix_degrees(const DerivationSequence& seq) {
  std::vector<BigInt> out(seq.size());
  BigInt d = 1;
  for (std::size_t k = seq.size(); k-- > 0;) {
    d *= seq[k].inv.d_bullet;
    out[k] = d;
  }
  return out;
}

ExactRational truncation_euler(const LevelInvariants& inv, Axis axis) {
  const Axis it = other(axis);
  const ExactRational d(inv.d_bullet);
  const ExactRational lead = ExactRational::reduce(inv.n(it), inv.m(it));
  return d + d * lead - d * d * lead;
}

std::vector<ExactRational> transverse_euler(const DerivationSequence& seq) {
  const std::size_t e = seq.size();
  std::vector<ExactRational> chi(e);
  if (e == 0)
    return chi;
  const auto degrees = suffix_degrees(seq);
  chi[e - 1] = truncation_euler(seq[e - 1].inv, seq.axis);
  for (std::size_t k = e - 1; k-- > 0;) {
    const ExactRational next_degree(degrees[k + 1]);
    const ExactRational b(seq[k].inv.b(seq.axis));
    chi[k] = next_degree * truncation_euler(seq[k].inv, seq.axis) + b * (chi[k + 1] - next_degree);
  }
  return chi;
}

} // namespace qoinv
