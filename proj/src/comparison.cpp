#include "qoinv/comparison.hpp"

#include "qoinv/error.hpp"

#include <sstream>

namespace qoinv {

bool ComparisonReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

std::vector<Check> ComparisonReport::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks)
    if (!c.pass)
      out.push_back(c);
  return out;
}

namespace {

ExactRational q(const BigInt& v) { return ExactRational(v); }
ExactRational frac(const BigInt& n, const BigInt& d) { return ExactRational::reduce(n, d); }

std::string vec_str(const Vec2& v) { return "[" + v[0].str() + "; " + v[1].str() + "]"; }

std::string mat_str(const Mat2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

} // namespace

Mat2 u_base(const LevelInvariants& inv) {
  return {
      frac(inv.b1, inv.m1),
      q(inv.b1 * inv.r1) * frac(inv.n1, inv.m1),
      q(inv.b2 * inv.r2) * frac(inv.n2, inv.m2),
      frac(inv.b2, inv.m2),
  };
}

Mat2 u_step(const Mat2& u, const StepData& data) {
  const auto& a1 = data.axis1;
  const auto& a2 = data.axis2;
  const ExactRational lead11 = frac(a1.n1, a1.m1);  // l11(1)
  const ExactRational lead21 = frac(a2.n2, a2.m2);  // l21(2)
  return {
      frac(a1.b1, a2.m1) * u.a11,
      frac(a1.b1, a1.m2) * u.a12 + q(a1.b1 * a1.r1) * lead11,
      frac(a2.b2, a2.m1) * u.a21 + q(a2.b2 * a2.r2) * lead21,
      frac(a2.b2, a1.m2) * u.a22,
  };
}

Mat2 m_from_u(const Mat2& u) {
  Mat2 m = sw(u);
  if (!m.is_integral())
    throw TheoremViolation("M = sw(U) has a non-integral entry: " + mat_str(m));
  if (m.det() != 1)
    throw TheoremViolation("M = sw(U) has determinant " + m.det().str());
  return m;
}

Mat2 m_step_direct(const Mat2& m, const StepData& data) {
  const auto& a1 = data.axis1;
  const auto& a2 = data.axis2;
  const BigInt& r1 = a1.r1;
  const BigInt& s1 = a1.s1;
  const BigInt& r2 = a2.r2;
  const BigInt& s2 = a2.s2;
  const BigInt& b2 = a2.b2;

  Mat2 next;
  next.a12 = q(s1 * a2.m1) * m.a12 + q(r1 * a2.n1);
  next.a21 = q(s2 * a1.m2) * m.a21 - q(r2 * a1.n2);
  next.a22 = frac(a1.m2, b2) * m.a22;
  next.a11 = q(a2.m1 * b2 * s1 * s2) * m.a11 -
             q(a1.d_bullet) * (q(r1 * s2) * frac(a2.n2, a2.m2) + q(r2 * s1) * frac(a1.n1, a1.m1));
  return next;
}

namespace {

class Recorder {
public:
  explicit Recorder(ComparisonReport& report) : report_(report) {}

  void operator()(std::string name, std::size_t level, bool pass, std::string witness) {
    report_.checks.push_back({std::move(name), level, pass, std::move(witness)});
  }

private:
  ComparisonReport& report_;
};

template <class T>
std::string pair_str(const T& a, const T& b) {
  std::ostringstream os;
  os << a << " vs " << b;
  return os.str();
}

// Theorem: l_{i~,k} has the form alpha / (m_i~ m'_i~(i) ... m_i~^(k-1)(i))
// with alpha coprime to m_i~^(k-1)(i).
void check_denominators(const DerivationSequence& seq, const CharacteristicTuple& input, Recorder& record) {
  const Axis it = other(seq.axis);
  BigInt product = 1;
  for (std::size_t k = 1; k <= input.size(); ++k) {
    const BigInt& last = seq[k - 1].inv.m(it);
    product *= last;
    const ExactRational scaled = input.terms[k - 1].at(it) * ExactRational(product);
    bool pass = scaled.is_integer() && gcd(scaled.numerator(), last) == 1;
    std::ostringstream w;
    w << "axis " << index(seq.axis) << ": l" << index(it) << "," << k << " = " << input.terms[k - 1].at(it)
      << ", denominator product " << product << ", numerator " << scaled << ", last m " << last;
    record("denominator_structure", k, pass, w.str());
  }
}

} // namespace

ComparisonReport verify_comparison(const DerivationSequence& seq1, const DerivationSequence& seq2) {
  ComparisonReport report;
  Recorder record(report);

  const std::size_t e = seq1.size();
  if (seq2.size() != e || e == 0 || seq1.axis != Axis::One || seq2.axis != Axis::Two ||
      seq1[0].branch != seq2[0].branch) {
    record("same_input", 0, false,
           "sequences must come from one branch, axis 1 then axis 2 (lengths " + std::to_string(e) + ", " +
               std::to_string(seq2.size()) + ")");
    return report;
  }

  const auto deg1 = suffix_degrees(seq1);
  const auto deg2 = suffix_degrees(seq2);
  for (std::size_t k = 1; k < e; ++k) {
    const auto& i1 = seq1[k].inv;
    const auto& i2 = seq2[k].inv;
    record("equal_truncation_degree", k, i1.d_bullet == i2.d_bullet, pair_str(i1.d_bullet, i2.d_bullet));
    record("equal_degree", k, deg1[k] == deg2[k], pair_str(deg1[k], deg2[k]));
    record("equal_c_bullet", k, i1.c_bullet == i2.c_bullet, pair_str(i1.c_bullet, i2.c_bullet));
  }

  Mat2 u;
  Mat2 m;
  // Closed form of the common diagonal: prod_{j<k} d^(j) / (m1^(j)(2) m2^(j)(1)).
  // Each u-step scales it by b2^(j)/m2^(j)(1) with b2 taken from axis 2.
  ExactRational diagonal_closed(1);
  for (std::size_t k = 1; k < e; ++k) {
    const StepData step{seq1[k - 1].inv, seq2[k - 1].inv};
    diagonal_closed *= frac(step.axis1.d_bullet, step.axis2.m1 * step.axis1.m2);

    if (k == 1) {
      u = u_base(seq1[0].inv);
    } else {
      u = u_step(u, step);
    }
    record("u_equal_diagonal", k, u.a11 == u.a22, pair_str(u.a11, u.a22));
    record("lipman_closed_form", k, u.a22 == diagonal_closed, pair_str(u.a22, diagonal_closed));

    Mat2 next = sw(u);
    if (k >= 2) {
      Mat2 direct = m_step_direct(m, step);
      record("m_direct_recursion", k, direct == next, mat_str(direct) + " vs " + mat_str(next));
    }
    m = next;
    record("m_integral", k, m.is_integral(), mat_str(m));
    record("m_det_one", k, m.det() == 1, "det = " + m.det().str());
    report.pairs.push_back({k, u, m});

    const auto& t1 = seq1[k].branch;
    const auto& t2 = seq2[k].branch;
    bool u_ok = t1.size() == t2.size();
    bool m_ok = u_ok;
    std::string u_witness = "all terms", m_witness = "all terms";
    for (std::size_t j = 0; j < t1.size() && j < t2.size(); ++j) {
      const Vec2 lhs_u{t1.terms[j].x1, t2.terms[j].x2};
      const Vec2 rhs_u = u * Vec2{t2.terms[j].x1, t1.terms[j].x2};
      if (lhs_u != rhs_u && u_ok) {
        u_ok = false;
        u_witness = "term " + std::to_string(j + 1) + ": " + vec_str(lhs_u) + " vs " + vec_str(rhs_u);
      }
      const Vec2 lhs_m{t1.terms[j].x1, t1.terms[j].x2};
      const Vec2 rhs_m = m * Vec2{t2.terms[j].x1, t2.terms[j].x2};
      if (lhs_m != rhs_m && m_ok) {
        m_ok = false;
        m_witness = "term " + std::to_string(j + 1) + ": " + vec_str(lhs_m) + " vs " + vec_str(rhs_m);
      }
    }
    record("u_relation", k, u_ok, u_witness);
    record("m_relation", k, m_ok, m_witness);
  }

  const CharacteristicTuple& input = seq1[0].branch;
  check_denominators(seq1, input, record);
  check_denominators(seq2, input, record);

  // d_bullet d_bullet' ... d_bullet^(k-1) divides the product of the two
  // transverse curve degrees.
  BigInt degree = 1, curve1 = 1, curve2 = 1;
  for (std::size_t k = 1; k <= e; ++k) {
    degree *= seq1[k - 1].inv.d_bullet;
    curve1 *= seq2[k - 1].inv.m1;
    curve2 *= seq1[k - 1].inv.m2;
    const BigInt product = curve1 * curve2;
    record("lipman_divisibility", k, mpz_divisible_p(product.get_mpz_t(), degree.get_mpz_t()) != 0,
           degree.get_str() + " | " + curve1.get_str() + " * " + curve2.get_str());
  }

  return report;
}

} // namespace qoinv
