#pragma once

// Comparison of the two derivation sequences of a branch.
//
// At each level k >= 1 the exponent vectors of S^(k)(1) and S^(k)(2) are
// related by an auxiliary matrix U^(k),
//
//   [l1(1); l2(2)] = U^(k) [l1(2); l2(1)]     (entrywise over term index j)
//
// and by M^(k) = sw(U^(k)), which lies in SL(2, Z):
//
//   [l1(1); l2(1)] = M^(k) [l1(2); l2(2)].
//
// verify_comparison() recomputes both relations and the scalar identities
// between the two sequences and records every outcome with witness values.

#include "qoinv/branch.hpp"
#include "qoinv/exact.hpp"

#include <string>
#include <vector>

namespace qoinv {

struct ComparisonPair {
  std::size_t level = 0;  // k >= 1
  Mat2 u;
  Mat2 m;
};

struct Check {
  std::string name;
  std::size_t level = 0;
  bool pass = false;
  std::string witness;
};

struct ComparisonReport {
  std::vector<ComparisonPair> pairs;  // k = 1..e-1
  std::vector<Check> checks;

  bool all_pass() const;
  std::vector<Check> failures() const;
};

/// U^(1) from the level-0 invariants:
/// [[b1/m1, b1 r1 l11], [b2 r2 l21, b2/m2]].
Mat2 u_base(const LevelInvariants& inv0);

/// Level-k data entering the step U^(k) -> U^(k+1): invariants of S^(k)(1)
/// and S^(k)(2). The leading exponents l11(1), l21(2) are n/m of these.
struct StepData {
  const LevelInvariants& axis1;
  const LevelInvariants& axis2;
};

/// U^(k+1) = [[ (b1/m1(2)) U11,          (b1/m2(1)) U12 + b1 r1 l11(1) ],
///            [ (b2/m1(2)) U21 + b2 r2 l21(2), (b2/m2(1)) U22          ]]
/// with b1, r1 from axis 1 and b2, r2 from axis 2.
Mat2 u_step(const Mat2& u, const StepData& data);

/// sw(U) with the SL(2, Z) requirement enforced: throws TheoremViolation
/// on a non-integral entry or det != 1.
Mat2 m_from_u(const Mat2& u);

/// M^(k+1) computed entrywise from M^(k) without going through U:
///   M12+ = s1 m1(2) M12 + r1 n1(2)
///   M21+ = s2 m2(1) M21 - r2 n2(1)
///   M22+ = (m2(1)/b2) M22
///   M11+ = m1(2) b2 s1 s2 M11 - d (r1 s2 n2(2)/m2(2) + r2 s1 n1(1)/m1(1))
Mat2 m_step_direct(const Mat2& m, const StepData& data);

/// Runs every comparison check on the two sequences of one branch. Failures
/// are recorded in the report; nothing is thrown for a failed identity.
ComparisonReport verify_comparison(const DerivationSequence& seq1, const DerivationSequence& seq2);

} // namespace qoinv
