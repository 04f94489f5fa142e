#pragma once

// First Betti numbers of the vertical fibration spaces and of the Milnor
// fiber boundary dM = V_{x1} u_{T^2} V_{x2}.

#include "qoinv/branch.hpp"
#include "qoinv/zeta.hpp"

#include <vector>

namespace qoinv {

/// xi^(k), the dimension of the 1-eigenspace of vertical monodromy on H_1 of
/// the transverse fiber of S^(k), for k = 0..e-1:
///   xi^(e-1) = (c^(e-1) - 1)(d^(e-1) - 1)
///   xi^(k)   = d^(k+1) (c^(k) - 1)(d_bullet^(k) - 1) + xi^(k+1)
std::vector<BigInt> xi_sequence(const DerivationSequence& seq);

struct BettiReport {
  std::vector<BigInt> xi_levels;  // k = 0..e-1
  BigInt xi;                      // xi_levels[0]
  BigInt h1_vertical;             // xi + 1, same for both axes
  BigInt h1_boundary;             // 2 xi
  bool zeta_consistency = false;  // multiplicity of t - 1 in V(i) is 1 - xi, both axes
};

/// Combines both axes. Throws TheoremViolation if the xi sequences of the
/// two axes differ or a vertical zeta function disagrees with 1 - xi.
BettiReport betti_report(const DerivationSequence& seq1, const DerivationSequence& seq2, const CycloProduct& v1,
                         const CycloProduct& v2);

/// Single-axis variant: no cross-axis assertion, consistency checked
/// against `v` only.
BettiReport betti_report(const DerivationSequence& seq, const CycloProduct& v);

} // namespace qoinv
