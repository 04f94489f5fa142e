#include "qoinv/invariants.hpp"

#include "qoinv/error.hpp"

namespace qoinv {

std::vector<BigInt> xi_sequence(const DerivationSequence& seq) {
  const std::size_t e = seq.size();
  std::vector<BigInt> xi(e);
  if (e == 0)
    return xi;
  const auto degrees = suffix_degrees(seq);
  const auto& top = seq[e - 1].inv;
  xi[e - 1] = (top.c_bullet - 1) * (top.d_bullet - 1);
  for (std::size_t k = e - 1; k-- > 0;) {
    const auto& inv = seq[k].inv;
    xi[k] = degrees[k + 1] * (inv.c_bullet - 1) * (inv.d_bullet - 1) + xi[k + 1];
  }
  return xi;
}

namespace {

BettiReport from_xi(std::vector<BigInt> levels) {
  BettiReport r;
  r.xi = levels.empty() ? BigInt(0) : levels.front();
  r.xi_levels = std::move(levels);
  r.h1_vertical = r.xi + 1;
  r.h1_boundary = 2 * r.xi;
  return r;
}

} // namespace

BettiReport betti_report(const DerivationSequence& seq1, const DerivationSequence& seq2, const CycloProduct& v1,
                         const CycloProduct& v2) {
  auto xi1 = xi_sequence(seq1);
  auto xi2 = xi_sequence(seq2);
  if (xi1 != xi2) {
    std::string w;
    for (std::size_t k = 0; k < xi1.size() && k < xi2.size(); ++k)
      if (xi1[k] != xi2[k]) {
        w = "level " + std::to_string(k) + ": " + xi1[k].get_str() + " vs " + xi2[k].get_str();
        break;
      }
    throw TheoremViolation("xi differs between the axes (" + (w.empty() ? "length" : w) + ")");
  }

  BettiReport r = from_xi(std::move(xi1));
  const BigInt expected = 1 - r.xi;
  const BigInt got1 = tm1_multiplicity(v1);
  const BigInt got2 = tm1_multiplicity(v2);
  r.zeta_consistency = got1 == expected && got2 == expected;
  if (!r.zeta_consistency)
    throw TheoremViolation("multiplicity of t - 1 in the vertical zeta functions is " + got1.get_str() + ", " +
                           got2.get_str() + "; expected 1 - xi = " + expected.get_str());
  return r;
}

BettiReport betti_report(const DerivationSequence& seq, const CycloProduct& v) {
  BettiReport r = from_xi(xi_sequence(seq));
  const BigInt expected = 1 - r.xi;
  r.zeta_consistency = tm1_multiplicity(v) == expected;
  if (!r.zeta_consistency)
    throw TheoremViolation("multiplicity of t - 1 in the vertical zeta function is " +
                           tm1_multiplicity(v).get_str() + "; expected 1 - xi = " + expected.get_str());
  return r;
}

} // namespace qoinv
