// Randomized checks of the structural identities over many branches.

#include "qoinv/comparison.hpp"
#include "qoinv/invariants.hpp"
#include "qoinv/report.hpp"
#include "qoinv/zeta.hpp"
#include "support/random_tuple.hpp"

#include <doctest.h>

#include <random>

using namespace qoinv;
using qoinv::testing::random_tuple;

namespace {

constexpr int kTuples = 600;

void check_branch(const CharacteristicTuple& t) {
  INFO("branch " << to_string(t));
  const auto seq1 = derivation_sequence(t, Axis::One);
  const auto seq2 = derivation_sequence(t, Axis::Two);
  const std::size_t e = t.size();

  REQUIRE(seq1.size() == e);
  REQUIRE(seq2.size() == e);
  for (std::size_t k = 0; k < e; ++k) {
    CHECK(seq1[k].branch.size() == e - k);
    CHECK(seq2[k].branch.size() == e - k);
  }
  CHECK(seq1[e - 1].branch == truncate(seq1[e - 1].branch));

  const auto report = verify_comparison(seq1, seq2);
  for (const auto& c : report.checks) {
    INFO(c.name << " k=" << c.level << ": " << c.witness);
    CHECK(c.pass);
  }
  CHECK(report.pairs.size() == e - 1);
  for (const auto& pair : report.pairs) {
    CHECK(pair.u.a11 == pair.u.a22);
    CHECK(pair.m.is_integral());
    CHECK(pair.m.det() == 1);
    CHECK(m_from_u(pair.u) == pair.m);
  }

  for (const auto* seq : {&seq1, &seq2}) {
    const auto chi = transverse_euler(*seq);
    for (const auto& c : chi)
      CHECK(c.is_integer());
    CHECK(ExactRational(degree_sum(horizontal_zeta(*seq))) == chi.front());
    CHECK(ExactRational(degree_sum(vertical_zeta(*seq))) == chi.front());

    const auto xi = xi_sequence(*seq);
    for (std::size_t k = 0; k + 1 < xi.size(); ++k)
      CHECK(xi[k] >= xi[k + 1]);
    CHECK(xi.back() >= 0);
    CHECK(tm1_multiplicity(vertical_zeta(*seq)) == 1 - xi.front());
  }

  const auto betti = betti_report(seq1, seq2, vertical_zeta(seq1), vertical_zeta(seq2));
  CHECK(betti.h1_boundary % 2 == 0);
  CHECK(betti.h1_vertical == betti.xi + 1);
  CHECK(betti.zeta_consistency);
  CHECK(xi_sequence(seq1) == xi_sequence(seq2));
}

} // namespace

TEST_CASE("structural identities hold on random monotone branches") {
  std::mt19937_64 rng(20261016);
  for (int n = 0; n < kTuples; ++n)
    check_branch(random_tuple(rng));
}

TEST_CASE("structural identities hold on random essential branches") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < kTuples; ++n)
    check_branch(random_tuple(rng, 4, 12, true));
}

TEST_CASE("the m-recursion computed entrywise agrees with sw of the u-recursion") {
  std::mt19937_64 rng(99);
  for (int n = 0; n < kTuples; ++n) {
    const auto t = random_tuple(rng);
    const auto seq1 = derivation_sequence(t, Axis::One);
    const auto seq2 = derivation_sequence(t, Axis::Two);
    if (t.size() < 3)
      continue;
    INFO("branch " << to_string(t));
    Mat2 u = u_base(seq1[0].inv);
    Mat2 m = m_from_u(u);
    for (std::size_t k = 1; k + 1 < t.size(); ++k) {
      const StepData step{seq1[k].inv, seq2[k].inv};
      u = u_step(u, step);
      const Mat2 direct = m_step_direct(m, step);
      m = m_from_u(u);
      CHECK(direct == m);
    }
  }
}

TEST_CASE("axis symmetry of degrees and c_bullet") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < kTuples; ++n) {
    const auto t = random_tuple(rng);
    const auto seq1 = derivation_sequence(t, Axis::One);
    const auto seq2 = derivation_sequence(t, Axis::Two);
    CHECK(suffix_degrees(seq1) == suffix_degrees(seq2));
    CHECK(surface_degree(seq1) == surface_degree(seq2));
    for (std::size_t k = 0; k < t.size(); ++k)
      CHECK(seq1[k].inv.c_bullet == seq2[k].inv.c_bullet);
  }
}
