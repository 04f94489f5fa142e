#include "qoinv/branch.hpp"
#include "qoinv/error.hpp"

#include <doctest.h>

using namespace qoinv;

namespace {

ExactRational f(const char* s) { return ExactRational::parse(s); }

CharacteristicTuple tuple(std::initializer_list<std::pair<const char*, const char*>> terms) {
  CharacteristicTuple t;
  for (const auto& [a, b] : terms)
    t.terms.push_back({f(a), f(b)});
  return t;
}

const CharacteristicTuple kExample = tuple({{"2/7", "4/5"}, {"5/14", "1"}, {"2", "19/10"}});

ValidationCode code_of(const CharacteristicTuple& t, bool strict = false) {
  try {
    validate(t, strict);
  } catch (const InvalidTuple& e) {
    return e.code();
  }
  FAIL("expected InvalidTuple for " << to_string(t));
  return ValidationCode::Empty;
}

} // namespace

TEST_CASE("validate accepts the worked example") {
  CHECK_NOTHROW(validate(kExample));
  CHECK_NOTHROW(validate(kExample, true));
}

TEST_CASE("validate reports each violated assumption with its own code") {
  CHECK(code_of(CharacteristicTuple{}) == ValidationCode::Empty);
  CHECK(code_of(tuple({{"0", "4/5"}})) == ValidationCode::NotReduced);
  CHECK(code_of(tuple({{"4/5", "0"}})) == ValidationCode::NotReduced);
  CHECK(code_of(tuple({{"1/2", "1/2"}, {"1/2", "1/2"}})) == ValidationCode::NotIncreasing);
  CHECK(code_of(tuple({{"1/2", "1"}, {"1", "1/2"}})) == ValidationCode::NotIncreasing);
  CHECK(code_of(tuple({{"1/2", "1/2"}, {"-1", "1"}})) == ValidationCode::NegativeExponent);
}

TEST_CASE("the offending term is identified") {
  try {
    validate(tuple({{"1/2", "1/2"}, {"1", "1"}, {"1", "1"}}));
    FAIL("expected a violation");
  } catch (const InvalidTuple& e) {
    CHECK(e.code() == ValidationCode::NotIncreasing);
    CHECK(e.term() == 2);
  }
}

TEST_CASE("strict mode enforces essential terms") {
  // Integer leading pair lies in Z^2.
  CHECK_NOTHROW(validate(tuple({{"1", "1"}})));
  CHECK(code_of(tuple({{"1", "1"}}), true) == ValidationCode::NotEssential);
  // (1, 1) = 2*(1/2, 1/2).
  CHECK(code_of(tuple({{"1/2", "1/2"}, {"1", "1"}}), true) == ValidationCode::NotEssential);
  // (3/2, 5/2) = (1/2, 1/2) + (1, 2).
  CHECK(code_of(tuple({{"1/2", "1/2"}, {"3/2", "5/2"}}), true) == ValidationCode::NotEssential);
  // (1/2, 1) is outside Z^2 + Z(1/2, 1/2)? (1/2,1) - (1/2,1/2) = (0,1/2): not integral, so essential.
  CHECK_NOTHROW(validate(tuple({{"1/2", "1/2"}, {"1/2", "1"}}), true));
  // Lattice generated by (1/3, 1/2) and Z^2 contains (2/3, 0) = 2*(1/3,1/2) - (0,1).
  CHECK(code_of(tuple({{"1/3", "1/2"}, {"2/3", "1"}}), true) == ValidationCode::NotEssential);
  CHECK_NOTHROW(validate(tuple({{"1/3", "1/2"}, {"1/2", "1"}}), true));
}

TEST_CASE("level invariants of the worked example") {
  const auto inv = level_invariants(kExample);
  CHECK(inv.n1 == 2);
  CHECK(inv.m1 == 7);
  CHECK(inv.n2 == 4);
  CHECK(inv.m2 == 5);
  CHECK(inv.d_bullet == 35);
  CHECK(inv.b1 == 7);
  CHECK(inv.b2 == 5);
  CHECK(inv.c_bullet == 2);
  CHECK(inv.r1 == 1);
  CHECK(inv.s1 == 1);
  CHECK(inv.r2 == 3);
  CHECK(inv.s2 == 1);
}

TEST_CASE("level invariants of the first derived surface and of a smooth branch") {
  const auto inv = level_invariants(tuple({{"705/2", "141"}, {"373", "291/2"}}));
  CHECK(inv.m1 == 2);
  CHECK(inv.m2 == 1);
  CHECK(inv.d_bullet == 2);
  CHECK(inv.b1 == 2);
  CHECK(inv.b2 == 1);
  CHECK(inv.c_bullet == 141);

  const auto smooth = level_invariants(tuple({{"1", "1"}}));
  CHECK(smooth.n1 == 1);
  CHECK(smooth.n2 == 1);
  CHECK(smooth.m1 == 1);
  CHECK(smooth.m2 == 1);
  CHECK(smooth.d_bullet == 1);
  CHECK(smooth.b1 == 1);
  CHECK(smooth.b2 == 1);
  CHECK(smooth.c_bullet == 1);
}

TEST_CASE("truncate keeps the leading term") {
  CHECK(truncate(kExample) == tuple({{"2/7", "4/5"}}));
  CHECK(truncate(tuple({{"705/2", "141"}, {"373", "291/2"}})) == tuple({{"705/2", "141"}}));
  const auto one = tuple({{"1/2", "1/3"}});
  CHECK(truncate(one) == one);
}

TEST_CASE("derive reproduces the worked-example branches") {
  const auto d1 = derive(kExample, Axis::One);
  CHECK(d1 == tuple({{"705/2", "141"}, {"373", "291/2"}}));
  CHECK(derive(d1, Axis::One) == tuple({{"1451", "573/2"}}));

  const auto d2 = derive(kExample, Axis::Two);
  CHECK(d2 == tuple({{"141/2", "987"}, {"82", "2259/2"}}));
  CHECK(derive(d2, Axis::Two) == tuple({{"305", "606303/2"}}));
}

TEST_CASE("derive needs two terms") {
  CHECK_THROWS_AS(derive(tuple({{"1/2", "1/3"}}), Axis::One), CannotDerive);
}

TEST_CASE("derivation sequences of the worked example") {
  const auto seq1 = derivation_sequence(kExample, Axis::One);
  REQUIRE(seq1.size() == 3);
  CHECK(seq1[0].inv.d_bullet == 35);
  CHECK(seq1[1].inv.d_bullet == 2);
  CHECK(seq1[2].inv.d_bullet == 2);

  const auto seq2 = derivation_sequence(kExample, Axis::Two);
  REQUIRE(seq2.size() == 3);
  CHECK(seq2[0].inv.c_bullet == 2);
  CHECK(seq2[1].inv.c_bullet == 141);
  CHECK(seq2[2].inv.c_bullet == 1);

  CHECK(derivation_sequence(tuple({{"1/2", "1/2"}}), Axis::One).size() == 1);
  CHECK_THROWS_AS(derivation_sequence(tuple({{"0", "1/2"}}), Axis::One), InvalidTuple);
}

TEST_CASE("surface degrees") {
  for (Axis axis : {Axis::One, Axis::Two}) {
    const auto seq = derivation_sequence(kExample, axis);
    CHECK(surface_degree(seq) == 140);
    CHECK(suffix_degrees(seq) == std::vector<BigInt>{140, 4, 2});
  }
  CHECK(surface_degree(derivation_sequence(tuple({{"1/2", "1/2"}}), Axis::One)) == 2);
}

TEST_CASE("transverse Euler characteristics") {
  const auto seq1 = derivation_sequence(kExample, Axis::One);
  // 35 + 35*(4/5) - 35^2*(4/5)
  CHECK(truncation_euler(seq1[0].inv, Axis::One) == ExactRational(-917));
  CHECK(truncation_euler(level_invariants(tuple({{"1", "1"}})), Axis::One) == ExactRational(1));

  // Descending recursion evaluated by hand from the level data:
  //   chi'' = 2 + 2*573/2 - 4*573/2 = -571
  //   chi'  = 2*(2 + 2*141 - 4*141) + 2*(-571 - 2) = -560 - 1146 = -1706
  //   chi   = 4*(-917) + 7*(-1706 - 4) = -3668 - 11970 = -15638
  const auto chi1 = transverse_euler(seq1);
  CHECK(chi1 == std::vector<ExactRational>{-15638, -1706, -571});

  for (Axis axis : {Axis::One, Axis::Two}) {
    for (const auto& chi : transverse_euler(derivation_sequence(kExample, axis)))
      CHECK(chi.is_integer());
  }
}
