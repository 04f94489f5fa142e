#include "qoinv/error.hpp"
#include "qoinv/exact.hpp"
#include "support/random_tuple.hpp"

#include <doctest.h>

#include <random>

using namespace qoinv;

TEST_CASE("reduce normalizes to lowest terms with a positive denominator") {
  CHECK(reduce(4, 10).str() == "2/5");
  CHECK(reduce(2, 7).str() == "2/7");
  CHECK(reduce(-3, -6).str() == "1/2");
  CHECK(reduce(3, -6).str() == "-1/2");
  CHECK(reduce(0, -6).str() == "0");
  CHECK(reduce(12, 4).str() == "3");
  CHECK_THROWS_AS(reduce(1, 0), InvalidInput);
}

TEST_CASE("reduce is idempotent") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
  for (int i = 0; i < 1000; ++i) {
    long d = den(rng) * (i % 2 ? 1 : -1);
    auto once = reduce(num(rng), d);
    auto twice = reduce(once.numerator(), once.denominator());
    CHECK(once == twice);
    CHECK(once.denominator() > 0);
    CHECK(gcd(abs(once.numerator()), once.denominator()) == 1);
  }
}

TEST_CASE("fraction parsing") {
  CHECK(ExactRational::parse("606303/2").str() == "606303/2");
  CHECK(ExactRational::parse("-4/10") == reduce(-2, 5));
  CHECK(ExactRational::parse("+7") == ExactRational(7));
  CHECK(ExactRational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "/", "1/", "/2", "1.5", "1/2/3", " 1", "a", "--1", "1/-2"})
    CHECK_THROWS_AS(ExactRational::parse(bad), InvalidInput);
  CHECK_THROWS_AS(ExactRational::parse("3/0"), InvalidInput);
}

TEST_CASE("lcm") {
  CHECK(lcm(7, 5) == 35);
  CHECK(lcm(2, 1) == 2);
  CHECK(lcm(1, 1) == 1);
  CHECK(lcm(4, 6) == 12);
}

TEST_CASE("unimodular completion, worked-example rows") {
  // Values frozen from the brute-force search in support/random_tuple.hpp.
  CHECK(unimodular_completion(5, 4) == Completion{1, 1});
  CHECK(unimodular_completion(7, 2) == Completion{3, 1});
  CHECK(unimodular_completion(1, 1) == Completion{0, 1});
  CHECK(unimodular_completion(1, 141) == Completion{0, 1});
  CHECK(unimodular_completion(2, 141) == Completion{1, 71});
}

TEST_CASE("unimodular completion rejects bad rows") {
  CHECK_THROWS_AS(unimodular_completion(4, 6), InvalidInput);
  CHECK_THROWS_AS(unimodular_completion(0, 1), InvalidInput);
  CHECK_THROWS_AS(unimodular_completion(3, -1), InvalidInput);
}

TEST_CASE("unimodular completion agrees with brute force on all coprime rows up to 50") {
  for (long m = 1; m <= 50; ++m) {
    for (long n = 1; n <= 50; ++n) {
      if (gcd(m, n) != 1)
        continue;
      INFO("m=" << m << " n=" << n);
      auto oracle = qoinv::testing::brute_force_completion(m, n);
      REQUIRE(oracle.has_value());
      auto c = unimodular_completion(m, n);
      CHECK(c.r == oracle->first);
      CHECK(c.s == oracle->second);
      CHECK(m * c.s - n * c.r == 1);
      CHECK(c.r >= 0);
      if (m >= 2)
        CHECK(c.r < m);
    }
  }
}

TEST_CASE("sw on the worked-example matrices") {
  CHECK(sw({1, 2, 12, 1}) == Mat2{-23, 2, -12, 1});
  CHECK(sw({1, 4, 993, 1}) == Mat2{-3971, 4, -993, 1});
  CHECK(sw(Mat2::identity()) == Mat2::identity());
  CHECK_THROWS_AS(sw({1, 2, 3, 0}), SingularSwap);
}

TEST_CASE("sw is an involution and det(sw(U)) = U11/U22") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  auto entry = [&] { return reduce(num(rng), den(rng)); };
  for (int i = 0; i < 500; ++i) {
    Mat2 u{entry(), entry(), entry(), entry()};
    if (u.a22 == 0)
      continue;
    const Mat2 s = sw(u);
    CHECK(sw(s) == u);
    CHECK(s.det() == u.a11 / u.a22);
    CHECK((s.det() == 1) == (u.a11 == u.a22));
  }
}

TEST_CASE("sw exchanges the roles in a linear relation") {
  // (x1, y2) = U (x2, y1)  <=>  (x1, y1) = sw(U) (x2, y2)
  const Mat2 u{3, reduce(1, 2), -2, 5};
  const ExactRational x2 = reduce(7, 3), y1 = reduce(-1, 4);
  const Vec2 lhs = u * Vec2{x2, y1};
  const ExactRational x1 = lhs[0], y2 = lhs[1];
  CHECK(sw(u) * Vec2{x2, y2} == Vec2{x1, y1});
}
