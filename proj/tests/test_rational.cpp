#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "gla/rational.hpp"

using gla::Rat;

TEST_CASE("construction normalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0, -7).den() == 1);
  CHECK(Rat(6, 3).is_integer());
  CHECK(Rat(7, 2).num() == 7);
  CHECK(Rat(7, 2).den() == 2);
}

TEST_CASE("arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK(Rat(-7, 3).abs() == Rat(7, 3));
  Rat x(1, 6);
  x += Rat(1, 3);
  CHECK(x == Rat(1, 2));
  x *= Rat(4);
  CHECK(x == Rat(2));
}

TEST_CASE("comparison is exact") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(2, 6) == Rat(1, 3));
  CHECK(Rat(1000000007, 3) > Rat(1000000006, 3));
  std::map<Rat, int> m;
  m[Rat(1, 2)] = 1;
  m[Rat(2, 4)] += 1;
  CHECK(m.size() == 1);
  CHECK(m[Rat(1, 2)] == 2);
}

TEST_CASE("division by zero and overflow are reported") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  Rat big(INT64_MAX / 2);
  CHECK_THROWS_AS(big * Rat(8), std::overflow_error);
  // products that cancel must not overflow
  CHECK(Rat(INT64_MAX / 3) * Rat(3, INT64_MAX / 3) == Rat(3));
}

TEST_CASE("string form") {
  CHECK(Rat(3).str() == "3");
  CHECK(Rat(-3, 4).str() == "-3/4");
  CHECK(Rat(0).str() == "0");
}

TEST_CASE("field axioms on random small rationals") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 24);
  for (int t = 0; t < 500; ++t) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("gcd and lcm helpers") {
  CHECK(gla::gcd_ll(12, -18) == 6);
  CHECK(gla::gcd_ll(0, 5) == 5);
  CHECK(gla::lcm_ll(4, 6) == 12);
  CHECK(gla::lcm_ll(1, 7) == 7);
}
