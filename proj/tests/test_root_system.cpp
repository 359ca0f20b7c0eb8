#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gla/root_system.hpp"

using namespace gla;

namespace {

long long count_of(Family f, int r) {
  return static_cast<long long>(build_root_system(f, r).positive.size());
}

}  // namespace

TEST_CASE("G2 positive roots are the classical six") {
  RootSystem rs = build_root_system(Family::G2, 2);
  std::set<RootCoeffs> expect = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  std::set<RootCoeffs> got(rs.positive.begin(), rs.positive.end());
  CHECK(got == expect);
  CHECK(rs.highest == RootCoeffs{3, 2});
}

TEST_CASE("rank one A is a single root") {
  RootSystem rs = build_root_system(Family::A, 1);
  REQUIRE(rs.positive.size() == 1);
  CHECK(rs.positive[0] == RootCoeffs{1});
}

TEST_CASE("F4 has 24 positive roots, half long half short") {
  RootSystem rs = build_root_system(Family::F4, 4);
  REQUIRE(rs.positive.size() == 24);
  int longs = 0, shorts = 0;
  for (const auto& b : rs.positive) {
    Rat n = rs.norm0(b);
    if (n == Rat(2)) ++longs;
    if (n == Rat(1)) ++shorts;
  }
  CHECK(longs == 12);
  CHECK(shorts == 12);
  CHECK(rs.highest == RootCoeffs{2, 3, 4, 2});
}

TEST_CASE("positive root counts match the classical tables") {
  for (int r = 1; r <= 7; ++r) CHECK(count_of(Family::A, r) == r * (r + 1) / 2);
  for (int r = 2; r <= 5; ++r) CHECK(count_of(Family::B, r) == r * r);
  for (int r = 2; r <= 5; ++r) CHECK(count_of(Family::C, r) == r * r);
  for (int r = 3; r <= 5; ++r) CHECK(count_of(Family::D, r) == r * (r - 1));
  for (int r = 1; r <= 4; ++r) CHECK(count_of(Family::BC, r) == r * r + r);
  CHECK(count_of(Family::E6, 6) == 36);
  CHECK(count_of(Family::E7, 7) == 63);
  CHECK(count_of(Family::E8, 8) == 120);
}

TEST_CASE("highest roots carry the classical coefficients") {
  CHECK(build_root_system(Family::A, 3).highest == RootCoeffs{1, 1, 1});
  CHECK(build_root_system(Family::B, 3).highest == RootCoeffs{1, 2, 2});
  CHECK(build_root_system(Family::C, 3).highest == RootCoeffs{2, 2, 1});
  CHECK(build_root_system(Family::D, 4).highest == RootCoeffs{1, 2, 1, 1});
  CHECK(build_root_system(Family::E6, 6).highest == RootCoeffs{1, 2, 2, 3, 2, 1});
  CHECK(build_root_system(Family::E7, 7).highest ==
        RootCoeffs{2, 2, 3, 4, 3, 2, 1});
  CHECK(build_root_system(Family::E8, 8).highest ==
        RootCoeffs{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build_root_system(Family::BC, 2).highest == RootCoeffs{2, 2});
}

TEST_CASE("only BC contains divisible roots") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4},
                                                         {Family::B, 3},
                                                         {Family::C, 3},
                                                         {Family::D, 4},
                                                         {Family::F4, 4},
                                                         {Family::G2, 2}}) {
    RootSystem rs = build_root_system(f, r);
    for (const auto& b : rs.positive) {
      RootCoeffs d = b;
      for (auto& x : d) x *= 2;
      CHECK(rs.index_of(d) < 0);
    }
  }
  RootSystem bc = build_root_system(Family::BC, 3);
  int doubled = 0;
  for (const auto& b : bc.positive)
    if (bc.norm0(b) == Rat(4)) ++doubled;
  CHECK(doubled == 3);  // exactly one 2e_i per short e_i
  for (const auto& b : bc.positive) {
    if (bc.norm0(b) != Rat(1)) continue;
    RootCoeffs d = b;
    for (auto& x : d) x *= 2;
    CHECK(bc.index_of(d) >= 0);
  }
}

TEST_CASE("invalid family/rank pairs are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::E6, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::F4, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::G2, 3), std::invalid_argument);
}

TEST_CASE("diagram automorphism generators") {
  CHECK(build_root_system(Family::A, 2).diagram_automorphisms.size() == 1);
  CHECK(build_root_system(Family::A, 1).diagram_automorphisms.empty());
  CHECK(build_root_system(Family::D, 4).diagram_automorphisms.size() == 2);
  CHECK(build_root_system(Family::E6, 6).diagram_automorphisms.size() == 1);
  CHECK(build_root_system(Family::E7, 7).diagram_automorphisms.empty());
  CHECK(build_root_system(Family::G2, 2).diagram_automorphisms.empty());
  CHECK(build_root_system(Family::BC, 3).diagram_automorphisms.empty());

  // generators permute the positive roots
  RootSystem e6 = build_root_system(Family::E6, 6);
  for (const auto& p : e6.diagram_automorphisms)
    for (const auto& b : e6.positive)
      CHECK(e6.index_of(apply_permutation(p, b)) >= 0);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6,
                   Family::E7, Family::E8, Family::F4, Family::G2, Family::BC})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK(!family_from_string("H3").has_value());
}
