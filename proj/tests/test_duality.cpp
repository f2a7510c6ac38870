#include <doctest.h>

#include <random>

#include "z4rm/duality.hpp"
#include "z4rm/family.hpp"

using namespace z4rm;

TEST_CASE("standard inner product") {
  CHECK(standard_inner(Z4Vector{1, 1, 1, 1}, Z4Vector{0, 1, 2, 3}) == 2);
  CHECK(standard_inner(Z4Vector{3, 1, 2}, Z4Vector(3)) == 0);
  CHECK(standard_inner(Z4Vector{2}, Z4Vector{2}) == 0);
  CHECK_THROWS_AS(standard_inner(Z4Vector{1}, Z4Vector{1, 1}), std::invalid_argument);
}

TEST_CASE("kronecker diagonal") {
  CHECK(kronecker_diagonal(2) == Z4Vector{1, 3});
  CHECK(kronecker_diagonal(4) == Z4Vector{1, 3, 3, 1});
  CHECK(kronecker_diagonal(1) == Z4Vector{1});
  CHECK_THROWS_AS(kronecker_diagonal(3), std::invalid_argument);
  CHECK_THROWS_AS(kronecker_diagonal(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 1024; n *= 2) {
    const Z4Vector diag = kronecker_diagonal(n);
    for (std::size_t i = 0; i < n; ++i) CHECK((diag[i] * diag[i]) % 4 == 1);
  }
}

TEST_CASE("kronecker inner product") {
  CHECK(kronecker_inner(Z4Vector{1, 1}, Z4Vector{1, 1}) == 0);
  CHECK(kronecker_inner(Z4Vector{1, 2, 3, 0}, Z4Vector(4)) == 0);
  CHECK_THROWS_AS(kronecker_inner(Z4Vector{1, 1, 1}, Z4Vector{1, 1, 1}), std::invalid_argument);

  // Split identity <(u1|u2),(v1|v2)> = <u1,v1> + 3 <u2,v2> at length 8.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> symbol(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::uint8_t> u(8), v(8);
    for (auto& e : u) e = static_cast<std::uint8_t>(symbol(rng));
    for (auto& e : v) e = static_cast<std::uint8_t>(symbol(rng));
    const Z4Vector uu{u}, vv{v};
    const Z4Vector u1{std::vector<std::uint8_t>(u.begin(), u.begin() + 4)};
    const Z4Vector u2{std::vector<std::uint8_t>(u.begin() + 4, u.end())};
    const Z4Vector v1{std::vector<std::uint8_t>(v.begin(), v.begin() + 4)};
    const Z4Vector v2{std::vector<std::uint8_t>(v.begin() + 4, v.end())};
    REQUIRE(kronecker_inner(uu, vv) ==
            (kronecker_inner(u1, v1) + 3 * kronecker_inner(u2, v2)) % 4);
  }
}

TEST_CASE("dual code extremes") {
  CHECK(dual_code(QuaternaryCode::whole_space(2), InnerProductKind::standard) == QuaternaryCode::zero(2));
  CHECK(dual_code(QuaternaryCode::zero(3), InnerProductKind::standard) == QuaternaryCode::whole_space(3));
  CHECK(dual_code(QuaternaryCode::whole_space(4), InnerProductKind::kronecker) == QuaternaryCode::zero(4));
  CHECK_THROWS_AS(dual_code(QuaternaryCode::zero(3), InnerProductKind::kronecker), std::invalid_argument);
}

TEST_CASE("kronecker self-dual family member") {
  const QuaternaryCode code = rm_code({1, 1, 3});
  CHECK(dual_code(code, InnerProductKind::kronecker) == code);
}

TEST_CASE("dual size law and involution on small codes") {
  const std::vector<QuaternaryCode> cases = {
      QuaternaryCode::from_rows(2, {Z4Vector{0, 2}, Z4Vector{1, 1}}),
      QuaternaryCode::from_rows(2, {Z4Vector{2, 1}}),
      QuaternaryCode::from_rows(4, {Z4Vector{1, 1, 1, 1}, Z4Vector{0, 1, 2, 3}}),
      rm_code({0, 1, 4}),
  };
  for (const auto& code : cases) {
    for (const auto kind : {InnerProductKind::standard, InnerProductKind::kronecker}) {
      const QuaternaryCode dual = dual_code(code, kind);
      CHECK(code.codeword_count_log2() + dual.codeword_count_log2() ==
            static_cast<int>(2 * code.length()));
      CHECK(dual_code(dual, kind) == code);
      CHECK(verify_dual_pair(code, dual, kind));
    }
  }
}

TEST_CASE("duals of family codes have minimal canonical forms") {
  for (int m = 1; m <= 4; ++m) {
    for (int s = 0; s <= (m - 1) / 2; ++s) {
      for (int r = -1; r <= m; ++r) {
        for (const auto kind : {InnerProductKind::standard, InnerProductKind::kronecker}) {
          const QuaternaryCode dual = dual_code(rm_code({s, r, m}), kind);
          CHECK(dual.howell_rows().size() == static_cast<std::size_t>(dual.gamma() + dual.delta()));
          CHECK(dual.canonical_generators().order_two_count() ==
                static_cast<std::size_t>(dual.gamma()));
        }
      }
    }
  }
}

TEST_CASE("verify_dual_pair") {
  CHECK(verify_dual_pair(rm_code({0, 0, 2}), rm_code({0, 1, 2}), InnerProductKind::kronecker));
  CHECK(verify_dual_pair(QuaternaryCode::whole_space(2), QuaternaryCode::zero(2),
                         InnerProductKind::standard));
  CHECK(verify_dual_pair(QuaternaryCode::whole_space(2), QuaternaryCode::zero(2),
                         InnerProductKind::kronecker));
  CHECK(verify_dual_pair(rm_code({1, 1, 3}), rm_code({1, 1, 3}), InnerProductKind::kronecker));
  CHECK_FALSE(verify_dual_pair(rm_code({0, 1, 2}), rm_code({0, 1, 2}), InnerProductKind::kronecker));
  CHECK_THROWS_AS(verify_dual_pair(rm_code({0, 1, 2}), rm_code({0, 1, 3}), InnerProductKind::standard),
                  std::invalid_argument);
}

TEST_CASE("macwilliams transform against the hand-computed example") {
  // Code {(0,0),(1,1),(2,2),(3,3),(0,2),(2,0),(1,3),(3,1)}: counts 1,0,6,0,1.
  // Transform: ((x+y)^4 + 6 (x+y)^2 (x-y)^2 + (x-y)^4) / 8 = x^4 + y^4.
  const LeeWeightDistribution dist(std::vector<std::uint64_t>{1, 0, 6, 0, 1});
  CHECK(macwilliams_transform(dist, 8) == std::vector<std::uint64_t>{1, 0, 0, 0, 1});
}

TEST_CASE("macwilliams checks") {
  CHECK(macwilliams_check(rm_code({0, 1, 2}), InnerProductKind::standard));
  CHECK(macwilliams_check(rm_code({0, 1, 2}), InnerProductKind::kronecker));
  CHECK(macwilliams_check(QuaternaryCode::whole_space(1), InnerProductKind::standard));
  CHECK(macwilliams_check(rm_code({1, 1, 4}), InnerProductKind::kronecker));
  CHECK(macwilliams_check(rm_code({1, 2, 4}), InnerProductKind::kronecker));
}
