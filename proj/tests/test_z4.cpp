#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "z4rm/z4.hpp"

using namespace z4rm;

namespace {

// Every vector over {0,1,2,3} of the given length, for exhaustive checks.
std::vector<Z4Vector> all_vectors(std::size_t n) {
  std::vector<Z4Vector> out;
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::uint8_t> e(n);
    std::size_t bits = mask;
    for (std::size_t i = 0; i < n; ++i, bits >>= 2) e[i] = static_cast<std::uint8_t>(bits & 3);
    out.emplace_back(std::move(e));
  }
  return out;
}

Z4Vector random_vector(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> symbol(0, 3);
  std::vector<std::uint8_t> e(n);
  for (auto& x : e) x = static_cast<std::uint8_t>(symbol(rng));
  return Z4Vector(std::move(e));
}

}  // namespace

TEST_CASE("vector addition") {
  CHECK(Z4Vector{1, 2, 3, 0} + Z4Vector{3, 2, 1, 0} == Z4Vector{0, 0, 0, 0});
  CHECK(Z4Vector{1, 1, 1, 1} + Z4Vector{0, 1, 2, 3} == Z4Vector{1, 2, 3, 0});
  const Z4Vector v{2, 0, 1};
  CHECK(v + Z4Vector(3) == v);
  CHECK_THROWS_AS((Z4Vector{1} + Z4Vector{1, 2}), std::invalid_argument);
}

TEST_CASE("scalar multiplication") {
  CHECK(2 * Z4Vector{0, 1, 2, 3} == Z4Vector{0, 2, 0, 2});
  const Z4Vector v{3, 1, 2};
  CHECK(1 * v == v);
  CHECK(0 * v == Z4Vector(3));
  CHECK_THROWS_AS(4 * v, std::invalid_argument);
}

TEST_CASE("lee weight") {
  CHECK(lee_weight(Z4Vector{1, 2, 3, 0}) == 4);
  CHECK(lee_weight(Z4Vector(7)) == 0);
  CHECK(lee_weight(Z4Vector::all_twos(4)) == 8);
  CHECK(lee_distance(Z4Vector{1, 2, 3, 0}, Z4Vector{1, 2, 3, 0}) == 0);
  CHECK(lee_distance(Z4Vector{0, 1}, Z4Vector{3, 3}) == lee_weight(Z4Vector{0, 1} - Z4Vector{3, 3}));
}

TEST_CASE("gray map") {
  CHECK(gray_map(Z4Vector{2}) == Z2Vector{1, 1});
  CHECK(gray_map(Z4Vector{0, 1, 2, 3}) == Z2Vector{0, 0, 0, 1, 1, 1, 1, 0});
  CHECK(gray_map(Z4Vector(5)) == Z2Vector(10));
}

TEST_CASE("hamming weight") {
  CHECK(hamming_weight(Z2Vector{1, 1, 0, 1}) == 3);
  CHECK(hamming_weight(Z2Vector(6)) == 0);
  CHECK(hamming_weight(gray_map(Z4Vector{2, 2})) == 4);
}

TEST_CASE("gray isometry, exhaustive small lengths") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto vectors = all_vectors(n);
    for (const auto& u : vectors) {
      for (const auto& v : vectors) {
        CHECK(lee_weight(u - v) == hamming_weight(gray_map(u) ^ gray_map(v)));
      }
    }
  }
}

TEST_CASE("gray isometry, random pairs up to length 16") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 10'000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 16);
    const Z4Vector u = random_vector(n, rng);
    const Z4Vector v = random_vector(n, rng);
    REQUIRE(lee_weight(u - v) == hamming_weight(gray_map(u) ^ gray_map(v)));
  }
}

TEST_CASE("gray map is injective, exhaustive small lengths") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<Z2Vector> images;
    for (const auto& v : all_vectors(n)) images.insert(gray_map(v));
    CHECK(images.size() == (std::size_t{1} << (2 * n)));
  }
}

TEST_CASE("lee weight symmetry and bounds") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& v : all_vectors(n)) {
      CHECK(lee_weight(v) == lee_weight(-v));
      CHECK(lee_weight(v) >= 0);
      CHECK(lee_weight(v) <= static_cast<int>(2 * n));
      if (lee_weight(v) == static_cast<int>(2 * n)) CHECK(v == Z4Vector::all_twos(n));
    }
  }
}
