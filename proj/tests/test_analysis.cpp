#include <doctest.h>

#include <algorithm>

#include "z4rm/analysis.hpp"
#include "z4rm/family.hpp"

using namespace z4rm;

namespace {

std::uint64_t pack_bits(const Z2Vector& bits) {
  REQUIRE(bits.size() <= 64);
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) packed |= std::uint64_t{1} << i;
  return packed;
}

// Exhaustive oracle: the Gray image as a set, closed under XOR or not.
bool gray_image_xor_closed(const QuaternaryCode& code) {
  std::vector<std::uint64_t> image;
  for (const auto& word : enumerate_codewords(code)) image.push_back(pack_bits(gray_map(word)));
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i; j < image.size(); ++j)
      if (!std::binary_search(image.begin(), image.end(), image[i] ^ image[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("gray image parameters") {
  const GrayImageReport hadamard = gray_image_params(rm_code({0, 1, 2}));
  CHECK(hadamard.binary_length == 4);
  CHECK(hadamard.dimension == 3);
  CHECK(hadamard.min_distance == 2);
  CHECK(hadamard.is_linear);

  const GrayImageReport zero = gray_image_params(QuaternaryCode::zero(5));
  CHECK(zero.binary_length == 10);
  CHECK(zero.dimension == 0);
  CHECK_FALSE(zero.min_distance.has_value());

  const GrayImageReport perfect = gray_image_params(rm_code({1, 2, 4}));
  CHECK(perfect.binary_length == 16);
  CHECK(perfect.dimension == 11);
  CHECK(perfect.min_distance == 4);

  // Cap exceeded: distance reported unavailable, the rest still filled in.
  const GrayImageReport capped = gray_image_params(rm_code({1, 2, 4}), 16);
  CHECK(capped.binary_length == 16);
  CHECK(capped.dimension == 11);
  CHECK_FALSE(capped.min_distance.has_value());
}

TEST_CASE("gray image linearity criterion") {
  CHECK(is_gray_image_linear(rm_code({0, 1, 2})));
  CHECK(gray_image_xor_closed(rm_code({0, 1, 2})));
  CHECK(is_gray_image_linear(QuaternaryCode::whole_space(4)));

  // The order-2 member of the second family at m = 4 has a nonlinear image;
  // the order-1 member does not.
  CHECK_FALSE(is_gray_image_linear(rm_code({1, 2, 4})));
  CHECK_FALSE(gray_image_xor_closed(rm_code({1, 2, 4})));
  CHECK(is_gray_image_linear(rm_code({1, 1, 4})));
  CHECK(gray_image_xor_closed(rm_code({1, 1, 4})));
}

TEST_CASE("criterion agrees with the exhaustive oracle") {
  for (int m = 1; m <= 4; ++m) {
    for (int s = 0; s <= (m - 1) / 2; ++s) {
      for (int r = -1; r <= m; ++r) {
        const QuaternaryCode code = rm_code({s, r, m});
        if (code.codeword_count_log2() > 10) continue;
        CHECK(is_gray_image_linear(code) == gray_image_xor_closed(code));
      }
    }
  }
}

TEST_CASE("gray images of the small families are linear") {
  for (int m = 1; m <= 3; ++m)
    for (int s = 0; s <= (m - 1) / 2; ++s)
      for (int r = -1; r <= m; ++r) CHECK(is_gray_image_linear(rm_code({s, r, m})));
}

TEST_CASE("hadamard profile") {
  CHECK(hadamard_check(rm_code({0, 1, 3}), 3));
  CHECK(hadamard_check(rm_code({2, 1, 5}), 5));
  CHECK_FALSE(hadamard_check(rm_code({0, 0, 2}), 2));
  CHECK_FALSE(hadamard_check(rm_code({0, 1, 3}), 4));
}

TEST_CASE("extended perfect profile") {
  CHECK(extended_perfect_check(rm_code({1, 2, 4}), 4));
  CHECK(extended_perfect_check(rm_code({0, 1, 3}), 3));
  CHECK_FALSE(extended_perfect_check(QuaternaryCode::whole_space(8), 4));
  CHECK_FALSE(extended_perfect_check(rm_code({0, 1, 4}), 4));
}
