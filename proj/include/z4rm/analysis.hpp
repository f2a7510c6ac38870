#pragma once

#include <optional>

#include "z4rm/code.hpp"

namespace z4rm {

/// Binary parameters of the Gray image of a quaternary code.
struct GrayImageReport {
  std::size_t binary_length = 0;          // n = 2N
  int dimension = 0;                      // k = gamma + 2*delta
  std::optional<int> min_distance;        // absent when enumeration exceeds the cap
  bool is_linear = false;

  friend bool operator==(const GrayImageReport&, const GrayImageReport&) = default;
};

GrayImageReport gray_image_params(const QuaternaryCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Gray image is linear iff 2*(u*v) is a codeword for all codewords u, v
/// (componentwise product). The obstruction is bilinear, so checking
/// generator pairs suffices.
bool is_gray_image_linear(const QuaternaryCode& code);

/// Gray image has the Hadamard profile (2^m, 2^(m+1), 2^(m-1)).
bool hadamard_check(const QuaternaryCode& code, int m, std::uint64_t cap = kDefaultEnumerationCap);

/// Gray image has the extended perfect profile (2^m, 2^(2^m - m - 1), 4).
bool extended_perfect_check(const QuaternaryCode& code, int m,
                            std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace z4rm
