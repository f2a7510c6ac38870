#include "z4rm/analysis.hpp"

namespace z4rm {

GrayImageReport gray_image_params(const QuaternaryCode& code, std::uint64_t cap) {
  GrayImageReport report;
  report.binary_length = 2 * code.length();
  report.dimension = code.codeword_count_log2();
  report.is_linear = is_gray_image_linear(code);
  if (code.is_zero_code()) {
    report.min_distance = std::nullopt;
    return report;
  }
  try {
    report.min_distance = min_lee_distance(code, cap);
  } catch (const EnumerationCapError&) {
    report.min_distance = std::nullopt;
  }
  return report;
}

bool is_gray_image_linear(const QuaternaryCode& code) {
  const auto rows = code.canonical_generators().rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (!code.contains(2 * componentwise_product(rows[i], rows[j]))) return false;
    }
  }
  return true;
}

bool hadamard_check(const QuaternaryCode& code, int m, std::uint64_t cap) {
  if (m < 1) return false;
  if (2 * code.length() != (std::size_t{1} << m)) return false;
  if (code.codeword_count_log2() != m + 1) return false;
  return min_lee_distance(code, cap) == (1 << (m - 1));
}

bool extended_perfect_check(const QuaternaryCode& code, int m, std::uint64_t cap) {
  if (m < 2) return false;
  if (2 * code.length() != (std::size_t{1} << m)) return false;
  if (code.codeword_count_log2() != (1 << m) - m - 1) return false;
  return min_lee_distance(code, cap) == 4;
}

}  // namespace z4rm
