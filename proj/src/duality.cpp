#include "z4rm/duality.hpp"

#include <bit>

namespace z4rm {

namespace {

void require_equal_lengths(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": lengths " + std::to_string(a) + " and " +
                                std::to_string(b) + " differ");
  }
}

void require_power_of_two(std::size_t n, const char* op) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument(std::string(op) + ": length " + std::to_string(n) +
                                " is not a power of two");
  }
}

Z4Vector diagonal_product(const Z4Vector& v, const Z4Vector& diag) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>((v[i] * diag[i]) & 3);
  return Z4Vector(std::move(out));
}

}  // namespace

std::uint8_t standard_inner(const Z4Vector& u, const Z4Vector& v) {
  require_equal_lengths(u.size(), v.size(), "standard inner product");
  unsigned acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += static_cast<unsigned>(u[i]) * v[i];
  return static_cast<std::uint8_t>(acc & 3);
}

Z4Vector kronecker_diagonal(std::size_t length) {
  require_power_of_two(length, "kronecker diagonal");
  std::vector<std::uint8_t> diag(length);
  for (std::size_t i = 0; i < length; ++i)
    diag[i] = (std::popcount(i) % 2 == 0) ? std::uint8_t{1} : std::uint8_t{3};
  return Z4Vector(std::move(diag));
}

std::uint8_t kronecker_inner(const Z4Vector& u, const Z4Vector& v) {
  require_equal_lengths(u.size(), v.size(), "kronecker inner product");
  require_power_of_two(u.size(), "kronecker inner product");
  unsigned acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const unsigned k = (std::popcount(i) % 2 == 0) ? 1u : 3u;
    acc += static_cast<unsigned>(u[i]) * k * v[i];
  }
  return static_cast<std::uint8_t>(acc & 3);
}

std::uint8_t inner_product(const Z4Vector& u, const Z4Vector& v, InnerProductKind kind) {
  return kind == InnerProductKind::standard ? standard_inner(u, v) : kronecker_inner(u, v);
}

QuaternaryCode dual_code(const QuaternaryCode& code, InnerProductKind kind) {
  if (kind == InnerProductKind::kronecker) require_power_of_two(code.length(), "kronecker dual");
  std::vector<Z4Vector> rows = kernel_generators(code);
  if (kind == InnerProductKind::kronecker) {
    const Z4Vector diag = kronecker_diagonal(code.length());
    for (auto& r : rows) r = diagonal_product(r, diag);
  }
  return QuaternaryCode::from_rows(code.length(), std::move(rows));
}

bool verify_dual_pair(const QuaternaryCode& a, const QuaternaryCode& b, InnerProductKind kind) {
  require_equal_lengths(a.length(), b.length(), "dual pair");
  if (a.codeword_count_log2() + b.codeword_count_log2() != static_cast<int>(2 * a.length())) return false;
  for (const auto& u : a.generators().rows())
    for (const auto& v : b.generators().rows())
      if (inner_product(u, v, kind) != 0) return false;
  return true;
}

std::vector<std::uint64_t> macwilliams_transform(const LeeWeightDistribution& dist,
                                                 std::uint64_t code_size) {
  const std::size_t two_n = dist.max_weight();
  // Pascal triangle up to 2N.
  std::vector<std::vector<__int128>> binom(two_n + 1);
  for (std::size_t p = 0; p <= two_n; ++p) {
    binom[p].assign(p + 1, 0);
    binom[p][0] = 1;
    for (std::size_t i = 1; i <= p; ++i)
      binom[p][i] = binom[p - 1][i - 1] + (i < p ? binom[p - 1][i] : 0);
  }
  // Coefficient of y^j in sum_w c_w (x+y)^(2N-w) (x-y)^w, then divide by |C|.
  std::vector<__int128> transformed(two_n + 1, 0);
  for (std::size_t w = 0; w <= two_n; ++w) {
    const std::uint64_t c = dist.count(w);
    if (c == 0) continue;
    const std::size_t p = two_n - w;  // (x+y)-power
    for (std::size_t i = 0; i <= p; ++i) {
      for (std::size_t l = 0; l <= w; ++l) {
        const __int128 term = binom[p][i] * binom[w][l] * static_cast<__int128>(c);
        if (l % 2 == 0)
          transformed[i + l] += term;
        else
          transformed[i + l] -= term;
      }
    }
  }
  std::vector<std::uint64_t> out(two_n + 1, 0);
  for (std::size_t j = 0; j <= two_n; ++j) {
    const __int128 v = transformed[j];
    if (v < 0 || v % static_cast<__int128>(code_size) != 0) {
      throw std::runtime_error("MacWilliams transform is not a nonnegative multiple of the code size");
    }
    out[j] = static_cast<std::uint64_t>(v / static_cast<__int128>(code_size));
  }
  return out;
}

bool macwilliams_check(const QuaternaryCode& code, InnerProductKind kind, std::uint64_t cap) {
  const LeeWeightDistribution primal = lee_weight_distribution(code, cap);
  const QuaternaryCode dual = dual_code(code, kind);
  const LeeWeightDistribution dual_dist = lee_weight_distribution(dual, cap);

  const std::vector<std::uint64_t> transformed = macwilliams_transform(primal, code.codeword_count());
  if (transformed != std::vector<std::uint64_t>(dual_dist.counts().begin(), dual_dist.counts().end()))
    return false;

  if (std::has_single_bit(code.length())) {
    const InnerProductKind other =
        kind == InnerProductKind::standard ? InnerProductKind::kronecker : InnerProductKind::standard;
    const LeeWeightDistribution other_dist = lee_weight_distribution(dual_code(code, other), cap);
    if (!(other_dist == dual_dist)) return false;
  }
  return true;
}

}  // namespace z4rm
