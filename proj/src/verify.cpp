#include "z4rm/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "z4rm/analysis.hpp"
#include "z4rm/code.hpp"
#include "z4rm/constructions.hpp"
#include "z4rm/duality.hpp"
#include "z4rm/family.hpp"

namespace z4rm {

namespace {

constexpr int kInfiniteDistance = 1 << 28;
constexpr std::uint64_t kExtendedCap = std::uint64_t{1} << 26;

std::string rm_name(const RmIndex& idx) {
  std::ostringstream os;
  os << "RM_" << idx.s << "(" << idx.r << "," << idx.m << ")";
  return os.str();
}

template <typename Fn>
void for_valid_indices(int max_m, int min_r, Fn&& fn) {
  for (int m = 1; m <= max_m; ++m)
    for (int s = 0; s <= (m - 1) / 2; ++s)
      for (int r = min_r; r <= m; ++r) fn(RmIndex{s, r, m});
}

int distance_or_infinite(const QuaternaryCode& code, std::uint64_t cap) {
  if (code.is_zero_code()) return kInfiniteDistance;
  return std::min(min_lee_distance(code, cap), kInfiniteDistance);
}

// Distance of a family code within the enumeration tier; nullopt = out of tier.
std::optional<int> tiered_distance(const QuaternaryCode& code, bool extended) {
  if (code.is_zero_code()) return std::nullopt;
  if (code.is_whole_space()) return 1;
  if (code.is_even_code()) return 2;
  const int k = code.codeword_count_log2();
  if (k <= 20 || (extended && k <= 26)) return min_lee_distance(code, kExtendedCap);
  return std::nullopt;
}

std::uint64_t pack_bits(const Z2Vector& bits) {
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) packed |= std::uint64_t{1} << i;
  return packed;
}

// Exhaustive XOR-closure of the Gray image; requires 2N <= 64.
bool gray_image_xor_closed(const QuaternaryCode& code) {
  std::vector<std::uint64_t> image;
  image.reserve(static_cast<std::size_t>(code.codeword_count()));
  for (const auto& word : enumerate_codewords(code, std::uint64_t{1} << 20))
    image.push_back(pack_bits(gray_map(word)));
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i; j < image.size(); ++j)
      if (!std::binary_search(image.begin(), image.end(), image[i] ^ image[j])) return false;
  return true;
}

// Reference (gamma, delta) grids for m = 1..5, s ascending, r = 0..m.
using Grid = std::vector<std::vector<std::pair<int, int>>>;
const Grid& reference_table(int m) {
  static const std::vector<Grid> tables = {
      {{{1, 0}, {0, 1}}},
      {{{1, 0}, {1, 1}, {0, 2}}},
      {{{1, 0}, {2, 1}, {1, 3}, {0, 4}}, {{1, 0}, {0, 2}, {1, 3}, {0, 4}}},
      {{{1, 0}, {3, 1}, {3, 4}, {1, 7}, {0, 8}}, {{1, 0}, {1, 2}, {1, 5}, {1, 7}, {0, 8}}},
      {{{1, 0}, {4, 1}, {6, 5}, {4, 11}, {1, 15}, {0, 16}},
       {{1, 0}, {2, 2}, {2, 7}, {2, 12}, {1, 15}, {0, 16}},
       {{1, 0}, {0, 3}, {2, 7}, {0, 13}, {1, 15}, {0, 16}}}};
  return tables.at(static_cast<std::size_t>(m - 1));
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  std::vector<PropertyResult> run() {
    check_parameter_tables();
    check_predicted_types();
    check_size_law();
    check_inclusion_chains();
    check_distance_theorem();
    check_even_code();
    check_duality();
    check_dual_involution_orthogonality();
    check_dual_distribution_equality();
    check_standard_dual_family();
    check_macwilliams();
    check_hadamard_extended_perfect();
    check_gray_isometry();
    check_gray_linearity();
    check_construction_distances();
    check_construction_types();
    check_commutation();
    check_kronecker_lemmas();
    check_pbq_subset_chain();
    check_canonical_form();
    check_closure();
    return std::move(results_);
  }

 private:
  void report(const std::string& name, bool passed, const std::string& detail) {
    results_.push_back({name, passed, detail});
  }

  void check_parameter_tables() {
    const int limit = std::min(options_.max_m, 5);
    for (int m = 1; m <= limit; ++m) {
      const RmTable table = rm_table(m);
      const Grid& expected = reference_table(m);
      if (table.entries != expected) {
        report("parameter-tables", false, "mismatch at m=" + std::to_string(m));
        return;
      }
    }
    report("parameter-tables", true, "m<=" + std::to_string(limit));
  }

  void check_predicted_types() {
    std::string failure;
    for_valid_indices(options_.max_m, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const auto predicted = rm_gamma_delta_predicted(idx);
      const QuaternaryCode code = rm_code(idx);
      if (predicted != std::make_pair(code.gamma(), code.delta())) failure = rm_name(idx);
    });
    report("predicted-type-recurrences", failure.empty(), failure);
  }

  void check_size_law() {
    std::string failure;
    for_valid_indices(options_.max_m, 0, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      if (code.codeword_count_log2() != rm_dimension(idx.r, idx.m)) {
        failure = rm_name(idx);
        return;
      }
      if (code.codeword_count_log2() <= 20) {
        std::uint64_t count = 0;
        for_each_codeword(code, [&](std::span<const std::uint8_t>) { ++count; });
        if (count != code.codeword_count()) failure = rm_name(idx) + " enumeration count";
      }
    });
    report("size-law", failure.empty(), failure);
  }

  void check_inclusion_chains() {
    std::string failure;
    for_valid_indices(options_.max_m, 0, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      if (!is_subcode(rm_code({idx.s, idx.r - 1, idx.m}), rm_code(idx))) failure = rm_name(idx);
    });
    report("inclusion-chains", failure.empty(), failure);
  }

  void check_distance_theorem() {
    std::string failure;
    int checked = 0;
    for_valid_indices(options_.max_m, 0, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      const auto d = tiered_distance(code, options_.extended);
      if (!d.has_value()) return;
      ++checked;
      if (*d != 1 << (idx.m - idx.r)) {
        failure = rm_name(idx) + " d=" + std::to_string(*d);
        return;
      }
      // Self-consistency with the exhaustive distribution on small codes.
      if (code.codeword_count_log2() <= 12 &&
          lee_weight_distribution(code).min_nonzero_weight() != *d)
        failure = rm_name(idx) + " distribution disagrees";
    });
    report("distance-theorem", failure.empty(),
           failure.empty() ? std::to_string(checked) + " codes" : failure);
  }

  void check_even_code() {
    std::string failure;
    for (int m = 1; m <= options_.max_m && failure.empty(); ++m) {
      for (int s = 0; s <= (m - 1) / 2 && failure.empty(); ++s) {
        const QuaternaryCode code = rm_code({s, m - 1, m});
        if (!code.is_even_code()) {
          failure = rm_name({s, m - 1, m});
          break;
        }
        if (m <= 3) {
          // All even-Lee-weight vectors, collected exhaustively.
          const std::size_t n = code.length();
          std::vector<Z4Vector> even;
          std::vector<std::uint8_t> word(n, 0);
          const std::uint64_t total = std::uint64_t{1} << (2 * n);
          for (std::uint64_t x = 0; x < total; ++x) {
            std::uint64_t bits = x;
            int weight = 0;
            for (std::size_t i = 0; i < n; ++i, bits >>= 2) {
              word[i] = static_cast<std::uint8_t>(bits & 3);
              weight += (word[i] == 2) ? 2 : (word[i] == 0 ? 0 : 1);
            }
            if (weight % 2 == 0) even.emplace_back(word);
          }
          if (!(QuaternaryCode::from_rows(n, std::move(even)) == code))
            failure = rm_name({s, m - 1, m}) + " vs exhaustive even code";
        }
      }
    }
    report("even-code", failure.empty(), failure);
  }

  void check_duality() {
    std::string failure;
    for_valid_indices(options_.max_m, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode a = rm_code(idx);
      const QuaternaryCode b = rm_code({idx.s, idx.m - 1 - idx.r, idx.m});
      if (!verify_dual_pair(a, b, InnerProductKind::kronecker)) failure = rm_name(idx);
    });
    report("kronecker-duality", failure.empty(), failure);
  }

  void check_dual_involution_orthogonality() {
    std::string failure;
    const int limit = std::min(options_.max_m, 4);
    for_valid_indices(limit, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      for (const auto kind : {InnerProductKind::standard, InnerProductKind::kronecker}) {
        const QuaternaryCode dual = dual_code(code, kind);
        if (!(dual_code(dual, kind) == code)) {
          failure = rm_name(idx) + " involution";
          return;
        }
        const int pair_log2 = code.codeword_count_log2() + dual.codeword_count_log2();
        if (pair_log2 <= 20) {
          const auto code_words = enumerate_codewords(code);
          const auto dual_words = enumerate_codewords(dual);
          for (const auto& u : code_words)
            for (const auto& v : dual_words)
              if (inner_product(u, v, kind) != 0) {
                failure = rm_name(idx) + " orthogonality";
                return;
              }
        }
      }
    });
    report("dual-involution-orthogonality", failure.empty(), failure);
  }

  void check_dual_distribution_equality() {
    std::string failure;
    const int limit = std::min(options_.max_m, 4);
    for_valid_indices(limit, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      const auto standard = lee_weight_distribution(dual_code(code, InnerProductKind::standard));
      const auto kronecker = lee_weight_distribution(dual_code(code, InnerProductKind::kronecker));
      if (!(standard == kronecker)) failure = rm_name(idx);
    });
    report("dual-distribution-equality", failure.empty(), failure);
  }

  void check_standard_dual_family() {
    std::string failure;
    const int limit = std::min(options_.max_m, 4);
    for_valid_indices(limit, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      const Z4Vector diag = kronecker_diagonal(code.length());
      std::vector<Z4Vector> rows;
      for (const auto& g : code.generators().rows()) rows.push_back(componentwise_product(g, diag));
      const QuaternaryCode mirrored = QuaternaryCode::from_rows(code.length(), std::move(rows));
      const QuaternaryCode partner = rm_code({idx.s, idx.m - 1 - idx.r, idx.m});
      if (!(mirrored == dual_code(partner, InnerProductKind::standard))) failure = rm_name(idx);
    });
    report("standard-dual-family", failure.empty(), failure);
  }

  void check_macwilliams() {
    std::string failure;
    const int limit = std::min(options_.max_m, 4);
    for_valid_indices(limit, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      const int dual_log2 = static_cast<int>(2 * code.length()) - code.codeword_count_log2();
      if (code.codeword_count_log2() > 16 || dual_log2 > 16) return;
      if (!macwilliams_check(code, InnerProductKind::kronecker)) failure = rm_name(idx);
    });
    report("macwilliams", failure.empty(), failure);
  }

  void check_hadamard_extended_perfect() {
    std::string failure;
    for (int m = 1; m <= options_.max_m && failure.empty(); ++m) {
      for (int s = 0; s <= (m - 1) / 2 && failure.empty(); ++s) {
        if (!hadamard_check(rm_code({s, 1, m}), m)) failure = rm_name({s, 1, m}) + " hadamard";
      }
    }
    report("hadamard", failure.empty(), failure);

    failure.clear();
    int checked = 0;
    for (int m = 2; m <= options_.max_m && failure.empty(); ++m) {
      for (int s = 0; s <= (m - 1) / 2 && failure.empty(); ++s) {
        const QuaternaryCode code = rm_code({s, m - 2, m});
        const int k = code.codeword_count_log2();
        if (k > 20 && !(options_.extended && k <= 26)) continue;
        ++checked;
        if (!extended_perfect_check(code, m, kExtendedCap)) failure = rm_name({s, m - 2, m});
      }
    }
    report("extended-perfect", failure.empty(),
           failure.empty() ? std::to_string(checked) + " codes" : failure);
  }

  void check_gray_isometry() {
    std::string failure;
    for_valid_indices(options_.max_m, 0, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      if (code.codeword_count_log2() > 16) return;
      for_each_codeword(code, [&](std::span<const std::uint8_t> w) {
        const Z4Vector v{std::vector<std::uint8_t>(w.begin(), w.end())};
        if (lee_weight(v) != hamming_weight(gray_map(v))) failure = rm_name(idx);
      });
    });
    report("gray-isometry", failure.empty(), failure);
  }

  void check_gray_linearity() {
    std::string failure;
    for_valid_indices(options_.max_m, -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      if (code.codeword_count_log2() > 12) return;
      if (is_gray_image_linear(code) != gray_image_xor_closed(code))
        failure = rm_name(idx) + " criterion disagrees with oracle";
    });
    if (failure.empty() && options_.max_m >= 4) {
      bool any_nonlinear = false;
      for (int r = 1; r <= 2; ++r)
        if (!is_gray_image_linear(rm_code({1, r, 4}))) any_nonlinear = true;
      if (!any_nonlinear) failure = "no nonlinear Gray image among RM_1(1..2,4)";
    }
    report("gray-linearity", failure.empty(), failure);
  }

  std::vector<QuaternaryCode> family_pool(int m) const {
    std::vector<QuaternaryCode> pool;
    for (int s = 0; s <= (m - 1) / 2; ++s)
      for (int r = -1; r <= m; ++r) pool.push_back(rm_code({s, r, m}));
    return pool;
  }

  void check_construction_distances() {
    std::string failure;
    const std::uint64_t cap = std::uint64_t{1} << 20;
    for (int m = 1; m <= std::min(options_.max_m, 3) && failure.empty(); ++m) {
      const auto pool = family_pool(m);
      for (const auto& a : pool) {
        for (const auto& b : pool) {
          const QuaternaryCode pc = plotkin(a, b);
          if (!pc.is_zero_code()) {
            const int expected = std::min(2 * distance_or_infinite(a, cap), distance_or_infinite(b, cap));
            if (min_lee_distance(pc, cap) != expected) {
              failure = "plotkin equality at m=" + std::to_string(m);
              break;
            }
          }
        }
        if (!failure.empty()) break;
      }
    }
    for (int m = 1; m <= std::min(options_.max_m, 2) && failure.empty(); ++m) {
      const auto pool = family_pool(m);
      for (const auto& a : pool) {
        for (const auto& b : pool) {
          if (!failure.empty()) break;
          const QuaternaryCode qp = quaternary_plotkin(a, b);
          if (!qp.is_zero_code()) {
            const int bound = std::min(4 * distance_or_infinite(a, cap), 2 * distance_or_infinite(b, cap));
            if (min_lee_distance(qp, cap) < std::min(bound, kInfiniteDistance)) {
              failure = "quaternary-plotkin bound at m=" + std::to_string(m);
            }
          }
          for (const auto& c : pool) {
            const QuaternaryCode bq = bq_plotkin(a, b, c);
            if (!bq.is_zero_code()) {
              const int expected =
                  std::min({4 * distance_or_infinite(a, cap), 2 * distance_or_infinite(b, cap),
                            distance_or_infinite(c, cap), kInfiniteDistance});
              if (min_lee_distance(bq, cap) != expected) {
                failure = "bq-plotkin equality at m=" + std::to_string(m);
                break;
              }
            }
            for (const auto& d : pool) {
              const QuaternaryCode dp = double_plotkin(a, b, c, d);
              if (dp.is_zero_code()) continue;
              const int bound =
                  std::min({4 * distance_or_infinite(a, cap), 2 * distance_or_infinite(b, cap),
                            2 * distance_or_infinite(c, cap), distance_or_infinite(d, cap),
                            kInfiniteDistance});
              if (min_lee_distance(dp, cap) < bound) {
                failure = "double-plotkin bound at m=" + std::to_string(m);
                break;
              }
            }
            if (!failure.empty()) break;
          }
        }
        if (!failure.empty()) break;
      }
    }
    report("construction-distances", failure.empty(), failure);
  }

  void check_construction_types() {
    std::string failure;
    for (int m = 1; m <= std::min(options_.max_m, 3) && failure.empty(); ++m) {
      const auto pool = family_pool(m);
      for (const auto& a : pool) {
        for (const auto& b : pool) {
          const QuaternaryCode pc = plotkin(a, b);
          if (pc.gamma() != a.gamma() + b.gamma() || pc.delta() != a.delta() + b.delta()) {
            failure = "plotkin type at m=" + std::to_string(m);
            break;
          }
          const QuaternaryCode qp = quaternary_plotkin(a, b);
          if (qp.gamma() != a.gamma() + b.gamma() || qp.delta() != a.delta() + b.delta()) {
            failure = "quaternary-plotkin type at m=" + std::to_string(m);
            break;
          }
          for (const auto& c : pool) {
            const QuaternaryCode bq = bq_plotkin(a, b, c);
            if (bq.gamma() != a.gamma() + c.gamma() ||
                bq.delta() != a.delta() + b.gamma() + 2 * b.delta() + c.delta()) {
              failure = "bq-plotkin type at m=" + std::to_string(m);
              break;
            }
            for (const auto& d : pool) {
              const QuaternaryCode dp = double_plotkin(a, b, c, d);
              if (dp.gamma() != a.gamma() + b.gamma() + c.gamma() + d.gamma() ||
                  dp.delta() != a.delta() + b.delta() + c.delta() + d.delta()) {
                failure = "double-plotkin type at m=" + std::to_string(m);
                break;
              }
            }
            if (!failure.empty()) break;
          }
          if (!failure.empty()) break;
        }
        if (!failure.empty()) break;
      }
    }
    report("construction-types", failure.empty(), failure);
  }

  void check_commutation() {
    if (options_.max_m < 2) {
      report("commutation", true, "skipped below m=2");
      return;
    }
    const QuaternaryCode a = rm_code({0, 2, 2});
    const QuaternaryCode b = rm_code({0, 1, 2});
    const QuaternaryCode c = rm_code({0, 0, 2});
    const QuaternaryCode d = rm_code({0, -1, 2});
    const QuaternaryCode left = plotkin(bq_plotkin(a, b, c), bq_plotkin(b, c, d));
    const QuaternaryCode right = bq_plotkin(plotkin(a, b), plotkin(b, c), plotkin(c, d));
    bool pass = left.type() == right.type();
    if (pass) pass = lee_weight_distribution(left) == lee_weight_distribution(right);
    report("commutation", pass, pass ? "" : "composition orders differ");
  }

  void check_kronecker_lemmas() {
    std::mt19937 rng(20240229);
    std::uniform_int_distribution<int> symbol(0, 3);
    std::string failure;
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
      for (int trial = 0; trial < 10'000 && failure.empty(); ++trial) {
        std::vector<std::uint8_t> u(n), v(n);
        for (auto& e : u) e = static_cast<std::uint8_t>(symbol(rng));
        for (auto& e : v) e = static_cast<std::uint8_t>(symbol(rng));
        const Z4Vector uu{u}, vv{v};
        const Z4Vector u1{std::vector<std::uint8_t>(u.begin(), u.begin() + n / 2)};
        const Z4Vector u2{std::vector<std::uint8_t>(u.begin() + n / 2, u.end())};
        const Z4Vector v1{std::vector<std::uint8_t>(v.begin(), v.begin() + n / 2)};
        const Z4Vector v2{std::vector<std::uint8_t>(v.begin() + n / 2, v.end())};
        const int lhs = kronecker_inner(uu, vv);
        const int rhs = (kronecker_inner(u1, v1) + 3 * kronecker_inner(u2, v2)) % 4;
        if (lhs != rhs) failure = "split lemma at N=" + std::to_string(n);
      }
    }
    for (std::size_t n = 1; n <= 1024 && failure.empty(); n *= 2) {
      const Z4Vector diag = kronecker_diagonal(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((diag[i] * diag[i]) % 4 != 1) failure = "diagonal not self-inverse at N=" + std::to_string(n);
    }
    report("kronecker-lemmas", failure.empty(), failure);
  }

  void check_pbq_subset_chain() {
    std::string failure;
    const int limit = std::min(options_.max_m, 4);
    for (int m = 1; m <= limit && failure.empty(); ++m) {
      for (int s = 0; s <= (m - 1) / 2 && failure.empty(); ++s) {
        for (int r = -1; r < m && failure.empty(); ++r) {
          const QuaternaryCode lo = rm_code({s, r, m});
          const QuaternaryCode hi = rm_code({s, r + 1, m});
          const auto as_code = [&](const GeneratorMatrix& g) { return QuaternaryCode(g); };
          if (!is_subcode(lo, hi)) failure = rm_name({s, r, m}) + " (i)";
          else if (!is_subcode(as_code(gen_hat(lo.generators())), as_code(gen_hat(hi.generators()))))
            failure = rm_name({s, r, m}) + " (ii)";
          else if (!is_subcode(as_code(gen_prime(lo.generators())), as_code(gen_prime(hi.generators()))))
            failure = rm_name({s, r, m}) + " (iii)";
          else if (!is_subcode(as_code(gen_prime(lo.generators())), hi))
            failure = rm_name({s, r, m}) + " (iv)";
        }
      }
    }
    report("pbq-subset-chain", failure.empty(), failure);
  }

  void check_canonical_form() {
    std::string failure;
    for_valid_indices(std::min(options_.max_m, 3), -1, [&](const RmIndex& idx) {
      if (!failure.empty()) return;
      const QuaternaryCode code = rm_code(idx);
      const GeneratorMatrix canon = code.canonical_generators();
      if (!(howell_form(canon) == canon)) {
        failure = rm_name(idx) + " idempotence";
        return;
      }
      // Brute-force span of the construction rows vs enumeration.
      const auto rows = code.generators().rows();
      std::vector<Z4Vector> brute;
      const std::size_t combos = std::size_t{1} << (2 * rows.size());
      for (std::size_t mask = 0; mask < combos; ++mask) {
        Z4Vector word(code.length());
        std::size_t bits = mask;
        for (const auto& row : rows) {
          word = word + static_cast<int>(bits & 3) * row;
          bits >>= 2;
        }
        brute.push_back(std::move(word));
      }
      std::sort(brute.begin(), brute.end());
      brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
      auto enumerated = enumerate_codewords(code);
      std::sort(enumerated.begin(), enumerated.end());
      if (brute != enumerated) failure = rm_name(idx) + " span";
    });
    report("canonical-form", failure.empty(), failure);
  }

  void check_closure() {
    std::mt19937 rng(777);
    std::string failure;
    std::vector<QuaternaryCode> pool;
    for (int m = 1; m <= std::min(options_.max_m, 4); ++m)
      for (int s = 0; s <= (m - 1) / 2; ++s)
        for (int r = 0; r <= m; ++r) pool.push_back(rm_code({s, r, m}));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int trial = 0; trial < 1000 && failure.empty(); ++trial) {
      const QuaternaryCode& code = pool[pick(rng)];
      const auto rows = code.canonical_generators().rows();
      Z4Vector u(code.length()), v(code.length());
      for (const auto& row : rows) {
        u = u + coeff(rng) * row;
        v = v + coeff(rng) * row;
      }
      if (!code.contains(u + v)) failure = "sum closure";
      for (int cfac = 0; cfac < 4 && failure.empty(); ++cfac)
        if (!code.contains(cfac * u)) failure = "scalar closure";
    }
    report("closure", failure.empty(), failure);
  }

  VerifyOptions options_;
  std::vector<PropertyResult> results_;
};

}  // namespace

std::vector<PropertyResult> run_family_verification(const VerifyOptions& options) {
  return Suite(options).run();
}

}  // namespace z4rm
