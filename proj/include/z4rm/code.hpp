#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "z4rm/z4.hpp"

namespace z4rm {

/// Default bound on the number of codewords an enumeration is willing to
/// visit. Callers may override per call.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

/// True when every entry of the row lies in {0,2}, i.e. the row generates a
/// subgroup of order two.
bool is_order_two_row(const Z4Vector& row);

/// Generator matrix of a quaternary linear code. Rows share a common length;
/// order-two rows are stored before order-four rows (stable partition applied
/// at construction, which preserves the span and the per-row content the
/// constructions depend on).
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(std::size_t length, std::vector<Z4Vector> rows = {});

  std::size_t length() const { return length_; }
  std::size_t row_count() const { return rows_.size(); }
  std::span<const Z4Vector> rows() const { return rows_; }
  std::size_t order_two_count() const { return order_two_count_; }
  std::span<const Z4Vector> order_two_rows() const;
  std::span<const Z4Vector> order_four_rows() const;

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Z4Vector> rows_;
  std::size_t order_two_count_ = 0;
};

/// Type (N; gamma, delta) of a quaternary linear code isomorphic to
/// Z2^gamma x Z4^delta.
struct CodeType {
  std::size_t length = 0;
  int gamma = 0;
  int delta = 0;

  friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// Codeword counts indexed by Lee weight 0..2N.
class LeeWeightDistribution {
 public:
  explicit LeeWeightDistribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t count(std::size_t weight) const { return counts_.at(weight); }
  std::size_t max_weight() const { return counts_.size() - 1; }
  std::uint64_t total() const;
  /// Smallest weight > 0 with a nonzero count; throws when none exists.
  int min_nonzero_weight() const;

  friend bool operator==(const LeeWeightDistribution&, const LeeWeightDistribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Thrown when an enumeration would exceed the configured cap; the message
/// names the cap that would be required.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quaternary linear code, canonicalized at construction. The Howell form
/// of the row span is the canonical representative: two codes are equal iff
/// their Howell forms are identical matrices. The as-constructed generator
/// matrix is retained because the BQ-Plotkin recursion is sensitive to the
/// particular rows, not just the span.
class QuaternaryCode {
 public:
  explicit QuaternaryCode(GeneratorMatrix generators);

  static QuaternaryCode zero(std::size_t length);
  static QuaternaryCode whole_space(std::size_t length);
  static QuaternaryCode from_rows(std::size_t length, std::vector<Z4Vector> rows);

  std::size_t length() const { return generators_.length(); }
  int gamma() const { return gamma_; }
  int delta() const { return delta_; }
  CodeType type() const { return CodeType{length(), gamma_, delta_}; }
  /// log2 of the codeword count, gamma + 2*delta.
  int codeword_count_log2() const { return gamma_ + 2 * delta_; }
  std::uint64_t codeword_count() const;

  /// Generator matrix as constructed (presentation preserved for recursion).
  const GeneratorMatrix& generators() const { return generators_; }
  /// Canonical minimal generator matrix: gamma + delta rows, order-two first.
  const GeneratorMatrix& canonical_generators() const { return canonical_; }
  /// Full Howell form of the span, echelon order. Unique per span.
  std::span<const Z4Vector> howell_rows() const { return howell_; }

  /// Membership, decided by reducing against the Howell form.
  bool contains(const Z4Vector& v) const;

  bool is_zero_code() const { return codeword_count_log2() == 0; }
  bool is_whole_space() const { return codeword_count_log2() == static_cast<int>(2 * length()); }
  /// True when the code consists of exactly the even-Lee-weight vectors.
  bool is_even_code() const;

  /// Rows and per-row coefficient radix used by codeword enumeration.
  /// Coefficient tuples run in lexicographic order, order-two generators
  /// first with coefficients {0,1}, order-four with {0,1,2,3}.
  struct EnumerationStep {
    Z4Vector row;
    int radix;  // 2 or 4
  };
  std::span<const EnumerationStep> enumeration_basis() const { return enumeration_; }

  friend bool operator==(const QuaternaryCode& a, const QuaternaryCode& b) {
    return a.length() == b.length() && a.howell_ == b.howell_;
  }

 private:
  GeneratorMatrix generators_;
  std::vector<Z4Vector> howell_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::uint8_t> pivot_vals_;
  GeneratorMatrix canonical_;
  std::vector<EnumerationStep> enumeration_;
  int gamma_ = 0;
  int delta_ = 0;
};

/// Canonical form of the row span: minimal generator matrix derived from the
/// Howell form, order-two rows first. Idempotent.
GeneratorMatrix howell_form(const GeneratorMatrix& mat);

/// Generators of {x : sum_i x_i * g_i = 0 mod 4 for every generator row g},
/// i.e. the kernel of the generator matrix under the standard inner product.
/// Computed by Howell-reducing the transpose augmented with an identity
/// block; 2-torsion pivots contribute order-two kernel generators.
std::vector<Z4Vector> kernel_generators(const QuaternaryCode& code);

CodeType code_type(const QuaternaryCode& code);

/// True iff every generator row of `a` is a member of `b`.
bool is_subcode(const QuaternaryCode& a, const QuaternaryCode& b);

namespace detail {

inline void add_row_mod4(std::vector<std::uint8_t>& word, const Z4Vector& row) {
  const std::uint8_t* r = row.entries().data();
  for (std::size_t i = 0; i < word.size(); ++i) word[i] = static_cast<std::uint8_t>((word[i] + r[i]) & 3);
}

void require_within_cap(const QuaternaryCode& code, std::uint64_t cap);

}  // namespace detail

/// Visits every codeword exactly once, in the lexicographic order of
/// enumeration coefficient tuples. The visited span aliases internal scratch
/// and must be copied if retained.
template <typename Fn>
void for_each_codeword(const QuaternaryCode& code, Fn&& fn) {
  const auto basis = code.enumeration_basis();
  std::vector<std::uint8_t> word(code.length(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == basis.size()) {
      fn(std::span<const std::uint8_t>(word));
      return;
    }
    const auto& step = basis[i];
    for (int c = 0; c < step.radix; ++c) {
      self(self, i + 1);
      detail::add_row_mod4(word, step.row);
    }
    // An order-four row has advanced by 4*row = 0; a radix-2 row by 2*row,
    // which is zero for order-two rows. Restore the remaining case exactly.
    if (step.radix == 2) {
      detail::add_row_mod4(word, step.row);
      detail::add_row_mod4(word, step.row);
    }
  };
  rec(rec, 0);
}

/// Materializes the codewords in enumeration order.
std::vector<Z4Vector> enumerate_codewords(const QuaternaryCode& code,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Exact minimum Lee distance. The whole space returns 1 and the even code 2
/// without enumeration; other codes are enumerated within the cap. The zero
/// code has no nonzero codeword and is rejected.
int min_lee_distance(const QuaternaryCode& code, std::uint64_t cap = kDefaultEnumerationCap);

LeeWeightDistribution lee_weight_distribution(const QuaternaryCode& code,
                                              std::uint64_t cap = kDefaultEnumerationCap);

// --- Q4CODE v1 text format -------------------------------------------------
//
//   Q4CODE v1
//   N=<int> GAMMA=<int> DELTA=<int>
//   <gamma+delta rows, each exactly N characters from {0,1,2,3}>
//
// Canonical form, order-two rows first, LF line endings, no trailing
// whitespace.

void write_q4code(std::ostream& os, const QuaternaryCode& code);
std::string to_q4code(const QuaternaryCode& code);
/// Parses and validates; the header type must match the canonicalized span.
QuaternaryCode read_q4code(std::istream& is);
QuaternaryCode read_q4code_file(const std::string& path);
void write_q4code_file(const std::string& path, const QuaternaryCode& code);

}  // namespace z4rm
