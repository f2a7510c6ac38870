#include "z4rm/code.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace z4rm {

namespace {

using Row = std::vector<std::uint8_t>;

Row scaled(const Row& r, int c) {
  Row out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<std::uint8_t>((c * r[i]) & 3);
  return out;
}

void subtract_multiple(Row& target, const Row& src, int c) {
  for (std::size_t i = 0; i < target.size(); ++i)
    target[i] = static_cast<std::uint8_t>((target[i] + 4 * c - c * src[i]) & 3);
}

bool row_is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint8_t e) { return e == 0; });
}

struct HowellResult {
  std::vector<Row> rows;             // echelon order
  std::vector<std::size_t> pivot_cols;
  std::vector<std::uint8_t> pivot_vals;  // 1 or 2
};

// Howell form over Z4: echelon with pivots normalized to 1 or 2, entries
// above a unit pivot cleared, entries above a 2-pivot reduced mod 2, and the
// span saturated so that every span element with leading position >= j lies
// in the span of the rows with leading position >= j. Unique per row span.
HowellResult howell_reduce(std::size_t length, std::vector<Row> pending) {
  HowellResult out;
  pending.erase(std::remove_if(pending.begin(), pending.end(), row_is_zero), pending.end());

  for (std::size_t col = 0; col < length && !pending.empty(); ++col) {
    // Prefer a unit pivot; fall back to a 2-pivot.
    std::size_t idx = pending.size();
    bool unit = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i][col] & 1) {
        idx = i;
        unit = true;
        break;
      }
    }
    if (!unit) {
      for (std::size_t i = 0; i < pending.size(); ++i) {
        if (pending[i][col] == 2) {
          idx = i;
          break;
        }
      }
    }
    if (idx == pending.size()) continue;

    Row pivot = std::move(pending[idx]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(idx));
    if (pivot[col] == 3) pivot = scaled(pivot, 3);

    for (auto& q : pending) {
      if (q[col] == 0) continue;
      if (unit) {
        subtract_multiple(q, pivot, q[col]);
      } else {
        // Only even entries remain at this column when the pivot is 2.
        subtract_multiple(q, pivot, 1);
      }
    }
    if (!unit) {
      Row twice = scaled(pivot, 2);
      if (!row_is_zero(twice)) pending.push_back(std::move(twice));
    }
    pending.erase(std::remove_if(pending.begin(), pending.end(), row_is_zero), pending.end());

    out.pivot_cols.push_back(col);
    out.pivot_vals.push_back(unit ? 1 : 2);
    out.rows.push_back(std::move(pivot));
  }

  // Normalize entries above each pivot, left to right.
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const std::size_t col = out.pivot_cols[i];
    for (std::size_t k = 0; k < i; ++k) {
      const std::uint8_t e = out.rows[k][col];
      if (out.pivot_vals[i] == 1) {
        if (e) subtract_multiple(out.rows[k], out.rows[i], e);
      } else {
        if (e >= 2) subtract_multiple(out.rows[k], out.rows[i], 1);
      }
    }
  }
  return out;
}

// GF(2) rank of the rows reduced mod 2; gives delta.
int mod2_rank(const std::vector<Row>& rows, std::size_t length) {
  const std::size_t words = (length + 63) / 64;
  const std::size_t npos = static_cast<std::size_t>(-1);
  auto lowest_bit = [&](const std::vector<std::uint64_t>& v) -> std::size_t {
    for (std::size_t w = 0; w < v.size(); ++w)
      if (v[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
    return npos;
  };
  // XOR basis keyed by pivot bit (the lowest set bit of each basis vector).
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> v(words, 0);
    for (std::size_t i = 0; i < length; ++i)
      if (r[i] & 1) v[i / 64] |= std::uint64_t{1} << (i % 64);
    for (;;) {
      const std::size_t pivot = lowest_bit(v);
      if (pivot == npos) break;
      auto it = std::find_if(basis.begin(), basis.end(),
                             [&](const auto& b) { return b.first == pivot; });
      if (it == basis.end()) {
        basis.emplace_back(pivot, std::move(v));
        break;
      }
      for (std::size_t w = 0; w < words; ++w) v[w] ^= it->second[w];
    }
  }
  return static_cast<int>(basis.size());
}

bool reduces_to_zero(const HowellResult& h, Row v) {
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const std::uint8_t e = v[h.pivot_cols[i]];
    if (e == 0) continue;
    if (h.pivot_vals[i] == 1) {
      subtract_multiple(v, h.rows[i], e);
    } else {
      if (e & 1) return false;
      subtract_multiple(v, h.rows[i], 1);
    }
  }
  return row_is_zero(v);
}

std::vector<Row> to_raw(std::span<const Z4Vector> rows) {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.entries().begin(), r.entries().end());
  return out;
}

std::vector<Z4Vector> to_vectors(const std::vector<Row>& rows) {
  std::vector<Z4Vector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(Z4Vector(r));
  return out;
}

// Drops rows that are redundant as group generators, scanning bottom-up.
// Leaves exactly gamma + delta rows (an irredundant generating set of the
// span, which is a finite abelian 2-group).
std::vector<Row> minimal_generators(const HowellResult& h, std::size_t length, int gamma, int delta) {
  std::vector<Row> kept = h.rows;
  const std::size_t target = static_cast<std::size_t>(gamma + delta);
  if (kept.size() <= target) return kept;
  for (std::size_t i = kept.size(); i-- > 0 && kept.size() > target;) {
    std::vector<Row> others;
    others.reserve(kept.size() - 1);
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (k != i) others.push_back(kept[k]);
    HowellResult hr = howell_reduce(length, others);
    if (reduces_to_zero(hr, kept[i])) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return kept;
}

}  // namespace

bool is_order_two_row(const Z4Vector& row) {
  for (std::uint8_t e : row.entries())
    if (e & 1) return false;
  return true;
}

GeneratorMatrix::GeneratorMatrix(std::size_t length, std::vector<Z4Vector> rows) : length_(length) {
  for (const auto& r : rows) {
    if (r.size() != length) {
      throw std::invalid_argument("generator row length " + std::to_string(r.size()) +
                                  " does not match code length " + std::to_string(length));
    }
  }
  const auto boundary =
      std::stable_partition(rows.begin(), rows.end(), [](const Z4Vector& r) { return is_order_two_row(r); });
  order_two_count_ = static_cast<std::size_t>(boundary - rows.begin());
  rows_ = std::move(rows);
}

std::span<const Z4Vector> GeneratorMatrix::order_two_rows() const {
  return std::span<const Z4Vector>(rows_).first(order_two_count_);
}

std::span<const Z4Vector> GeneratorMatrix::order_four_rows() const {
  return std::span<const Z4Vector>(rows_).subspan(order_two_count_);
}

std::uint64_t LeeWeightDistribution::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts_) t += c;
  return t;
}

int LeeWeightDistribution::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts_.size(); ++w)
    if (counts_[w] != 0) return static_cast<int>(w);
  throw std::invalid_argument("distribution has no nonzero-weight codeword");
}

QuaternaryCode::QuaternaryCode(GeneratorMatrix generators)
    : generators_(std::move(generators)), canonical_(generators_.length()) {
  const std::size_t n = generators_.length();
  HowellResult h = howell_reduce(n, to_raw(generators_.rows()));

  int k_total = 0;
  for (std::uint8_t p : h.pivot_vals) k_total += (p == 1) ? 2 : 1;
  delta_ = mod2_rank(h.rows, n);
  gamma_ = k_total - 2 * delta_;

  std::vector<Row> minimal = minimal_generators(h, n, gamma_, delta_);
  canonical_ = GeneratorMatrix(n, to_vectors(minimal));

  howell_ = to_vectors(h.rows);
  pivot_cols_ = std::move(h.pivot_cols);
  pivot_vals_ = std::move(h.pivot_vals);

  // Enumeration basis: Howell rows in canonical layout (2-pivot rows first,
  // preserving echelon order within each group) with pivot-determined radix.
  for (std::size_t i = 0; i < howell_.size(); ++i)
    if (pivot_vals_[i] == 2) enumeration_.push_back({howell_[i], 2});
  for (std::size_t i = 0; i < howell_.size(); ++i)
    if (pivot_vals_[i] == 1) enumeration_.push_back({howell_[i], 4});
}

QuaternaryCode QuaternaryCode::zero(std::size_t length) {
  return QuaternaryCode(GeneratorMatrix(length));
}

QuaternaryCode QuaternaryCode::whole_space(std::size_t length) {
  std::vector<Z4Vector> rows;
  rows.reserve(length);
  for (std::size_t i = 0; i < length; ++i) rows.push_back(Z4Vector::unit(length, i));
  return QuaternaryCode(GeneratorMatrix(length, std::move(rows)));
}

QuaternaryCode QuaternaryCode::from_rows(std::size_t length, std::vector<Z4Vector> rows) {
  return QuaternaryCode(GeneratorMatrix(length, std::move(rows)));
}

std::uint64_t QuaternaryCode::codeword_count() const {
  const int k = codeword_count_log2();
  if (k > 63) throw std::overflow_error("codeword count 2^" + std::to_string(k) + " exceeds 2^63");
  return std::uint64_t{1} << k;
}

bool QuaternaryCode::contains(const Z4Vector& v) const {
  if (v.size() != length()) {
    throw std::invalid_argument("membership test: vector length " + std::to_string(v.size()) +
                                " does not match code length " + std::to_string(length()));
  }
  Row residual(v.entries().begin(), v.entries().end());
  for (std::size_t i = 0; i < howell_.size(); ++i) {
    const std::uint8_t e = residual[pivot_cols_[i]];
    if (e == 0) continue;
    const Row h(howell_[i].entries().begin(), howell_[i].entries().end());
    if (pivot_vals_[i] == 1) {
      subtract_multiple(residual, h, e);
    } else {
      if (e & 1) return false;
      subtract_multiple(residual, h, 1);
    }
  }
  return row_is_zero(residual);
}

bool QuaternaryCode::is_even_code() const {
  if (codeword_count_log2() != static_cast<int>(2 * length()) - 1) return false;
  for (const auto& r : canonical_.rows())
    if (lee_weight(r) % 2 != 0) return false;
  // Lee-weight parity is additive, so all codewords are even; a subgroup of
  // size 4^N / 2 inside the even-weight subgroup must equal it.
  return true;
}

GeneratorMatrix howell_form(const GeneratorMatrix& mat) {
  return QuaternaryCode(mat).canonical_generators();
}

CodeType code_type(const QuaternaryCode& code) { return code.type(); }

std::vector<Z4Vector> kernel_generators(const QuaternaryCode& code) {
  const std::size_t n = code.length();
  const auto howell = code.howell_rows();
  const std::size_t k = howell.size();
  // Rows of [H^t | I_N]; the row span is {(yH^t | y)}. Howell rows whose
  // H^t-part vanishes carry exactly the kernel in their identity part.
  std::vector<Row> augmented(n, Row(k + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) augmented[i][j] = howell[j][i];
    augmented[i][k + i] = 1;
  }
  HowellResult h = howell_reduce(k + n, std::move(augmented));
  std::vector<Z4Vector> kernel;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.pivot_cols[i] < k) continue;
    kernel.emplace_back(Row(h.rows[i].begin() + static_cast<std::ptrdiff_t>(k), h.rows[i].end()));
  }
  return kernel;
}

bool is_subcode(const QuaternaryCode& a, const QuaternaryCode& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("subcode test: lengths " + std::to_string(a.length()) + " and " +
                                std::to_string(b.length()) + " differ");
  }
  for (const auto& row : a.canonical_generators().rows())
    if (!b.contains(row)) return false;
  return true;
}

namespace detail {

void require_within_cap(const QuaternaryCode& code, std::uint64_t cap) {
  const int k = code.codeword_count_log2();
  if (k > 63 || (std::uint64_t{1} << k) > cap) {
    throw EnumerationCapError("enumeration of 2^" + std::to_string(k) +
                              " codewords exceeds cap " + std::to_string(cap) +
                              "; a cap of at least 2^" + std::to_string(k) + " is required");
  }
}

}  // namespace detail

std::vector<Z4Vector> enumerate_codewords(const QuaternaryCode& code, std::uint64_t cap) {
  detail::require_within_cap(code, cap);
  std::vector<Z4Vector> out;
  out.reserve(static_cast<std::size_t>(code.codeword_count()));
  for_each_codeword(code, [&](std::span<const std::uint8_t> w) {
    out.emplace_back(std::vector<std::uint8_t>(w.begin(), w.end()));
  });
  return out;
}

int min_lee_distance(const QuaternaryCode& code, std::uint64_t cap) {
  if (code.is_zero_code()) {
    throw std::invalid_argument("minimum distance is undefined for the zero code");
  }
  if (code.is_whole_space()) return 1;
  if (code.is_even_code()) return 2;
  detail::require_within_cap(code, cap);
  static constexpr int kLee[4] = {0, 1, 2, 1};
  int best = std::numeric_limits<int>::max();
  for_each_codeword(code, [&](std::span<const std::uint8_t> w) {
    int wt = 0;
    for (std::uint8_t e : w) wt += kLee[e];
    if (wt != 0 && wt < best) best = wt;
  });
  return best;
}

LeeWeightDistribution lee_weight_distribution(const QuaternaryCode& code, std::uint64_t cap) {
  detail::require_within_cap(code, cap);
  static constexpr int kLee[4] = {0, 1, 2, 1};
  std::vector<std::uint64_t> counts(2 * code.length() + 1, 0);
  for_each_codeword(code, [&](std::span<const std::uint8_t> w) {
    int wt = 0;
    for (std::uint8_t e : w) wt += kLee[e];
    ++counts[static_cast<std::size_t>(wt)];
  });
  return LeeWeightDistribution(std::move(counts));
}

}  // namespace z4rm
