#pragma once

#include <utility>
#include <vector>

#include "z4rm/code.hpp"

namespace z4rm {

/// Index (s, r, m) of a quaternary Reed-Muller family member.
/// Valid when m >= 1, -1 <= r <= m and 0 <= s <= (m-1)/2.
struct RmIndex {
  int s = 0;
  int r = 0;
  int m = 1;

  friend bool operator==(const RmIndex&, const RmIndex&) = default;
};

bool rm_index_valid(const RmIndex& idx);
/// Throws std::invalid_argument naming the violated bound.
void rm_index_validate(const RmIndex& idx);

/// Builds RM_s(r,m) recursively. The r = -1, 0, m-1, m members use their
/// fixed generator matrices; interior orders use the Plotkin construction,
/// except that for odd m and s = (m-1)/2 the BQ-Plotkin construction applies.
/// Results are memoized; the returned matrices keep the construction layout.
QuaternaryCode rm_code(const RmIndex& idx);

/// (gamma, delta) from the type recurrences alone, without building codes.
std::pair<int, int> rm_gamma_delta_predicted(const RmIndex& idx);

/// Grid of (gamma, delta) pairs for fixed m: entries[s][r] for r = 0..m.
struct RmTable {
  int m = 1;
  std::vector<std::vector<std::pair<int, int>>> entries;
};

RmTable rm_table(int m);

/// Sum of binomial coefficients C(m, 0..r): log2 of the codeword count.
int rm_dimension(int r, int m);

}  // namespace z4rm
