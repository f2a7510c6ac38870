#include "z4rm/family.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "z4rm/constructions.hpp"

namespace z4rm {

namespace {

std::size_t rm_length(int m) { return std::size_t{1} << (m - 1); }

bool uses_bq_dispatch(const RmIndex& idx) {
  return idx.m % 2 == 1 && idx.s == (idx.m - 1) / 2 && idx.m >= 3;
}

QuaternaryCode build_rm(const RmIndex& idx);

QuaternaryCode rm_cached(const RmIndex& idx) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, QuaternaryCode> cache;
  const auto key = std::make_tuple(idx.s, idx.r, idx.m);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QuaternaryCode code = build_rm(idx);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(key, std::move(code)).first->second;
}

QuaternaryCode build_rm(const RmIndex& idx) {
  const auto [s, r, m] = idx;
  const std::size_t n = rm_length(m);
  if (r == -1) return QuaternaryCode::zero(n);
  if (r == 0) return QuaternaryCode::from_rows(n, {Z4Vector::all_twos(n)});
  if (r == m) return QuaternaryCode::whole_space(n);
  if (uses_bq_dispatch(idx)) {
    if (r == m - 1) {
      return bq_plotkin(rm_cached({s - 1, m - 2, m - 2}), rm_cached({s - 1, m - 2, m - 2}),
                        rm_cached({s - 1, m - 3, m - 2}));
    }
    return bq_plotkin(rm_cached({s - 1, r, m - 2}), rm_cached({s - 1, r - 1, m - 2}),
                      rm_cached({s - 1, r - 2, m - 2}));
  }
  return plotkin(rm_cached({s, r, m - 1}), rm_cached({s, r - 1, m - 1}));
}

}  // namespace

bool rm_index_valid(const RmIndex& idx) {
  return idx.m >= 1 && idx.r >= -1 && idx.r <= idx.m && idx.s >= 0 && idx.s <= (idx.m - 1) / 2;
}

void rm_index_validate(const RmIndex& idx) {
  if (idx.m < 1) throw std::invalid_argument("rm index: m must satisfy m >= 1, got " + std::to_string(idx.m));
  if (idx.r < -1 || idx.r > idx.m) {
    throw std::invalid_argument("rm index: r must satisfy -1 <= r <= m, got r=" + std::to_string(idx.r) +
                                " with m=" + std::to_string(idx.m));
  }
  if (idx.s < 0 || idx.s > (idx.m - 1) / 2) {
    throw std::invalid_argument("rm index: s must satisfy 0 <= s <= (m-1)/2, got s=" + std::to_string(idx.s) +
                                " with m=" + std::to_string(idx.m));
  }
}

QuaternaryCode rm_code(const RmIndex& idx) {
  rm_index_validate(idx);
  return rm_cached(idx);
}

std::pair<int, int> rm_gamma_delta_predicted(const RmIndex& idx) {
  rm_index_validate(idx);
  const auto [s, r, m] = idx;
  if (r == -1) return {0, 0};
  if (r == 0) return {1, 0};
  if (r == m) return {0, 1 << (m - 1)};
  if (uses_bq_dispatch(idx)) {
    const auto combine = [](std::pair<int, int> a, std::pair<int, int> b, std::pair<int, int> c) {
      return std::pair<int, int>{a.first + c.first, a.second + b.first + 2 * b.second + c.second};
    };
    if (r == m - 1) {
      return combine(rm_gamma_delta_predicted({s - 1, m - 2, m - 2}),
                     rm_gamma_delta_predicted({s - 1, m - 2, m - 2}),
                     rm_gamma_delta_predicted({s - 1, m - 3, m - 2}));
    }
    return combine(rm_gamma_delta_predicted({s - 1, r, m - 2}),
                   rm_gamma_delta_predicted({s - 1, r - 1, m - 2}),
                   rm_gamma_delta_predicted({s - 1, r - 2, m - 2}));
  }
  const auto a = rm_gamma_delta_predicted({s, r, m - 1});
  const auto b = rm_gamma_delta_predicted({s, r - 1, m - 1});
  return {a.first + b.first, a.second + b.second};
}

RmTable rm_table(int m) {
  if (m < 1) throw std::invalid_argument("rm table: m must satisfy m >= 1");
  RmTable table;
  table.m = m;
  for (int s = 0; s <= (m - 1) / 2; ++s) {
    std::vector<std::pair<int, int>> row;
    row.reserve(static_cast<std::size_t>(m) + 1);
    for (int r = 0; r <= m; ++r) {
      const QuaternaryCode code = rm_code({s, r, m});
      row.emplace_back(code.gamma(), code.delta());
    }
    table.entries.push_back(std::move(row));
  }
  return table;
}

int rm_dimension(int r, int m) {
  if (r < 0) return 0;
  long long total = 0;
  long long binom = 1;
  for (int i = 0; i <= r && i <= m; ++i) {
    if (i > 0) binom = binom * (m - i + 1) / i;
    total += binom;
  }
  return static_cast<int>(total);
}

}  // namespace z4rm
