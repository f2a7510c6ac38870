#include "z4rm/constructions.hpp"

namespace z4rm {

namespace {

void require_equal_lengths(std::initializer_list<std::size_t> lengths) {
  auto it = lengths.begin();
  for (std::size_t n : lengths) {
    if (n != *it) {
      throw std::invalid_argument("construction inputs must have equal lengths");
    }
  }
}

Z4Vector blocks4(const Z4Vector& b0, const Z4Vector& b1, const Z4Vector& b2, const Z4Vector& b3) {
  return concat(concat(b0, b1), concat(b2, b3));
}

}  // namespace

QuaternaryCode plotkin(const QuaternaryCode& a, const QuaternaryCode& b) {
  require_equal_lengths({a.length(), b.length()});
  const std::size_t n = a.length();
  const Z4Vector zero(n);
  std::vector<Z4Vector> rows;
  rows.reserve(a.generators().row_count() + b.generators().row_count());
  for (const auto& g : a.generators().rows()) rows.push_back(concat(g, g));
  for (const auto& g : b.generators().rows()) rows.push_back(concat(zero, g));
  return QuaternaryCode(GeneratorMatrix(2 * n, std::move(rows)));
}

QuaternaryCode quaternary_plotkin(const QuaternaryCode& a, const QuaternaryCode& b) {
  require_equal_lengths({a.length(), b.length()});
  const std::size_t n = a.length();
  const Z4Vector zero(n);
  std::vector<Z4Vector> rows;
  rows.reserve(a.generators().row_count() + b.generators().row_count());
  for (const auto& g : a.generators().rows()) rows.push_back(blocks4(g, g, g, g));
  for (const auto& g : b.generators().rows()) rows.push_back(blocks4(zero, g, 2 * g, 3 * g));
  return QuaternaryCode(GeneratorMatrix(4 * n, std::move(rows)));
}

QuaternaryCode double_plotkin(const QuaternaryCode& a, const QuaternaryCode& b,
                              const QuaternaryCode& c, const QuaternaryCode& d) {
  require_equal_lengths({a.length(), b.length(), c.length(), d.length()});
  const std::size_t n = a.length();
  const Z4Vector zero(n);
  std::vector<Z4Vector> rows;
  for (const auto& g : a.generators().rows()) rows.push_back(blocks4(g, g, g, g));
  for (const auto& g : b.generators().rows()) rows.push_back(blocks4(zero, g, 2 * g, 3 * g));
  for (const auto& g : c.generators().rows()) rows.push_back(blocks4(zero, zero, g, g));
  for (const auto& g : d.generators().rows()) rows.push_back(blocks4(zero, zero, zero, g));
  return QuaternaryCode(GeneratorMatrix(4 * n, std::move(rows)));
}

GeneratorMatrix gen_prime(const GeneratorMatrix& g) {
  std::vector<Z4Vector> rows;
  rows.reserve(g.row_count());
  for (const auto& row : g.rows()) {
    if (!is_order_two_row(row)) {
      rows.push_back(row);
      continue;
    }
    std::vector<std::uint8_t> e(row.entries().begin(), row.entries().end());
    for (auto& x : e)
      if (x == 2) x = 1;
    rows.emplace_back(std::move(e));
  }
  return GeneratorMatrix(g.length(), std::move(rows));
}

GeneratorMatrix gen_hat(const GeneratorMatrix& g) {
  std::vector<Z4Vector> rows;
  for (const auto& row : g.rows())
    if (!is_order_two_row(row)) rows.push_back(row);
  return GeneratorMatrix(g.length(), std::move(rows));
}

QuaternaryCode bq_plotkin(const QuaternaryCode& a, const QuaternaryCode& b, const QuaternaryCode& c) {
  require_equal_lengths({a.length(), b.length(), c.length()});
  const std::size_t n = a.length();
  const Z4Vector zero(n);
  const GeneratorMatrix b_prime = gen_prime(b.generators());
  const GeneratorMatrix b_hat = gen_hat(b.generators());
  std::vector<Z4Vector> rows;
  for (const auto& g : a.generators().rows()) rows.push_back(blocks4(g, g, g, g));
  for (const auto& g : b_prime.rows()) rows.push_back(blocks4(zero, g, 2 * g, 3 * g));
  for (const auto& g : b_hat.rows()) rows.push_back(blocks4(zero, zero, g, g));
  for (const auto& g : c.generators().rows()) rows.push_back(blocks4(zero, zero, zero, g));
  return QuaternaryCode(GeneratorMatrix(4 * n, std::move(rows)));
}

}  // namespace z4rm
