#include "z4rm/z4.hpp"

#include <stdexcept>
#include <string>

namespace z4rm {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": incompatible operand lengths " +
                                std::to_string(a) + " and " + std::to_string(b));
  }
}

constexpr int kLeeWeightOfSymbol[4] = {0, 1, 2, 1};

}  // namespace

Z4Vector::Z4Vector(std::initializer_list<int> entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e < 0 || e > 3) throw std::invalid_argument("Z4Vector entry out of range: " + std::to_string(e));
    entries_.push_back(static_cast<std::uint8_t>(e));
  }
}

Z4Vector::Z4Vector(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
  for (std::uint8_t e : entries_) {
    if (e > 3) throw std::invalid_argument("Z4Vector entry out of range: " + std::to_string(int(e)));
  }
}

Z4Vector Z4Vector::all_twos(std::size_t length) {
  return Z4Vector(std::vector<std::uint8_t>(length, 2));
}

Z4Vector Z4Vector::unit(std::size_t length, std::size_t position) {
  std::vector<std::uint8_t> e(length, 0);
  e.at(position) = 1;
  return Z4Vector(std::move(e));
}

bool Z4Vector::is_zero() const {
  for (std::uint8_t e : entries_)
    if (e != 0) return false;
  return true;
}

Z2Vector::Z2Vector(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("Z2Vector bit out of range: " + std::to_string(b));
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

Z2Vector::Z2Vector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("Z2Vector bit out of range: " + std::to_string(int(b)));
  }
}

Z4Vector operator+(const Z4Vector& u, const Z4Vector& v) {
  require_same_length(u.size(), v.size(), "vector addition");
  std::vector<std::uint8_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = static_cast<std::uint8_t>((u[i] + v[i]) & 3);
  return Z4Vector(std::move(out));
}

Z4Vector operator-(const Z4Vector& u, const Z4Vector& v) {
  require_same_length(u.size(), v.size(), "vector subtraction");
  std::vector<std::uint8_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = static_cast<std::uint8_t>((u[i] + 4 - v[i]) & 3);
  return Z4Vector(std::move(out));
}

Z4Vector operator-(const Z4Vector& v) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>((4 - v[i]) & 3);
  return Z4Vector(std::move(out));
}

Z4Vector operator*(int scalar, const Z4Vector& v) {
  if (scalar < 0 || scalar > 3) {
    throw std::invalid_argument("scalar out of range: " + std::to_string(scalar));
  }
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>((scalar * v[i]) & 3);
  return Z4Vector(std::move(out));
}

Z4Vector componentwise_product(const Z4Vector& u, const Z4Vector& v) {
  require_same_length(u.size(), v.size(), "componentwise product");
  std::vector<std::uint8_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = static_cast<std::uint8_t>((u[i] * v[i]) & 3);
  return Z4Vector(std::move(out));
}

Z4Vector concat(const Z4Vector& u, const Z4Vector& v) {
  std::vector<std::uint8_t> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.entries().begin(), u.entries().end());
  out.insert(out.end(), v.entries().begin(), v.entries().end());
  return Z4Vector(std::move(out));
}

Z2Vector operator^(const Z2Vector& a, const Z2Vector& b) {
  require_same_length(a.size(), b.size(), "xor");
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
  return Z2Vector(std::move(out));
}

int lee_weight(const Z4Vector& v) {
  int w = 0;
  for (std::uint8_t e : v.entries()) w += kLeeWeightOfSymbol[e];
  return w;
}

int lee_distance(const Z4Vector& u, const Z4Vector& v) { return lee_weight(u - v); }

Z2Vector gray_map(const Z4Vector& v) {
  // phi: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0)
  static constexpr std::uint8_t kFirst[4] = {0, 0, 1, 1};
  static constexpr std::uint8_t kSecond[4] = {0, 1, 1, 0};
  std::vector<std::uint8_t> out(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[2 * i] = kFirst[v[i]];
    out[2 * i + 1] = kSecond[v[i]];
  }
  return Z2Vector(std::move(out));
}

int hamming_weight(const Z2Vector& b) {
  int w = 0;
  for (std::uint8_t bit : b.bits()) w += bit;
  return w;
}

}  // namespace z4rm
