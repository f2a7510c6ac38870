#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace z4rm {

/// Vector over the ring of integers mod 4. Immutable value type: all
/// arithmetic returns new vectors, so instances can be shared freely
/// (including across threads).
class Z4Vector {
 public:
  Z4Vector() = default;
  /// All-zeros vector of the given length.
  explicit Z4Vector(std::size_t length) : entries_(length, 0) {}
  /// Entries must lie in {0,1,2,3}.
  Z4Vector(std::initializer_list<int> entries);
  explicit Z4Vector(std::vector<std::uint8_t> entries);

  static Z4Vector all_twos(std::size_t length);
  static Z4Vector unit(std::size_t length, std::size_t position);

  std::size_t size() const { return entries_.size(); }
  std::uint8_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::uint8_t> entries() const { return entries_; }
  bool is_zero() const;

  friend bool operator==(const Z4Vector&, const Z4Vector&) = default;
  friend auto operator<=>(const Z4Vector&, const Z4Vector&) = default;

 private:
  std::vector<std::uint8_t> entries_;
};

/// Bit vector; Gray images of quaternary vectors live here.
class Z2Vector {
 public:
  Z2Vector() = default;
  explicit Z2Vector(std::size_t length) : bits_(length, 0) {}
  Z2Vector(std::initializer_list<int> bits);
  explicit Z2Vector(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  friend bool operator==(const Z2Vector&, const Z2Vector&) = default;
  friend auto operator<=>(const Z2Vector&, const Z2Vector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

Z4Vector operator+(const Z4Vector& u, const Z4Vector& v);
Z4Vector operator-(const Z4Vector& u, const Z4Vector& v);
Z4Vector operator-(const Z4Vector& v);
/// Componentwise scalar multiple; scalar must lie in {0,1,2,3}.
Z4Vector operator*(int scalar, const Z4Vector& v);
/// Componentwise product, used by the Gray-image linearity criterion.
Z4Vector componentwise_product(const Z4Vector& u, const Z4Vector& v);
/// Concatenation (u|v).
Z4Vector concat(const Z4Vector& u, const Z4Vector& v);

Z2Vector operator^(const Z2Vector& a, const Z2Vector& b);

/// Lee weight: per-symbol weights 0,1,2,1 for 0,1,2,3, summed.
int lee_weight(const Z4Vector& v);
/// Lee distance d_L(u,v) = w_L(u-v).
int lee_distance(const Z4Vector& u, const Z4Vector& v);

/// Gray map, coordinate-major: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0).
/// Coordinate i maps to output bits (2i, 2i+1).
Z2Vector gray_map(const Z4Vector& v);

int hamming_weight(const Z2Vector& b);

}  // namespace z4rm
