#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace permsum {

// Fixed-width vector of bits (b_0, ..., b_{w-1}) with b_0 the most
// significant component: value() == sum of bit(i) << (w-1-i). This is the
// convention used to address matrix rows: row k of a 2^w-dimensional
// matrix has bit vector equal to the binary notation of k.
class BitVector {
 public:
  BitVector() = default;

  BitVector(std::size_t width, std::uint64_t value) : width_(width), value_(value) {
    if (width > 63) throw std::invalid_argument("BitVector: width too large");
    if (width < 64 && value >> width)
      throw std::invalid_argument("BitVector: value does not fit in width");
  }

  static BitVector from_bits(const std::vector<int>& bits) {
    std::uint64_t v = 0;
    for (int b : bits) {
      if (b != 0 && b != 1) throw std::invalid_argument("BitVector: bit out of range");
      v = (v << 1) | static_cast<std::uint64_t>(b);
    }
    return BitVector(bits.size(), v);
  }

  std::size_t width() const { return width_; }
  std::uint64_t value() const { return value_; }

  // Component i; i == 0 is the most significant bit.
  int bit(std::size_t i) const {
    if (i >= width_) throw std::invalid_argument("BitVector: index out of range");
    return static_cast<int>((value_ >> (width_ - 1 - i)) & 1u);
  }

  std::vector<int> bits() const {
    std::vector<int> out(width_);
    for (std::size_t i = 0; i < width_; ++i) out[i] = bit(i);
    return out;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t value_ = 0;
};

// base^exp over unsigned integers; throws on overflow.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("ipow: overflow");
    r *= base;
  }
  return r;
}

// The w with p^w == n, or throws if n is not a power of p.
inline std::size_t exact_log(std::uint64_t n, unsigned p) {
  if (p < 2) throw std::invalid_argument("exact_log: base must be >= 2");
  if (n == 0) throw std::invalid_argument("exact_log: n must be positive");
  std::size_t w = 0;
  std::uint64_t v = n;
  while (v % p == 0) {
    v /= p;
    ++w;
  }
  if (v != 1) throw std::invalid_argument("exact_log: dimension is not a power of the base");
  return w;
}

}  // namespace permsum
