#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"

namespace sparsef2 {

namespace {

// Primitive polynomials over F2, indexed by degree m (bit i = coefficient of x^i).
constexpr std::array<std::uint32_t, 21> kPrimitive = {
    0,       0,       0x7,     0xB,     0x13,    0x25,    0x43,    0x83,     0x11D,   0x211,  0x409,
    0x805,   0x1053,  0x201B,  0x4443,  0x8003,  0x1100B, 0x20009, 0x40027,  0x80027, 0x100009,
};

// Table of alpha^j, j = 0 .. 2^m - 2, for the field GF(2^m).
std::vector<std::uint32_t> antilog_table(unsigned m) {
  if (m < 2 || m >= kPrimitive.size()) throw InputError("GF(2^m): unsupported m=" + std::to_string(m));
  const std::uint32_t order = (1u << m) - 1;
  std::vector<std::uint32_t> table(order);
  std::vector<bool> seen(order + 1, false);
  std::uint32_t x = 1;
  for (std::uint32_t j = 0; j < order; ++j) {
    if (seen[x]) throw std::logic_error("GF(2^m): polynomial is not primitive");
    seen[x] = true;
    table[j] = x;
    x <<= 1;
    if (x & (1u << m)) x ^= kPrimitive[m];
  }
  return table;
}

unsigned field_degree(std::size_t n) {
  // Smallest m with 2^m - 1 >= n, at least 2.
  unsigned m = static_cast<unsigned>(std::bit_width(n));
  return m < 2 ? 2 : m;
}

}  // namespace

std::size_t bch_row_bound(std::size_t n, std::size_t delta) {
  const std::size_t blocks = delta / 2;  // ceil((delta - 1) / 2)
  return blocks * static_cast<std::size_t>(std::bit_width(n));
}

BitMat bch_parity_check(std::size_t n, std::size_t delta) {
  if (n < 2) throw InputError("bch_parity_check: n must be at least 2");
  if (delta < 2 || delta > n) {
    throw InputError("bch_parity_check: designed distance " + std::to_string(delta) + " outside [2," +
                     std::to_string(n) + "]");
  }
  const unsigned m = field_degree(n);
  const auto alpha = antilog_table(m);
  const std::size_t order = alpha.size();
  const std::size_t blocks = delta / 2;
  BitMat r(blocks * m, n);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t exponent = 2 * b + 1;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t value = alpha[(exponent * j) % order];
      for (unsigned bit = 0; bit < m; ++bit) {
        if ((value >> bit) & 1u) r.set(b * m + bit, j);
      }
    }
  }
  return r;
}

}  // namespace sparsef2
