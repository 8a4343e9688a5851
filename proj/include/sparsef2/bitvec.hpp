#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sparsef2 {

// Packed vector over F2. Bits past size() in the last word are always zero,
// so weight, equality and hashing never see padding.
class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t len, std::size_t index);
  static BitVec ones(std::size_t len);
  static BitVec from_support(std::size_t len, std::span<const std::size_t> support);

  static constexpr std::size_t word_count(std::size_t len) {
    return (len + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  void clear() noexcept;

  // Inner product over F2. Lengths must match.
  bool dot(const BitVec& other) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  // Sorted indices of the one-coordinates.
  std::vector<std::size_t> support() const;
  // Index of the lowest set coordinate, or size() if zero.
  std::size_t first_one() const noexcept;

  // Concatenation: this followed by tail.
  BitVec concat(const BitVec& tail) const;
  // Coordinates [offset, offset + count).
  BitVec slice(std::size_t offset, std::size_t count) const;

  std::string to_string() const;

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  // Packs the first min(size(), 64) coordinates into an integer, bit i = coordinate i.
  word_type low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const noexcept;

 private:
  std::size_t len_ = 0;
  std::vector<word_type> words_;
};

// Hamming weight.
inline std::size_t weight(const BitVec& v) { return v.weight(); }

// Order on equal-weight vectors used for all tie-breaking: compare sorted
// supports lexicographically, so {0, 5} precedes {1, 2}. For vectors of
// different weight the lighter one is smaller.
bool support_less(const BitVec& a, const BitVec& b);

}  // namespace sparsef2

template <>
struct std::hash<sparsef2::BitVec> {
  std::size_t operator()(const sparsef2::BitVec& v) const noexcept { return v.hash(); }
};
