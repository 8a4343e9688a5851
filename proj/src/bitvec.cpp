#include "sparsef2/bitvec.hpp"

#include <algorithm>

#include "sparsef2/errors.hpp"

namespace sparsef2 {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw InputError("unit vector index out of range");
  BitVec v(len);
  v.set(index);
  return v;
}

BitVec BitVec::ones(std::size_t len) {
  BitVec v(len);
  std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
  if (const std::size_t tail = len % kWordBits; tail != 0) {
    v.words_.back() = (word_type{1} << tail) - 1;
  }
  return v;
}

BitVec BitVec::from_support(std::size_t len, std::span<const std::size_t> support) {
  BitVec v(len);
  for (std::size_t i : support) {
    if (i >= len) throw InputError("support index out of range");
    v.flip(i);
  }
  return v;
}

std::size_t BitVec::weight() const noexcept {
  std::size_t w = 0;
  for (word_type x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVec::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type x) { return x == 0; });
}

void BitVec::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

bool BitVec::dot(const BitVec& other) const {
  if (other.len_ != len_) throw InputError("dot: length mismatch");
  word_type acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.len_ != len_) throw InputError("xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.len_ != len_) throw InputError("and: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    word_type x = words_[w];
    while (x != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::size_t BitVec::first_one() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return len_;
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(len_ + tail.len_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  for (std::size_t i : tail.support()) out.set(len_ + i);
  return out;
}

BitVec BitVec::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > len_) throw InputError("slice out of range");
  BitVec out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (get(offset + i)) out.set(i);
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVec::hash() const noexcept {
  // splitmix-style mixing over the packed words.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ len_;
  for (word_type x : words_) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

bool support_less(const BitVec& a, const BitVec& b) {
  const std::size_t wa = a.weight();
  const std::size_t wb = b.weight();
  if (wa != wb) return wa < wb;
  const BitVec diff = a ^ b;
  const std::size_t p = diff.first_one();
  if (p == diff.size()) return false;
  return a.get(p);
}

}  // namespace sparsef2
