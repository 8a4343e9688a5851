#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/bitvec.hpp"
#include "sparsef2/common.hpp"

namespace sparsef2::kernels {

// Columns of a matrix packed contiguously, `words` 64-bit words each.
class ColumnPack {
 public:
  ColumnPack() = default;
  explicit ColumnPack(const BitMat& m);
  explicit ColumnPack(const std::vector<BitVec>& columns, std::size_t height);

  std::size_t count() const noexcept { return count_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t words() const noexcept { return words_; }
  std::span<const std::uint64_t> column(std::size_t c) const noexcept {
    return {data_.data() + c * words_, words_};
  }
  std::vector<std::uint64_t> pack(const BitVec& v) const;

 private:
  std::size_t count_ = 0;
  std::size_t height_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct CombinationResult {
  std::optional<std::vector<std::size_t>> support;  // sorted column indices
  std::uint64_t work = 0;                           // w-subsets examined
};

// Lexicographically first w-subset of columns whose XOR equals target, or
// none. `work` counts examined subsets exactly as the serial scan would, so
// it is identical under both execution policies.
CombinationResult find_combination(const ColumnPack& cols, std::span<const std::uint64_t> target,
                                   std::size_t w, Exec exec);

// Smallest w in [min_w, max_w] with a hit, searched in increasing w.
CombinationResult find_lightest_combination(const ColumnPack& cols, std::span<const std::uint64_t> target,
                                            std::size_t min_w, std::size_t max_w, Exec exec);

}  // namespace sparsef2::kernels
