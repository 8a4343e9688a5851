#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparsef2/kernels.hpp"

namespace sparsef2::detail {

// Visits every w-subset of columns whose smallest index is `first`, in
// lexicographic order, passing (chosen indices, XOR of the chosen columns).
class SubsetScan {
 public:
  SubsetScan(const kernels::ColumnPack& cols, std::size_t w)
      : cols_(cols), w_(w), words_(cols.words()), chosen_(w), acc_((w + 1) * cols.words(), 0) {}

  template <typename Visit>
  void from(std::size_t first, Visit&& visit) {
    if (w_ == 0) return;
    chosen_[0] = first;
    const auto col = cols_.column(first);
    for (std::size_t i = 0; i < words_; ++i) acc_[words_ + i] = col[i];
    dfs(1, first + 1, visit);
  }

 private:
  template <typename Visit>
  void dfs(std::size_t depth, std::size_t start, Visit& visit) {
    if (depth == w_) {
      visit(std::span<const std::size_t>(chosen_),
            std::span<const std::uint64_t>(acc_.data() + depth * words_, words_));
      return;
    }
    const std::size_t n = cols_.count();
    for (std::size_t c = start; c + (w_ - depth) <= n; ++c) {
      chosen_[depth] = c;
      const auto col = cols_.column(c);
      const std::uint64_t* in = acc_.data() + depth * words_;
      std::uint64_t* out = acc_.data() + (depth + 1) * words_;
      for (std::size_t i = 0; i < words_; ++i) out[i] = in[i] ^ col[i];
      dfs(depth + 1, c + 1, visit);
    }
  }

  const kernels::ColumnPack& cols_;
  std::size_t w_;
  std::size_t words_;
  std::vector<std::size_t> chosen_;
  std::vector<std::uint64_t> acc_;
};

inline std::size_t popcount(std::span<const std::uint64_t> v) {
  std::size_t c = 0;
  for (std::uint64_t x : v) c += static_cast<std::size_t>(__builtin_popcountll(x));
  return c;
}

}  // namespace sparsef2::detail
