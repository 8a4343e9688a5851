#include "sparsef2/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <limits>

#include "sparsef2/errors.hpp"

namespace sparsef2::kernels {

ColumnPack::ColumnPack(const BitMat& m) : ColumnPack(m.columns(), m.rows()) {}

ColumnPack::ColumnPack(const std::vector<BitVec>& columns, std::size_t height)
    : count_(columns.size()), height_(height), words_(std::max<std::size_t>(1, BitVec::word_count(height))) {
  data_.assign(count_ * words_, 0);
  for (std::size_t c = 0; c < count_; ++c) {
    if (columns[c].size() != height) throw InputError("ColumnPack: ragged columns");
    const auto w = columns[c].words();
    std::copy(w.begin(), w.end(), data_.begin() + static_cast<std::ptrdiff_t>(c * words_));
  }
}

std::vector<std::uint64_t> ColumnPack::pack(const BitVec& v) const {
  if (v.size() != height_) throw InputError("ColumnPack::pack: length mismatch");
  std::vector<std::uint64_t> out(words_, 0);
  std::copy(v.words().begin(), v.words().end(), out.begin());
  return out;
}

namespace {

// Depth-first scan of the w-subsets whose smallest element is fixed.
class Scanner {
 public:
  Scanner(const ColumnPack& cols, std::span<const std::uint64_t> target, std::size_t w)
      : cols_(cols), target_(target), w_(w), words_(cols.words()),
        chosen_(w), acc_((w + 1) * cols.words(), 0) {}

  // Returns true on a hit; chosen() then holds the subset.
  bool scan_from(std::size_t first) {
    std::fill(acc_.begin(), acc_.begin() + static_cast<std::ptrdiff_t>(words_), 0);
    chosen_[0] = first;
    xor_into(1, 0, cols_.column(first));
    return dfs(1, first + 1);
  }

  std::uint64_t work() const noexcept { return work_; }
  void reset_work() noexcept { work_ = 0; }
  const std::vector<std::size_t>& chosen() const noexcept { return chosen_; }

 private:
  std::uint64_t* level(std::size_t d) { return acc_.data() + d * words_; }

  void xor_into(std::size_t dst, std::size_t src, std::span<const std::uint64_t> col) {
    std::uint64_t* out = level(dst);
    const std::uint64_t* in = level(src);
    for (std::size_t i = 0; i < words_; ++i) out[i] = in[i] ^ col[i];
  }

  bool dfs(std::size_t depth, std::size_t start) {
    const std::size_t n = cols_.count();
    if (depth == w_) {
      ++work_;
      return std::equal(target_.begin(), target_.end(), level(depth));
    }
    if (depth + 1 == w_) {
      // Last element: the column must equal acc ^ target.
      std::uint64_t* need = level(depth + 1);
      const std::uint64_t* acc = level(depth);
      for (std::size_t i = 0; i < words_; ++i) need[i] = acc[i] ^ target_[i];
      for (std::size_t c = start; c < n; ++c) {
        ++work_;
        const auto col = cols_.column(c);
        const bool hit = words_ == 1 ? col[0] == need[0]
                                     : std::memcmp(col.data(), need, words_ * sizeof(std::uint64_t)) == 0;
        if (hit) {
          chosen_[depth] = c;
          return true;
        }
      }
      return false;
    }
    for (std::size_t c = start; c + (w_ - depth) <= n; ++c) {
      chosen_[depth] = c;
      xor_into(depth + 1, depth, cols_.column(c));
      if (dfs(depth + 1, c + 1)) return true;
    }
    return false;
  }

  const ColumnPack& cols_;
  std::span<const std::uint64_t> target_;
  std::size_t w_;
  std::size_t words_;
  std::vector<std::size_t> chosen_;
  std::vector<std::uint64_t> acc_;
  std::uint64_t work_ = 0;
};

bool is_zero(std::span<const std::uint64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

CombinationResult find_serial(const ColumnPack& cols, std::span<const std::uint64_t> target, std::size_t w) {
  CombinationResult out;
  Scanner scanner(cols, target, w);
  for (std::size_t first = 0; first + w <= cols.count(); ++first) {
    if (scanner.scan_from(first)) {
      out.support = scanner.chosen();
      break;
    }
  }
  out.work = scanner.work();
  return out;
}

CombinationResult find_parallel(const ColumnPack& cols, std::span<const std::uint64_t> target, std::size_t w) {
  const std::size_t firsts = cols.count() + 1 - w;
  std::vector<std::uint64_t> work(firsts, 0);
  std::vector<std::vector<std::size_t>> hits(firsts);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

#pragma omp parallel
  {
    Scanner scanner(cols, target, w);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t first = 0; first < firsts; ++first) {
      if (first > best.load(std::memory_order_relaxed)) continue;
      scanner.reset_work();
      const bool hit = scanner.scan_from(first);
      work[first] = scanner.work();
      if (hit) {
        hits[first] = scanner.chosen();
        std::size_t cur = best.load();
        while (first < cur && !best.compare_exchange_weak(cur, first)) {
        }
      }
    }
  }

  CombinationResult out;
  const std::size_t winner = best.load();
  const std::size_t last = winner == std::numeric_limits<std::size_t>::max() ? firsts - 1 : winner;
  for (std::size_t i = 0; i <= last; ++i) out.work += work[i];
  if (winner != std::numeric_limits<std::size_t>::max()) out.support = hits[winner];
  return out;
}

}  // namespace

CombinationResult find_combination(const ColumnPack& cols, std::span<const std::uint64_t> target,
                                   std::size_t w, Exec exec) {
  if (target.size() != cols.words()) throw InputError("find_combination: target length mismatch");
  if (w == 0) {
    CombinationResult out;
    out.work = 1;
    if (is_zero(target)) out.support = std::vector<std::size_t>{};
    return out;
  }
  if (w > cols.count()) return {};
  return exec == Exec::kSerial ? find_serial(cols, target, w) : find_parallel(cols, target, w);
}

CombinationResult find_lightest_combination(const ColumnPack& cols, std::span<const std::uint64_t> target,
                                            std::size_t min_w, std::size_t max_w, Exec exec) {
  CombinationResult total;
  for (std::size_t w = min_w; w <= max_w && w <= cols.count(); ++w) {
    CombinationResult r = find_combination(cols, target, w, exec);
    total.work += r.work;
    if (r.support) {
      total.support = std::move(r.support);
      break;
    }
  }
  return total;
}

}  // namespace sparsef2::kernels
