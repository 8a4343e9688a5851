#pragma once

// Brute-force reference implementations used as test oracles. They work on
// plain integer arrays and share no code with the library beyond element access.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/bitvec.hpp"
#include "sparsef2/graph.hpp"

namespace oracle {

using Bits = std::vector<int>;
using Dense = std::vector<Bits>;  // row-major

inline Bits bits(const sparsef2::BitVec& v) {
  Bits out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i) ? 1 : 0;
  return out;
}

inline Dense dense(const sparsef2::BitMat& m) {
  Dense out(m.rows(), Bits(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  }
  return out;
}

inline Bits mul(const Dense& m, const Bits& x) {
  Bits out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    int s = 0;
    for (std::size_t c = 0; c < x.size(); ++c) s ^= m[r][c] & x[c];
    out[r] = s;
  }
  return out;
}

inline int weight(const Bits& x) {
  int w = 0;
  for (int b : x) w += b;
  return w;
}

inline Bits from_mask(std::uint64_t mask, std::size_t n) {
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>((mask >> i) & 1u);
  return out;
}

inline std::size_t rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

// All x in F2^cols (cols <= 24) with M x = b.
inline std::vector<Bits> all_solutions(const Dense& m, const Bits& b, std::size_t cols) {
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
    const Bits x = from_mask(mask, cols);
    if (mul(m, x) == b) out.push_back(x);
  }
  return out;
}

// Visits every subset of {0..n-1} of size w in lexicographic order.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t w, F&& f) {
  if (w > n) return false;
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct VectorSumAnswer {
  bool feasible = false;
  std::size_t weight = 0;
  std::vector<std::size_t> support;  // lexicographically least of minimal weight
};

inline VectorSumAnswer vectorsum(const Dense& m, const Bits& b, std::size_t cols, std::size_t k) {
  VectorSumAnswer ans;
  for (std::size_t w = 0; w <= std::min(k, cols); ++w) {
    const bool hit = for_each_subset(cols, w, [&](const std::vector<std::size_t>& s) {
      for (std::size_t r = 0; r < m.size(); ++r) {
        int acc = 0;
        for (std::size_t c : s) acc ^= m[r][c];
        if (acc != b[r]) return false;
      }
      ans.support = s;
      return true;
    });
    if (hit) {
      ans.feasible = true;
      ans.weight = w;
      return ans;
    }
  }
  return ans;
}

// Minimum weight of a nonzero kernel vector; nullopt if the kernel is trivial.
inline std::optional<std::size_t> min_kernel_weight(const Dense& m, std::size_t cols) {
  std::optional<std::size_t> best;
  const Bits zero(m.size(), 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cols); ++mask) {
    const Bits x = from_mask(mask, cols);
    if (mul(m, x) == zero) {
      const std::size_t w = static_cast<std::size_t>(weight(x));
      if (!best || w < *best) best = w;
    }
  }
  return best;
}

// Weights of G m over every nonzero message m, G given as length x dim.
inline std::vector<std::size_t> codeword_weights(const Dense& g, std::size_t dim) {
  std::vector<std::size_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dim); ++mask) {
    out.push_back(static_cast<std::size_t>(weight(mul(g, from_mask(mask, dim)))));
  }
  return out;
}

inline bool has_clique(const sparsef2::Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> adj(n + 1, std::vector<int>(n + 1, 0));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if (((mask >> u) & 1u) && ((mask >> v) & 1u) && !adj[u + 1][v + 1]) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline int dot(const Bits& a, const Bits& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= a[i] & b[i];
  return s;
}

// Agreement counts of every linear form on <= k of n variables (masks
// enumerated by value), with the value vector.
struct FormCount {
  std::uint64_t mask = 0;
  std::uint64_t agreed = 0;
};
inline std::vector<FormCount> parity_counts(const std::vector<Bits>& points, const Bits& values, std::size_t n,
                                            std::size_t k) {
  std::vector<FormCount> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    const Bits a = from_mask(mask, n);
    FormCount f{mask, 0};
    for (std::size_t i = 0; i < points.size(); ++i) f.agreed += dot(a, points[i]) == values[i];
    out.push_back(f);
  }
  return out;
}

// max over nonzero forms on <= k variables of |#zeros - #ones| / m.
inline double bias(const std::vector<Bits>& points, std::size_t n, std::size_t k) {
  const Bits zeros(points.size(), 0);
  double best = 0;
  for (const auto& f : parity_counts(points, zeros, n, k)) {
    if (f.mask == 0) continue;
    const double d = std::abs(2.0 * static_cast<double>(f.agreed) - static_cast<double>(points.size()));
    best = std::max(best, d / static_cast<double>(points.size()));
  }
  return best;
}

// Best agreement of any function of the variables in a subset of size min(k, n).
inline double junta(const std::vector<Bits>& points, const Bits& values, std::size_t n, std::size_t k) {
  const std::size_t s = std::min(k, n);
  std::uint64_t best = 0;
  for_each_subset(n, s, [&](const std::vector<std::size_t>& sub) {
    std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> counts;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<int> key;
      for (std::size_t v : sub) key.push_back(points[i][v]);
      auto& c = counts[key];
      (values[i] ? c.second : c.first) += 1;
    }
    std::uint64_t agreed = 0;
    for (const auto& [key, c] : counts) agreed += std::max(c.first, c.second);
    best = std::max(best, agreed);
    return false;
  });
  return points.empty() ? 0.0 : static_cast<double>(best) / static_cast<double>(points.size());
}

// max over nonzero polynomials P of degree <= d in the variables of a subset
// of size min(k, n) of Pr_points[P = 0] - Pr_uniform[P = 0].
inline double poly_advantage(const std::vector<Bits>& points, std::size_t n, std::size_t k, std::size_t d) {
  const std::size_t s = std::min(k, n);
  double best = -1.0;
  for_each_subset(n, s, [&](const std::vector<std::size_t>& sub) {
    std::vector<std::uint64_t> monomials;  // masks over the subset positions
    for (std::uint64_t mm = 0; mm < (std::uint64_t{1} << s); ++mm) {
      if (static_cast<std::size_t>(__builtin_popcountll(mm)) <= d) monomials.push_back(mm);
    }
    std::vector<std::uint64_t> pattern_count(std::size_t{1} << s, 0);
    for (const auto& p : points) {
      std::uint64_t pat = 0;
      for (std::size_t j = 0; j < s; ++j) pat |= static_cast<std::uint64_t>(p[sub[j]]) << j;
      ++pattern_count[pat];
    }
    for (std::uint64_t coef = 1; coef < (std::uint64_t{1} << monomials.size()); ++coef) {
      std::uint64_t zeros_points = 0;
      std::uint64_t zeros_uniform = 0;
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << s); ++a) {
        int v = 0;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
          if (((coef >> i) & 1u) && (a & monomials[i]) == monomials[i]) v ^= 1;
        }
        if (v == 0) {
          ++zeros_uniform;
          zeros_points += pattern_count[a];
        }
      }
      const double adv = static_cast<double>(zeros_points) / static_cast<double>(points.size()) -
                         static_cast<double>(zeros_uniform) / static_cast<double>(std::uint64_t{1} << s);
      best = std::max(best, adv);
    }
    return false;
  });
  return best;
}

}  // namespace oracle
