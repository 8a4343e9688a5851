#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/bitvec.hpp"

namespace sparsef2 {

// Lines of lineage text, written to files as '#' comment lines.
using Provenance = std::vector<std::string>;

// Decide whether some x with wt(x) <= k has M x = b.
struct VectorSumInstance {
  BitMat m;
  BitVec b;
  std::size_t k = 1;
  Provenance provenance;

  void validate() const;
  friend bool operator==(const VectorSumInstance& a, const VectorSumInstance& b) {
    return a.m == b.m && a.b == b.b && a.k == b.k;
  }
};

// Variable map of the homogenized system built from a VectorSum instance.
// Explicit variables: a0, x (n), copies x^1..x^{r-1}, then Z_ij(a, b) for
// (i, j) in [K]^2 row-major with (a, b) in the order 00, 01, 10, 11.
struct EvenSetLayout {
  std::size_t n = 0;            // source columns
  std::size_t k = 0;            // source sparsity
  std::size_t sketch_rows = 0;  // k'
  std::size_t big_k = 0;        // K
  std::size_t r = 0;
  double eps = 0.0;
  double c = 1.0;
  std::optional<std::size_t> sketch_distance;  // nullopt: R is injective
  BitMat sketch;  // R, k' x n
  BitMat mixing;  // C, K x k'
  BitMat product_check;  // Q over the K^2 flattening of Y

  std::size_t variable_count() const { return 4 * big_k * big_k + r * n + 1; }
  std::size_t threshold() const { return big_k * big_k + r * k + 1; }
  static constexpr std::size_t a0() { return 0; }
  std::size_t x(std::size_t j) const { return 1 + j; }
  // copy in [1, r - 1]
  std::size_t copy(std::size_t copy, std::size_t j) const { return 1 + copy * n + j; }
  std::size_t z(std::size_t i, std::size_t j, unsigned a, unsigned b) const {
    return 1 + r * n + (i * big_k + j) * 4 + 2 * a + b;
  }
};

// Decide whether some nonzero x with wt(x) <= k has M x = 0.
struct EvenSetInstance {
  BitMat m;
  std::size_t k = 1;
  std::optional<EvenSetLayout> layout;
  Provenance provenance;

  void validate() const;
  friend bool operator==(const EvenSetInstance& a, const EvenSetInstance& b) {
    return a.m == b.m && a.k == b.k;
  }
};

struct PointValueSet {
  std::size_t dim = 0;  // length of every point
  std::vector<BitVec> points;
  std::vector<unsigned char> values;  // 0 or 1
  std::optional<std::size_t> k;
  std::optional<double> eps;
  std::optional<double> delta;
  Provenance provenance;

  std::size_t size() const noexcept { return points.size(); }
  void validate() const;
  friend bool operator==(const PointValueSet& a, const PointValueSet& b) {
    return a.dim == b.dim && a.points == b.points && a.values == b.values && a.k == b.k && a.eps == b.eps &&
           a.delta == b.delta;
  }
};

}  // namespace sparsef2
