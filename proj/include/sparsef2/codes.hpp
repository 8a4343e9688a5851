#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/bitvec.hpp"
#include "sparsef2/common.hpp"

namespace sparsef2 {

struct DistanceCert {
  std::size_t distance = 0;
  std::string method;  // "exhaustive" or "sparse-search"
  BitVec witness;      // support-least codeword of minimum weight
};

struct BiasCert {
  double eps = 0.0;  // max |wt/len - 1/2| over nonzero codewords
  std::size_t min_weight = 0;
  std::size_t max_weight = 0;
  std::string method;
};

// Binary linear code of the given length and dimension. The generator is
// stored as an n x k matrix whose columns span the code.
struct LinearCode {
  std::size_t length = 0;
  std::size_t dim = 0;
  std::optional<BitMat> generator;
  std::optional<BitMat> parity_check;
  std::optional<DistanceCert> dist_cert;
  std::optional<BiasCert> bias_cert;

  static LinearCode from_generator(BitMat g);
  static LinearCode from_parity_check(BitMat h);

  // Member test through the parity check (derived from the generator if needed).
  bool contains(const BitVec& word) const;
  const BitMat& require_generator() const;
};

// Parity check with rows = blocks over GF(2^m) for the odd powers alpha^1,
// alpha^3, ..., m = ceil(log2(n+1)); R x != 0 whenever 0 < wt(x) < delta.
BitMat bch_parity_check(std::size_t n, std::size_t delta);
std::size_t bch_row_bound(std::size_t n, std::size_t delta);

// [2^kdim - 1, kdim] code, row r of the generator is the binary expansion of r + 1.
LinearCode simplex_generator(std::size_t kdim);

// Weights of G m over all nonzero messages m, enumerated in Gray-code order.
// zero_messages > 0 means g is rank deficient; min/max skip those words.
struct WeightRange {
  std::size_t min_weight = 0;
  std::size_t max_weight = 0;
  std::uint64_t codewords = 0;
  std::uint64_t zero_messages = 0;
};
WeightRange codeword_weight_range(const BitMat& g, Exec exec = Exec::kParallel);

struct BalancedOptions {
  double c_bal = 4.0;
  std::size_t max_dim = 20;
  std::size_t retries_per_length = 64;
  std::optional<std::size_t> length;  // fixed length; otherwise a doubling schedule
  bool simplex_fallback = false;      // accept the simplex code if it is eps-balanced
};

// Rejection-sampled random generator (t x dim) certified by full enumeration
// to have every nonzero codeword weight in [(1/2 - eps) t, (1/2 + eps) t].
LinearCode balanced_code(std::size_t dim, double eps, std::uint64_t seed, const BalancedOptions& opts = {});
std::size_t balanced_length_bound(std::size_t dim, double eps, double c_bal);

// Full-rank t x dim generator with the smallest measured bias among
// `attempts` seeded draws. Used where the length is dictated by the caller.
LinearCode best_balanced_of_length(std::size_t dim, std::size_t length, std::uint64_t seed,
                                   std::size_t attempts = 256);

// Basis of the dual code: rows h with h . c = 0 for every column c of g.
BitMat parity_check_from_generator(const BitMat& g);

// C (x) C acting on row-major flattened n x n matrices.
struct ProductCode {
  LinearCode base;
  BitMat parity_check;  // H of the base code
};
ProductCode make_product_code(const LinearCode& base);
// Q = [H (x) I ; I (x) H] on the n^2 flattening (index i * n + j for Y_ij).
BitMat tensor_parity_check(const LinearCode& base);
bool tensor_membership(const ProductCode& p, const BitMat& y);
// G X G^T.
BitMat product_codeword(const BitMat& g, const BitMat& x);

struct MinDistanceOptions {
  std::size_t max_exhaustive_dim = 24;
  std::optional<std::size_t> weight_cap;  // sparse search bound when dim is larger
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};
// Minimum nonzero codeword weight; attaches dist_cert to the code.
std::size_t min_distance(LinearCode& code, const MinDistanceOptions& opts = {}, Exec exec = Exec::kParallel);

struct DensityReport {
  bool passes = true;
  std::size_t distance = 0;
  std::size_t bound = 0;          // ceil(1.5 d^2)
  std::uint64_t checked = 0;      // symmetric zero-diagonal nonzero members seen
  std::optional<std::size_t> min_weight;
  std::optional<BitMat> witness;  // a minimal-weight member, first in message order
};
// Enumerates every message X, keeps Y = G X G^T with Y != 0, Y = Y^T,
// diag(Y) = 0, and checks wt(Y) >= ceil(1.5 d^2).
DensityReport product_density_check(LinearCode& code, std::uint64_t cap = std::uint64_t{1} << 20,
                                    Exec exec = Exec::kParallel);

struct BiasReport {
  double bias = 0.0;                 // max |E (-1)^l(z)|
  std::uint64_t numerator = 0;       // |#zeros - #ones| for the maximizer
  std::uint64_t points = 0;
  std::vector<std::size_t> support;  // maximizing form
};
// Max over nonzero linear forms on at most support_cap variables.
BiasReport distribution_bias(const std::vector<BitVec>& points, std::size_t support_cap,
                             std::uint64_t cap = kDefaultEnumerationCap, Exec exec = Exec::kParallel);

}  // namespace sparsef2
