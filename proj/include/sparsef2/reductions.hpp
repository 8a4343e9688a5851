#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/bitvec.hpp"
#include "sparsef2/codes.hpp"
#include "sparsef2/common.hpp"
#include "sparsef2/graph.hpp"
#include "sparsef2/instances.hpp"

namespace sparsef2 {

// ---- clique -> VectorSum ----

// Coordinates: k slots of (k - 1) subslots of N bits (slot-major, subslot
// minor), then C(k, 2) edge indicators in lexicographic (j1, j2) order, then
// k vertex indicators. Columns: vertex columns (vertex-major, slot-minor),
// then edge columns (edge in lexicographic order, slot pair lexicographic).
// Slots, subslots and vertices are 1-based in the accessors.
struct CliqueGadgetLayout {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t bits = 0;  // N = ceil(log2(n + 1))
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t rows() const { return k * (k - 1) * bits + k * (k - 1) / 2 + k; }
  std::size_t columns() const { return n * k + edges.size() * pair_count(); }
  std::size_t pair_count() const { return k * (k - 1) / 2; }
  std::size_t sparsity() const { return k + pair_count(); }

  // Pattern q_i: binary encoding of i.
  BitVec pattern(std::size_t vertex) const;
  std::size_t subslot(std::size_t slot, std::size_t sub) const { return ((slot - 1) * (k - 1) + (sub - 1)) * bits; }
  std::size_t pair_index(std::size_t j1, std::size_t j2) const;
  std::size_t edge_indicator(std::size_t j1, std::size_t j2) const {
    return k * (k - 1) * bits + pair_index(j1, j2);
  }
  std::size_t vertex_indicator(std::size_t slot) const { return k * (k - 1) * bits + pair_count() + slot - 1; }
  std::size_t vertex_column(std::size_t vertex, std::size_t slot) const { return (vertex - 1) * k + (slot - 1); }
  std::size_t edge_column(std::size_t edge_index, std::size_t j1, std::size_t j2) const {
    return n * k + edge_index * pair_count() + pair_index(j1, j2);
  }
};

std::pair<VectorSumInstance, CliqueGadgetLayout> clique_to_vectorsum(const Graph& g, std::size_t k);

// The k + C(k, 2) columns selecting a clique (any order of the vertices).
BitVec assemble_clique_solution(const CliqueGadgetLayout& layout, std::vector<std::size_t> clique);

// Vertices of the chosen vertex columns, sorted. Throws WitnessError unless
// the solution satisfies the instance within the sparsity bound and picks
// exactly one vertex column per slot.
std::vector<std::size_t> extract_clique(const CliqueGadgetLayout& layout, const VectorSumInstance& inst,
                                        const BitVec& solution);

// ---- VectorSum -> EvenSet ----

struct EvenSetConfig {
  double eps = 0.1;
  double c = 1.0;
  std::optional<std::size_t> sketch_rows;   // default ceil(20 k log2 n)
  std::optional<std::size_t> sketch_delta;  // default 18 k
  std::optional<std::size_t> big_k;         // default ceil(k' / (c eps^3))
  std::optional<std::size_t> r;             // default ceil(K^2 / 16)
  std::uint64_t seed = 1;
};

// Resolves defaults and builds R, C, Q. Throws ConfigError when the proof's
// inequality (K^2 + 1)/r + k + 1 < distance(R) fails.
EvenSetLayout plan_evenset_layout(std::size_t n, std::size_t k, const EvenSetConfig& cfg);
std::pair<EvenSetInstance, EvenSetLayout> vectorsum_to_evenset(const VectorSumInstance& inst,
                                                              const EvenSetConfig& cfg);
// a0 = 1, x and its copies, Z_ij(y_i, y_j) = 1 with y = C R x.
BitVec assemble_evenset_witness(const EvenSetLayout& layout, const VectorSumInstance& source, const BitVec& x);
// Weight of the Z block of an explicit assignment.
std::size_t evenset_z_weight(const EvenSetLayout& layout, const BitVec& assignment);

// ---- learning parities ----

// Rows of M as points, b as values.
PointValueSet vectorsum_to_pointvalues(const VectorSumInstance& inst);

// z_i = sum_j W_ij y_j, b_i = sum_j W_ij a_j for an eps-balanced W.
PointValueSet amplify_pointvalues(const PointValueSet& pv, double eps, std::uint64_t seed,
                                  const BalancedOptions& opts = {});
PointValueSet amplify_with_generator(const PointValueSet& pv, const BitMat& w);

// Amplification with eps = delta * 2^-k.
PointValueSet junta_hardness_instance(const PointValueSet& pv, double delta, std::size_t k, std::uint64_t seed,
                                      const BalancedOptions& opts = {});

struct ViolaOptions {
  std::uint64_t cap = kDefaultMemoryCap;
  std::optional<std::size_t> samples;  // sampling mode: this many uniform ordered tuples
  std::uint64_t seed = 1;
};
// Sums of ordered d-tuples of points; tuple (i_1, .., i_d) sits at index
// i_1 m^{d-1} + .. + i_d.
std::vector<BitVec> viola_shift(const std::vector<BitVec>& points, std::size_t d, const ViolaOptions& opts = {});

// Rows of W M for an eps-balanced W, then viola_shift of degree d.
std::vector<BitVec> evenset_to_fooling_points(const EvenSetInstance& e, double eps, std::size_t d,
                                              std::uint64_t seed, const ViolaOptions& viola = {},
                                              const BalancedOptions& opts = {});

// ---- minimum distance amplification ----

struct MdcParams {
  double zeta = 0.1;
  std::size_t kexp = 1;
  std::size_t t = 1;
  std::size_t degree = 2;  // expander degree D
  std::size_t d = 1;       // learning instance row combinations

  // t = ceil(1 / (2^K zeta^K)), D = ceil((4 / (5^K zeta^K))^10).
  static MdcParams paper_defaults(double zeta, std::size_t kexp, std::size_t d);
  void validate() const;
};

// (sqrt(1 - mu) + lambda / D)^t.
double walk_avoidance_bound(double mu, double lambda, std::size_t degree, std::size_t t);

// Kexp-fold Kronecker power.
BitMat mdc_tensor(const BitMat& a, std::size_t kexp, std::uint64_t cap = kDefaultMemoryCap);

// For each t-vertex walk and s in F2^t (bit j of s selects walk position j),
// the row sum_j s_j A_{i_j}. Rows of A are indexed by the 1-based vertices.
BitMat mdc_walk_amplify(const BitMat& a, const Graph& g, std::size_t t, std::uint64_t cap = kDefaultMemoryCap);
BitMat mdc_walk_rows(const BitMat& a, const std::vector<Walk>& walks, std::uint64_t cap = kDefaultMemoryCap);

// Each d-subset of rows (lexicographic) summing to r gives point (r_2..r_n), value r_1.
PointValueSet mdc_to_learning(const BitMat& b, std::size_t d, std::uint64_t cap = kDefaultMemoryCap);

}  // namespace sparsef2
