#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsef2/common.hpp"

namespace sparsef2 {

// Undirected simple graph on vertices 1..n. Edges are stored as sorted
// pairs (u < v) in lexicographic order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Validates endpoints, rejects loops and duplicates.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  bool adjacent(std::size_t u, std::size_t v) const;
  // Sorted neighbours of v (1-based labels).
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v - 1); }
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  // Common degree if every vertex has it.
  std::optional<std::size_t> regular_degree() const;

  // Adds {u, v}; returns false if it already exists.
  bool add_edge(std::size_t u, std::size_t v);

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Exhaustive search over k-subsets in lexicographic order; returns the first
// clique found as sorted 1-based labels.
std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t k);
bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices);

// G(n, p), pairs visited in lexicographic order.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

struct PlantedClique {
  Graph graph;
  std::vector<std::size_t> witness;
};
// G(n, p) united with all edges of a random k-subset.
PlantedClique planted_clique(std::size_t n, std::size_t k, double p, std::uint64_t seed);

// Spectral certificate of a D-regular graph. lambda is the largest absolute
// adjacency eigenvalue on the complement of the all-ones eigenvector;
// lambda2 is the largest signed one there.
struct SpectralCert {
  std::size_t degree = 0;
  double lambda = 0.0;
  double lambda2 = 0.0;
  double tolerance = 0.0;  // residual bound of the power-iteration estimates
};

struct SpectralOptions {
  double tolerance = 1e-6;
  std::size_t max_iterations = 200000;
  std::uint64_t seed = 1;
};

SpectralCert spectral_certificate(const Graph& g, const SpectralOptions& opts = {});

struct RegularOptions {
  std::size_t max_attempts = 20000;  // pairing-model retries
  std::optional<double> lambda_bound;  // resample until cert.lambda <= bound
  std::size_t max_spectral_attempts = 50;
  SpectralOptions spectral;
};

struct RegularGraph {
  Graph graph;
  SpectralCert cert;
};

RegularGraph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed,
                            const RegularOptions& opts = {});

using Walk = std::vector<std::size_t>;

// All t-vertex walks (t - 1 steps) in lexicographic order; count is n * D^(t-1).
std::vector<Walk> enumerate_walks(const Graph& g, std::size_t t,
                                  std::uint64_t cap = kDefaultMemoryCap);
// Uniform start vertex, uniform neighbour per step.
std::vector<Walk> sample_walks(const Graph& g, std::size_t t, std::size_t count, std::uint64_t seed);

}  // namespace sparsef2
