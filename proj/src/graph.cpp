#include "sparsef2/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sparsef2/errors.hpp"

namespace sparsef2 {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has an endpoint outside [1," + std::to_string(n) + "]");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (!add_edge(u, v)) {
      throw ValidationError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u) g.add_edge(u, u % n + 1);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 1; u < n; ++u) g.add_edge(u, u + 1);
  return g;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u < 1 || u > adj_.size() || v < 1 || v > adj_.size()) return false;
  const auto& nb = adj_[u - 1];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adj_.empty()) return 0;
  const std::size_t d = adj_.front().size();
  for (const auto& nb : adj_) {
    if (nb.size() != d) return std::nullopt;
  }
  return d;
}

bool Graph::add_edge(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  if (adjacent(u, v)) return false;
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[u - 1], v);
  insert_sorted(adj_[v - 1], u);
  const std::pair<std::size_t, std::size_t> e{u, v};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  return true;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > n) {
    throw InputError("find_clique: k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  }
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!g.adjacent(c[i] + 1, c[j] + 1)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<std::size_t> out(k);
      for (std::size_t i = 0; i < k; ++i) out[i] = c[i] + 1;
      return out;
    }
  } while (next_combination(c, n));
  return std::nullopt;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph: p must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (bernoulli(rng, p)) g.add_edge(u, v);
    }
  }
  return g;
}

PlantedClique planted_clique(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  if (k > n) throw InputError("planted_clique: k exceeds n");
  Graph g = random_graph(n, p, seed);
  Rng rng(seed ^ 0x5bd1e995ULL);
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i + 1;
  shuffle(labels, rng);
  std::vector<std::size_t> witness(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(witness.begin(), witness.end());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) g.add_edge(witness[i], witness[j]);
  }
  return {std::move(g), std::move(witness)};
}

namespace {

// Steger-Wormald style pairing: draw random stub pairs, skipping loops and
// repeated edges, restarting when stuck.
std::optional<Graph> try_pairing(std::size_t n, std::size_t degree, Rng& rng) {
  std::vector<std::size_t> stubs;
  stubs.reserve(n * degree);
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t i = 0; i < degree; ++i) stubs.push_back(v);
  }
  Graph g(n);
  while (!stubs.empty()) {
    bool placed = false;
    const std::size_t budget = 50 * stubs.size() + 100;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
      const std::size_t i = uniform_below(rng, stubs.size());
      const std::size_t j = uniform_below(rng, stubs.size());
      const std::size_t u = stubs[i];
      const std::size_t v = stubs[j];
      if (i == j || u == v || g.adjacent(u, v)) continue;
      g.add_edge(u, v);
      const std::size_t hi = std::max(i, j);
      const std::size_t lo = std::min(i, j);
      stubs[hi] = stubs.back();
      stubs.pop_back();
      stubs[lo] = stubs.back();
      stubs.pop_back();
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n);
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph regular_graph_once(std::size_t n, std::size_t degree, Rng& rng, std::size_t max_attempts) {
  if (degree == n - 1) return Graph::complete(n);
  if (degree == 0) return Graph(n);
  if (2 * degree > n - 1) {
    return complement(regular_graph_once(n, n - 1 - degree, rng, max_attempts));
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    if (auto g = try_pairing(n, degree, rng)) return std::move(*g);
  }
  throw GenerationError("random_regular: pairing model exceeded " + std::to_string(max_attempts) + " attempts");
}

}  // namespace

RegularGraph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed, const RegularOptions& opts) {
  if (degree >= n) throw InputError("random_regular: degree must be below n");
  if ((n * degree) % 2 != 0) throw InputError("random_regular: n * D must be even");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, opts.max_spectral_attempts); ++attempt) {
    Graph g = regular_graph_once(n, degree, rng, opts.max_attempts);
    SpectralOptions spectral = opts.spectral;
    spectral.seed = seed + attempt;
    SpectralCert cert = spectral_certificate(g, spectral);
    if (!opts.lambda_bound || cert.lambda <= *opts.lambda_bound) return {std::move(g), cert};
  }
  throw GenerationError("random_regular: no sample met the lambda bound");
}

std::vector<Walk> enumerate_walks(const Graph& g, std::size_t t, std::uint64_t cap) {
  if (t < 1) throw InputError("enumerate_walks: t must be at least 1");
  const auto degree = g.regular_degree();
  if (!degree) throw InputError("enumerate_walks: graph is not regular");
  const std::uint64_t count = saturating_mul(g.vertex_count(), saturating_pow(*degree, t - 1));
  if (count > cap) {
    throw ResourceError("enumerate_walks: " + std::to_string(count) + " walks exceed cap " +
                        std::to_string(cap) + "; use sampling mode");
  }
  std::vector<Walk> out;
  out.reserve(count);
  Walk walk(t);
  // Depth-first in lexicographic order.
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == t) {
      out.push_back(walk);
      return;
    }
    for (std::size_t v : g.neighbors(walk[depth - 1])) {
      walk[depth] = v;
      self(self, depth + 1);
    }
  };
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
    walk[0] = v;
    extend(extend, 1);
  }
  return out;
}

std::vector<Walk> sample_walks(const Graph& g, std::size_t t, std::size_t count, std::uint64_t seed) {
  if (t < 1) throw InputError("sample_walks: t must be at least 1");
  if (g.vertex_count() == 0) throw InputError("sample_walks: empty graph");
  Rng rng(seed);
  std::vector<Walk> out(count, Walk(t));
  for (auto& walk : out) {
    walk[0] = 1 + uniform_below(rng, g.vertex_count());
    for (std::size_t i = 1; i < t; ++i) {
      const auto& nb = g.neighbors(walk[i - 1]);
      if (nb.empty()) throw InputError("sample_walks: isolated vertex");
      walk[i] = nb[uniform_below(rng, nb.size())];
    }
  }
  return out;
}

}  // namespace sparsef2
