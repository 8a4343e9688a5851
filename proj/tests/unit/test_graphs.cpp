#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/graph.hpp"

using namespace sparsef2;

namespace {

// Largest |eigenvalue| and largest signed eigenvalue after removing the
// top (degree) eigenvalue of a connected regular graph.
std::pair<double, double> eigen_lambdas(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u - 1), static_cast<Eigen::Index>(v - 1)) = 1.0;
    a(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(u - 1)) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  double abs_max = 0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) abs_max = std::max(abs_max, std::abs(ev(i)));
  return {abs_max, ev(n - 2)};
}

}  // namespace

TEST(Graph, ConstructionRejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{1, 4}}), InputError);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), InputError);
  const Graph g(3, {{2, 3}, {1, 2}});
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(g, Graph::path(3));
}

TEST(FindClique, Examples) {
  EXPECT_EQ(find_clique(Graph::complete(3), 3), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_FALSE(find_clique(Graph::path(3), 3));
  EXPECT_THROW(find_clique(Graph::path(3), 4), InputError);
}

TEST(FindClique, AgreesWithSubsetOracle) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const double p = seed % 3 == 0 ? 0.3 : (seed % 3 == 1 ? 0.5 : 0.8);
    const Graph g = random_graph(n, p, seed);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto c = find_clique(g, k);
      ASSERT_EQ(c.has_value(), oracle::has_clique(g, k)) << "seed " << seed << " k " << k;
      if (c) {
        ASSERT_EQ(c->size(), k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) ASSERT_TRUE(g.adjacent((*c)[i], (*c)[j]));
        }
      }
    }
  }
}

TEST(RandomGraph, ExtremeProbabilities) {
  EXPECT_EQ(random_graph(5, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(random_graph(5, 1.0, 1), Graph::complete(5));
  EXPECT_EQ(random_graph(9, 0.4, 77), random_graph(9, 0.4, 77));
}

TEST(PlantedClique, WitnessIsClique) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto pc = planted_clique(8, 4, 0.2, seed);
    ASSERT_EQ(pc.witness.size(), 4u);
    ASSERT_TRUE(is_clique(pc.graph, pc.witness));
    ASSERT_TRUE(find_clique(pc.graph, 4));
  }
}

TEST(Spectral, CompleteGraphAndCycle) {
  const auto kn = spectral_certificate(Graph::complete(7));
  EXPECT_EQ(kn.degree, 6u);
  EXPECT_NEAR(kn.lambda, 1.0, 1e-5);
  for (std::size_t n : {5, 8, 11}) {
    const auto c = spectral_certificate(Graph::cycle(n));
    const double signed2 = 2.0 * std::cos(2.0 * std::numbers::pi / static_cast<double>(n));
    EXPECT_NEAR(c.lambda2, signed2, 1e-5) << n;
    const auto [abs_max, second] = eigen_lambdas(Graph::cycle(n));
    EXPECT_NEAR(c.lambda, abs_max, 1e-5) << n;
    EXPECT_NEAR(second, signed2, 1e-9);
  }
}

TEST(RandomRegular, DegreeAndCertificateMatchEigen) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto rg = random_regular(100, 8, seed);
    EXPECT_EQ(rg.graph.regular_degree(), std::optional<std::size_t>(8));
    EXPECT_LT(rg.cert.lambda, 8.0);
    const auto [abs_max, second] = eigen_lambdas(rg.graph);
    EXPECT_NEAR(rg.cert.lambda, abs_max, 1e-4);
    EXPECT_NEAR(rg.cert.lambda2, second, 1e-4);
    const auto again = random_regular(100, 8, seed);
    EXPECT_EQ(again.graph, rg.graph);
    EXPECT_EQ(again.cert.lambda, rg.cert.lambda);
  }
  EXPECT_THROW(random_regular(7, 3, 1), InputError);
}

TEST(Walks, Counts) {
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(enumerate_walks(k4, 1).size(), 4u);
  EXPECT_EQ(enumerate_walks(k4, 2).size(), 12u);
  EXPECT_EQ(enumerate_walks(Graph::cycle(4), 3).size(), 16u);
  const auto rg = random_regular(20, 4, 9);
  const auto walks = enumerate_walks(rg.graph, 4);
  EXPECT_EQ(walks.size(), 20u * 4u * 4u * 4u);
  for (const auto& w : walks) {
    for (std::size_t i = 1; i < w.size(); ++i) ASSERT_TRUE(rg.graph.adjacent(w[i - 1], w[i]));
  }
  EXPECT_TRUE(std::is_sorted(walks.begin(), walks.end()));
  EXPECT_THROW(enumerate_walks(rg.graph, 30, 1000), ResourceError);
}

TEST(Walks, SamplingIsSeededAndValid) {
  const Graph c = Graph::cycle(9);
  const auto a = sample_walks(c, 5, 200, 4);
  EXPECT_EQ(a, sample_walks(c, 5, 200, 4));
  for (const auto& w : a) {
    ASSERT_EQ(w.size(), 5u);
    for (std::size_t i = 1; i < w.size(); ++i) ASSERT_TRUE(c.adjacent(w[i - 1], w[i]));
  }
}
