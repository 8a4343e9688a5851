#include <cmath>
#include <numeric>
#include <vector>

#include "sparsef2/errors.hpp"
#include "sparsef2/graph.hpp"

namespace sparsef2 {

namespace {

using Vec = std::vector<double>;

void adjacency_apply(const Graph& g, const Vec& in, Vec& out) {
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) {
    double acc = 0.0;
    for (std::size_t u : g.neighbors(v)) acc += in[u - 1];
    out[v - 1] = acc;
  }
}

// Removes the component along the all-ones vector (top eigenvector of a
// regular graph) and normalizes; returns the norm before normalization.
double deflate_normalize(Vec& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
  const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return norm;
}

struct Estimate {
  double value = 0.0;     // Rayleigh quotient of the converged operator
  double residual = 0.0;  // ||S v - value v|| for unit v
};

// Power iteration for the top eigenvalue of a PSD operator S restricted to
// the complement of the all-ones vector.
template <typename Apply>
Estimate power_iterate(std::size_t n, Apply&& apply, const SpectralOptions& opts, double scale) {
  Rng rng(opts.seed);
  Vec v(n);
  for (double& x : v) x = uniform01(rng) - 0.5;
  if (deflate_normalize(v) == 0.0) return {};
  Vec w(n);
  Estimate est;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    apply(v, w);
    const double rq = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    double res2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] - rq * v[i];
      res2 += r * r;
    }
    est = {rq, std::sqrt(res2)};
    if (est.residual <= opts.tolerance * scale * 1e-2) break;
    v.swap(w);
    if (deflate_normalize(v) == 0.0) return {0.0, 0.0};
  }
  return est;
}

}  // namespace

SpectralCert spectral_certificate(const Graph& g, const SpectralOptions& opts) {
  const auto degree = g.regular_degree();
  if (!degree) throw InputError("spectral_certificate: graph is not regular");
  const std::size_t n = g.vertex_count();
  SpectralCert cert;
  cert.degree = *degree;
  if (n <= 1 || *degree == 0) return cert;
  const double d = static_cast<double>(*degree);

  Vec tmp(n);
  // Largest |eigenvalue| via A^2, which folds +lambda and -lambda together.
  auto squared = [&](const Vec& in, Vec& out) {
    adjacency_apply(g, in, tmp);
    adjacency_apply(g, tmp, out);
  };
  const Estimate sq = power_iterate(n, squared, opts, d * d);
  cert.lambda = std::sqrt(std::max(0.0, sq.value));
  const double abs_err = cert.lambda > 0.0 ? sq.residual / cert.lambda : std::sqrt(sq.residual);

  // Largest signed eigenvalue via the PSD shift A + D I.
  auto shifted = [&](const Vec& in, Vec& out) {
    adjacency_apply(g, in, out);
    for (std::size_t i = 0; i < n; ++i) out[i] += d * in[i];
  };
  const Estimate sh = power_iterate(n, shifted, opts, 2.0 * d);
  cert.lambda2 = sh.value - d;
  cert.tolerance = std::max(abs_err, sh.residual);
  cert.lambda = std::min(cert.lambda, d);
  return cert;
}

}  // namespace sparsef2
