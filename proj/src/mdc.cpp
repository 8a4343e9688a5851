#include <cmath>
#include <string>

#include "sparsef2/errors.hpp"
#include "sparsef2/reductions.hpp"

namespace sparsef2 {

MdcParams MdcParams::paper_defaults(double zeta, std::size_t kexp, std::size_t d) {
  MdcParams p;
  p.zeta = zeta;
  p.kexp = kexp;
  p.d = d;
  const double zk = std::pow(zeta, static_cast<double>(kexp));
  p.t = static_cast<std::size_t>(std::ceil(1.0 / (std::pow(2.0, static_cast<double>(kexp)) * zk)));
  const double degree = std::pow(4.0 / (std::pow(5.0, static_cast<double>(kexp)) * zk), 10.0);
  p.degree = degree > 1e18 ? std::size_t{1'000'000'000'000'000'000} : static_cast<std::size_t>(std::ceil(degree));
  p.validate();
  return p;
}

void MdcParams::validate() const {
  if (!(zeta > 0.0 && zeta < 0.2)) throw ConfigError("zeta must lie in (0, 1/5)");
  if (kexp < 1) throw ConfigError("tensor exponent must be at least 1");
  if (t < 1) throw ConfigError("walk length t must be at least 1");
  if (degree < 2) throw ConfigError("expander degree must be at least 2");
  if (d < 1) throw ConfigError("row combination size d must be at least 1");
}

double walk_avoidance_bound(double mu, double lambda, std::size_t degree, std::size_t t) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InputError("walk_avoidance_bound: density outside [0, 1]");
  if (degree == 0) throw InputError("walk_avoidance_bound: degree must be positive");
  return std::pow(std::sqrt(1.0 - mu) + lambda / static_cast<double>(degree), static_cast<double>(t));
}

BitMat mdc_tensor(const BitMat& a, std::size_t kexp, std::uint64_t cap) {
  if (kexp < 1) throw InputError("mdc_tensor: exponent must be at least 1");
  const std::uint64_t rows = saturating_pow(a.rows(), kexp);
  const std::uint64_t cols = saturating_pow(a.cols(), kexp);
  if (saturating_mul(rows, cols) > saturating_mul(cap, 64)) {
    throw ResourceError("mdc_tensor: " + std::to_string(rows) + " x " + std::to_string(cols) +
                        " power exceeds the cap");
  }
  BitMat out = a;
  for (std::size_t i = 1; i < kexp; ++i) out = kron(out, a);
  return out;
}

BitMat mdc_walk_rows(const BitMat& a, const std::vector<Walk>& walks, std::uint64_t cap) {
  if (walks.empty()) return BitMat(0, a.cols());
  const std::size_t t = walks.front().size();
  if (t >= 63 || saturating_mul(walks.size(), std::uint64_t{1} << t) > cap) {
    throw ResourceError("mdc_walk_amplify: output rows exceed the cap; use sampled walks");
  }
  for (const auto& walk : walks) {
    if (walk.size() != t) throw InputError("mdc_walk_amplify: walks have different lengths");
    for (std::size_t v : walk) {
      if (v < 1 || v > a.rows()) throw InputError("mdc_walk_amplify: walk vertex outside the rows of A");
    }
  }
  const std::size_t per = std::size_t{1} << t;
  std::vector<BitVec> rows(walks.size() * per);
#pragma omp parallel for schedule(static)
  for (std::size_t w = 0; w < walks.size(); ++w) {
    const Walk& walk = walks[w];
    for (std::size_t s = 0; s < per; ++s) {
      BitVec row(a.cols());
      for (std::size_t j = 0; j < t; ++j) {
        if ((s >> j) & 1u) row ^= a.row(walk[j] - 1);
      }
      rows[w * per + s] = std::move(row);
    }
  }
  return BitMat::from_rows(std::move(rows), a.cols());
}

BitMat mdc_walk_amplify(const BitMat& a, const Graph& g, std::size_t t, std::uint64_t cap) {
  if (g.vertex_count() != a.rows()) throw InputError("mdc_walk_amplify: graph size differs from the rows of A");
  if (!g.regular_degree()) throw InputError("mdc_walk_amplify: graph is not regular");
  if (t < 1) throw InputError("mdc_walk_amplify: t must be at least 1");
  return mdc_walk_rows(a, enumerate_walks(g, t, cap), cap);
}

PointValueSet mdc_to_learning(const BitMat& b, std::size_t d, std::uint64_t cap) {
  if (b.cols() < 1) throw InputError("mdc_to_learning: matrix has no columns");
  if (d < 1 || d > b.rows()) throw InputError("mdc_to_learning: d must lie in [1, rows]");
  const std::uint64_t count = binomial(b.rows(), d);
  if (count > cap) throw ResourceError("mdc_to_learning: C(" + std::to_string(b.rows()) + "," + std::to_string(d) +
                                       ") combinations exceed the cap");
  PointValueSet pv;
  pv.dim = b.cols() - 1;
  pv.points.reserve(count);
  pv.values.reserve(count);
  std::vector<std::size_t> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  do {
    BitVec r(b.cols());
    for (std::size_t i : comb) r ^= b.row(i);
    pv.values.push_back(r.get(0));
    pv.points.push_back(r.slice(1, b.cols() - 1));
  } while (next_combination(comb, b.rows()));
  return pv;
}

}  // namespace sparsef2
