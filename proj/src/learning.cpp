#include <cmath>
#include <sstream>
#include <string>

#include "sparsef2/errors.hpp"
#include "sparsef2/reductions.hpp"

namespace sparsef2 {

PointValueSet vectorsum_to_pointvalues(const VectorSumInstance& inst) {
  inst.validate();
  PointValueSet pv;
  pv.dim = inst.m.cols();
  pv.points = inst.m.row_list();
  pv.values.resize(inst.m.rows());
  for (std::size_t i = 0; i < inst.m.rows(); ++i) pv.values[i] = inst.b.get(i);
  pv.k = inst.k;
  pv.provenance = inst.provenance;
  return pv;
}

PointValueSet amplify_with_generator(const PointValueSet& pv, const BitMat& w) {
  pv.validate();
  if (w.cols() != pv.size()) throw InputError("amplify: generator width differs from the number of pairs");
  PointValueSet out;
  out.dim = pv.dim;
  out.k = pv.k;
  out.delta = pv.delta;
  out.provenance = pv.provenance;
  out.points.reserve(w.rows());
  out.values.reserve(w.rows());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    BitVec z(pv.dim);
    unsigned char b = 0;
    for (std::size_t j : w.row(i).support()) {
      z ^= pv.points[j];
      b ^= pv.values[j];
    }
    out.points.push_back(std::move(z));
    out.values.push_back(b);
  }
  return out;
}

PointValueSet amplify_pointvalues(const PointValueSet& pv, double eps, std::uint64_t seed,
                                  const BalancedOptions& opts) {
  if (pv.size() == 0) throw InputError("amplify_pointvalues: empty point-value set");
  const LinearCode code = balanced_code(pv.size(), eps, seed, opts);
  PointValueSet out = amplify_with_generator(pv, code.require_generator());
  out.eps = eps;
  std::ostringstream line;
  line << "amplify eps=" << eps << " seed=" << seed << " t=" << code.length << " measured_eps=" << code.bias_cert->eps;
  out.provenance.push_back(line.str());
  return out;
}

PointValueSet junta_hardness_instance(const PointValueSet& pv, double delta, std::size_t k, std::uint64_t seed,
                                      const BalancedOptions& opts) {
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("junta_hardness_instance: delta must lie in (0, 1)");
  const double eps = delta * std::ldexp(1.0, -static_cast<int>(k));
  PointValueSet out = amplify_pointvalues(pv, eps, seed, opts);
  out.k = k;
  out.delta = delta;
  return out;
}

std::vector<BitVec> viola_shift(const std::vector<BitVec>& points, std::size_t d, const ViolaOptions& opts) {
  if (d < 1) throw InputError("viola_shift: d must be at least 1");
  if (points.empty()) throw InputError("viola_shift: empty point set");
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw InputError("viola_shift: points have different lengths");
  }
  const std::uint64_t m = points.size();

  if (opts.samples) {
    Rng rng(opts.seed);
    std::vector<BitVec> out;
    out.reserve(*opts.samples);
    for (std::size_t s = 0; s < *opts.samples; ++s) {
      BitVec z(n);
      for (std::size_t j = 0; j < d; ++j) z ^= points[uniform_below(rng, m)];
      out.push_back(std::move(z));
    }
    return out;
  }

  const std::uint64_t total = saturating_pow(m, d);
  if (total > opts.cap) {
    throw ResourceError("viola_shift: " + std::to_string(m) + "^" + std::to_string(d) +
                        " tuples exceed the cap; use sampling mode");
  }
  std::vector<BitVec> out(total, BitVec(n));
#pragma omp parallel for schedule(static)
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    BitVec z(n);
    for (std::size_t j = 0; j < d; ++j) {
      z ^= points[rest % m];
      rest /= m;
    }
    out[idx] = std::move(z);
  }
  return out;
}

std::vector<BitVec> evenset_to_fooling_points(const EvenSetInstance& e, double eps, std::size_t d,
                                              std::uint64_t seed, const ViolaOptions& viola,
                                              const BalancedOptions& opts) {
  e.validate();
  if (e.m.rows() == 0) throw InputError("evenset_to_fooling_points: instance has no rows");
  const LinearCode code = balanced_code(e.m.rows(), eps, seed, opts);
  const BitMat b = mat_mul(code.require_generator(), e.m);
  return viola_shift(b.row_list(), d, viola);
}

}  // namespace sparsef2
