#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/kernels.hpp"
#include "sparsef2/linalg.hpp"

namespace sparsef2 {

LinearCode LinearCode::from_generator(BitMat g) {
  LinearCode c;
  c.length = g.rows();
  c.dim = g.cols();
  c.generator = std::move(g);
  return c;
}

LinearCode LinearCode::from_parity_check(BitMat h) {
  LinearCode c;
  c.length = h.cols();
  const auto basis = nullspace_basis(h);
  c.dim = basis.size();
  c.generator = BitMat::from_columns(basis, c.length);
  c.parity_check = std::move(h);
  return c;
}

const BitMat& LinearCode::require_generator() const {
  if (!generator) throw InputError("code has no generator matrix");
  return *generator;
}

bool LinearCode::contains(const BitVec& word) const {
  if (word.size() != length) throw InputError("contains: word length mismatch");
  const BitMat h = parity_check ? *parity_check : parity_check_from_generator(require_generator());
  return mat_vec_mul(h, word).is_zero();
}

BitMat parity_check_from_generator(const BitMat& g) {
  const auto dual = nullspace_basis(g.transpose());
  return BitMat::from_rows(dual, g.rows());
}

LinearCode simplex_generator(std::size_t kdim) {
  if (kdim < 1 || kdim > 24) throw InputError("simplex_generator: kdim must lie in [1,24]");
  const std::size_t n = (std::size_t{1} << kdim) - 1;
  BitMat g(n, kdim);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < kdim; ++j) {
      if (((r + 1) >> j) & 1u) g.set(r, j);
    }
  }
  LinearCode c = LinearCode::from_generator(std::move(g));
  const std::size_t w = std::size_t{1} << (kdim - 1);
  c.bias_cert = BiasCert{std::abs(static_cast<double>(w) / static_cast<double>(n) - 0.5), w, w, "simplex"};
  return c;
}

namespace {

// Walks one block of the Gray-code enumeration: the top `high_bits` message
// bits are fixed to `prefix`, the low bits run through all values. The
// callback sees (message, codeword).
template <typename Visit>
void gray_block(const std::vector<BitVec>& cols, std::size_t low_bits, std::uint64_t prefix, Visit&& visit) {
  BitVec word(cols.empty() ? 0 : cols.front().size());
  for (std::size_t j = low_bits; j < cols.size(); ++j) {
    if ((prefix >> (j - low_bits)) & 1u) word ^= cols[j];
  }
  const std::uint64_t base = prefix << low_bits;
  visit(base, word);
  const std::uint64_t count = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    word ^= cols[bit];
    visit(base | (i ^ (i >> 1)), word);
  }
}

std::size_t split_bits(std::size_t dim, Exec exec) {
  if (exec == Exec::kSerial) return 0;
  return std::min<std::size_t>(dim, 8);
}

}  // namespace

WeightRange codeword_weight_range(const BitMat& g, Exec exec) {
  const std::size_t dim = g.cols();
  if (dim > 40) throw ResourceError("codeword_weight_range: dimension too large to enumerate");
  const auto cols = g.columns();
  const std::size_t high = split_bits(dim, exec);
  const std::size_t low = dim - high;
  const std::uint64_t blocks = std::uint64_t{1} << high;

  std::vector<WeightRange> partial(blocks);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
  for (std::uint64_t p = 0; p < blocks; ++p) {
    WeightRange r{std::numeric_limits<std::size_t>::max(), 0, 0, 0};
    gray_block(cols, low, p, [&](std::uint64_t message, const BitVec& word) {
      if (message == 0) return;
      const std::size_t w = word.weight();
      ++r.codewords;
      if (w == 0) {
        ++r.zero_messages;
        return;
      }
      r.min_weight = std::min(r.min_weight, w);
      r.max_weight = std::max(r.max_weight, w);
    });
    partial[p] = r;
  }
  WeightRange out{std::numeric_limits<std::size_t>::max(), 0, 0, 0};
  for (const auto& r : partial) {
    out.min_weight = std::min(out.min_weight, r.min_weight);
    out.max_weight = std::max(out.max_weight, r.max_weight);
    out.codewords += r.codewords;
    out.zero_messages += r.zero_messages;
  }
  if (out.min_weight == std::numeric_limits<std::size_t>::max()) out.min_weight = 0;
  return out;
}

std::size_t balanced_length_bound(std::size_t dim, double eps, double c_bal) {
  return static_cast<std::size_t>(std::ceil(c_bal * static_cast<double>(dim) / (eps * eps * eps)));
}

namespace {

BitMat random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() >> 63) m.set(r, c);
    }
  }
  return m;
}

double measured_eps(const WeightRange& r, std::size_t t) {
  const double lo = std::abs(static_cast<double>(r.min_weight) / static_cast<double>(t) - 0.5);
  const double hi = std::abs(static_cast<double>(r.max_weight) / static_cast<double>(t) - 0.5);
  return std::max(lo, hi);
}

bool within(const WeightRange& r, std::size_t t, double eps) {
  if (r.zero_messages != 0) return false;
  const double td = static_cast<double>(t);
  return static_cast<double>(r.min_weight) >= (0.5 - eps) * td && static_cast<double>(r.max_weight) <= (0.5 + eps) * td;
}

}  // namespace

LinearCode balanced_code(std::size_t dim, double eps, std::uint64_t seed, const BalancedOptions& opts) {
  if (dim < 1) throw InputError("balanced_code: dim must be positive");
  if (dim > opts.max_dim) {
    throw InputError("balanced_code: dim " + std::to_string(dim) + " exceeds the verification cap " +
                     std::to_string(opts.max_dim));
  }
  if (!(eps > 0.0 && eps < 0.5)) throw InputError("balanced_code: eps must lie in (0, 1/2)");

  std::vector<std::size_t> schedule;
  if (opts.length) {
    schedule.push_back(*opts.length);
  } else {
    const std::size_t bound = balanced_length_bound(dim, eps, opts.c_bal);
    // Chernoff-style starting point for a random code, doubled up to the bound.
    auto t = static_cast<std::size_t>(std::ceil((static_cast<double>(dim) * std::log(2.0) + 3.0) / (2.0 * eps * eps)));
    t = std::clamp<std::size_t>(t, 1, bound);
    while (t < bound) {
      schedule.push_back(t);
      t *= 2;
    }
    schedule.push_back(bound);
  }

  Rng rng(seed);
  for (std::size_t t : schedule) {
    for (std::size_t attempt = 0; attempt < opts.retries_per_length; ++attempt) {
      BitMat w = random_matrix(t, dim, rng);
      const WeightRange range = codeword_weight_range(w);
      if (!within(range, t, eps)) continue;
      LinearCode code = LinearCode::from_generator(std::move(w));
      code.bias_cert = BiasCert{measured_eps(range, t), range.min_weight, range.max_weight, "exhaustive"};
      return code;
    }
  }
  if (opts.simplex_fallback && dim <= 24) {
    LinearCode simplex = simplex_generator(dim);
    if (simplex.bias_cert->eps <= eps) return simplex;
  }
  throw GenerationError("balanced_code: no certified generator for dim=" + std::to_string(dim) +
                        " eps=" + std::to_string(eps) + "; try a larger length or the simplex fallback");
}

LinearCode best_balanced_of_length(std::size_t dim, std::size_t length, std::uint64_t seed, std::size_t attempts) {
  if (dim < 1 || dim > 24) throw InputError("best_balanced_of_length: dim must lie in [1,24]");
  if (length < dim) throw InputError("best_balanced_of_length: length below dim cannot be full rank");
  Rng rng(seed);
  std::optional<LinearCode> best;
  for (std::size_t a = 0; a < attempts; ++a) {
    BitMat w = random_matrix(length, dim, rng);
    const WeightRange range = codeword_weight_range(w);
    if (range.zero_messages != 0) continue;
    const double eps = measured_eps(range, length);
    if (!best || eps < best->bias_cert->eps) {
      best = LinearCode::from_generator(std::move(w));
      best->bias_cert = BiasCert{eps, range.min_weight, range.max_weight, "exhaustive"};
    }
  }
  if (!best) throw GenerationError("best_balanced_of_length: no full-rank draw");
  return std::move(*best);
}

std::size_t min_distance(LinearCode& code, const MinDistanceOptions& opts, Exec exec) {
  if (code.dim == 0) throw InputError("min_distance: code has no nonzero codewords");
  if (code.dim <= opts.max_exhaustive_dim) {
    const BitMat& g = code.require_generator();
    const auto cols = g.columns();
    const std::size_t high = split_bits(code.dim, exec);
    const std::size_t low = code.dim - high;
    const std::uint64_t blocks = std::uint64_t{1} << high;
    std::vector<std::optional<BitVec>> best(blocks);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
    for (std::uint64_t p = 0; p < blocks; ++p) {
      std::optional<BitVec> local;
      gray_block(cols, low, p, [&](std::uint64_t message, const BitVec& word) {
        if (message == 0 || word.is_zero()) return;
        if (!local || support_less(word, *local)) local = word;
      });
      best[p] = std::move(local);
    }
    std::optional<BitVec> winner;
    for (auto& b : best) {
      if (b && (!winner || support_less(*b, *winner))) winner = std::move(b);
    }
    if (!winner) throw InputError("min_distance: generator spans only the zero word");
    const std::size_t d = winner->weight();
    code.dist_cert = DistanceCert{d, "exhaustive", std::move(*winner)};
    return d;
  }

  if (!opts.weight_cap) {
    throw ResourceError("min_distance: dim " + std::to_string(code.dim) +
                        " exceeds the exhaustive cap and no weight cap was supplied");
  }
  const BitMat h = code.parity_check ? *code.parity_check : parity_check_from_generator(code.require_generator());
  if (binomial_prefix(h.cols(), *opts.weight_cap) > opts.enumeration_cap) {
    throw ResourceError("min_distance: sparse search exceeds the enumeration cap");
  }
  const kernels::ColumnPack cols(h);
  const std::vector<std::uint64_t> zero(cols.words(), 0);
  const auto hit = kernels::find_lightest_combination(cols, zero, 1, *opts.weight_cap, exec);
  if (!hit.support) {
    throw ResourceError("min_distance: no codeword of weight <= " + std::to_string(*opts.weight_cap));
  }
  BitVec witness = BitVec::from_support(code.length, *hit.support);
  const std::size_t d = witness.weight();
  code.dist_cert = DistanceCert{d, "sparse-search", std::move(witness)};
  return d;
}

}  // namespace sparsef2
