#include <cmath>
#include <sstream>
#include <string>

#include "sparsef2/errors.hpp"
#include "sparsef2/linalg.hpp"
#include "sparsef2/reductions.hpp"

namespace sparsef2 {

namespace {

std::size_t ceil_size(double x) { return static_cast<std::size_t>(std::ceil(x - 1e-9)); }

BitMat injective_sketch(std::size_t n, std::size_t rows) {
  BitMat r(rows, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BitMat full_rank_mixing(std::size_t big_k, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    BitMat c(big_k, dim);
    for (std::size_t i = 0; i < big_k; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (rng() >> 63) c.set(i, j);
      }
    }
    if (rank(c) == dim) return c;
  }
  throw GenerationError("mixing code: no full-rank draw");
}

}  // namespace

EvenSetLayout plan_evenset_layout(std::size_t n, std::size_t k, const EvenSetConfig& cfg) {
  if (n < 1 || k < 1) throw InputError("vectorsum_to_evenset: empty source instance");
  if (!(cfg.eps > 0.0 && cfg.eps < 0.5)) throw ConfigError("eps must lie in (0, 1/2)");
  if (!(cfg.c > 0.0)) throw ConfigError("c must be positive");

  EvenSetLayout layout;
  layout.n = n;
  layout.k = k;
  layout.eps = cfg.eps;
  layout.c = cfg.c;
  const double log_n = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  layout.sketch_rows = cfg.sketch_rows ? *cfg.sketch_rows : ceil_size(20.0 * static_cast<double>(k) * log_n);
  if (layout.sketch_rows < 1) throw ConfigError("sketch rows must be at least 1");
  const std::size_t delta = cfg.sketch_delta ? *cfg.sketch_delta : 18 * k;

  if (layout.sketch_rows >= n) {
    layout.sketch = injective_sketch(n, layout.sketch_rows);
  } else if (delta > n) {
    throw ConfigError("sketch with " + std::to_string(layout.sketch_rows) + " < n rows cannot reach designed distance " +
                      std::to_string(delta) + " > n");
  } else {
    BitMat bch = bch_parity_check(n, delta);
    if (bch.rows() > layout.sketch_rows) {
      throw ConfigError("BCH sketch for designed distance " + std::to_string(delta) + " needs " +
                        std::to_string(bch.rows()) + " rows, only " + std::to_string(layout.sketch_rows) + " allowed");
    }
    while (bch.rows() < layout.sketch_rows) bch.append_row(BitVec(n));
    layout.sketch = std::move(bch);
    layout.sketch_distance = delta;
  }

  const double kp = static_cast<double>(layout.sketch_rows);
  layout.big_k = cfg.big_k ? *cfg.big_k : ceil_size(kp / (cfg.c * cfg.eps * cfg.eps * cfg.eps));
  if (layout.big_k < layout.sketch_rows) {
    throw ConfigError("K=" + std::to_string(layout.big_k) + " is below the sketch length k'=" +
                      std::to_string(layout.sketch_rows) + "; the mixing code cannot be injective");
  }
  layout.r = cfg.r ? *cfg.r : (layout.big_k * layout.big_k + 15) / 16;
  if (layout.r < 1) throw ConfigError("r must be at least 1");

  const double lhs = static_cast<double>(layout.big_k * layout.big_k + 1) / static_cast<double>(layout.r) +
                     static_cast<double>(k) + 1.0;
  if (layout.sketch_distance && !(lhs < static_cast<double>(*layout.sketch_distance))) {
    std::ostringstream msg;
    msg << "validator: (K^2 + 1)/r + k + 1 = " << lhs << " is not below the sketch distance "
        << *layout.sketch_distance;
    throw ConfigError(msg.str());
  }
  if (layout.variable_count() > kDefaultMemoryCap) {
    throw ResourceError("vectorsum_to_evenset: " + std::to_string(layout.variable_count()) +
                        " explicit variables exceed the memory cap; override K and r");
  }

  if (layout.sketch_rows <= 20) {
    layout.mixing = *best_balanced_of_length(layout.sketch_rows, layout.big_k, cfg.seed, 64).generator;
  } else {
    layout.mixing = full_rank_mixing(layout.big_k, layout.sketch_rows, cfg.seed);
  }
  layout.product_check = tensor_parity_check(LinearCode::from_generator(layout.mixing));
  return layout;
}

std::pair<EvenSetInstance, EvenSetLayout> vectorsum_to_evenset(const VectorSumInstance& inst,
                                                              const EvenSetConfig& cfg) {
  inst.validate();
  EvenSetLayout layout = plan_evenset_layout(inst.m.cols(), inst.k, cfg);
  const std::size_t n = layout.n;
  const std::size_t big_k = layout.big_k;
  const std::size_t vars = layout.variable_count();
  const BitMat cr = mat_mul(layout.mixing, layout.sketch);

  BitMat out(0, vars);
  auto add_y = [&](BitVec& row, std::size_t i) {
    for (std::size_t j : cr.row(i).support()) row.flip(layout.x(j));
  };

  // M x + a0 t = 0
  for (std::size_t i = 0; i < inst.m.rows(); ++i) {
    BitVec row(vars);
    for (std::size_t j : inst.m.row(i).support()) row.set(layout.x(j));
    if (inst.b.get(i)) row.set(EvenSetLayout::a0());
    out.append_row(std::move(row));
  }
  for (std::size_t i = 0; i < big_k; ++i) {
    for (std::size_t j = 0; j < big_k; ++j) {
      BitVec all(vars);
      for (unsigned a = 0; a < 2; ++a) {
        for (unsigned b = 0; b < 2; ++b) all.set(layout.z(i, j, a, b));
      }
      all.set(EvenSetLayout::a0());
      out.append_row(std::move(all));

      BitVec first(vars);
      first.set(layout.z(i, j, 1, 0));
      first.set(layout.z(i, j, 1, 1));
      add_y(first, i);
      out.append_row(std::move(first));

      BitVec second(vars);
      second.set(layout.z(i, j, 0, 1));
      second.set(layout.z(i, j, 1, 1));
      add_y(second, j);
      out.append_row(std::move(second));
    }
  }
  // Q Y = 0 with Y_ij = Z_ij(1,1)
  for (const BitVec& q : layout.product_check.row_list()) {
    BitVec row(vars);
    for (std::size_t idx : q.support()) row.set(layout.z(idx / big_k, idx % big_k, 1, 1));
    out.append_row(std::move(row));
  }
  for (std::size_t i = 0; i < big_k; ++i) {
    for (std::size_t j = i + 1; j < big_k; ++j) {
      BitVec row(vars);
      row.set(layout.z(i, j, 1, 1));
      row.set(layout.z(j, i, 1, 1));
      out.append_row(std::move(row));
    }
    BitVec diag(vars);
    diag.set(layout.z(i, i, 1, 1));
    add_y(diag, i);
    out.append_row(std::move(diag));
  }
  for (std::size_t c = 1; c < layout.r; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      BitVec row(vars);
      row.set(layout.copy(c, j));
      row.set(layout.x(j));
      out.append_row(std::move(row));
    }
  }

  EvenSetInstance e;
  e.m = std::move(out);
  e.k = layout.threshold();
  e.layout = layout;
  e.provenance = inst.provenance;
  std::ostringstream line;
  line << "vs2es k'=" << layout.sketch_rows << " K=" << big_k << " r=" << layout.r << " eps=" << layout.eps
       << " c=" << layout.c << " threshold=" << e.k;
  e.provenance.push_back(line.str());
  return {std::move(e), std::move(layout)};
}

BitVec assemble_evenset_witness(const EvenSetLayout& layout, const VectorSumInstance& source, const BitVec& x) {
  if (x.size() != layout.n) throw WitnessError("assemble_evenset_witness: x has the wrong length");
  if (x.is_zero()) throw WitnessError("assemble_evenset_witness: x = 0 cannot be completed with a0 = 1");
  if (x.weight() > source.k) throw WitnessError("assemble_evenset_witness: x exceeds the source sparsity");
  if (mat_vec_mul(source.m, x) != source.b) throw WitnessError("assemble_evenset_witness: M x != t");

  const BitVec y = mat_vec_mul(layout.mixing, mat_vec_mul(layout.sketch, x));
  BitVec out(layout.variable_count());
  out.set(EvenSetLayout::a0());
  for (std::size_t j : x.support()) {
    out.set(layout.x(j));
    for (std::size_t c = 1; c < layout.r; ++c) out.set(layout.copy(c, j));
  }
  for (std::size_t i = 0; i < layout.big_k; ++i) {
    for (std::size_t j = 0; j < layout.big_k; ++j) out.set(layout.z(i, j, y.get(i), y.get(j)));
  }
  return out;
}

std::size_t evenset_z_weight(const EvenSetLayout& layout, const BitVec& assignment) {
  const std::size_t start = layout.z(0, 0, 0, 0);
  return assignment.slice(start, assignment.size() - start).weight();
}

}  // namespace sparsef2
