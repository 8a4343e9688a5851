#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"

namespace sparsef2 {

ProductCode make_product_code(const LinearCode& base) {
  BitMat h = base.parity_check ? *base.parity_check : parity_check_from_generator(base.require_generator());
  return ProductCode{base, std::move(h)};
}

BitMat tensor_parity_check(const LinearCode& base) {
  const BitMat h = base.parity_check ? *base.parity_check : parity_check_from_generator(base.require_generator());
  const std::size_t n = base.length;
  BitMat q(0, n * n);
  // Columns of Y in C: sum_i h_i Y_ij = 0 for each j.
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const auto support = h.row(r).support();
    for (std::size_t j = 0; j < n; ++j) {
      BitVec row(n * n);
      for (std::size_t i : support) row.set(i * n + j);
      q.append_row(std::move(row));
    }
  }
  // Rows of Y in C: sum_j h_j Y_ij = 0 for each i.
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const auto support = h.row(r).support();
    for (std::size_t i = 0; i < n; ++i) {
      BitVec row(n * n);
      for (std::size_t j : support) row.set(i * n + j);
      q.append_row(std::move(row));
    }
  }
  return q;
}

bool tensor_membership(const ProductCode& p, const BitMat& y) {
  const std::size_t n = p.base.length;
  if (y.rows() != n || y.cols() != n) throw InputError("tensor_membership: matrix is not n x n");
  if (!mat_mul(p.parity_check, y).is_zero()) return false;
  return mat_mul(y, p.parity_check.transpose()).is_zero();
}

BitMat product_codeword(const BitMat& g, const BitMat& x) {
  if (x.rows() != g.cols() || x.cols() != g.cols()) throw InputError("product_codeword: message must be k x k");
  return mat_mul(mat_mul(g, x), g.transpose());
}

namespace {

struct DensityPartial {
  std::uint64_t checked = 0;
  std::size_t min_weight = std::numeric_limits<std::size_t>::max();
  std::uint64_t min_message = std::numeric_limits<std::uint64_t>::max();
};

bool better(std::size_t w, std::uint64_t msg, const DensityPartial& p) {
  return w < p.min_weight || (w == p.min_weight && msg < p.min_message);
}

}  // namespace

DensityReport product_density_check(LinearCode& code, std::uint64_t cap, Exec exec) {
  const BitMat& g = code.require_generator();
  const std::size_t n = code.length;
  const std::size_t k = code.dim;
  const std::size_t bits = k * k;
  if (bits >= 63 || (std::uint64_t{1} << bits) > cap) {
    throw ResourceError("product_density_check: 2^" + std::to_string(bits) + " message matrices exceed cap " +
                        std::to_string(cap));
  }
  DensityReport report;
  report.distance = code.dist_cert ? code.dist_cert->distance : min_distance(code, {}, exec);
  report.bound = static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(report.distance * report.distance)));

  // Outer products g_a g_b^T as packed n x n matrices; message bit a*k + b.
  const std::size_t wpr = BitVec::word_count(n);
  const std::size_t stride = n * wpr;
  const auto cols = g.columns();
  std::vector<std::uint64_t> outer(bits * stride, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::uint64_t* dst = outer.data() + (a * k + b) * stride;
      for (std::size_t r : cols[a].support()) {
        const auto src = cols[b].words();
        std::copy(src.begin(), src.end(), dst + r * wpr);
      }
    }
  }

  auto test_bit = [&](const std::vector<std::uint64_t>& y, std::size_t r, std::size_t c) {
    return (y[r * wpr + c / 64] >> (c % 64)) & 1u;
  };
  auto qualifies = [&](const std::vector<std::uint64_t>& y) {
    if (std::all_of(y.begin(), y.end(), [](std::uint64_t x) { return x == 0; })) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (test_bit(y, i, i)) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (test_bit(y, i, j) != test_bit(y, j, i)) return false;
      }
    }
    return true;
  };

  const std::size_t high = exec == Exec::kSerial ? 0 : std::min<std::size_t>(bits, 8);
  const std::size_t low = bits - high;
  const std::uint64_t blocks = std::uint64_t{1} << high;
  std::vector<DensityPartial> partial(blocks);

#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
  for (std::uint64_t p = 0; p < blocks; ++p) {
    std::vector<std::uint64_t> y(stride, 0);
    auto toggle = [&](std::size_t bit) {
      const std::uint64_t* src = outer.data() + bit * stride;
      for (std::size_t i = 0; i < stride; ++i) y[i] ^= src[i];
    };
    for (std::size_t j = 0; j < high; ++j) {
      if ((p >> j) & 1u) toggle(low + j);
    }
    DensityPartial local;
    auto visit = [&](std::uint64_t message) {
      if (!qualifies(y)) return;
      ++local.checked;
      std::size_t w = 0;
      for (std::uint64_t x : y) w += static_cast<std::size_t>(std::popcount(x));
      if (better(w, message, local)) {
        local.min_weight = w;
        local.min_message = message;
      }
    };
    const std::uint64_t base = p << low;
    visit(base);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << low); ++i) {
      toggle(static_cast<std::size_t>(std::countr_zero(i)));
      visit(base | (i ^ (i >> 1)));
    }
    partial[p] = local;
  }

  DensityPartial total;
  for (const auto& part : partial) {
    total.checked += part.checked;
    if (part.checked && better(part.min_weight, part.min_message, total)) {
      total.min_weight = part.min_weight;
      total.min_message = part.min_message;
    }
  }
  report.checked = total.checked;
  if (total.checked > 0) {
    report.min_weight = total.min_weight;
    BitMat x(k, k);
    for (std::size_t bit = 0; bit < bits; ++bit) {
      if ((total.min_message >> bit) & 1u) x.set(bit / k, bit % k);
    }
    report.witness = product_codeword(g, x);
    report.passes = total.min_weight >= report.bound;
  }
  return report;
}

}  // namespace sparsef2
