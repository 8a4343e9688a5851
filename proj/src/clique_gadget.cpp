#include <algorithm>
#include <bit>
#include <string>

#include "sparsef2/errors.hpp"
#include "sparsef2/reductions.hpp"

namespace sparsef2 {

BitVec CliqueGadgetLayout::pattern(std::size_t vertex) const {
  BitVec q(bits);
  for (std::size_t b = 0; b < bits; ++b) {
    if ((vertex >> b) & 1u) q.set(b);
  }
  return q;
}

std::size_t CliqueGadgetLayout::pair_index(std::size_t j1, std::size_t j2) const {
  // Pairs (1,2), (1,3), .., (1,k), (2,3), ..
  std::size_t before = 0;
  for (std::size_t a = 1; a < j1; ++a) before += k - a;
  return before + (j2 - j1 - 1);
}

namespace {

void put_pattern(BitVec& col, const CliqueGadgetLayout& layout, std::size_t vertex, std::size_t slot,
                 std::size_t sub) {
  const std::size_t base = layout.subslot(slot, sub);
  for (std::size_t b = 0; b < layout.bits; ++b) {
    if ((vertex >> b) & 1u) col.flip(base + b);
  }
}

}  // namespace

std::pair<VectorSumInstance, CliqueGadgetLayout> clique_to_vectorsum(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k < 2) throw InputError("clique_to_vectorsum: k must be at least 2");
  if (k > n) throw InputError("clique_to_vectorsum: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));

  CliqueGadgetLayout layout;
  layout.n = n;
  layout.k = k;
  layout.bits = static_cast<std::size_t>(std::bit_width(n));  // ceil(log2(n + 1))
  layout.edges = g.edges();

  const std::size_t d = layout.rows();
  std::vector<BitVec> cols;
  cols.reserve(layout.columns());
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t j = 1; j <= k; ++j) {
      BitVec col(d);
      for (std::size_t l = 1; l < k; ++l) put_pattern(col, layout, v, j, l);
      col.set(layout.vertex_indicator(j));
      cols.push_back(std::move(col));
    }
  }
  for (const auto& [u, v] : layout.edges) {
    for (std::size_t j1 = 1; j1 <= k; ++j1) {
      for (std::size_t j2 = j1 + 1; j2 <= k; ++j2) {
        BitVec col(d);
        put_pattern(col, layout, u, j1, j2 - 1);
        put_pattern(col, layout, v, j2, j1);
        col.set(layout.edge_indicator(j1, j2));
        cols.push_back(std::move(col));
      }
    }
  }

  VectorSumInstance inst;
  inst.m = BitMat::from_columns(cols, d);
  inst.b = BitVec(d);
  for (std::size_t c = k * (k - 1) * layout.bits; c < d; ++c) inst.b.set(c);
  inst.k = layout.sparsity();
  return {std::move(inst), std::move(layout)};
}

BitVec assemble_clique_solution(const CliqueGadgetLayout& layout, std::vector<std::size_t> clique) {
  if (clique.size() != layout.k) throw InputError("assemble_clique_solution: clique size differs from k");
  std::sort(clique.begin(), clique.end());
  BitVec x(layout.columns());
  for (std::size_t j = 1; j <= layout.k; ++j) x.set(layout.vertex_column(clique[j - 1], j));
  for (std::size_t j1 = 1; j1 <= layout.k; ++j1) {
    for (std::size_t j2 = j1 + 1; j2 <= layout.k; ++j2) {
      const std::pair<std::size_t, std::size_t> e{clique[j1 - 1], clique[j2 - 1]};
      const auto it = std::lower_bound(layout.edges.begin(), layout.edges.end(), e);
      if (it == layout.edges.end() || *it != e) {
        throw InputError("assemble_clique_solution: {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "} is not an edge");
      }
      x.set(layout.edge_column(static_cast<std::size_t>(it - layout.edges.begin()), j1, j2));
    }
  }
  return x;
}

std::vector<std::size_t> extract_clique(const CliqueGadgetLayout& layout, const VectorSumInstance& inst,
                                        const BitVec& solution) {
  if (solution.size() != inst.m.cols()) throw WitnessError("extract_clique: solution length mismatch");
  if (solution.weight() > layout.sparsity()) throw WitnessError("extract_clique: solution exceeds k + C(k,2)");
  if (mat_vec_mul(inst.m, solution) != inst.b) throw WitnessError("extract_clique: solution does not sum to b");

  std::vector<std::size_t> slot_vertex(layout.k + 1, 0);
  for (std::size_t c : solution.support()) {
    if (c >= layout.n * layout.k) continue;
    const std::size_t v = c / layout.k + 1;
    const std::size_t j = c % layout.k + 1;
    if (slot_vertex[j] != 0) {
      throw WitnessError("extract_clique: slot " + std::to_string(j) + " has two vertex columns");
    }
    slot_vertex[j] = v;
  }
  std::vector<std::size_t> clique(slot_vertex.begin() + 1, slot_vertex.end());
  if (std::count(clique.begin(), clique.end(), 0u) != 0) throw WitnessError("extract_clique: a slot is empty");
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!std::binary_search(layout.edges.begin(), layout.edges.end(), std::pair{clique[i], clique[j]})) {
        throw WitnessError("extract_clique: chosen vertices " + std::to_string(clique[i]) + " and " +
                           std::to_string(clique[j]) + " are not adjacent");
      }
    }
  }
  return clique;
}

}  // namespace sparsef2
