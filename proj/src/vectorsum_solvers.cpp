#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

#include "sparsef2/errors.hpp"
#include "sparsef2/kernels.hpp"
#include "sparsef2/solvers.hpp"
#include "subset_scan.hpp"

namespace sparsef2 {

namespace {

SolveReport zero_solution(const VectorSumInstance& inst, std::string algorithm) {
  SolveReport r;
  r.feasible = true;
  r.witness = BitVec(inst.m.cols());
  r.weight = 0;
  r.algorithm = std::move(algorithm);
  r.work = 1;
  return r;
}

SolveReport finish(const VectorSumInstance& inst, SolveReport r) {
  if (r.witness) {
    if (mat_vec_mul(inst.m, *r.witness) != inst.b || r.witness->weight() > inst.k) {
      throw std::logic_error(r.algorithm + ": produced a witness that does not verify");
    }
    r.feasible = true;
    r.weight = r.witness->weight();
  }
  return r;
}

BitVec from_words(std::span<const std::uint64_t> words, std::size_t len) {
  BitVec v(len);
  std::copy(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(v.words().size()), v.words().begin());
  return v;
}

void keep_best(std::optional<BitVec>& best, BitVec candidate) {
  if (!best || support_less(candidate, *best)) best = std::move(candidate);
}

}  // namespace

SolveReport solve_exhaustive(const VectorSumInstance& inst, const SolveOptions& opts) {
  inst.validate();
  if (inst.b.is_zero()) return zero_solution(inst, "exhaustive");
  const std::size_t n = inst.m.cols();
  const std::uint64_t subsets = binomial_prefix(n, inst.k);
  if (subsets > opts.enumeration_cap) {
    throw ResourceError("solve_exhaustive: " + std::to_string(subsets) + " subsets exceed the enumeration cap");
  }
  const kernels::ColumnPack cols(inst.m);
  const auto target = cols.pack(inst.b);
  const auto hit = kernels::find_lightest_combination(cols, target, 1, std::min(inst.k, n), opts.exec);
  SolveReport r;
  r.algorithm = "exhaustive";
  r.work = hit.work + 1;
  if (hit.support) r.witness = BitVec::from_support(n, *hit.support);
  return finish(inst, std::move(r));
}

// ---- meet in the middle ----

namespace {

// Syndrome table over all subsets of size <= half, keyed by syndrome.
struct SubsetTable {
  std::size_t width = 0;               // slots per subset
  std::vector<std::uint32_t> members;  // flattened, padded with kNone
  std::unordered_map<BitVec, std::vector<std::uint32_t>> index;
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
};

template <typename Visit>
void for_each_small_subset(const kernels::ColumnPack& cols, std::size_t max_w, Visit&& visit) {
  const std::vector<std::uint64_t> zero(cols.words(), 0);
  visit(std::span<const std::size_t>(), std::span<const std::uint64_t>(zero));
  for (std::size_t w = 1; w <= max_w && w <= cols.count(); ++w) {
    detail::SubsetScan scan(cols, w);
    for (std::size_t first = 0; first + w <= cols.count(); ++first) scan.from(first, visit);
  }
}

SolveReport plain_mitm(const VectorSumInstance& inst, const SolveOptions& opts) {
  const std::size_t n = inst.m.cols();
  const std::size_t m = inst.m.rows();
  const std::size_t table_w = (inst.k + 1) / 2;
  const std::size_t probe_w = inst.k / 2;
  const std::uint64_t entries = binomial_prefix(n, table_w);
  if (entries > opts.memory_cap) {
    throw ResourceError("solve_mitm: table of " + std::to_string(entries) + " subsets exceeds the memory cap");
  }
  const std::uint64_t probes = binomial_prefix(n, probe_w);
  if (probes > opts.enumeration_cap) throw ResourceError("solve_mitm: probe count exceeds the enumeration cap");

  const kernels::ColumnPack cols(inst.m);
  SubsetTable table;
  table.width = std::max<std::size_t>(table_w, 1);
  table.members.reserve(entries * table.width);
  std::uint32_t id = 0;
  for_each_small_subset(cols, table_w, [&](std::span<const std::size_t> chosen, std::span<const std::uint64_t> acc) {
    for (std::size_t i = 0; i < table.width; ++i) {
      table.members.push_back(i < chosen.size() ? static_cast<std::uint32_t>(chosen[i]) : SubsetTable::kNone);
    }
    table.index[from_words(acc, m)].push_back(id++);
  });

  // Probes grouped by (size, first column) so the parallel loop is flat.
  struct Task {
    std::size_t w;
    std::size_t first;
  };
  std::vector<Task> tasks{{0, 0}};
  for (std::size_t w = 1; w <= probe_w && w <= n; ++w) {
    for (std::size_t first = 0; first + w <= n; ++first) tasks.push_back({w, first});
  }
  std::vector<std::optional<BitVec>> best(tasks.size());
  std::vector<std::uint64_t> work(tasks.size(), 0);

#pragma omp parallel for schedule(dynamic, 1) if (opts.exec == Exec::kParallel)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto probe = [&](std::span<const std::size_t> chosen, std::span<const std::uint64_t> acc) {
      ++work[t];
      BitVec need = from_words(acc, m);
      need ^= inst.b;
      const auto it = table.index.find(need);
      if (it == table.index.end()) return;
      for (std::uint32_t sid : it->second) {
        BitVec x = BitVec::from_support(n, chosen);
        for (std::size_t i = 0; i < table.width; ++i) {
          const std::uint32_t c = table.members[sid * table.width + i];
          if (c != SubsetTable::kNone) x.flip(c);
        }
        keep_best(best[t], std::move(x));
      }
    };
    if (tasks[t].w == 0) {
      const std::vector<std::uint64_t> zero(cols.words(), 0);
      probe({}, zero);
    } else {
      detail::SubsetScan scan(cols, tasks[t].w);
      scan.from(tasks[t].first, probe);
    }
  }

  SolveReport r;
  r.algorithm = "mitm";
  r.work = entries + std::accumulate(work.begin(), work.end(), std::uint64_t{0});
  std::optional<BitVec> winner;
  for (auto& b : best) {
    if (b) keep_best(winner, std::move(*b));
  }
  // A probe can meet a table entry sharing columns; the symmetric difference
  // is still a solution, and never heavier than k.
  if (winner && winner->weight() <= inst.k) r.witness = std::move(winner);
  return r;
}

// k rows with b_r = 1 and pairwise disjoint supports, found greedily by
// increasing support size. Returns up to k + 1 of them.
std::vector<std::vector<std::size_t>> tight_groups(const VectorSumInstance& inst) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < inst.m.rows(); ++i) {
    if (inst.b.get(i) && !inst.m.row(i).is_zero()) rows.push_back(i);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [&](std::size_t a, std::size_t b) { return inst.m.row(a).weight() < inst.m.row(b).weight(); });
  std::vector<std::vector<std::size_t>> groups;
  BitVec used(inst.m.cols());
  for (std::size_t r : rows) {
    const BitVec& row = inst.m.row(r);
    if (!(row & used).is_zero()) continue;
    used ^= row;
    groups.push_back(row.support());
    if (groups.size() > inst.k) break;
  }
  return groups;
}

class GroupedSearch {
 public:
  GroupedSearch(const VectorSumInstance& inst, std::vector<std::vector<std::size_t>> groups)
      : inst_(inst), groups_(std::move(groups)), words_(BitVec::word_count(inst.m.rows())) {
    std::vector<std::size_t> group_of(inst.m.cols(), kNone);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (std::size_t c : groups_[g]) group_of[c] = g;
    }
    // Rows restricted to the kept columns, as sets of groups.
    row_groups_.resize(inst.m.rows());
    for (std::size_t i = 0; i < inst.m.rows(); ++i) {
      for (std::size_t c : inst.m.row(i).support()) {
        if (group_of[c] != kNone) row_groups_[i].push_back(group_of[c]);
      }
      std::sort(row_groups_[i].begin(), row_groups_[i].end());
      row_groups_[i].erase(std::unique(row_groups_[i].begin(), row_groups_[i].end()), row_groups_[i].end());
    }
    const auto cols = inst.m.columns();
    packed_.resize(inst.m.cols() * words_);
    for (std::size_t c = 0; c < inst.m.cols(); ++c) {
      std::copy(cols[c].words().begin(), cols[c].words().end(), packed_.begin() + static_cast<std::ptrdiff_t>(c * words_));
    }
  }

  // Rows no kept column touches must already match b.
  bool trivially_infeasible() const {
    for (std::size_t i = 0; i < row_groups_.size(); ++i) {
      if (row_groups_[i].empty() && inst_.b.get(i)) return true;
    }
    return std::any_of(groups_.begin(), groups_.end(), [](const auto& g) { return g.empty(); });
  }

  std::size_t group_count() const { return groups_.size(); }

  // Greedy order: repeatedly take the group closing the most rows, ties by
  // smaller group, then index.
  std::vector<std::size_t> order(std::vector<std::size_t> pool) const {
    std::vector<std::size_t> out;
    std::vector<bool> chosen(groups_.size(), false);
    while (!pool.empty()) {
      std::size_t best = 0;
      std::size_t best_closed = 0;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        const std::size_t g = pool[p];
        std::size_t closed = 0;
        for (const auto& rg : row_groups_) {
          if (!std::binary_search(rg.begin(), rg.end(), g)) continue;
          const bool all = std::all_of(rg.begin(), rg.end(), [&](std::size_t h) { return h == g || chosen[h]; });
          if (all) ++closed;
        }
        const auto key = [&](std::size_t q, std::size_t cl) {
          return std::tuple(-static_cast<long long>(cl), groups_[q].size(), q);
        };
        if (p == 0 || key(g, closed) < key(pool[best], best_closed)) {
          best = p;
          best_closed = closed;
        }
      }
      chosen[pool[best]] = true;
      out.push_back(pool[best]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
  }

  // Enumerates one column per group of `half` (in that order), pruning rows
  // whose groups all lie in `half`. visit(choice, syndrome words).
  template <typename Visit>
  std::uint64_t enumerate(const std::vector<std::size_t>& half, std::size_t first_choice, Visit&& visit) const {
    if (half.empty()) {
      const std::vector<std::uint64_t> zero(words_, 0);
      visit(std::span<const std::size_t>(), std::span<const std::uint64_t>(zero));
      return 0;
    }
    std::vector<std::size_t> pos(groups_.size(), kNone);
    for (std::size_t d = 0; d < half.size(); ++d) pos[half[d]] = d;
    std::vector<std::vector<std::size_t>> closes(half.size());
    for (std::size_t i = 0; i < row_groups_.size(); ++i) {
      const auto& rg = row_groups_[i];
      if (rg.empty()) continue;
      std::size_t last = 0;
      bool inside = true;
      for (std::size_t g : rg) {
        if (pos[g] == kNone) {
          inside = false;
          break;
        }
        last = std::max(last, pos[g]);
      }
      if (inside) closes[last].push_back(i);
    }
    std::vector<std::uint64_t> acc((half.size() + 1) * words_, 0);
    std::vector<std::size_t> choice(half.size());
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
      if (depth == half.size()) {
        visit(std::span<const std::size_t>(choice), std::span<const std::uint64_t>(acc.data() + depth * words_, words_));
        return;
      }
      const auto& group = groups_[half[depth]];
      const std::size_t lo = depth == 0 ? first_choice : 0;
      const std::size_t hi = depth == 0 ? first_choice + 1 : group.size();
      for (std::size_t idx = lo; idx < hi; ++idx) {
        ++nodes;
        const std::size_t c = group[idx];
        const std::uint64_t* in = acc.data() + depth * words_;
        std::uint64_t* out = acc.data() + (depth + 1) * words_;
        const std::uint64_t* col = packed_.data() + c * words_;
        for (std::size_t w = 0; w < words_; ++w) out[w] = in[w] ^ col[w];
        bool ok = true;
        for (std::size_t row : closes[depth]) {
          if (((out[row / 64] >> (row % 64)) & 1u) != inst_.b.get(row)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        choice[depth] = c;
        self(self, depth + 1);
      }
    };
    dfs(dfs, 0);
    return nodes;
  }

  const std::vector<std::size_t>& group(std::size_t g) const { return groups_[g]; }
  std::size_t words() const { return words_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const VectorSumInstance& inst_;
  std::vector<std::vector<std::size_t>> groups_;
  std::size_t words_;
  std::vector<std::vector<std::size_t>> row_groups_;
  std::vector<std::uint64_t> packed_;
};

SolveReport grouped_mitm(const VectorSumInstance& inst, std::vector<std::vector<std::size_t>> groups,
                         const SolveOptions& opts) {
  SolveReport r;
  r.algorithm = "mitm-grouped";
  const std::size_t n = inst.m.cols();
  const std::size_t m = inst.m.rows();
  GroupedSearch search(inst, std::move(groups));
  if (search.trivially_infeasible()) return r;

  std::vector<std::size_t> all(search.group_count());
  std::iota(all.begin(), all.end(), 0);
  const auto ordered = search.order(all);
  const std::size_t split = (ordered.size() + 1) / 2;
  const auto first_half = search.order({ordered.begin(), ordered.begin() + static_cast<std::ptrdiff_t>(split)});
  const auto second_half = search.order({ordered.begin() + static_cast<std::ptrdiff_t>(split), ordered.end()});

  // Count both halves, tabulate the smaller one.
  auto count = [&](const std::vector<std::size_t>& half) {
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
    const std::size_t firsts = half.empty() ? 1 : search.group(half[0]).size();
    for (std::size_t f = 0; f < firsts; ++f) {
      nodes += search.enumerate(half, f, [&](auto, auto) { ++leaves; });
    }
    return std::pair{leaves, nodes};
  };
  const auto [leaves_a, nodes_a] = count(first_half);
  const auto [leaves_b, nodes_b] = count(second_half);
  r.work = nodes_a + nodes_b;
  const bool a_is_table = leaves_a <= leaves_b;
  const auto& table_half = a_is_table ? first_half : second_half;
  const auto& probe_half = a_is_table ? second_half : first_half;
  const std::uint64_t table_size = std::min(leaves_a, leaves_b);
  if (table_size > opts.memory_cap) {
    throw ResourceError("solve_mitm: grouped table of " + std::to_string(table_size) + " entries exceeds the memory cap");
  }
  if (leaves_a == 0 || leaves_b == 0) return r;

  const std::size_t width = table_half.size();
  std::vector<std::uint32_t> members;
  members.reserve(table_size * width);
  std::unordered_map<BitVec, std::vector<std::uint32_t>> index;
  std::uint32_t id = 0;
  const std::size_t table_firsts = table_half.empty() ? 1 : search.group(table_half[0]).size();
  for (std::size_t f = 0; f < table_firsts; ++f) {
    search.enumerate(table_half, f, [&](std::span<const std::size_t> choice, std::span<const std::uint64_t> acc) {
      for (std::size_t c : choice) members.push_back(static_cast<std::uint32_t>(c));
      BitVec key = from_words(acc, m);
      key ^= inst.b;
      index[std::move(key)].push_back(id++);
    });
  }

  const std::size_t probe_firsts = probe_half.empty() ? 1 : search.group(probe_half[0]).size();
  std::vector<std::optional<BitVec>> best(probe_firsts);
#pragma omp parallel for schedule(dynamic, 1) if (opts.exec == Exec::kParallel)
  for (std::size_t f = 0; f < probe_firsts; ++f) {
    search.enumerate(probe_half, f, [&](std::span<const std::size_t> choice, std::span<const std::uint64_t> acc) {
      const auto it = index.find(from_words(acc, m));
      if (it == index.end()) return;
      for (std::uint32_t sid : it->second) {
        BitVec x = BitVec::from_support(n, choice);
        for (std::size_t i = 0; i < width; ++i) x.set(members[sid * width + i]);
        keep_best(best[f], std::move(x));
      }
    });
  }
  std::optional<BitVec> winner;
  for (auto& b : best) {
    if (b) keep_best(winner, std::move(*b));
  }
  r.witness = std::move(winner);
  return r;
}

}  // namespace

SolveReport solve_mitm(const VectorSumInstance& inst, const SolveOptions& opts) {
  inst.validate();
  if (inst.b.is_zero()) return zero_solution(inst, "mitm");
  auto groups = tight_groups(inst);
  if (groups.size() > inst.k) {
    // More than k disjoint odd constraints: every solution has weight > k.
    SolveReport r;
    r.algorithm = "mitm-grouped";
    r.work = 1;
    return r;
  }
  if (groups.size() == inst.k) return finish(inst, grouped_mitm(inst, std::move(groups), opts));
  return finish(inst, plain_mitm(inst, opts));
}

// ---- breadth-first search ----

SolveReport solve_bfs(const VectorSumInstance& inst, const SolveOptions& opts) {
  inst.validate();
  if (inst.b.is_zero()) return zero_solution(inst, "bfs");
  const std::size_t m = inst.m.rows();
  if (m >= 63 || (std::uint64_t{1} << m) > std::min(opts.enumeration_cap, opts.memory_cap)) {
    throw ResourceError("solve_bfs: 2^" + std::to_string(m) + " syndromes exceed the cap");
  }
  const std::uint64_t states = std::uint64_t{1} << m;

  // Distinct nonzero column values, each labeled by its first column index.
  std::vector<std::uint64_t> value;
  std::vector<std::size_t> label;
  {
    std::unordered_map<std::uint64_t, std::size_t> seen;
    const auto cols = inst.m.columns();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint64_t v = cols[c].low_word();
      if (v == 0 || seen.count(v)) continue;
      seen.emplace(v, c);
      value.push_back(v);
      label.push_back(c);
    }
  }

  constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> dist(states, kUnseen);
  std::vector<std::uint32_t> parent(states, 0);
  dist[0] = 0;
  const std::uint64_t target = inst.b.low_word();
  const std::size_t max_level = std::min<std::size_t>(inst.k, kUnseen - 1);

  SolveReport r;
  r.algorithm = "bfs";
  for (std::size_t level = 1; level <= max_level && dist[target] == kUnseen; ++level) {
    std::uint64_t discovered = 0;
    const auto prev = static_cast<std::uint8_t>(level - 1);
#pragma omp parallel for schedule(static) reduction(+ : discovered) if (opts.exec == Exec::kParallel)
    for (std::uint64_t u = 0; u < states; ++u) {
      if (std::atomic_ref<std::uint8_t>(dist[u]).load(std::memory_order_relaxed) != kUnseen) continue;
      for (std::size_t c = 0; c < value.size(); ++c) {
        if (std::atomic_ref<std::uint8_t>(dist[u ^ value[c]]).load(std::memory_order_relaxed) == prev) {
          parent[u] = static_cast<std::uint32_t>(c);
          std::atomic_ref<std::uint8_t>(dist[u]).store(static_cast<std::uint8_t>(level), std::memory_order_relaxed);
          ++discovered;
          break;
        }
      }
    }
    r.work += states;
    if (discovered == 0) break;
  }
  if (dist[target] == kUnseen) return r;

  // Walk back to 0; repeated labels cancel in pairs.
  BitVec x(inst.m.cols());
  for (std::uint64_t u = target; u != 0; u ^= value[parent[u]]) x.flip(label[parent[u]]);
  r.witness = std::move(x);
  return finish(inst, std::move(r));
}

}  // namespace sparsef2
