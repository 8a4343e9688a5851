#include <algorithm>
#include <bit>
#include <string>

#include "sparsef2/errors.hpp"
#include "sparsef2/kernels.hpp"
#include "sparsef2/solvers.hpp"
#include "subset_scan.hpp"

namespace sparsef2 {

namespace {

kernels::ColumnPack coordinate_columns(const std::vector<BitVec>& points, std::size_t dim) {
  std::vector<BitVec> cols(dim, BitVec(points.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != dim) throw InputError("point " + std::to_string(p + 1) + " has the wrong length");
    for (std::size_t j : points[p].support()) cols[j].set(p);
  }
  return kernels::ColumnPack(cols, points.size());
}

std::vector<std::uint64_t> value_words(const PointValueSet& pv, std::size_t words) {
  std::vector<std::uint64_t> out(words, 0);
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (pv.values[i]) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

std::uint64_t agreement(std::span<const std::uint64_t> acc, const std::vector<std::uint64_t>& values,
                        std::uint64_t total) {
  std::uint64_t wrong = 0;
  for (std::size_t i = 0; i < values.size(); ++i) wrong += static_cast<std::uint64_t>(std::popcount(acc[i] ^ values[i]));
  return total - wrong;
}

// (w, first) tasks in enumeration order: w = 0 first, then lexicographic.
struct Task {
  std::size_t w;
  std::size_t first;
};
std::vector<Task> subset_tasks(std::size_t n, std::size_t max_w) {
  std::vector<Task> tasks{{0, 0}};
  for (std::size_t w = 1; w <= max_w; ++w) {
    for (std::size_t first = 0; first + w <= n; ++first) tasks.push_back({w, first});
  }
  return tasks;
}

template <typename Visit>
void run_task(const kernels::ColumnPack& cols, const Task& task, Visit&& visit) {
  if (task.w == 0) {
    const std::vector<std::uint64_t> zero(cols.words(), 0);
    visit(std::span<const std::size_t>(), std::span<const std::uint64_t>(zero));
    return;
  }
  detail::SubsetScan scan(cols, task.w);
  scan.from(task.first, visit);
}

}  // namespace

ParityAgreement best_parity_agreement(const PointValueSet& pv, std::size_t k, bool homogeneous_only,
                                      std::uint64_t cap, Exec exec) {
  pv.validate();
  if (pv.size() == 0) throw InputError("best_parity_agreement: empty point-value set");
  const std::size_t s = std::min(k, pv.dim);
  const std::uint64_t forms = saturating_mul(binomial_prefix(pv.dim, s), homogeneous_only ? 1 : 2);
  if (forms > cap) throw ResourceError("best_parity_agreement: " + std::to_string(forms) + " forms exceed the cap");

  const auto cols = coordinate_columns(pv.points, pv.dim);
  const auto values = value_words(pv, cols.words());
  const std::uint64_t total = pv.size();
  const auto tasks = subset_tasks(pv.dim, s);
  std::vector<ParityAgreement> best(tasks.size());
  std::vector<char> has(tasks.size(), 0);

#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    run_task(cols, tasks[t], [&](std::span<const std::size_t> chosen, std::span<const std::uint64_t> acc) {
      const std::uint64_t a = agreement(acc, values, total);
      const auto consider = [&](std::uint64_t agreed, bool constant) {
        if (has[t] && agreed <= best[t].agreed) return;
        has[t] = 1;
        best[t] = ParityAgreement{{chosen.begin(), chosen.end()}, constant, agreed, total};
      };
      consider(a, false);
      if (!homogeneous_only) consider(total - a, true);
    });
  }
  ParityAgreement out;
  bool found = false;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (has[t] && (!found || best[t].agreed > out.agreed)) {
      out = best[t];
      found = true;
    }
  }
  return out;
}

std::vector<ParityAgreement> all_parity_agreements(const PointValueSet& pv, std::size_t k, std::uint64_t cap) {
  pv.validate();
  const std::size_t s = std::min(k, pv.dim);
  const std::uint64_t forms = binomial_prefix(pv.dim, s);
  if (forms > cap) throw ResourceError("all_parity_agreements: " + std::to_string(forms) + " forms exceed the cap");
  const auto cols = coordinate_columns(pv.points, pv.dim);
  const auto values = value_words(pv, cols.words());
  std::vector<ParityAgreement> out;
  out.reserve(forms);
  for (const Task& task : subset_tasks(pv.dim, s)) {
    run_task(cols, task, [&](std::span<const std::size_t> chosen, std::span<const std::uint64_t> acc) {
      out.push_back(ParityAgreement{{chosen.begin(), chosen.end()}, false, agreement(acc, values, pv.size()), pv.size()});
    });
  }
  return out;
}

JuntaAgreement best_junta_agreement(const PointValueSet& pv, std::size_t k, std::uint64_t cap, Exec exec) {
  pv.validate();
  if (pv.size() == 0) throw InputError("best_junta_agreement: empty point-value set");
  const std::size_t s = std::min(k, pv.dim);
  if (s > 24) throw ResourceError("best_junta_agreement: support size above 24");
  const std::uint64_t supports = binomial(pv.dim, s);
  if (saturating_mul(supports, pv.size()) > cap) {
    throw ResourceError("best_junta_agreement: " + std::to_string(supports) + " supports exceed the cap");
  }
  const std::uint64_t total = pv.size();
  auto score = [&](const std::vector<std::size_t>& support, std::vector<std::uint64_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t p = 0; p < pv.size(); ++p) {
      std::size_t pattern = 0;
      for (std::size_t i = 0; i < support.size(); ++i) pattern |= std::size_t{pv.points[p].get(support[i])} << i;
      ++counts[2 * pattern + pv.values[p]];
    }
    std::uint64_t agreed = 0;
    for (std::size_t q = 0; q < counts.size(); q += 2) agreed += std::max(counts[q], counts[q + 1]);
    return agreed;
  };

  if (s == 0) {
    std::vector<std::uint64_t> counts(2);
    return JuntaAgreement{{}, score({}, counts), total};
  }
  const std::size_t firsts = pv.dim + 1 - s;
  std::vector<JuntaAgreement> best(firsts);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
  for (std::size_t first = 0; first < firsts; ++first) {
    std::vector<std::uint64_t> counts(std::size_t{2} << s);
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = first + i;
    bool have = false;
    do {
      if (comb[0] != first) break;
      const std::uint64_t a = score(comb, counts);
      if (!have || a > best[first].agreed) {
        have = true;
        best[first] = JuntaAgreement{comb, a, total};
      }
    } while (next_combination(comb, pv.dim));
  }
  JuntaAgreement out = best[0];
  for (std::size_t f = 1; f < firsts; ++f) {
    if (best[f].agreed > out.agreed) out = best[f];
  }
  return out;
}

PolyAgreement poly_agreement_bound(const std::vector<BitVec>& points, std::size_t k, std::size_t d,
                                   std::uint64_t cap, Exec exec) {
  if (points.empty()) throw InputError("poly_agreement_bound: empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("poly_agreement_bound: points have different lengths");
  }
  const std::size_t s = std::min(k, dim);
  if (s > 6) throw ResourceError("poly_agreement_bound: supports above 6 variables are not enumerable");

  // Monomials on s local variables by degree, then lexicographic.
  std::vector<std::vector<std::size_t>> monomials;
  for (std::size_t deg = 0; deg <= std::min(d, s); ++deg) {
    std::vector<std::size_t> comb(deg);
    for (std::size_t i = 0; i < deg; ++i) comb[i] = i;
    do {
      monomials.push_back(comb);
    } while (deg > 0 && next_combination(comb, s));
  }
  const std::size_t mono = monomials.size();
  if (mono >= 40) throw ResourceError("poly_agreement_bound: too many monomials to enumerate polynomials");
  const std::uint64_t polys = (std::uint64_t{1} << mono) - 1;
  const std::uint64_t supports = binomial(dim, s);
  if (saturating_mul(supports, polys) > cap) {
    throw ResourceError("poly_agreement_bound: " + std::to_string(supports) + " supports x " + std::to_string(polys) +
                        " polynomials exceed the cap");
  }

  const std::size_t patterns = std::size_t{1} << s;
  std::vector<std::uint64_t> mono_table(mono, 0);
  for (std::size_t i = 0; i < mono; ++i) {
    for (std::size_t p = 0; p < patterns; ++p) {
      const bool on = std::all_of(monomials[i].begin(), monomials[i].end(), [&](std::size_t v) { return (p >> v) & 1u; });
      if (on) mono_table[i] |= std::uint64_t{1} << p;
    }
  }

  const auto m = static_cast<std::int64_t>(points.size());
  struct Best {
    bool have = false;
    std::int64_t num = 0;
    std::uint64_t mask = 0;
    std::vector<std::size_t> support;
  };
  auto better = [](std::int64_t num, std::uint64_t mask, const Best& b) {
    return !b.have || num > b.num || (num == b.num && mask < b.mask);
  };
  auto scan_support = [&](const std::vector<std::size_t>& support, Best& best) {
    std::vector<std::int64_t> hist(patterns, 0);
    for (const auto& pt : points) {
      std::size_t pattern = 0;
      for (std::size_t i = 0; i < support.size(); ++i) pattern |= std::size_t{pt.get(support[i])} << i;
      ++hist[pattern];
    }
    std::uint64_t table = 0;
    Best local;
    for (std::uint64_t g = 1; g <= polys; ++g) {
      table ^= mono_table[static_cast<std::size_t>(std::countr_zero(g))];
      const std::uint64_t mask = g ^ (g >> 1);
      std::int64_t ones = 0;
      for (std::uint64_t rest = table; rest; rest &= rest - 1) ones += hist[static_cast<std::size_t>(std::countr_zero(rest))];
      const auto zeros_unif = static_cast<std::int64_t>(patterns) - std::popcount(table);
      const std::int64_t num = (m - ones) * static_cast<std::int64_t>(patterns) - zeros_unif * m;
      if (better(num, mask, local)) local = Best{true, num, mask, {}};
    }
    if (local.have && (!best.have || local.num > best.num)) {
      best = local;
      best.support = support;
    }
  };

  Best out;
  if (s == 0) {
    scan_support({}, out);
  } else {
    const std::size_t firsts = dim + 1 - s;
    std::vector<Best> best(firsts);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
    for (std::size_t first = 0; first < firsts; ++first) {
      std::vector<std::size_t> comb(s);
      for (std::size_t i = 0; i < s; ++i) comb[i] = first + i;
      do {
        if (comb[0] != first) break;
        scan_support(comb, best[first]);
      } while (next_combination(comb, dim));
    }
    for (auto& b : best) {
      if (b.have && (!out.have || b.num > out.num)) out = std::move(b);
    }
  }

  PolyAgreement result;
  result.support = out.support;
  result.numerator = out.num;
  result.denominator = static_cast<std::uint64_t>(m) * patterns;
  for (std::size_t i = 0; i < mono; ++i) {
    if ((out.mask >> i) & 1u) {
      std::vector<std::size_t> vars;
      for (std::size_t v : monomials[i]) vars.push_back(out.support.empty() ? v : out.support[v]);
      result.monomials.push_back(std::move(vars));
    }
  }
  return result;
}

}  // namespace sparsef2
