#include <string>

#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/kernels.hpp"
#include "subset_scan.hpp"

namespace sparsef2 {

namespace {

// Column j holds coordinate j of every point.
kernels::ColumnPack point_columns(const std::vector<BitVec>& points) {
  const std::size_t n = points.front().size();
  std::vector<BitVec> cols(n, BitVec(points.size()));
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != n) throw InputError("distribution_bias: points have different lengths");
    for (std::size_t j : points[p].support()) cols[j].set(p);
  }
  return kernels::ColumnPack(cols, points.size());
}

}  // namespace

BiasReport distribution_bias(const std::vector<BitVec>& points, std::size_t support_cap, std::uint64_t cap,
                             Exec exec) {
  if (points.empty()) throw InputError("distribution_bias: empty point set");
  const std::size_t n = points.front().size();
  const std::size_t s = std::min(support_cap, n);
  const std::uint64_t forms = binomial_prefix(n, s);
  if (saturating_mul(forms, BitVec::word_count(points.size())) > cap) {
    throw ResourceError("distribution_bias: " + std::to_string(forms) + " forms exceed the enumeration cap");
  }
  const auto cols = point_columns(points);
  const std::uint64_t m = points.size();

  BiasReport report;
  report.points = m;
  bool found = false;
  for (std::size_t w = 1; w <= s; ++w) {
    const std::size_t firsts = n + 1 - w;
    std::vector<std::uint64_t> best(firsts, 0);
    std::vector<std::vector<std::size_t>> arg(firsts);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::kParallel)
    for (std::size_t first = 0; first < firsts; ++first) {
      detail::SubsetScan scan(cols, w);
      bool any = false;
      scan.from(first, [&](std::span<const std::size_t> chosen, std::span<const std::uint64_t> acc) {
        const std::uint64_t ones = detail::popcount(acc);
        const std::uint64_t num = ones * 2 > m ? ones * 2 - m : m - ones * 2;
        if (!any || num > best[first]) {
          any = true;
          best[first] = num;
          arg[first].assign(chosen.begin(), chosen.end());
        }
      });
    }
    for (std::size_t first = 0; first < firsts; ++first) {
      if (!found || best[first] > report.numerator) {
        found = true;
        report.numerator = best[first];
        report.support = arg[first];
      }
    }
  }
  report.bias = static_cast<double>(report.numerator) / static_cast<double>(m);
  return report;
}

}  // namespace sparsef2
