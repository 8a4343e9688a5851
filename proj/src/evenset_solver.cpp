#include <stdexcept>
#include <string>

#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/kernels.hpp"
#include "sparsef2/linalg.hpp"
#include "sparsef2/solvers.hpp"

namespace sparsef2 {

SolveReport evenset_min_weight(const EvenSetInstance& e, const EvenSetSolveOptions& opts) {
  e.validate();
  const std::size_t n = e.m.cols();
  SolveReport r;
  const auto basis = nullspace_basis(e.m);
  if (basis.empty()) {
    r.algorithm = "evenset-kernel";
    r.work = 1;
    return r;
  }

  if (basis.size() <= opts.max_exhaustive_dim) {
    r.algorithm = "evenset-kernel";
    LinearCode code = LinearCode::from_generator(BitMat::from_columns(basis, n));
    min_distance(code, MinDistanceOptions{opts.max_exhaustive_dim, std::nullopt, opts.enumeration_cap}, opts.exec);
    r.work = std::uint64_t{1} << basis.size();
    r.witness = code.dist_cert->witness;
  } else {
    r.algorithm = "evenset-sparse";
    const std::size_t cap_w = std::min(opts.weight_cap.value_or(e.k), n);
    const std::uint64_t subsets = binomial_prefix(n, cap_w);
    if (subsets > opts.enumeration_cap) {
      throw ResourceError("evenset_min_weight: kernel dimension " + std::to_string(basis.size()) +
                          " is too large to enumerate and " + std::to_string(subsets) +
                          " supports exceed the enumeration cap");
    }
    const kernels::ColumnPack cols(e.m);
    const std::vector<std::uint64_t> zero(cols.words(), 0);
    const auto hit = kernels::find_lightest_combination(cols, zero, 1, cap_w, opts.exec);
    r.work = hit.work;
    if (hit.support) r.witness = BitVec::from_support(n, *hit.support);
  }

  if (r.witness) {
    if (r.witness->is_zero() || !mat_vec_mul(e.m, *r.witness).is_zero()) {
      throw std::logic_error("evenset_min_weight: witness does not verify");
    }
    r.weight = r.witness->weight();
    r.feasible = *r.weight <= e.k;
  }
  return r;
}

}  // namespace sparsef2
