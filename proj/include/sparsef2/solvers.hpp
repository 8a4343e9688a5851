#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsef2/bitvec.hpp"
#include "sparsef2/common.hpp"
#include "sparsef2/instances.hpp"

namespace sparsef2 {

// feasible implies a witness of weight <= k that was re-verified against the
// instance. For evenset_min_weight an infeasible report may still carry the
// minimum-weight kernel vector when one was found.
struct SolveReport {
  bool feasible = false;
  std::optional<BitVec> witness;
  std::optional<std::size_t> weight;
  std::string algorithm;
  std::uint64_t work = 0;
};

struct SolveOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t memory_cap = kDefaultMemoryCap;
  Exec exec = Exec::kParallel;
};

// Minimal weight, support-least among minimal witnesses. x = 0 when b = 0.
SolveReport solve_exhaustive(const VectorSumInstance& inst, const SolveOptions& opts = {});

// Meet in the middle. When k rows with b_r = 1 have pairwise disjoint
// supports, every solution of weight <= k takes exactly one column from each
// of those supports; the search then runs over those groups ("mitm-grouped").
// Otherwise a syndrome table of all <= ceil(k/2)-subsets is probed with
// b + (<= floor(k/2)-subsets) ("mitm"). Same answer as solve_exhaustive.
SolveReport solve_mitm(const VectorSumInstance& inst, const SolveOptions& opts = {});

// Breadth-first search over the 2^m syndromes, edges labeled by columns.
SolveReport solve_bfs(const VectorSumInstance& inst, const SolveOptions& opts = {});

struct EvenSetSolveOptions {
  std::size_t max_exhaustive_dim = 24;
  std::optional<std::size_t> weight_cap;  // sparse search bound; defaults to E.k
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  Exec exec = Exec::kParallel;
};
// Minimum weight of a nonzero kernel vector; feasible iff it is <= E.k.
SolveReport evenset_min_weight(const EvenSetInstance& e, const EvenSetSolveOptions& opts = {});

struct ParityAgreement {
  std::vector<std::size_t> support;  // variables of the form, sorted
  bool constant = false;             // form + 1
  std::uint64_t agreed = 0;
  std::uint64_t total = 0;
  double fraction() const { return total ? static_cast<double>(agreed) / static_cast<double>(total) : 0.0; }
};

// Best linear form on at most k variables (the zero form included), optionally
// with a constant term. Ties: lighter support, then lexicographic, then no constant.
ParityAgreement best_parity_agreement(const PointValueSet& pv, std::size_t k, bool homogeneous_only,
                                      std::uint64_t cap = kDefaultEnumerationCap, Exec exec = Exec::kParallel);
// Every homogeneous form on at most k variables, in the same order; the
// agreement of form + 1 is total - agreed.
std::vector<ParityAgreement> all_parity_agreements(const PointValueSet& pv, std::size_t k,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

struct JuntaAgreement {
  std::vector<std::size_t> support;
  std::uint64_t agreed = 0;
  std::uint64_t total = 0;
  double fraction() const { return total ? static_cast<double>(agreed) / static_cast<double>(total) : 0.0; }
};
// Majority function per pattern on each support of size min(k, n).
JuntaAgreement best_junta_agreement(const PointValueSet& pv, std::size_t k,
                                    std::uint64_t cap = kDefaultEnumerationCap, Exec exec = Exec::kParallel);

struct PolyAgreement {
  std::vector<std::size_t> support;
  std::vector<std::vector<std::size_t>> monomials;  // each a sorted variable list; {} is the constant 1
  // advantage = numerator / denominator, with denominator = points * 2^|support|
  std::int64_t numerator = 0;
  std::uint64_t denominator = 1;
  double advantage() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};
// Max over nonzero polynomials of degree <= d on at most k variables of
// Pr_points[P = 0] - Pr_uniform[P = 0].
PolyAgreement poly_agreement_bound(const std::vector<BitVec>& points, std::size_t k, std::size_t d,
                                   std::uint64_t cap = kDefaultEnumerationCap, Exec exec = Exec::kParallel);

}  // namespace sparsef2
