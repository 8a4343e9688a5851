#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sparsef2/codes.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/reductions.hpp"
#include "sparsef2/solvers.hpp"

using namespace sparsef2;

namespace {

VectorSumInstance make(std::vector<std::string> rows, const char* b, std::size_t k) {
  VectorSumInstance inst;
  inst.m = BitMat::from_strings(rows);
  inst.b = BitVec::from_string(b);
  inst.k = k;
  return inst;
}

VectorSumInstance random_vectorsum(std::size_t m, std::size_t n, std::size_t k, double p, Rng& rng) {
  VectorSumInstance inst;
  inst.m = BitMat(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) inst.m.set(r, c, bernoulli(rng, p));
  }
  inst.b = BitVec(m);
  for (std::size_t r = 0; r < m; ++r) inst.b.set(r, rng() & 1u);
  inst.k = k;
  return inst;
}

PointValueSet xor_table() {
  PointValueSet pv;
  pv.dim = 2;
  for (const char* s : {"00", "01", "10", "11"}) pv.points.push_back(BitVec::from_string(s));
  pv.values = {0, 1, 1, 0};
  return pv;
}

std::vector<oracle::Bits> dense_points(const std::vector<BitVec>& pts) {
  std::vector<oracle::Bits> out;
  for (const auto& p : pts) out.push_back(oracle::bits(p));
  return out;
}

}  // namespace

TEST(Exhaustive, Examples) {
  const auto yes = solve_exhaustive(make({"10", "01"}, "11", 2));
  EXPECT_TRUE(yes.feasible);
  EXPECT_EQ(yes.witness, BitVec::from_string("11"));
  EXPECT_EQ(yes.weight, std::optional<std::size_t>(2));
  EXPECT_FALSE(solve_exhaustive(make({"10", "01"}, "11", 1)).feasible);
  const auto [inst, layout] = clique_to_vectorsum(Graph::complete(3), 3);
  EXPECT_EQ(solve_exhaustive(inst).weight, std::optional<std::size_t>(6));
}

TEST(Exhaustive, ZeroTargetTakesEmptyWitness) {
  const auto r = solve_exhaustive(make({"10", "01"}, "00", 1));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.weight, std::optional<std::size_t>(0));
  EXPECT_TRUE(r.witness->is_zero());
  EXPECT_TRUE(solve_bfs(make({"10", "01"}, "00", 3)).feasible);
  EXPECT_TRUE(solve_mitm(make({"100", "010"}, "00", 1)).feasible);
}

TEST(Exhaustive, CapIsEnforced) {
  SolveOptions opts;
  opts.enumeration_cap = 10;
  Rng rng(1);
  EXPECT_THROW(solve_exhaustive(random_vectorsum(8, 30, 4, 0.5, rng), opts), ResourceError);
}

TEST(Bfs, Examples) {
  EXPECT_FALSE(solve_bfs(make({"10", "01"}, "11", 1)).feasible);
  const auto r = solve_bfs(make({"10", "01"}, "11", 2));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.witness, BitVec::from_string("11"));
}

TEST(Solvers, ThreeWayAgreementWithOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 10;
    const std::size_t n = 1 + rng() % 16;
    const std::size_t k = 1 + rng() % 4;
    const VectorSumInstance inst = random_vectorsum(m, n, k, trial % 3 == 0 ? 0.2 : 0.5, rng);
    const auto truth = oracle::vectorsum(oracle::dense(inst.m), oracle::bits(inst.b), n, k);
    const auto ex = solve_exhaustive(inst);
    const auto mi = solve_mitm(inst);
    const auto bf = solve_bfs(inst);
    ASSERT_EQ(ex.feasible, truth.feasible) << trial;
    ASSERT_EQ(mi.feasible, truth.feasible) << trial;
    ASSERT_EQ(bf.feasible, truth.feasible) << trial;
    if (truth.feasible) {
      ASSERT_EQ(*ex.weight, truth.weight);
      ASSERT_EQ(*mi.weight, truth.weight);
      ASSERT_EQ(ex.witness->support(), truth.support);
      ASSERT_EQ(mi.witness->support(), truth.support);
      ASSERT_LE(bf.witness->weight(), k);
      ASSERT_EQ(mat_vec_mul(inst.m, *bf.witness), inst.b);
    }
  }
}

TEST(Solvers, SerialAndParallelAgree) {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const VectorSumInstance inst = random_vectorsum(6 + rng() % 5, 10 + rng() % 10, 1 + rng() % 4, 0.4, rng);
    SolveOptions serial;
    serial.exec = Exec::kSerial;
    for (auto solver : {&solve_exhaustive, &solve_mitm, &solve_bfs}) {
      const auto a = solver(inst, serial);
      const auto b = solver(inst, SolveOptions{});
      ASSERT_EQ(a.feasible, b.feasible);
      ASSERT_EQ(a.witness, b.witness);
      ASSERT_EQ(a.work, b.work);
    }
  }
}

TEST(Mitm, GroupedModeOnCliqueGadgets) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(6, 0.6, seed);
    const auto [inst, layout] = clique_to_vectorsum(g, 3);
    const auto r = solve_mitm(inst);
    EXPECT_EQ(r.algorithm, "mitm-grouped");
    const auto ex = solve_exhaustive(inst);
    ASSERT_EQ(r.feasible, ex.feasible);
    ASSERT_EQ(r.witness, ex.witness);
  }
}

TEST(EvenSetMin, Examples) {
  EvenSetInstance e;
  e.m = BitMat::from_strings({"110", "011"});
  e.k = 3;
  const auto r = evenset_min_weight(e);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.weight, std::optional<std::size_t>(3));
  EXPECT_EQ(r.witness, BitVec::from_string("111"));
  e.k = 2;
  EXPECT_FALSE(evenset_min_weight(e).feasible);

  EvenSetInstance id;
  id.m = BitMat::identity(4);
  id.k = 4;
  EXPECT_FALSE(evenset_min_weight(id).feasible);

  EvenSetInstance simplex;
  simplex.m = parity_check_from_generator(*simplex_generator(3).generator);
  simplex.k = 7;
  EXPECT_EQ(evenset_min_weight(simplex).weight, std::optional<std::size_t>(4));
}

TEST(EvenSetMin, MatchesKernelOracleInBothModes) {
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    const std::size_t n = 2 + rng() % 14;
    EvenSetInstance e;
    e.m = BitMat(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) e.m.set(r, c, rng() & 1u);
    }
    e.k = 1 + rng() % 4;
    const auto truth = oracle::min_kernel_weight(oracle::dense(e.m), n);
    const auto r = evenset_min_weight(e);
    ASSERT_EQ(r.feasible, truth && *truth <= e.k) << trial;
    if (r.feasible) ASSERT_EQ(*r.weight, *truth);
    EvenSetSolveOptions sparse;
    sparse.max_exhaustive_dim = 0;
    const auto s = evenset_min_weight(e, sparse);
    ASSERT_EQ(s.feasible, r.feasible);
    if (s.feasible) {
      ASSERT_EQ(s.witness, r.witness);
      ASSERT_EQ(s.algorithm, "evenset-sparse");
    }
  }
}

TEST(Parity, XorTable) {
  const PointValueSet pv = xor_table();
  EXPECT_DOUBLE_EQ(best_parity_agreement(pv, 1, true).fraction(), 0.5);
  const auto two = best_parity_agreement(pv, 2, true);
  EXPECT_DOUBLE_EQ(two.fraction(), 1.0);
  EXPECT_EQ(two.support, (std::vector<std::size_t>{0, 1}));
}

TEST(Parity, PlantedAndOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    PointValueSet pv;
    pv.dim = n;
    const BitVec planted = BitVec::from_support(n, std::vector<std::size_t>{0, n - 1});
    for (std::size_t i = 0; i < 20; ++i) {
      BitVec p(n);
      for (std::size_t j = 0; j < n; ++j) p.set(j, rng() & 1u);
      pv.values.push_back(trial % 2 ? p.dot(planted) : rng() & 1u);
      pv.points.push_back(std::move(p));
    }
    const auto best = best_parity_agreement(pv, 2, false);
    if (trial % 2) ASSERT_DOUBLE_EQ(best.fraction(), 1.0);
    oracle::Bits values(pv.values.begin(), pv.values.end());
    const auto counts = oracle::parity_counts(dense_points(pv.points), values, n, 2);
    std::uint64_t best_count = 0;
    for (const auto& f : counts) best_count = std::max({best_count, f.agreed, pv.size() - f.agreed});
    ASSERT_EQ(best.agreed, best_count);
    const auto all = all_parity_agreements(pv, 2);
    ASSERT_EQ(all.size(), counts.size());
    std::multiset<std::uint64_t> lib, ref;
    for (const auto& f : all) lib.insert(f.agreed);
    for (const auto& f : counts) ref.insert(f.agreed);
    ASSERT_EQ(lib, ref);
  }
}

TEST(Junta, XorTableAndOracle) {
  const PointValueSet pv = xor_table();
  EXPECT_DOUBLE_EQ(best_junta_agreement(pv, 1).fraction(), 0.5);
  EXPECT_DOUBLE_EQ(best_junta_agreement(pv, 2).fraction(), 1.0);
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    PointValueSet r;
    r.dim = n;
    for (std::size_t i = 0; i < 25; ++i) {
      BitVec p(n);
      for (std::size_t j = 0; j < n; ++j) p.set(j, rng() & 1u);
      r.points.push_back(std::move(p));
      r.values.push_back(rng() & 1u);
    }
    oracle::Bits values(r.values.begin(), r.values.end());
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto j = best_junta_agreement(r, k);
      ASSERT_DOUBLE_EQ(j.fraction(), oracle::junta(dense_points(r.points), values, n, k));
      ASSERT_GE(j.fraction(), best_parity_agreement(r, k, false).fraction());
    }
  }
}

TEST(Poly, UniformAndPlanted) {
  std::vector<BitVec> all;
  for (std::uint64_t m = 0; m < 8; ++m) {
    BitVec v(3);
    for (std::size_t i = 0; i < 3; ++i) v.set(i, (m >> i) & 1u);
    all.push_back(v);
  }
  EXPECT_DOUBLE_EQ(poly_agreement_bound(all, 3, 2).advantage(), 0.0);
  // Points on which x1 + x3 = 0.
  std::vector<BitVec> on_plane;
  for (const auto& v : all) {
    if (v.get(0) == v.get(2)) on_plane.push_back(v);
  }
  EXPECT_DOUBLE_EQ(poly_agreement_bound(on_plane, 3, 1).advantage(), 0.5);
}

TEST(Poly, MatchesOracleAndLinearCase) {
  Rng rng(10);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<BitVec> pts;
    for (std::size_t i = 0; i < 12; ++i) {
      BitVec p(n);
      for (std::size_t j = 0; j < n; ++j) p.set(j, rng() & 1u);
      pts.push_back(std::move(p));
    }
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = poly_agreement_bound(pts, 3, d);
      ASSERT_NEAR(p.advantage(), oracle::poly_advantage(dense_points(pts), n, 3, d), 1e-12);
    }
    // Degree 1: best affine nonconstant form, measured against all-zero values.
    PointValueSet pv;
    pv.dim = n;
    pv.points = pts;
    pv.values.assign(pts.size(), 0);
    double best = 0;
    for (const auto& f : all_parity_agreements(pv, 3)) {
      if (f.support.empty()) continue;
      best = std::max(best, static_cast<double>(std::max(f.agreed, f.total - f.agreed)) / f.total - 0.5);
    }
    ASSERT_NEAR(poly_agreement_bound(pts, 3, 1).advantage(), best, 1e-12);
  }
}
