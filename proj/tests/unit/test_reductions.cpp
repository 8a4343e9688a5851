#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sparsef2/errors.hpp"
#include "sparsef2/graph.hpp"
#include "sparsef2/linalg.hpp"
#include "sparsef2/reductions.hpp"
#include "sparsef2/solvers.hpp"

using namespace sparsef2;

namespace {

std::size_t bit_length(std::size_t x) {
  std::size_t n = 0;
  while (x) {
    ++n;
    x >>= 1;
  }
  return n;
}

// Expected gadget columns written out from the construction: pattern of
// vertex v is the binary encoding of v; slot j owns k - 1 subslots of N bits.
BitMat expected_gadget(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  const std::size_t bits = bit_length(n);
  const std::size_t pairs = k * (k - 1) / 2;
  const std::size_t rows = k * (k - 1) * bits + pairs + k;
  std::vector<BitVec> cols;
  auto put_pattern = [&](BitVec& col, std::size_t slot, std::size_t sub, std::size_t v) {
    const std::size_t base = ((slot - 1) * (k - 1) + (sub - 1)) * bits;
    for (std::size_t b = 0; b < bits; ++b) col.set(base + b, (v >> b) & 1u);
  };
  auto pair_pos = [&](std::size_t j1, std::size_t j2) {
    std::size_t idx = 0;
    for (std::size_t a = 1; a <= k; ++a) {
      for (std::size_t b = a + 1; b <= k; ++b) {
        if (a == j1 && b == j2) return idx;
        ++idx;
      }
    }
    return idx;
  };
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t j = 1; j <= k; ++j) {
      BitVec col(rows);
      for (std::size_t sub = 1; sub < k; ++sub) put_pattern(col, j, sub, v);
      col.set(k * (k - 1) * bits + pairs + (j - 1));
      cols.push_back(col);
    }
  }
  for (const auto& [u, v] : g.edges()) {
    for (std::size_t j1 = 1; j1 <= k; ++j1) {
      for (std::size_t j2 = j1 + 1; j2 <= k; ++j2) {
        BitVec col(rows);
        put_pattern(col, j1, j2 - 1, u);
        put_pattern(col, j2, j1, v);
        col.set(k * (k - 1) * bits + pair_pos(j1, j2));
        cols.push_back(col);
      }
    }
  }
  return BitMat::from_columns(cols, rows);
}

VectorSumInstance random_vectorsum(std::size_t m, std::size_t n, std::size_t k, Rng& rng) {
  VectorSumInstance inst;
  inst.m = BitMat(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) inst.m.set(r, c, rng() & 1u);
  }
  inst.b = BitVec(m);
  for (std::size_t r = 0; r < m; ++r) inst.b.set(r, rng() & 1u);
  inst.k = k;
  return inst;
}

std::vector<oracle::Bits> dense_points(const std::vector<BitVec>& pts) {
  std::vector<oracle::Bits> out;
  for (const auto& p : pts) out.push_back(oracle::bits(p));
  return out;
}

oracle::Bits dense_values(const PointValueSet& pv) {
  oracle::Bits out;
  for (unsigned char v : pv.values) out.push_back(v);
  return out;
}

EvenSetConfig desk_config() {
  EvenSetConfig cfg;
  cfg.sketch_rows = 4;
  cfg.big_k = 6;
  cfg.r = 3;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST(CliqueGadget, K3Dimensions) {
  const auto [inst, layout] = clique_to_vectorsum(Graph::complete(3), 3);
  EXPECT_EQ(layout.bits, 2u);
  EXPECT_EQ(inst.m.rows(), 18u);
  EXPECT_EQ(inst.m.cols(), 18u);
  EXPECT_EQ(inst.k, 6u);
  const auto sol = oracle::vectorsum(oracle::dense(inst.m), oracle::bits(inst.b), 18, 6);
  EXPECT_TRUE(sol.feasible);
  EXPECT_EQ(sol.weight, 6u);
}

TEST(CliqueGadget, PathHasNoSolution) {
  const auto [inst, layout] = clique_to_vectorsum(Graph::path(3), 3);
  EXPECT_EQ(inst.m.cols(), 15u);
  EXPECT_FALSE(oracle::vectorsum(oracle::dense(inst.m), oracle::bits(inst.b), 15, 6).feasible);
}

TEST(CliqueGadget, SingleEdge) {
  const Graph g(2, {{1, 2}});
  const auto [inst, layout] = clique_to_vectorsum(g, 2);
  EXPECT_EQ(inst.m.rows(), 7u);
  const BitVec x = assemble_clique_solution(layout, {1, 2});
  EXPECT_EQ(x.weight(), 3u);
  EXPECT_EQ(mat_vec_mul(inst.m, x), inst.b);
  const auto sol = oracle::vectorsum(oracle::dense(inst.m), oracle::bits(inst.b), inst.m.cols(), 3);
  EXPECT_TRUE(sol.feasible);
  EXPECT_EQ(sol.weight, 3u);
}

TEST(CliqueGadget, MatrixMatchesConstruction) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = random_graph(4 + seed % 5, 0.5, seed);
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto [inst, layout] = clique_to_vectorsum(g, k);
      ASSERT_EQ(inst.m, expected_gadget(g, k));
      for (std::size_t r = 0; r < inst.b.size(); ++r) {
        ASSERT_EQ(inst.b.get(r), r >= k * (k - 1) * layout.bits);
      }
      ASSERT_EQ(inst.k, k + k * (k - 1) / 2);
    }
  }
  EXPECT_THROW(clique_to_vectorsum(Graph::complete(3), 4), InputError);
}

TEST(CliqueGadget, FeasibilityMatchesCliqueOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 4 + seed % 3;
    const Graph g = random_graph(n, seed % 2 ? 0.4 : 0.7, seed);
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto [inst, layout] = clique_to_vectorsum(g, k);
      const auto sol = oracle::vectorsum(oracle::dense(inst.m), oracle::bits(inst.b), inst.m.cols(), inst.k);
      ASSERT_EQ(sol.feasible, oracle::has_clique(g, k)) << seed << " " << k;
      if (sol.feasible) {
        ASSERT_EQ(sol.weight, inst.k);
        const BitVec x = BitVec::from_support(inst.m.cols(), sol.support);
        const auto clique = extract_clique(layout, inst, x);
        ASSERT_TRUE(is_clique(g, clique));
      }
    }
  }
}

TEST(CliqueGadget, WitnessRoundTrip) {
  const auto [inst, layout] = clique_to_vectorsum(Graph::complete(3), 3);
  const BitVec x = assemble_clique_solution(layout, {3, 1, 2});
  EXPECT_EQ(x.weight(), 6u);
  EXPECT_EQ(extract_clique(layout, inst, x), (std::vector<std::size_t>{1, 2, 3}));

  const auto [inst4, layout4] = clique_to_vectorsum(Graph::complete(4), 3);
  const auto r = solve_mitm(inst4);
  ASSERT_TRUE(r.feasible);
  const auto c = extract_clique(layout4, inst4, *r.witness);
  EXPECT_TRUE(is_clique(Graph::complete(4), c));
}

TEST(CliqueGadget, MalformedWitnessesRejected) {
  const Graph g = Graph::complete(4);
  const auto [inst, layout] = clique_to_vectorsum(g, 3);
  BitVec two_in_slot = assemble_clique_solution(layout, {1, 2, 3});
  two_in_slot.set(layout.vertex_column(4, 1));
  EXPECT_THROW(extract_clique(layout, inst, two_in_slot), WitnessError);
  BitVec broken = assemble_clique_solution(layout, {1, 2, 3});
  broken.flip(layout.vertex_column(1, 1));
  EXPECT_THROW(extract_clique(layout, inst, broken), WitnessError);
  EXPECT_THROW(extract_clique(layout, inst, BitVec(3)), WitnessError);
}

TEST(EvenSet, DeskLayoutVariableCount) {
  VectorSumInstance src;
  src.m = BitMat::identity(3);
  src.b = BitVec::from_string("010");
  src.k = 1;
  const auto [e, layout] = vectorsum_to_evenset(src, desk_config());
  EXPECT_EQ(layout.variable_count(), 154u);
  EXPECT_EQ(e.m.cols(), 154u);
  EXPECT_EQ(e.k, 40u);
}

TEST(EvenSet, CompletenessOnRandomYesInstances) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t k = 1 + rng() % 2;
    VectorSumInstance src = random_vectorsum(2 + rng() % 4, n, k, rng);
    BitVec x(n);
    while (x.is_zero()) {
      for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1u);
      if (x.weight() > k) x.clear();
    }
    src.b = mat_vec_mul(src.m, x);
    if (src.b.is_zero()) continue;
    const auto [e, layout] = vectorsum_to_evenset(src, desk_config());
    const BitVec w = assemble_evenset_witness(layout, src, x);
    ASSERT_TRUE(mat_vec_mul(e.m, w).is_zero());
    ASSERT_EQ(w.weight(), 36 + 3 * x.weight() + 1);
    ASSERT_TRUE(w.get(0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 1; c < 3; ++c) ASSERT_EQ(w.get(1 + c * n + j), x.get(j));
    }
    // Exactly one Z indicator per cell.
    for (std::size_t cell = 0; cell < 36; ++cell) {
      std::size_t ones = 0;
      for (std::size_t v = 0; v < 4; ++v) ones += w.get(1 + 3 * n + cell * 4 + v);
      ASSERT_EQ(ones, 1u);
    }
  }
}

TEST(EvenSet, DistinctWitnessesGiveDistinctAssignments) {
  VectorSumInstance src;
  src.m = BitMat::from_strings({"1100", "0011"});
  src.b = BitVec::from_string("11");
  src.k = 2;
  const auto [e, layout] = vectorsum_to_evenset(src, desk_config());
  const BitVec w1 = assemble_evenset_witness(layout, src, BitVec::from_string("1010"));
  const BitVec w2 = assemble_evenset_witness(layout, src, BitVec::from_string("0101"));
  EXPECT_NE(w1, w2);
  EXPECT_TRUE(mat_vec_mul(e.m, w1).is_zero());
  EXPECT_TRUE(mat_vec_mul(e.m, w2).is_zero());
  EXPECT_THROW(assemble_evenset_witness(layout, src, BitVec(4)), WitnessError);
  EXPECT_THROW(assemble_evenset_witness(layout, src, BitVec::from_string("1000")), WitnessError);
}

TEST(EvenSet, ValidatorRejectsWeakSketch) {
  VectorSumInstance src;
  src.m = BitMat::identity(6);
  src.b = BitVec::from_string("100000");
  src.k = 2;
  EvenSetConfig cfg;
  cfg.sketch_rows = 4;
  cfg.big_k = 6;
  cfg.r = 3;
  EXPECT_THROW(vectorsum_to_evenset(src, cfg), ConfigError);
}

TEST(EvenSet, KernelSamplesFollowTheCaseAnalysis) {
  VectorSumInstance src;
  src.m = BitMat::from_strings({"1100", "0110", "1011"});
  src.b = BitVec::from_string("111");
  src.k = 1;
  ASSERT_FALSE(solve_exhaustive(src).feasible);
  const auto [e, layout] = vectorsum_to_evenset(src, desk_config());
  const auto basis = nullspace_basis(e.m);
  ASSERT_FALSE(basis.empty());
  const auto code_weights = oracle::codeword_weights(oracle::dense(layout.mixing), layout.mixing.cols());
  const std::size_t d = *std::min_element(code_weights.begin(), code_weights.end());
  Rng rng(2);
  std::size_t case_iii = 0;
  for (int s = 0; s < 3000; ++s) {
    BitVec v(e.m.cols());
    for (const auto& b : basis) {
      if (rng() & 1u) v ^= b;
    }
    if (v.is_zero()) continue;
    std::size_t z = 0;
    for (std::size_t i = 1 + 3 * 4; i < v.size(); ++i) z += v.get(i);
    ASSERT_EQ(z, evenset_z_weight(layout, v));
    if (v.get(0)) ASSERT_GE(z, 36u);
    const bool x_zero = v.slice(1, 4).is_zero();
    if (v.get(0) || !x_zero) {
      // a0 = 1, or a0 = 0 with x != 0: the threshold holds.
      ASSERT_GE(v.weight(), layout.threshold());
      continue;
    }
    // a0 = 0, x = 0: every cell with Y_ij = 1 carries four Z's, nothing else is set.
    ++case_iii;
    std::size_t y = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) y += v.get(layout.z(i, j, 1, 1));
    }
    ASSERT_EQ(v.weight(), 4 * y);
    ASSERT_GE(2 * y, 3 * d * d);
  }
  EXPECT_GT(case_iii, 0u);
}

TEST(Learning, PointValuesFromVectorSum) {
  VectorSumInstance src;
  src.m = BitMat::from_strings({"110", "011"});
  src.b = BitVec::from_string("10");
  src.k = 2;
  const PointValueSet pv = vectorsum_to_pointvalues(src);
  EXPECT_EQ(pv.dim, 3u);
  EXPECT_EQ(pv.points, src.m.row_list());
  EXPECT_EQ(pv.values, (std::vector<unsigned char>{1, 0}));
}

TEST(Learning, IdentityGeneratorLeavesInputUnchanged) {
  Rng rng(6);
  const PointValueSet pv = vectorsum_to_pointvalues(random_vectorsum(5, 6, 2, rng));
  const PointValueSet out = amplify_with_generator(pv, BitMat::identity(5));
  EXPECT_EQ(out.points, pv.points);
  EXPECT_EQ(out.values, pv.values);
}

TEST(Learning, PlantedParityIsPreserved) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    VectorSumInstance src = random_vectorsum(8, 7, 2, rng);
    const BitVec planted = BitVec::from_support(7, std::vector<std::size_t>{1, 5});
    src.b = mat_vec_mul(src.m, planted);
    const PointValueSet out = amplify_pointvalues(vectorsum_to_pointvalues(src), 0.1, trial + 1);
    for (std::size_t i = 0; i < out.size(); ++i) ASSERT_EQ(out.points[i].dot(planted), out.values[i] != 0);
  }
}

TEST(Learning, NoInstanceParitiesStayNearHalf) {
  Rng rng(29);
  int tested = 0;
  while (tested < 5) {
    VectorSumInstance src = random_vectorsum(7, 6, 2, rng);
    if (solve_exhaustive(src).feasible) continue;
    ++tested;
    const PointValueSet out = amplify_pointvalues(vectorsum_to_pointvalues(src), 0.1, tested);
    const auto counts = oracle::parity_counts(dense_points(out.points), dense_values(out), 6, 2);
    for (const auto& f : counts) {
      const double a = static_cast<double>(f.agreed) / static_cast<double>(out.size());
      ASSERT_GE(a, 0.4);
      ASSERT_LE(a, 0.6);
    }
  }
}

TEST(Learning, JuntaHardnessParameters) {
  Rng rng(3);
  VectorSumInstance src = random_vectorsum(5, 6, 1, rng);
  const PointValueSet pv = vectorsum_to_pointvalues(src);
  const PointValueSet out = junta_hardness_instance(pv, 0.25, 1, 9);
  ASSERT_TRUE(out.eps);
  EXPECT_DOUBLE_EQ(*out.eps, 0.125);
  EXPECT_EQ(out.k, std::optional<std::size_t>(1));
  EXPECT_EQ(out.delta, std::optional<double>(0.25));

  VectorSumInstance yes = random_vectorsum(6, 6, 2, rng);
  const BitVec planted = BitVec::from_support(6, std::vector<std::size_t>{0, 3});
  yes.b = mat_vec_mul(yes.m, planted);
  const PointValueSet amp = junta_hardness_instance(vectorsum_to_pointvalues(yes), 0.25, 2, 4);
  for (std::size_t i = 0; i < amp.size(); ++i) ASSERT_EQ(amp.points[i].dot(planted), amp.values[i] != 0);
}

TEST(Learning, JuntaNoCaseBound) {
  Rng rng(37);
  int tested = 0;
  while (tested < 3) {
    VectorSumInstance src = random_vectorsum(6, 6, 2, rng);
    if (solve_exhaustive(src).feasible) continue;
    ++tested;
    const PointValueSet out = junta_hardness_instance(vectorsum_to_pointvalues(src), 0.25, 2, tested);
    ASSERT_LE(oracle::junta(dense_points(out.points), dense_values(out), 6, 2), 0.75);
  }
}

TEST(Viola, SmallCases) {
  const std::vector<BitVec> pts{BitVec::from_string("10"), BitVec::from_string("01")};
  EXPECT_EQ(viola_shift(pts, 1), pts);
  const auto two = viola_shift(pts, 2);
  EXPECT_EQ(two, (std::vector<BitVec>{BitVec::from_string("00"), BitVec::from_string("11"),
                                      BitVec::from_string("11"), BitVec::from_string("00")}));
  ViolaOptions small;
  small.cap = 3;
  EXPECT_THROW(viola_shift(pts, 2, small), ResourceError);
  small.samples = 50;
  EXPECT_EQ(viola_shift(pts, 2, small).size(), 50u);
}

TEST(Viola, BiasContract) {
  for (std::size_t kdim : {4, 5}) {
    const auto pts = simplex_generator(kdim).generator->row_list();
    const double eps = oracle::bias(dense_points(pts), kdim, 3);
    const auto shifted = viola_shift(pts, 2);
    ASSERT_EQ(shifted.size(), pts.size() * pts.size());
    const double adv = oracle::poly_advantage(dense_points(shifted), kdim, 3, 2);
    EXPECT_LE(adv, 16.0 * std::sqrt(eps));
  }
}

TEST(Fooling, KernelParityVanishes) {
  EvenSetInstance e;
  e.m = BitMat::from_strings({"11000", "01100", "00011"});
  e.k = 3;
  const BitVec v = BitVec::from_string("11100");
  ASSERT_TRUE(mat_vec_mul(e.m, v).is_zero());
  for (std::size_t d : {1, 2}) {
    const auto pts = evenset_to_fooling_points(e, 0.25, d, 3);
    for (const auto& p : pts) ASSERT_FALSE(p.dot(v));
  }
}

TEST(Fooling, NoInstancePolynomialAdvantage) {
  EvenSetInstance e;
  e.m = BitMat::identity(4);
  e.k = 3;
  const double eps = 0.2;
  const auto pts = evenset_to_fooling_points(e, eps, 2, 5);
  EXPECT_LE(oracle::poly_advantage(dense_points(pts), 4, 3, 2), 16.0 * std::sqrt(2 * eps));
}

TEST(Mdc, TensorPowers) {
  Rng rng(9);
  BitMat a(5, 2);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 2; ++c) a.set(r, c, rng() & 1u);
  }
  EXPECT_EQ(mdc_tensor(a, 1), a);
  const BitMat rep = BitMat::from_strings({"1", "1"});
  const BitMat rep2 = mdc_tensor(rep, 2);
  EXPECT_EQ(rep2.rows(), 4u);
  EXPECT_EQ(oracle::codeword_weights(oracle::dense(rep2), 1), (std::vector<std::size_t>{4}));

  for (int trial = 0; trial < 10; ++trial) {
    BitMat g(6, 2);
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 2; ++c) g.set(r, c, rng() & 1u);
    }
    if (rank(g) < 2) continue;
    const auto w1 = oracle::codeword_weights(oracle::dense(g), 2);
    const auto w2 = oracle::codeword_weights(oracle::dense(mdc_tensor(g, 2)), 4);
    const std::size_t d1 = *std::min_element(w1.begin(), w1.end());
    const std::size_t d2 = *std::min_element(w2.begin(), w2.end());
    ASSERT_EQ(d2, d1 * d1);
  }
  EXPECT_THROW(mdc_tensor(a, 30, 1000), ResourceError);
}

TEST(Mdc, WalkAmplification) {
  const BitMat a = BitMat::from_strings({"100", "010", "001", "111"});
  const BitMat t1 = mdc_walk_amplify(a, Graph::complete(4), 1);
  EXPECT_EQ(t1.rows(), 8u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(t1.row(2 * i).is_zero());
    EXPECT_EQ(t1.row(2 * i + 1), a.row(i));
  }
  const BitMat t2 = mdc_walk_amplify(a, Graph::complete(4), 2);
  EXPECT_EQ(t2.rows(), 48u);
  const auto walks = enumerate_walks(Graph::complete(4), 2);
  for (std::size_t w = 0; w < walks.size(); ++w) {
    for (std::size_t s = 0; s < 4; ++s) {
      BitVec expect(3);
      if (s & 1u) expect ^= a.row(walks[w][0] - 1);
      if (s & 2u) expect ^= a.row(walks[w][1] - 1);
      ASSERT_EQ(t2.row(w * 4 + s), expect);
    }
  }
}

TEST(Mdc, WalkAvoidanceFormula) {
  EXPECT_DOUBLE_EQ(walk_avoidance_bound(0.0, 0.0, 4, 3), 1.0);
  EXPECT_NEAR(walk_avoidance_bound(0.36, 2.0, 8, 2), std::pow(0.8 + 0.25, 2), 1e-12);
}

TEST(Mdc, LearningInstance) {
  const BitMat b = BitMat::from_strings({"1010", "0111", "1100"});
  const PointValueSet one = mdc_to_learning(b, 1);
  EXPECT_EQ(one.size(), 3u);
  EXPECT_EQ(one.dim, 3u);
  EXPECT_EQ(one.points[1], BitVec::from_string("111"));
  EXPECT_EQ(one.values[1], 0);
  const PointValueSet two = mdc_to_learning(b, 2);
  EXPECT_EQ(two.size(), 3u);
  EXPECT_EQ(two.points[0], BitVec::from_string("101"));
  EXPECT_EQ(two.values[0], 1);
}

TEST(Mdc, PlantedCodewordYesCase) {
  // z = (1, z'), B z = 0 except on a few rows.
  Rng rng(15);
  const BitVec z = BitVec::from_string("1011");
  BitMat b(10, 4);
  std::size_t bad = 0;
  for (std::size_t r = 0; r < 10; ++r) {
    BitVec row(4);
    do {
      for (std::size_t c = 0; c < 4; ++c) row.set(c, rng() & 1u);
    } while (row.dot(z) != (r < 2));
    bad += r < 2;
    b.row(r) = row;
  }
  const std::size_t d = 2;
  const PointValueSet pv = mdc_to_learning(b, d);
  const BitVec tail = z.slice(1, 3);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < pv.size(); ++i) ok += pv.points[i].dot(tail) == (pv.values[i] != 0);
  const double frac_bad = static_cast<double>(bad) / 10.0;
  EXPECT_GE(static_cast<double>(ok) / static_cast<double>(pv.size()), 1.0 - static_cast<double>(d) * frac_bad);
}

TEST(Mdc, ParamsValidation) {
  MdcParams p;
  EXPECT_NO_THROW(p.validate());
  p.zeta = 0.3;
  EXPECT_THROW(p.validate(), ConfigError);
}
