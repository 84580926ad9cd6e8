#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "test_support.hpp"

using namespace apsp;
using apsp::test::INF;
using apsp::test::mat;

namespace {

std::size_t squaring_bound(std::size_t n) {
  const std::size_t hops = std::max<std::size_t>(n - 1, 1);
  return static_cast<std::size_t>(std::bit_width(hops - 1)) + 1;  // ceil(log2(hops)) + 1
}

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::parse;
}

struct Instance {
  Graph graph;
  CostMatrix h;
  CostMatrix expected;
};

// 300 instances over n in [1, 128] and every density regime, plus
// explicit edgeless and complete graphs.
std::vector<Instance> suite() {
  std::vector<Instance> out;
  std::mt19937_64 rng(300);
  std::uniform_int_distribution<std::size_t> nd(1, 128);
  const double rhos[] = {0.0, 0.05, 0.25, 0.5, 1.0};
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = t < 5 ? static_cast<std::size_t>(t + 1) : nd(rng);
    Graph g = t % 25 == 3 ? apsp::test::complete_graph(n, rng, 100) : generate({n, rhos[t % 5], 100, rng()});
    CostMatrix h = cost_matrix_from_graph(g);
    CostMatrix d = sssp_all_pairs(g);
    out.push_back({std::move(g), std::move(h), std::move(d)});
  }
  return out;
}

const std::vector<Instance>& cached_suite() {
  static const std::vector<Instance> s = suite();
  return s;
}

}  // namespace

TEST(FwClassic, ThreeCycle) {
  const auto s = fw_classic(cost_matrix_from_graph(apsp::test::three_cycle()));
  EXPECT_EQ(s.distances, mat({{0, 1, 3}, {6, 0, 2}, {4, 5, 0}}));
  EXPECT_EQ(s.algorithm, Algorithm::fw_classic);
  ASSERT_TRUE(s.pred);
  EXPECT_FALSE(s.via);
  EXPECT_EQ(s.relaxation_count, 27u);
}

TEST(FwClassic, EdgelessGivesIdentity) {
  const auto s = fw_classic(cost_matrix_from_graph(Graph(3, {})));
  EXPECT_EQ(s.distances, minplus_identity(3));
  EXPECT_TRUE(s.pred->all_none());
}

TEST(FwClassic, ShortcutLosesToChain) {
  const auto s = fw_classic(cost_matrix_from_graph(apsp::test::chain_with_shortcut()));
  EXPECT_EQ(s.distances(0, 2), ExtCost{7});
  EXPECT_EQ((*s.pred)(0, 2), 1u);
  EXPECT_EQ((*s.pred)(0, 1), 0u);
}

TEST(FwClassic, PredecessorInvariant) {
  for (const auto& inst : cached_suite()) {
    if (inst.h.rows() > 48) continue;
    const auto s = fw_classic(inst.h);
    const std::size_t n = inst.h.rows();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto g = (*s.pred)(i, j);
        ASSERT_EQ(g.has_value(), i != j && s.distances(i, j).is_finite());
        if (!g) continue;
        const auto w = inst.graph.edge_weight(*g, j);
        ASSERT_TRUE(w);
        ASSERT_EQ(s.distances(i, *g) + ExtCost{*w}, s.distances(i, j));
      }
    }
  }
}

TEST(Solvers, RejectNegativeWeights) {
  const CostMatrix h = mat({{0, -2}, {1, 0}});
  EXPECT_EQ(error_of([&] { (void)fw_classic(h); }), Errc::negative_weight);
  EXPECT_EQ(error_of([&] { (void)fw_squaring(h); }), Errc::negative_weight);
  EXPECT_EQ(error_of([&] { (void)rkleene(h); }), Errc::negative_weight);
}

TEST(Solvers, RejectBadShapes) {
  EXPECT_EQ(error_of([] { (void)fw_classic(CostMatrix(2, 3)); }), Errc::dimension_mismatch);
  EXPECT_EQ(error_of([] { (void)fw_squaring(CostMatrix()); }), Errc::empty_matrix);
  EXPECT_EQ(error_of([] { (void)rkleene(mat({{1, 2}, {3, 0}})); }), Errc::invalid_input);
  EXPECT_EQ(error_of([] { (void)rkleene(minplus_identity(2), 0); }), Errc::invalid_parameter);
}

TEST(DetectNegativeCycle, Examples) {
  EXPECT_FALSE(detect_negative_cycle(minplus_identity(4)));
  EXPECT_FALSE(detect_negative_cycle(mat({{0, 1}, {1, 0}})));
  EXPECT_TRUE(detect_negative_cycle(mat({{-1, 1}, {1, 0}})));
}

TEST(FwSquaring, PathGraphNeedsThreeRounds) {
  const Graph g(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  const auto s = fw_squaring(cost_matrix_from_graph(g));
  EXPECT_EQ(s.distances(0, 4), ExtCost{4});
  EXPECT_EQ(s.distances, sssp_all_pairs(g));
  // Horizons 2 and 4 hops, then a confirming round.
  EXPECT_EQ(s.iterations, 3u);
  EXPECT_EQ(s.relaxation_count, 3u * 125u);
}

TEST(FwSquaring, ClosedInputConvergesImmediately) {
  const CostMatrix closed = fw_classic(cost_matrix_from_graph(apsp::test::three_cycle())).distances;
  const auto s = fw_squaring(closed);
  EXPECT_EQ(s.iterations, 1u);
  EXPECT_EQ(s.distances, closed);
  EXPECT_TRUE(s.via->all_none());
}

TEST(FwSquaring, ThreeCycleMatchesClassic) {
  const CostMatrix h = cost_matrix_from_graph(apsp::test::three_cycle());
  EXPECT_EQ(fw_squaring(h).distances, fw_classic(h).distances);
}

TEST(RKleene, ThreeCycleAtThresholdOne) {
  const auto s = rkleene(cost_matrix_from_graph(apsp::test::three_cycle()), 1);
  EXPECT_EQ(s.distances, mat({{0, 1, 3}, {6, 0, 2}, {4, 5, 0}}));
  ASSERT_TRUE(s.via);
  EXPECT_FALSE(s.pred);
}

TEST(RKleene, BaseCaseDelegatesToFloydWarshall) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const CostMatrix h = cost_matrix_from_graph(generate({static_cast<std::size_t>(1 + t * 3), 0.4, 100, rng()}));
    const auto s = rkleene(h, 64);
    EXPECT_EQ(s.distances, fw_classic(h).distances);
    EXPECT_EQ(s.relaxation_count, fw_classic(h).relaxation_count);
  }
}

TEST(RKleene, MatchesClassicAcrossThresholds) {
  std::mt19937_64 rng(100);
  std::uniform_int_distribution<std::size_t> nd(4, 96);
  for (int t = 0; t < 100; ++t) {
    const CostMatrix h = cost_matrix_from_graph(generate({nd(rng), 0.3, 100, rng()}));
    const CostMatrix expected = fw_classic(h).distances;
    for (std::size_t thr : {1, 2, 16}) ASSERT_EQ(rkleene(h, thr).distances, expected) << "threshold " << thr;
  }
}

TEST(Solvers, CrossSolverEqualityAgainstOracle) {
  for (const auto& inst : cached_suite()) {
    const std::size_t n = inst.h.rows();
    ASSERT_EQ(fw_classic(inst.h).distances, inst.expected) << "n=" << n;
    const auto sq = fw_squaring(inst.h);
    ASSERT_EQ(sq.distances, inst.expected) << "n=" << n;
    ASSERT_LE(sq.iterations, squaring_bound(n)) << "n=" << n;
    for (std::size_t thr : {1, 16, 64}) ASSERT_EQ(rkleene(inst.h, thr).distances, inst.expected) << "n=" << n;
  }
}

TEST(Solvers, TriangleInequalityAndZeroDiagonal) {
  for (const auto& inst : cached_suite()) {
    const std::size_t n = inst.h.rows();
    if (n > 40) continue;
    const CostMatrix d = rkleene(inst.h, 4).distances;
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(d(i, i), ExtCost{0});
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) ASSERT_LE(d(i, j), d(i, k) + d(k, j));
    }
  }
}

TEST(Solvers, ViaInvariant) {
  for (const auto& inst : cached_suite()) {
    const std::size_t n = inst.h.rows();
    if (n > 64) continue;
    for (const ApspSolution& s : {fw_squaring(inst.h), rkleene(inst.h, 1), rkleene(inst.h, 16)}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto k = (*s.via)(i, j);
          if (!k) continue;
          ASSERT_NE(*k, i);
          ASSERT_NE(*k, j);
          ASSERT_EQ(s.distances(i, *k) + s.distances(*k, j), s.distances(i, j));
        }
      }
    }
  }
}

TEST(Solvers, WorkCounts) {
  for (const auto& inst : cached_suite()) {
    const std::size_t n = inst.h.rows();
    ASSERT_EQ(fw_classic(inst.h).relaxation_count, static_cast<std::uint64_t>(n) * n * n);
    if (n < 32) continue;
    const auto sq = fw_squaring(inst.h);
    if (sq.iterations < 3) continue;
    ASSERT_LT(rkleene(inst.h, 16).relaxation_count, sq.relaxation_count) << "n=" << n;
  }
}

TEST(Solvers, ClosureIsAFixedPoint) {
  for (const auto& inst : cached_suite()) {
    if (inst.h.rows() > 64) continue;
    const CostMatrix& d = inst.expected;
    ASSERT_EQ(fw_classic(d).distances, d);
    ASSERT_EQ(fw_squaring(d).distances, d);
    ASSERT_EQ(rkleene(d, 8).distances, d);
  }
}

TEST(Solvers, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    const Graph g = generate({static_cast<std::size_t>(70 + t * 9), 0.2, 100, rng()});
    const CostMatrix h = cost_matrix_from_graph(g);
    KernelConfig one{1, 16, 0}, many{4, 16, 0};
    const auto a = fw_squaring(h, one), b = fw_squaring(h, many);
    EXPECT_EQ(a.distances, b.distances);
    EXPECT_EQ(*a.via, *b.via);
    const auto c = rkleene(h, 8, one), d = rkleene(h, 8, many);
    EXPECT_EQ(c.distances, d.distances);
    EXPECT_EQ(*c.via, *d.via);
    const auto e = fw_classic(h, one), f = fw_classic(h, many);
    EXPECT_EQ(e.distances, f.distances);
    EXPECT_EQ(*e.pred, *f.pred);
  }
}

TEST(Solvers, InputIsNotMutated) {
  const CostMatrix h = cost_matrix_from_graph(apsp::test::chain_with_shortcut());
  const CostMatrix copy = h;
  (void)fw_classic(h);
  (void)fw_squaring(h);
  (void)rkleene(h, 1);
  EXPECT_EQ(h, copy);
}
