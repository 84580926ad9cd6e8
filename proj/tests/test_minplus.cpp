#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "test_support.hpp"

using namespace apsp;
using apsp::test::INF;
using apsp::test::mat;
using apsp::test::naive_minplus;
using apsp::test::random_matrix;

namespace {

KernelConfig threads(std::size_t workers, std::size_t tile = 64) {
  KernelConfig cfg;
  cfg.workers = workers;
  cfg.tile = tile;
  cfg.min_parallel_work = 0;
  return cfg;
}

std::size_t max_workers() { return std::max<std::size_t>(4, std::thread::hardware_concurrency()); }

}  // namespace

TEST(MinplusProduct, ClosedMatrixIsFixedPoint) {
  const CostMatrix x = mat({{0, 3}, {INF, 0}});
  const auto r = minplus_product(x, x);
  EXPECT_EQ(r.distances, x);
  EXPECT_TRUE(r.via.all_none());
  EXPECT_EQ(r.relaxation_count, 8u);
}

TEST(MinplusProduct, SquaringAChain) {
  const CostMatrix x = mat({{0, 2, INF}, {INF, 0, 3}, {INF, INF, 0}});
  // Hand evaluation: (0,2) = min(0+INF, 2+3, INF+0) = 5 via k=1.
  const auto naive = naive_minplus(x, x);
  EXPECT_EQ(naive.distances, mat({{0, 2, 5}, {INF, 0, 3}, {INF, INF, 0}}));
  const auto r = minplus_product(x, x);
  EXPECT_EQ(r.distances, naive.distances);
  EXPECT_EQ(r.via(0, 2), 1u);
  EXPECT_FALSE(r.via(0, 1));
  EXPECT_EQ(r.via, naive.via);
}

TEST(MinplusProduct, IdentityLaw) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const CostMatrix x = random_matrix(rng, 8, 0.3, 50);
    const auto left = minplus_product(minplus_identity(8), x);
    const auto right = minplus_product(x, minplus_identity(8));
    EXPECT_EQ(left.distances, x);
    EXPECT_EQ(right.distances, x);
    EXPECT_TRUE(left.via.all_none());
    EXPECT_TRUE(right.via.all_none());
  }
}

TEST(MinplusProduct, RectangularMatchesNaive) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 20);
  for (int t = 0; t < 50; ++t) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng);
    CostMatrix x(a, b), y(b, c);
    std::uniform_int_distribution<std::int64_t> w(0, 30);
    std::bernoulli_distribution hole(0.25);
    for (auto& v : x.cells()) v = hole(rng) ? ExtCost::infinity() : ExtCost{w(rng)};
    for (auto& v : y.cells()) v = hole(rng) ? ExtCost::infinity() : ExtCost{w(rng)};
    const auto r = minplus_product(x, y, threads(3, 4));
    const auto naive = naive_minplus(x, y);
    ASSERT_EQ(r.distances, naive.distances);
    ASSERT_EQ(r.via, naive.via);
    ASSERT_EQ(r.relaxation_count, static_cast<std::uint64_t>(a * b * c));
  }
}

TEST(MinplusProduct, DimensionMismatch) {
  try {
    (void)minplus_product(CostMatrix(2, 3), CostMatrix(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

TEST(MinplusProduct, OverflowIsRangeError) {
  const std::int64_t big = ExtCost::max_finite() / 2 + 1;
  const CostMatrix x = mat({{0, big}, {big, 0}});
  try {
    (void)minplus_product(x, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::range);
  }
}

TEST(MinplusProduct, CheckedPathStillExact) {
  // Operand ranges could overflow together, actual candidates do not.
  const std::int64_t big = ExtCost::max_finite() - 10;
  const CostMatrix x = mat({{0, big}, {INF, 0}});
  const CostMatrix y = mat({{big, INF}, {INF, 5}});
  const auto r = minplus_product(x, y);
  EXPECT_EQ(r.distances, naive_minplus(x, y).distances);
  EXPECT_EQ(r.distances(0, 0), ExtCost{big});
  EXPECT_EQ(r.distances(0, 1), ExtCost{big + 5});
}

TEST(MinplusAccumulate, IdentityCannotImprove) {
  const CostMatrix z = mat({{0, 1}, {1, 0}});
  const auto r = minplus_accumulate(z, minplus_identity(2), minplus_identity(2));
  EXPECT_EQ(r.distances, z);
  EXPECT_TRUE(r.via.all_none());
}

TEST(MinplusAccumulate, FillsAbsentEntries) {
  const CostMatrix p = mat({{0, 2}, {2, 0}});
  const auto r = minplus_accumulate(minplus_identity(2), p, p);
  EXPECT_EQ(r.distances, p);
  // (0,1): k=0 gives 0+2, k=1 gives 2+0; the smallest k wins the tie.
  EXPECT_EQ(r.via(0, 1), 0u);
  EXPECT_EQ(r.via(1, 0), 0u);
  EXPECT_FALSE(r.via(0, 0));
}

TEST(MinplusAccumulate, StrictImprovementSetsVia) {
  const CostMatrix z = mat({{0, 10}, {INF, 0}});
  const CostMatrix x = mat({{0, 3}, {INF, 0}});
  const CostMatrix y = mat({{0, 4}, {INF, 0}});
  // min(10, 0+4, 3+0) = 3 at k=1.
  const auto r = minplus_accumulate(z, x, y);
  EXPECT_EQ(r.distances, mat({{0, 3}, {INF, 0}}));
  EXPECT_EQ(r.via(0, 1), 1u);
}

TEST(MinplusAccumulate, PreservesCallerViaOnTies) {
  const CostMatrix z = mat({{0, 4}, {INF, 0}});
  ViaMatrix zv(2, 2);
  zv.set(0, 1, 9);
  const CostMatrix x = mat({{0, 3}, {INF, 0}});
  const CostMatrix y = mat({{0, 4}, {INF, 1}});
  // Product (0,1) = min(0+4, 3+1) = 4, equal to z: no change.
  const auto r = minplus_accumulate(z, zv, x, y);
  EXPECT_EQ(r.distances(0, 1), ExtCost{4});
  EXPECT_EQ(r.via(0, 1), 9u);
}

TEST(MinplusAccumulate, ShapeErrors) {
  EXPECT_THROW((void)minplus_accumulate(CostMatrix(2, 2), CostMatrix(3, 2), CostMatrix(2, 2)), Error);
  EXPECT_THROW((void)minplus_accumulate(CostMatrix(2, 2), ViaMatrix(1, 2), CostMatrix(2, 2), CostMatrix(2, 2)), Error);
}

TEST(BroadcastReference, Examples) {
  const CostMatrix x = mat({{0, 2, INF}, {INF, 0, 3}, {INF, INF, 0}});
  const auto r = minplus_broadcast_reference(x);
  EXPECT_EQ(r.distances(0, 2), ExtCost{5});
  EXPECT_EQ(r.via(0, 2), 1u);

  const auto one = minplus_broadcast_reference(mat({{0}}));
  EXPECT_EQ(one.distances, mat({{0}}));
  EXPECT_TRUE(one.via.all_none());
}

TEST(BroadcastReference, CapacityCap) {
  try {
    (void)minplus_broadcast_reference(minplus_identity(9), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::capacity);
  }
  EXPECT_NO_THROW((void)minplus_broadcast_reference(minplus_identity(8), 8));
}

TEST(MinplusKernel, ThreeRoutesAgreeBitwise) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> nd(1, 64);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = nd(rng);
    const CostMatrix x = random_matrix(rng, n, 0.2, 100, t % 2 == 0);
    const auto naive = naive_minplus(x, x);
    const auto ref = minplus_broadcast_reference(x);
    ASSERT_EQ(ref.distances, naive.distances) << "n=" << n;
    ASSERT_EQ(ref.via, naive.via) << "n=" << n;
    for (std::size_t w : {std::size_t{1}, std::size_t{2}, max_workers()}) {
      for (std::size_t tile : {std::size_t{1}, std::size_t{7}, std::size_t{64}}) {
        const auto r = minplus_product(x, x, threads(w, tile));
        ASSERT_EQ(r.distances, naive.distances) << "n=" << n << " workers=" << w << " tile=" << tile;
        ASSERT_EQ(r.via, naive.via) << "n=" << n << " workers=" << w << " tile=" << tile;
        ASSERT_EQ(r.relaxation_count, ref.relaxation_count);
      }
    }
  }
}

TEST(MinplusKernel, AssociativeOnDistances) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const CostMatrix x = random_matrix(rng, 8, 0.3, 40);
    const CostMatrix y = random_matrix(rng, 8, 0.3, 40);
    const CostMatrix z = random_matrix(rng, 8, 0.3, 40);
    const auto xy_z = minplus_product(minplus_product(x, y).distances, z).distances;
    const auto x_yz = minplus_product(x, minplus_product(y, z).distances).distances;
    ASSERT_EQ(xy_z, x_yz);
  }
}

TEST(MinplusKernel, SquaringNeverIncreasesWithZeroDiagonal) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const CostMatrix x = random_matrix(rng, 1 + t % 40, 0.4, 100, true);
    const auto sq = minplus_product(x, x).distances;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) ASSERT_LE(sq(i, j), x(i, j));
  }
}
