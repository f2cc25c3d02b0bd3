#include "lstune/core.hpp"

#include <gtest/gtest.h>

#include "lstune/rng.hpp"

using namespace lstune;

namespace {

ImageGrid random_grid(int w, int h, Rng& rng) {
  ImageGrid g = ImageGrid::zeros(w, h);
  for (double& v : g.pixels) v = rng.uniform();
  return g;
}

// Brute-force elementwise reference, kept independent of lstune::mse.
double mse_reference(const ImageGrid& a, const ImageGrid& b) {
  double acc = 0.0;
  for (int r = 0; r < a.height; ++r) {
    for (int c = 0; c < a.width; ++c) {
      double d = a.at(r, c) - b.at(r, c);
      acc += d * d;
    }
  }
  return acc / (static_cast<double>(a.width) * a.height);
}

}  // namespace

TEST(Mse, IdenticalGridsGiveZero) {
  Rng rng(1);
  ImageGrid a = random_grid(5, 3, rng);
  EXPECT_EQ(mse(a, a), 0.0);
}

TEST(Mse, ConstantDifference) {
  ImageGrid ones = ImageGrid::zeros(2, 2);
  ones.pixels.assign(4, 1.0);
  ImageGrid zeros = ImageGrid::zeros(2, 2);
  EXPECT_DOUBLE_EQ(mse(ones, zeros), 1.0);
}

TEST(Mse, SeededGridsMatchBruteForceOracle) {
  // Frozen from the brute-force double loop at seed 424242.
  const double kFrozen = 0.10612306205136947;
  Rng rng(424242);
  ImageGrid a = random_grid(4, 4, rng);
  ImageGrid b = random_grid(4, 4, rng);
  EXPECT_DOUBLE_EQ(mse_reference(a, b), kFrozen);
  EXPECT_DOUBLE_EQ(mse(a, b), kFrozen);
}

TEST(Mse, SymmetricOverRandomSeeds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    ImageGrid a = random_grid(6, 4, rng);
    ImageGrid b = random_grid(6, 4, rng);
    EXPECT_EQ(mse(a, b), mse(b, a)) << "seed " << seed;
  }
}

TEST(Mse, QuadraticScaling) {
  Rng rng(7);
  ImageGrid a = random_grid(8, 8, rng);
  ImageGrid b = random_grid(8, 8, rng);
  for (double c : {0.5, 2.0, 13.7}) {
    ImageGrid ca = a, cb = b;
    for (double& v : ca.pixels) v *= c;
    for (double& v : cb.pixels) v *= c;
    double expect = c * c * mse(a, b);
    EXPECT_NEAR(mse(ca, cb), expect, 1e-12 * expect);
  }
}

TEST(Mse, ShapeMismatchReportsBothShapes) {
  ImageGrid a = ImageGrid::zeros(4, 4);
  ImageGrid b = ImageGrid::zeros(2, 2);
  try {
    mse(a, b);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("4x4"), std::string::npos) << msg;
    EXPECT_NE(msg.find("2x2"), std::string::npos) << msg;
  }
}

TEST(Normalize, UniformGrid) {
  ImageGrid g = ImageGrid::zeros(2, 2);
  g.pixels.assign(4, 5.0);
  ImageGrid n = normalize(g);
  for (double v : n.pixels) EXPECT_DOUBLE_EQ(v, 0.25);
  EXPECT_NEAR(n.sum(), 1.0, 1e-9);
}

TEST(Normalize, PreservesProportions) {
  ImageGrid g = ImageGrid::zeros(2, 2);
  g.at(0, 0) = 1.0;
  g.at(1, 1) = 3.0;
  ImageGrid n = normalize(g);
  EXPECT_DOUBLE_EQ(n.at(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(n.at(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(n.at(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(n.at(1, 1), 0.75);
}

TEST(Normalize, Idempotent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    ImageGrid g = random_grid(5, 7, rng);
    ImageGrid once = normalize(g);
    ImageGrid twice = normalize(once);
    for (std::size_t i = 0; i < once.pixels.size(); ++i) {
      EXPECT_NEAR(twice.pixels[i], once.pixels[i], 1e-12);
    }
  }
}

TEST(Normalize, RejectsDegenerateDensity) {
  ImageGrid g = ImageGrid::zeros(3, 3);
  try {
    normalize(g);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate density"), std::string::npos);
  }
}

TEST(AxisPairs, ExactlyFifteenDistinct) {
  auto pairs = enumerate_axis_pairs();
  ASSERT_EQ(pairs.size(), 15u);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      EXPECT_FALSE(pairs[i] == pairs[j]);
    }
  }
}

TEST(AxisPairs, CanonicalListingOrder) {
  auto pairs = enumerate_axis_pairs();
  EXPECT_EQ(pairs.front(), (AxisPair{Axis::X, Axis::Y}));
  EXPECT_EQ(pairs.back(), (AxisPair{Axis::Z, Axis::E}));
  // spot checks against the full listing
  EXPECT_EQ(pairs[2], (AxisPair{Axis::X, Axis::Xp}));
  EXPECT_EQ(pairs[10], (AxisPair{Axis::Y, Axis::Yp}));
  EXPECT_EQ(pairs[14], (AxisPair{Axis::Z, Axis::E}));
  EXPECT_EQ(axis_pair_index({Axis::X, Axis::Xp}), 2);
  EXPECT_EQ(axis_pair_index({Axis::Y, Axis::Yp}), 10);
  EXPECT_EQ(axis_pair_index({Axis::Z, Axis::E}), 14);
}

TEST(AxisPairs, FirstPrecedesSecondInAxisOrder) {
  for (const auto& p : axis_pairs()) {
    EXPECT_LT(static_cast<int>(p.first), static_cast<int>(p.second)) << p.name();
  }
}

TEST(AxisPairs, StableAcrossCalls) {
  auto a = enumerate_axis_pairs();
  auto b = enumerate_axis_pairs();
  EXPECT_EQ(a, b);
}

TEST(AxisPairs, KeyRoundTrip) {
  for (const auto& p : axis_pairs()) {
    EXPECT_EQ(axis_pair_from_key(p.key()), p);
  }
  EXPECT_THROW(axis_pair_from_key("bogus"), std::invalid_argument);
}

TEST(ProjectionSet, LookupTotalOverConfiguredSet) {
  std::vector<AxisPair> pairs = {{Axis::X, Axis::Xp}, {Axis::Y, Axis::Yp}, {Axis::Z, Axis::E}};
  std::vector<ImageGrid> grids(3, ImageGrid::zeros(4, 4));
  grids[1].at(2, 2) = 1.0;
  ProjectionSet set(pairs, grids);
  EXPECT_EQ(set.count(), 3);
  EXPECT_DOUBLE_EQ(set.channel({Axis::Y, Axis::Yp}).at(2, 2), 1.0);
  EXPECT_TRUE(set.has_channel({Axis::Z, Axis::E}));
  EXPECT_FALSE(set.has_channel({Axis::X, Axis::Y}));
  EXPECT_THROW(set.channel({Axis::X, Axis::Y}), std::out_of_range);
}

TEST(ProjectionSet, RejectsMixedShapes) {
  std::vector<AxisPair> pairs = {{Axis::X, Axis::Xp}, {Axis::Z, Axis::E}};
  std::vector<ImageGrid> grids = {ImageGrid::zeros(4, 4), ImageGrid::zeros(8, 8)};
  EXPECT_THROW(ProjectionSet(pairs, std::move(grids)), std::invalid_argument);
}

TEST(ProjectionSet, RejectsDuplicateChannels) {
  std::vector<AxisPair> pairs = {{Axis::Z, Axis::E}, {Axis::Z, Axis::E}};
  std::vector<ImageGrid> grids(2, ImageGrid::zeros(4, 4));
  EXPECT_THROW(ProjectionSet(pairs, std::move(grids)), std::invalid_argument);
}

TEST(LatentVector, ComponentwiseAddition) {
  LatentVector a(std::vector<double>{1.0, 2.0, -3.0});
  LatentVector b(std::vector<double>{0.5, -2.0, 4.0});
  LatentVector c = a + b;
  // elementwise scalar-addition reference
  for (int i = 0; i < a.size(); ++i) {
    EXPECT_DOUBLE_EQ(c[i], a[i] + b[i]);
  }
}

TEST(LatentVector, LengthMismatchThrows) {
  LatentVector a(3), b(4);
  EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(MachineParams, RangeContainment) {
  ParamRanges ranges;
  for (auto& r : ranges.r) r = {-1.0, 1.0};
  MachineParams inside;
  inside.p = {0.0, 0.5, -0.5, 1.0, -1.0};
  MachineParams outside;
  outside.p = {0.0, 0.5, -0.5, 1.2, 0.0};
  EXPECT_TRUE(ranges.contains(inside));
  EXPECT_FALSE(ranges.contains(outside));
}

TEST(ImageGrid, ValidateCatchesNegativePixels) {
  ImageGrid g = ImageGrid::zeros(2, 2);
  g.at(0, 1) = -0.25;
  EXPECT_THROW(g.validate(), std::invalid_argument);
}
