#include <gtest/gtest.h>

#include <numeric>

#include "deltatab/acceptance.hpp"
#include "deltatab/promotion.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace deltatab;
using acceptance::grid;

namespace {

// Letters 1..6 fill the inner shape row by row; letters 7, 8 form the printed
// ribbon pair.  The (h, v) side is `ribbon_hv`, its image under t_7 is `ribbon_vh`.
Tableau ribbon_hv() {
  return grid({{1, 1, 1, 1, 1, 7, 7, 7, 7},
               {2, 2, 2, 2, 2, 8},
               {3, 3, 3, 3, 3, 8},
               {4, 4, 4, 4, 7, 8},
               {5, 5, 8},
               {7, 7, 8}},
              "hhhhhhhv");
}
Tableau ribbon_vh() {
  return grid({{1, 1, 1, 1, 1, 7, 8, 8, 8},
               {2, 2, 2, 2, 2, 7},
               {3, 3, 3, 3, 3, 7},
               {4, 4, 4, 4, 8, 8},
               {5, 5, 7},
               {7, 8, 8}},
              "hhhhhhvh");
}

Tableau section_example() {
  return grid({{1, 1, 2, 3, 4}, {2, 3, 4, 6, 8}, {2, 4, 5, 6, 8}, {5, 6, 7, 7, 8}}, "hvhvhvhv");
}

}  // namespace

TEST(Promotion, FirstExampleFramesAndResult) {
  std::vector<Grid> frames;
  const Tableau out = jdt_promote(acceptance::example1_tableaux()[0], &frames);
  EXPECT_EQ(out, acceptance::example1_promoted());
  EXPECT_EQ(frames, acceptance::example1_promotion_frames());
}

TEST(Promotion, PrintedOrbitOfTheFirstExample) {
  const auto t = acceptance::example1_tableaux();
  // two promotions make one step of the generator since the rotation period is 2
  EXPECT_EQ(cyclic_generator(t[0], 2), t[1]);
  EXPECT_EQ(cyclic_generator(t[1], 2), t[2]);
  EXPECT_EQ(cyclic_generator(t[2], 2), t[0]);
}

TEST(Promotion, SectionExampleWithAlternatingOrientation) {
  const Tableau out = jdt_promote(section_example());
  EXPECT_EQ(out, grid({{1, 2, 2, 3, 7}, {1, 3, 4, 5, 7}, {1, 3, 5, 6, 7}, {4, 5, 6, 8, 8}}, "vhvhvhvh"));
}

TEST(Promotion, SectionExampleWithModifiedOrientation) {
  Tableau t(section_example().rows(), OrientationString::parse("hvhhhvhv"));
  ASSERT_TRUE(validate(t).ok());
  const Tableau out = jdt_promote(t);
  EXPECT_EQ(out.rows(), (Grid{{1, 2, 2, 3, 7}, {1, 3, 3, 5, 7}, {1, 4, 5, 6, 7}, {4, 5, 6, 8, 8}}));
  EXPECT_EQ(out.delta().str(), "vhhhvhvh");
}

TEST(Promotion, SingleLetterIsFixed) {
  for (Orient o : {Orient::H, Orient::V}) {
    const Tableau t = o == Orient::H ? grid({{1, 1, 1}}, "h") : grid({{1}, {1}}, "v");
    EXPECT_EQ(jdt_promote(t), t);
    EXPECT_TRUE(verify_periodicity(t));
  }
}

TEST(Promotion, RejectsInvalidInput) {
  EXPECT_THROW(jdt_promote(grid({{1, 2}, {1, 2}}, "hv")), std::invalid_argument);
  EXPECT_THROW(verify_periodicity(grid({{1, 1}, {2}}, "hh")), ShapeError);
}

TEST(Promotion, RotatesOrientationAndContent) {
  auto rng = gen::engine();
  for (int k = 0; k < 300; ++k) {
    const Tableau t = gen::tableau(rng, 4, 7, 18);
    const Tableau p = jdt_promote(t);
    EXPECT_TRUE(validate(p).ok());
    EXPECT_EQ(p.delta(), t.delta().rotated());
    EXPECT_EQ(p.content(), rotated(t.content()));
    EXPECT_EQ(p.shape(), t.shape());
  }
}

TEST(Promotion, PeriodicOnRandomRectangles) {
  auto rng = gen::engine();
  for (int k = 0; k < 300; ++k) {
    const Tableau t = gen::tableau(rng, 4, 7, 18);
    EXPECT_TRUE(verify_periodicity(t)) << acceptance::describe(static_cast<int>(t.rows().size()), t.delta(), t.content());
  }
}

TEST(Promotion, CommutesWithTransposition) {
  auto rng = gen::engine();
  for (int k = 0; k < 300; ++k) {
    const Tableau t = gen::tableau(rng, 4, 7, 18);
    EXPECT_EQ(transpose(jdt_promote(t)), jdt_promote(transpose(t)));
  }
}

TEST(Bk, RibbonMoveGolden) {
  EXPECT_EQ(bk(ribbon_hv(), 7), ribbon_vh());
  EXPECT_EQ(bk(ribbon_vh(), 7), ribbon_hv());
  EXPECT_EQ(bk_by_sliding(ribbon_hv(), 7), ribbon_vh());
  EXPECT_EQ(bk_by_sliding(ribbon_vh(), 7), ribbon_hv());
}

TEST(Bk, FigureChainAndPartialPromotions) {
  const auto chain = acceptance::bk_figure_chain();
  for (std::size_t k = 1; k < chain.size(); ++k) EXPECT_EQ(bk(chain[k - 1], static_cast<int>(k)), chain[k]);
  const auto dots = acceptance::bk_figure_dotted();
  for (int k = 1; k <= 5; ++k) {
    std::vector<Grid> frames;
    const Tableau p = partial_promote(chain[0], k, &frames);
    // the dots end where the new letter k sits
    Grid expected = dots[static_cast<std::size_t>(k - 1)];
    for (std::size_t r = 0; r < expected.size(); ++r)
      for (std::size_t c = 0; c < expected[r].size(); ++c)
        if (expected[r][c] == kDot) EXPECT_EQ(p.rows()[r][c], k);
    if (k > 1) EXPECT_EQ(p, chain[static_cast<std::size_t>(k - 1)]);
  }
  EXPECT_EQ(promote_via_bk(chain[0]), jdt_promote(chain[0]));
}

TEST(Bk, IsAnInvolutionSwappingOrientationAndContent) {
  auto rng = gen::engine();
  for (int k = 0; k < 300; ++k) {
    const Tableau t = gen::tableau(rng, 4, 7, 18);
    for (int i = 1; i < t.n(); ++i) {
      const Tableau s = bk(t, i);
      EXPECT_TRUE(validate(s).ok());
      EXPECT_EQ(s.delta(), t.delta().swapped(i));
      ContentVector g = t.content();
      std::swap(g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
      EXPECT_EQ(s.content(), g);
      EXPECT_EQ(bk(s, i), t);
    }
  }
}

TEST(Bk, MixedMoveAgreesWithBothSlidingRules) {
  auto rng = gen::engine();
  long long mixed = 0;
  for (int k = 0; k < 400; ++k) {
    const Tableau t = gen::tableau(rng, 5, 7, 20);
    for (int i = 1; i < t.n(); ++i) {
      if (t.delta().at(i) == t.delta().at(i + 1)) continue;
      ++mixed;
      const Tableau ribbon = bk(t, i);
      EXPECT_EQ(bk_by_sliding(t, i), ribbon);
      EXPECT_EQ(oracle::sliding_mixed_bk(t, i), ribbon);
    }
  }
  EXPECT_GT(mixed, 100);
}

TEST(Bk, PromotionFactorsThroughInvolutions) {
  auto rng = gen::engine();
  for (int k = 0; k < 300; ++k) {
    const Tableau t = gen::tableau(rng, 4, 7, 18);
    std::vector<Tableau> partials;
    EXPECT_EQ(promote_via_bk(t, &partials), jdt_promote(t));
    for (std::size_t j = 0; j < partials.size(); ++j)
      EXPECT_EQ(partials[j], partial_promote(t, static_cast<int>(j) + 2));
  }
}

TEST(Bk, RejectsBadIndexAndEqualOrientationSliding) {
  const Tableau t = acceptance::example1_tableaux()[0];
  EXPECT_THROW(bk(t, 0), std::out_of_range);
  EXPECT_THROW(bk(t, 6), std::out_of_range);
  EXPECT_THROW(bk_by_sliding(acceptance::bk_figure_chain()[0], 1), std::invalid_argument);
}

TEST(Orbits, ExampleFixedPointCounts) {
  const auto one = promotion_orbits(3, acceptance::example1_delta(), acceptance::example1_gamma());
  EXPECT_EQ(one.r, 2);
  EXPECT_EQ(one.l, 3);
  EXPECT_EQ(one.fixed_points, (std::vector<long long>{6, 3, 3}));
  EXPECT_EQ(one.orbit_sizes(), (std::vector<int>{3, 1, 1, 1}));

  const auto two = promotion_orbits(4, acceptance::example2_delta(), acceptance::example2_gamma());
  EXPECT_EQ(two.r, 2);
  EXPECT_EQ(two.l, 4);
  EXPECT_EQ(two.fixed_points, (std::vector<long long>{24, 4, 8, 4}));
}

TEST(Orbits, SizesDivideTheGroupOrderAndPartitionTheSet) {
  auto rng = gen::engine();
  for (int k = 0; k < 80; ++k) {
    const auto in = gen::instance(rng, 4, 6, 16, 200);
    const auto orb = promotion_orbits(in.m, in.delta, in.gamma);
    const auto sizes = orb.orbit_sizes();
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), 0LL), in.count);
    for (int s : sizes) EXPECT_EQ(orb.l % s, 0) << "orbit of size " << s << " with l = " << orb.l;
    EXPECT_EQ(orb.fixed_points.front(), in.count);
    EXPECT_EQ(orb.r * orb.l, static_cast<int>(in.delta.size()));
  }
}

TEST(Orbits, RotationPeriod) {
  EXPECT_EQ(rotation_period(OrientationString::parse("hvhv"), {1, 2, 1, 2}), 2);
  EXPECT_EQ(rotation_period(OrientationString::parse("hvhv"), {1, 2, 1, 1}), 4);
  EXPECT_EQ(rotation_period(OrientationString::parse("hhhh"), {1, 1, 1, 1}), 1);
}
