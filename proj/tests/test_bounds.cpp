#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "splitsig/bounds.hpp"

using namespace splitsig;

namespace {

ComponentInvariants unknots(int mu) { return ComponentInvariants(static_cast<std::size_t>(mu)); }

IntMatrix pairwise(int mu, std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
  IntMatrix lk = IntMatrix::Zero(mu, mu);
  for (const auto& [i, j, v] : entries) lk(i, j) = lk(j, i) = v;
  return lk;
}

}  // namespace

TEST(SplittingBoundMultivariable, Examples) {
  EXPECT_EQ(splitting_bound_multivariable(2, {-2, 0}, unknots(2)).value, 3);
  EXPECT_EQ(splitting_bound_multivariable(3, {0, 0}, unknots(3)).value, 2);
  EXPECT_EQ(splitting_bound_multivariable(2, {0, 0}, unknots(2)).value, 1);
}

TEST(SplittingBoundMultivariable, ParityReport) {
  const BoundReport r = splitting_bound_multivariable(2, {0, 0}, unknots(2), 1);
  ASSERT_TRUE(r.parity_of_total_linking);
  EXPECT_EQ(*r.parity_of_total_linking, 1);
  EXPECT_TRUE(r.parity_consistent.value_or(false));
  EXPECT_FALSE(splitting_bound_multivariable(2, {0, 0}, unknots(2)).parity_of_total_linking);
  EXPECT_FALSE(splitting_bound_multivariable(2, {0, 0}, unknots(2), -2).parity_consistent.value_or(true));
}

TEST(SplittingBoundMultivariable, Errors) {
  EXPECT_THROW(splitting_bound_multivariable(0, {0, 0}, {}), std::invalid_argument);
  EXPECT_THROW(splitting_bound_multivariable(2, {0, -1}, unknots(2)), std::invalid_argument);
  EXPECT_THROW(splitting_bound_multivariable(2, {0, 0}, unknots(3)), std::invalid_argument);
}

TEST(SplittingBoundMultivariable, PermutingColors) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> sig(-6, 6);
  std::uniform_int_distribution<int> eta(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int mu = 1 + trial % 5;
    ComponentInvariants comps;
    for (int i = 0; i < mu; ++i) comps.push_back({sig(rng), eta(rng)});
    const InvariantValue link{sig(rng), eta(rng)};
    const int base = splitting_bound_multivariable(mu, link, comps).value;
    EXPECT_GE(base, 0);
    std::shuffle(comps.begin(), comps.end(), rng);
    EXPECT_EQ(splitting_bound_multivariable(mu, link, comps).value, base);
  }
}

TEST(SplittingBoundLt, PublishedFixtures) {
  EXPECT_EQ(splitting_bound_lt(2, {5, 0}, -1, {{2, 0}, {0, 0}}).value, 3);
  EXPECT_EQ(splitting_bound_lt(2, {0, 1}, 1, {{1, 1}, {-1, 1}}).value, 3);
  EXPECT_EQ(splitting_bound_lt(3, {-4, 0}, 1, unknots(3)).value, 5);
  EXPECT_EQ(splitting_bound_lt(2, {5, 0}, -1, unknots(2)).value, 5);
  EXPECT_EQ(splitting_bound_lt(2, {1, 0}, 1, unknots(2)).value, 3);
}

TEST(SplittingBoundLt, ParityMatchesLinking) {
  const BoundReport r = splitting_bound_lt(2, {5, 0}, -1, {{2, 0}, {0, 0}});
  EXPECT_EQ(r.parity_of_total_linking, 1);
  EXPECT_TRUE(r.parity_consistent.value_or(false));
}

TEST(SplittingBoundLt, ReducesToMultivariable) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> sig(-6, 6);
  std::uniform_int_distribution<int> eta(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int mu = 1 + trial % 4;
    ComponentInvariants comps;
    for (int i = 0; i < mu; ++i) comps.push_back({sig(rng), eta(rng)});
    const InvariantValue lt{sig(rng), eta(rng)};
    const int lk = sig(rng);
    EXPECT_EQ(splitting_bound_lt(mu, lt, lk, comps).value,
              splitting_bound_multivariable(mu, {lt.sigma + lk, lt.eta}, comps).value);
  }
}

TEST(LinkingNumberBound, Examples) {
  const BoundReport hopf = linking_number_bound(pairwise(2, {{0, 1, 1}}), {});
  EXPECT_EQ(hopf.value, 1);
  EXPECT_EQ(hopf.parity_of_total_linking, 1);
  EXPECT_EQ(linking_number_bound(pairwise(2, {}), {{{0, 1}, true}}).value, 2);
  EXPECT_EQ(linking_number_bound(pairwise(2, {}), {{{0, 1}, false}}).value, 0);
  EXPECT_EQ(linking_number_bound(pairwise(3, {{0, 1, -3}, {1, 2, 2}}), {{{0, 2}, true}}).value, 7);
}

TEST(LinkingNumberBound, Errors) {
  EXPECT_THROW(linking_number_bound(pairwise(2, {}), {}), std::invalid_argument);
  IntMatrix asym = IntMatrix::Zero(2, 2);
  asym(0, 1) = 1;
  EXPECT_THROW(linking_number_bound(asym, {}), std::invalid_argument);
  EXPECT_THROW(linking_number_bound(IntMatrix::Zero(2, 3), {}), std::invalid_argument);
}

TEST(RankObstruction, Examples) {
  EXPECT_EQ(rank_obstruction(2, 0, {}).value, 1);
  EXPECT_EQ(rank_obstruction(3, 2, {}).value, 0);
  RankSample violating{TorusPoint::parse("1/3,2/3"), {-2, 0}, unknots(2)};
  const BoundReport r = rank_obstruction(2, 0, {violating}, 1);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.raw, 1);
}

TEST(RankObstruction, Upgrades) {
  RankSample additive{TorusPoint::parse("1/3,2/3"), {0, 0}, unknots(2)};
  EXPECT_EQ(rank_obstruction(2, 0, {additive}).value, 1);
  EXPECT_EQ(rank_obstruction(2, 0, {additive}, 0).value, 2);
  RankSample nullity{TorusPoint::parse("1/3,2/3"), {0, 0}, {{0, 1}, {0, 0}}};
  EXPECT_EQ(rank_obstruction(2, 0, {nullity}).value, 2);
  RankSample violating{TorusPoint::parse("1/3,2/3"), {-2, 0}, unknots(2)};
  EXPECT_EQ(rank_obstruction(2, 0, {violating}).value, 2);
  EXPECT_EQ(rank_obstruction(2, 0, {violating}, 0).value, 2);
  EXPECT_EQ(rank_obstruction(4, 5, {}).value, 0);
}

TEST(RankObstruction, RejectsNonQualifyingSample) {
  RankSample bad{TorusPoint::parse("1/3,2/3"), {0, 1}, unknots(2)};
  EXPECT_THROW(rank_obstruction(2, 0, {bad}), std::invalid_argument);
  RankSample wrong_mu{TorusPoint::parse("1/3"), {0, 0}, unknots(1)};
  EXPECT_THROW(rank_obstruction(2, 0, {wrong_mu}), std::invalid_argument);
}

TEST(UnlinkingBound, Examples) {
  const BoundReport hopf = unlinking_bound(2, {0, 0}, pairwise(2, {{0, 1, 1}}));
  EXPECT_EQ(hopf.raw, 2);
  EXPECT_EQ(hopf.value, 1);
  const BoundReport trivial = unlinking_bound(3, {0, 2}, pairwise(3, {}));
  EXPECT_EQ(trivial.raw, 0);
  EXPECT_EQ(trivial.value, 0);
  for (int lambda = -4; lambda <= 4; ++lambda) {
    const BoundReport r = unlinking_bound(2, {-2, 0}, pairwise(2, {{0, 1, lambda}}));
    EXPECT_EQ(r.raw, 3 + std::abs(lambda));
    EXPECT_EQ(r.value, (3 + std::abs(lambda) + 1) / 2);
  }
}

TEST(RaiseToParity, Values) {
  EXPECT_EQ(raise_to_parity(2, 1), 3);
  EXPECT_EQ(raise_to_parity(3, 1), 3);
  EXPECT_EQ(raise_to_parity(0, 0), 0);
  EXPECT_EQ(raise_to_parity(1, -1), 1);
}
