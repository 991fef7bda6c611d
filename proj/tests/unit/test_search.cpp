#include <gtest/gtest.h>

#include "uacg/constructions.hpp"
#include "uacg/errors.hpp"
#include "uacg/search.hpp"
#include "uacg/verify.hpp"

using namespace uacg;

namespace {

Graph zn(std::uint64_t n) { return build_graph(n % 2 ? make_ring_zn(n) : RingSpec::zmod_even(n)).graph; }

void expect_valid(const Graph& g, const SearchOutcome& out) {
  EXPECT_TRUE(out.verified);
  EXPECT_EQ(out.best_coloring.size(), out.k);
  EXPECT_TRUE(is_proper(g, out.best_coloring).ok);
  EXPECT_TRUE(is_complete(g, out.best_coloring).ok);
  EXPECT_TRUE(singletons_form_clique(g, out.best_coloring).ok);
  EXPECT_LE(out.k, completeness_upper_bounds(g).binomial_bound_k);
  ASSERT_FALSE(out.trace.empty());
  for (std::size_t i = 0; i < out.trace.size(); ++i) {
    EXPECT_EQ(out.trace[i].restart, i);
    if (i) {
      EXPECT_GE(out.trace[i].k, out.trace[i - 1].k);
    }
  }
  EXPECT_EQ(out.trace.back().k, out.k);
}

}  // namespace

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(123);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, 1ULL << 40}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(bound), bound);
  }
}

TEST(Search, Z15ReachesEight) {
  const auto g = zn(15);
  SearchConfig cfg;
  cfg.target_k = 8;
  const auto out = achromatic_search(g, cfg);
  expect_valid(g, out);
  EXPECT_TRUE(out.target_reached);
  EXPECT_EQ(out.k, 8u);
  EXPECT_EQ(out.k, theorem2_coloring(3, 5).size());
}

TEST(Search, Z35ReachesNineteen) {
  const auto g = zn(35);
  SearchConfig cfg;
  cfg.target_k = 19;
  const auto out = achromatic_search(g, cfg, "zn:35");
  expect_valid(g, out);
  EXPECT_TRUE(out.target_reached);
  EXPECT_GE(out.k, 19u);
  EXPECT_EQ(out.best_coloring.graph, "zn:35");
}

TEST(Search, Deterministic) {
  const auto g = zn(33);
  SearchConfig cfg;
  cfg.seed = 77;
  cfg.restarts = 3;
  cfg.iterations = 20'000;
  for (auto s : {SearchStrategy::hill_climb, SearchStrategy::randomized_backtrack, SearchStrategy::greedy_merge}) {
    cfg.strategy = s;
    const auto a = achromatic_search(g, cfg);
    const auto b = achromatic_search(g, cfg);
    EXPECT_EQ(a.best_coloring, b.best_coloring);
    EXPECT_EQ(a.k, b.k);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      EXPECT_EQ(a.trace[i].k, b.trace[i].k);
      EXPECT_EQ(a.trace[i].iterations, b.trace[i].iterations);
    }
  }
}

TEST(Search, EveryStrategyCertifies) {
  for (std::uint64_t n : {9u, 10u, 15u, 21u, 25u, 27u}) {
    const auto g = zn(n);
    for (auto s : {SearchStrategy::hill_climb, SearchStrategy::randomized_backtrack, SearchStrategy::greedy_merge}) {
      SearchConfig cfg;
      cfg.strategy = s;
      cfg.restarts = 2;
      cfg.iterations = 20'000;
      expect_valid(g, achromatic_search(g, cfg));
    }
  }
}

TEST(Search, UnreachedTargetIsNotAnError) {
  const auto g = zn(15);
  SearchConfig cfg;
  cfg.target_k = 9;  // the exact value is 8
  cfg.restarts = 2;
  cfg.iterations = 5'000;
  const auto out = achromatic_search(g, cfg);
  expect_valid(g, out);
  EXPECT_FALSE(out.target_reached);
  EXPECT_EQ(out.trace.size(), 2u);
}

TEST(Search, RejectsZeroBudget) {
  const auto g = zn(15);
  SearchConfig cfg;
  cfg.iterations = 0;
  EXPECT_THROW(achromatic_search(g, cfg), DomainError);
  cfg.iterations = 10;
  cfg.restarts = 0;
  EXPECT_THROW(achromatic_search(g, cfg), DomainError);
}

TEST(Search, StrategyNames) {
  for (auto s : {SearchStrategy::hill_climb, SearchStrategy::randomized_backtrack, SearchStrategy::greedy_merge}) {
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  EXPECT_THROW(parse_strategy("annealing"), FormatError);
}

TEST(SeedFromConstruction, PairConstructionWarmStart) {
  const auto g = zn(35);
  const auto start = theorem2_coloring(5, 7);
  const auto out = seed_from_construction(g, start, SearchConfig{});
  expect_valid(g, out);
  EXPECT_GE(out.k, 18u);
}

TEST(SeedFromConstruction, WarmStartReachesHalfPlusOne) {
  for (const auto& [p, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 5}, {3, 7}, {5, 7}, {3, 11}, {5, 11}}) {
    const auto g = zn(static_cast<std::uint64_t>(p) * q);
    SearchConfig cfg;
    cfg.target_k = (p * q + 1) / 2 + 1;
    const auto out = seed_from_construction(g, theorem2_coloring(p, q), cfg);
    expect_valid(g, out);
    EXPECT_GE(out.k, (p * q + 1) / 2) << p << "," << q;
  }
}

TEST(SeedFromConstruction, BipartitionOnZ10) {
  const auto g = zn(10);
  const auto out = seed_from_construction(g, bipartition_coloring(10), SearchConfig{});
  expect_valid(g, out);
  EXPECT_GE(out.k, 2u);
  EXPECT_EQ(out.k, 5u);
}

TEST(SeedFromConstruction, ZeroBudgetKeepsStart) {
  const auto g = zn(35);
  const auto start = theorem2_coloring(5, 7);
  SearchConfig cfg;
  cfg.iterations = 0;
  const auto out = seed_from_construction(g, start, cfg);
  EXPECT_EQ(out.k, start.size());
  EXPECT_TRUE(out.verified);
}

TEST(SeedFromConstruction, RejectsInvalidStart) {
  const auto g = zn(15);
  EXPECT_THROW(seed_from_construction(g, Coloring{"", {{"a", {0, 1}}}}, SearchConfig{}), DomainError);
  Coloring singles{"", {}};
  for (VertexId v = 0; v < 15; ++v) singles.classes.push_back({"s" + std::to_string(v), {v}});
  EXPECT_THROW(seed_from_construction(g, singles, SearchConfig{}), DomainError);
  Coloring all{"", {{"all", {}}}};
  for (VertexId v = 0; v < 15; ++v) all.classes[0].vertices.push_back(v);
  EXPECT_THROW(seed_from_construction(g, all, SearchConfig{}), DomainError);
}
