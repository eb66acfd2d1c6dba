#include <gtest/gtest.h>

#include "support.hpp"

using namespace synthminer;
using synthminer::testing::l3_log;
using synthminer::testing::ls_log;
using synthminer::testing::make_log;

TEST(EventLog, CountsTracesAndEvents) {
  const EventLog log = ls_log();
  EXPECT_EQ(log.trace_count(), 10u);
  EXPECT_EQ(log.event_count(), 60u);
  EXPECT_EQ(log.variants().size(), 10u);
  EXPECT_EQ(log.activities(), (std::set<Activity>{"b", "c", "d", "e", "f", "g"}));
}

TEST(EventLog, AddMergesVariantsAndIgnoresZeroCounts) {
  EventLog log;
  log.add({"a", "b"}, 2);
  log.add({"a", "b"}, 3);
  log.add({"c"}, 0);
  EXPECT_EQ(log.variants().size(), 1u);
  EXPECT_EQ(log.trace_count(), 5u);
  EXPECT_FALSE(log.activities().count("c"));
}

TEST(EventLog, ActivityAndSuccessionCounts) {
  const EventLog log = ls_log();
  EXPECT_EQ(activity_count("b", log), 10u);
  EXPECT_EQ(direct_succession("b", "c", log), 7u);
  EXPECT_EQ(direct_succession("c", "b", log), 0u);
  EXPECT_EQ(direct_succession("b", "e", log), 3u);
  EXPECT_EQ(direct_succession("e", "b", log), 3u);
  EXPECT_EQ(activity_count("zz", log), 0u);
}

TEST(CausalStrength, MatchesHandComputedValues) {
  const EventLog l3 = l3_log();
  EXPECT_EQ(causal_strength("x", "y", l3), Rational(66, 67));
  EXPECT_EQ(causal_strength("y", "z", l3), Rational(66, 67));
  EXPECT_EQ(causal_strength("x", "z", l3), Rational(66, 67));
  EXPECT_EQ(causal_strength("z", "x", l3), Rational(-66, 67));

  const EventLog ls = ls_log();
  EXPECT_EQ(causal_strength("b", "c", ls), Rational(7, 8));
  EXPECT_EQ(causal_strength("b", "e", ls), Rational(0));
}

TEST(CausalStrength, SelfLoopUsesOwnFormula) {
  const EventLog log = make_log({{"aab", 1}, {"aaab", 1}});
  // #aa = 1 + 2
  EXPECT_EQ(causal_strength("a", "a", log), Rational(3, 4));
  EXPECT_EQ(causal_strength("b", "b", log), Rational(0));
}

TEST(CausalStrength, IsAntisymmetricForDistinctActivities) {
  std::mt19937 rng(11);
  for (int round = 0; round < 50; ++round) {
    EventLog log;
    for (int k = 0; k < 6; ++k) {
      Trace t;
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int j = 0; j < len; ++j) t.emplace_back(1, static_cast<char>('a' + rng() % 4));
      log.add(t, 1 + rng() % 3);
    }
    for (const auto& a : log.activities())
      for (const auto& b : log.activities()) {
        const Rational ab = causal_strength(a, b, log);
        EXPECT_GT(ab, -1);
        EXPECT_LT(ab, 1);
        if (a != b) EXPECT_EQ(ab, -causal_strength(b, a, log));
      }
  }
}

TEST(PrecedingFollowing, ThresholdIsInclusive) {
  const EventLog l3 = l3_log();
  EXPECT_EQ(preceding_set("y", l3, Rational(9, 10)), std::set<Activity>{"x"});
  EXPECT_EQ(following_set("y", l3, Rational(9, 10)), std::set<Activity>{"z"});
  EXPECT_EQ(preceding_set("z", l3, Rational(9, 10)), (std::set<Activity>{"x", "y"}));
  EXPECT_EQ(preceding_set("y", l3, Rational(66, 67)), std::set<Activity>{"x"});
  EXPECT_TRUE(preceding_set("y", l3, Rational(67, 68)).empty());
  EXPECT_TRUE(preceding_set("x", l3, Rational(9, 10)).empty());
}

TEST(Project, KeepsOnlySelectedActivities) {
  const EventLog p = project(ls_log(), {"b", "e"});
  EXPECT_EQ(p, make_log({{"be", 7}, {"eb", 3}}));
  const EventLog none = project(ls_log(), {});
  ASSERT_EQ(none.variants().size(), 1u);
  EXPECT_TRUE(none.variants().begin()->first.empty());
  EXPECT_EQ(none.trace_count(), 10u);
}

TEST(Reverse, IsAnInvolution) {
  const EventLog log = ls_log();
  EXPECT_EQ(reverse(reverse(log)), log);
  EXPECT_EQ(reverse(make_log({{"abc", 2}})), make_log({{"cba", 2}}));
}

TEST(FilterVariants, KeepsMostFrequentUntilCoverage) {
  const EventLog log = make_log({{"a", 50}, {"b", 30}, {"c", 15}, {"d", 5}});
  EXPECT_EQ(filter_variants(log, Rational(95, 100)), make_log({{"a", 50}, {"b", 30}, {"c", 15}}));
  EXPECT_EQ(filter_variants(log, Rational(96, 100)), log);
  EXPECT_EQ(filter_variants(log, Rational(1, 2)), make_log({{"a", 50}}));
  EXPECT_EQ(filter_variants(log, Rational(1)), log);
}

TEST(FilterVariants, TiesGoToSmallerTrace) {
  EXPECT_EQ(filter_variants(make_log({{"b", 1}, {"a", 1}}), Rational(1, 2)), make_log({{"a", 1}}));
}

TEST(FilterVariants, RejectsBadInput) {
  EXPECT_THROW(filter_variants(EventLog{}, Rational(1)), std::invalid_argument);
  EXPECT_THROW(filter_variants(ls_log(), Rational(0)), std::invalid_argument);
  EXPECT_THROW(filter_variants(ls_log(), Rational(3, 2)), std::invalid_argument);
}

TEST(FilterVariants, UniformLogNeedsEveryVariantAtDefaultCoverage) {
  EXPECT_EQ(filter_variants(ls_log(), Rational(95, 100)), ls_log());
}

TEST(Dfg, RecordsArcsStartsAndEnds) {
  const Dfg dfg = build_dfg(ls_log());
  EXPECT_EQ(dfg.start_counts.at("b"), 7u);
  EXPECT_EQ(dfg.start_counts.at("e"), 3u);
  EXPECT_EQ(dfg.end_counts.at("g"), 7u);
  EXPECT_EQ(dfg.end_counts.at("d"), 3u);
  EXPECT_EQ(dfg.arcs.at({"b", "c"}), 7u);
  EXPECT_FALSE(dfg.arcs.count({"c", "b"}));
}

TEST(LogStats, AgreesWithFreeFunctions) {
  std::mt19937 rng(5);
  for (int round = 0; round < 30; ++round) {
    EventLog log;
    for (int k = 0; k < 8; ++k) {
      Trace t;
      const int len = 1 + static_cast<int>(rng() % 7);
      for (int j = 0; j < len; ++j) t.emplace_back(1, static_cast<char>('a' + rng() % 5));
      log.add(t, 1 + rng() % 4);
    }
    const LogStats stats(log);
    const Rational c(rng() % 10, 10);
    for (const auto& a : log.activities()) {
      EXPECT_EQ(stats.count(a), activity_count(a, log));
      EXPECT_EQ(stats.preceding(a, c), preceding_set(a, log, c));
      EXPECT_EQ(stats.following(a, c), following_set(a, log, c));
      for (const auto& b : log.activities()) {
        EXPECT_EQ(stats.follows(a, b), direct_succession(a, b, log));
        EXPECT_EQ(stats.causal(a, b), causal_strength(a, b, log));
      }
    }
  }
}

TEST(Project, WorkedExamples) {
  EXPECT_EQ(project(make_log({{"xyx", 1}}), {"x", "z"}), make_log({{"xx", 1}}));
  EXPECT_EQ(project(make_log({{"xyx", 4}, {"xy", 2}, {"yxz", 6}}), {"y", "z"}), make_log({{"y", 6}, {"yz", 6}}));
  EXPECT_EQ(project(ls_log(), ls_log().activities()), ls_log());
}

TEST(FilterVariants, WorkedExamples) {
  EXPECT_EQ(filter_variants(make_log({{"a", 95}, {"b", 5}}), Rational(95, 100)), make_log({{"a", 95}}));
  EXPECT_EQ(filter_variants(make_log({{"a", 50}, {"b", 50}}), Rational(95, 100)), make_log({{"a", 50}, {"b", 50}}));
}

TEST(EventLog, CountExamples) {
  EXPECT_EQ(activity_count("a", EventLog{}), 0u);
  EXPECT_EQ(activity_count("x", make_log({{"xyx", 4}})), 8u);
  EXPECT_EQ(direct_succession("a", "a", make_log({{"aaa", 1}})), 2u);
  EXPECT_EQ(direct_succession("x", "y", make_log({{"ab", 1}})), 0u);
}
