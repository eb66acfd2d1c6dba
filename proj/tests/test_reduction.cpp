#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "synthminer/reduction.hpp"

using namespace synthminer;
using namespace synthminer::testing;

namespace {

const Rational kC{9, 10};

std::set<NodeId> ids(const WorkflowNet& wf, std::initializer_list<const char*> names) {
  std::set<NodeId> out;
  for (const char* n : names) out.insert(id(wf, n));
  return out;
}

}  // namespace

TEST(Reduction, InsertBetweenTwoActivities) {
  const WorkflowNet w2 = w2_net();
  const NodeSet v = reduce("y", l3_log(), w2, kC);
  EXPECT_EQ(v.t_pre, ids(w2, {"t1"}));
  EXPECT_EQ(v.t_fol, ids(w2, {"t2"}));
  EXPECT_EQ(v.nodes, ids(w2, {"t1", "p2", "t2"}));
  EXPECT_EQ(v.provenance, Provenance::exact);
  // Nine nodes in W2, source and sink excluded: 3/7.
  EXPECT_EQ(search_space_ratio(v, w2), Rational(3, 7));
}

TEST(Reduction, DefaultsToStartAndEnd) {
  const WorkflowNet w = initial_net();
  const NodeSet v = reduce("a", make_log({{"a", 5}}), w, kC);
  EXPECT_EQ(v.t_pre, std::set<NodeId>{w.start});
  EXPECT_EQ(v.t_fol, std::set<NodeId>{w.end});
  EXPECT_EQ(v.nodes.size(), 3u);
  EXPECT_EQ(search_space_ratio(v, w), Rational(1));
}

TEST(Reduction, PredecessorOnlyKnownSide) {
  // z always follows x; nothing follows z, so T^fol defaults to the end.
  const WorkflowNet w = chain_net({"x"});
  const NodeSet v = reduce("z", make_log({{"xz", 10}}), w, kC);
  EXPECT_EQ(v.t_fol, std::set<NodeId>{w.end});
  ASSERT_EQ(v.t_pre.size(), 1u);
  EXPECT_EQ(*w.net.node(*v.t_pre.begin()).label, "x");
  EXPECT_EQ(v.nodes.size(), 3u);  // x, place, end
}

TEST(Reduction, NoPathFallsBackToInterior) {
  // The log puts y after z and before x, but the net runs x before z.
  const WorkflowNet w2 = w2_net();
  const NodeSet v = reduce("y", make_log({{"zyx", 20}}), w2, kC);
  EXPECT_EQ(v.provenance, Provenance::fallback);
  EXPECT_EQ(v.nodes.size(), 7u);
  EXPECT_FALSE(v.nodes.count(w2.source));
  EXPECT_FALSE(v.nodes.count(w2.sink));
}

TEST(Reduction, ThresholdAboveStrengthUsesDefaults) {
  const WorkflowNet w2 = w2_net();
  const NodeSet v = reduce("y", l3_log(), w2, Rational(1));
  EXPECT_EQ(v.t_pre, std::set<NodeId>{w2.start});
  EXPECT_EQ(v.t_fol, std::set<NodeId>{w2.end});
  EXPECT_EQ(v.nodes.size(), 7u);
  EXPECT_EQ(v.provenance, Provenance::exact);
}

TEST(Reduction, RatioNeedsInteriorNodes) {
  WorkflowNet tiny;
  tiny.source = tiny.net.add_place("i");
  tiny.sink = tiny.net.add_place("o");
  EXPECT_THROW(search_space_ratio(NodeSet{}, tiny), std::invalid_argument);
}

TEST(Reduction, ApproxContainsExact) {
  const WorkflowNet w2 = w2_net();
  const NodeSet exact = reduce("y", l3_log(), w2, kC);
  const NodeSet approx = reduce("y", l3_log(), w2, kC, {PathMode::approx, kDefaultPathBudget});
  EXPECT_EQ(approx.provenance, Provenance::approximated);
  for (NodeId x : exact.nodes) EXPECT_TRUE(approx.nodes.count(x));
}

// Raising c can only shrink the causal label sets; V always avoids the
// source and sink and the ratio stays in (0,1].
TEST(ReductionProperty, ThresholdMonotoneAndBounded) {
  std::mt19937 rng(5);
  const std::vector<Rational> thresholds{Rational(0), Rational(1, 2), Rational(9, 10), Rational(1)};
  int checked = 0;
  while (checked < 150) {
    auto wf = oracle::random_workflow_net(rng, 4 + rng() % 5);
    if (!wf) continue;
    ++checked;
    EventLog log;
    for (int k = 0; k < 4; ++k) {
      Trace t;
      for (int j = 0, len = 1 + static_cast<int>(rng() % 5); j < len; ++j) t.emplace_back(1, static_cast<char>('a' + rng() % 8));
      log.add(t, 1 + rng() % 4);
    }
    const LogStats stats(log);
    const Activity a(1, static_cast<char>('a' + rng() % 8));
    std::optional<std::set<Activity>> prev_pre, prev_fol;
    for (const auto& c : thresholds) {
      const auto pre = stats.preceding(a, c);
      const auto fol = stats.following(a, c);
      if (prev_pre) {
        for (const auto& x : pre) ASSERT_TRUE(prev_pre->count(x));
        for (const auto& x : fol) ASSERT_TRUE(prev_fol->count(x));
      }
      prev_pre = pre;
      prev_fol = fol;

      const NodeSet v = reduce(a, stats, *wf, c);
      ASSERT_FALSE(v.nodes.empty());
      ASSERT_FALSE(v.nodes.count(wf->source));
      ASSERT_FALSE(v.nodes.count(wf->sink));
      const Rational r = search_space_ratio(v, *wf);
      ASSERT_GT(r, 0);
      ASSERT_LE(r, 1);
    }
  }
}
