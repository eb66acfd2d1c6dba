#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "synthminer/log_io.hpp"
#include "synthminer/miner.hpp"
#include "synthminer/pnml.hpp"

using namespace synthminer;
using namespace synthminer::testing;

namespace {

WorkflowNet read_pnml(const std::string& text) {
  std::istringstream in(text);
  return parse_pnml(in);
}

WorkflowNet read_dot(const std::string& text) {
  std::istringstream in(text);
  return parse_dot(in);
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Pnml, RoundTripReproducesNet) {
  const WorkflowNet wf = w2_net();
  const WorkflowNet back = read_pnml(to_pnml(wf));
  EXPECT_EQ(back, wf);
  EXPECT_EQ(to_pnml(back), to_pnml(wf));
}

TEST(Pnml, SilentTransitionsCarryInvisibleMarker) {
  const std::string text = to_pnml(initial_net());
  EXPECT_EQ(count(text, "$invisible$"), 2u);
  EXPECT_NE(text.find("<pnml"), std::string::npos);
}

TEST(Pnml, RoundTripOfDiscoveredNet) {
  const auto result = discover(ls_log());
  const WorkflowNet back = read_pnml(to_pnml(result.net));
  EXPECT_EQ(back, result.net);
  EXPECT_TRUE(is_sound(back));
}

TEST(Pnml, MalformedXmlThrows) {
  EXPECT_THROW(read_pnml("<pnml><net>"), ParseError);
  EXPECT_THROW(read_pnml("not xml at all"), ParseError);
}

TEST(Pnml, NonWorkflowNetThrows) {
  const std::string text = R"(<?xml version="1.0"?>
<pnml><net id="n" type="http://www.pnml.org/version-2009/grammar/ptnet"><page id="pg">
<place id="a"/><place id="b"/>
</page></net></pnml>)";
  EXPECT_THROW(read_pnml(text), ParseError);
}

TEST(Dot, InitialNetShape) {
  const std::string dot = to_dot(initial_net());
  EXPECT_EQ(count(dot, "->"), 4u);
  EXPECT_EQ(count(dot, "shape=circle"), 3u);
  EXPECT_EQ(count(dot, "shape=box"), 2u);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Dot, RoundTripPreservesStructure) {
  const WorkflowNet wf = discover(ls_log()).net;
  const WorkflowNet back = read_dot(to_dot(wf));
  EXPECT_EQ(back.net.node_count(), wf.net.node_count());
  EXPECT_EQ(back.net.arc_count(), wf.net.arc_count());
  auto a = visible_labels(wf.net), b = visible_labels(back.net);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  EXPECT_TRUE(is_sound(back));
  EXPECT_EQ(to_pnml(back), to_pnml(read_dot(to_dot(back))));
}

TEST(Dot, RejectsGarbage) {
  EXPECT_THROW(read_dot("graph { a -- b }"), ParseError);
  EXPECT_THROW(read_dot(""), ParseError);
}
