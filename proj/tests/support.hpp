#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "synthminer/event_log.hpp"
#include "synthminer/petri_net.hpp"

namespace synthminer::testing {

inline std::string fixture(const std::string& name) { return std::string(SYNTHMINER_FIXTURES) + "/" + name; }

/// Traces written as strings of one-letter activities, e.g. {"abc", 3}.
inline EventLog make_log(std::initializer_list<std::pair<std::string, std::uint64_t>> variants) {
  EventLog log;
  for (const auto& [word, count] : variants) {
    Trace t;
    for (char c : word) t.emplace_back(1, c);
    log.add(std::move(t), count);
  }
  return log;
}

/// The ten-trace running example of the orderings.
inline EventLog ls_log() {
  return make_log({{"bcdefg", 1}, {"becdfg", 1}, {"becfgd", 1}, {"becfdg", 1}, {"bcedfg", 1},
                   {"bcefgd", 1}, {"bcefdg", 1}, {"ebcdfg", 1}, {"ebcfgd", 1}, {"ebcfdg", 1}});
}

/// [<x,y,z>^66, <x,z>^66]
inline EventLog l3_log() { return make_log({{"xyz", 66}, {"xz", 66}}); }

/// i -> start -> p1 -> t1(x) -> p2 -> t2(z) -> p3 -> end -> o
inline WorkflowNet w2_net() {
  WorkflowNet wf;
  PetriNet& n = wf.net;
  wf.source = n.add_place("i");
  wf.start = n.add_transition(std::nullopt, "t_start");
  const NodeId p1 = n.add_place("p1");
  const NodeId t1 = n.add_transition(Activity("x"), "t1");
  const NodeId p2 = n.add_place("p2");
  const NodeId t2 = n.add_transition(Activity("z"), "t2");
  const NodeId p3 = n.add_place("p3");
  wf.end = n.add_transition(std::nullopt, "t_end");
  wf.sink = n.add_place("o");
  n.add_arc(wf.source, wf.start);
  n.add_arc(wf.start, p1);
  n.add_arc(p1, t1);
  n.add_arc(t1, p2);
  n.add_arc(p2, t2);
  n.add_arc(t2, p3);
  n.add_arc(p3, wf.end);
  n.add_arc(wf.end, wf.sink);
  return wf;
}

/// Sequential workflow net over the given labels.
inline WorkflowNet chain_net(const std::vector<Activity>& labels) {
  WorkflowNet wf;
  PetriNet& n = wf.net;
  wf.source = n.add_place("i");
  wf.start = n.add_transition(std::nullopt, "t_start");
  n.add_arc(wf.source, wf.start);
  NodeId last = n.add_place();
  n.add_arc(wf.start, last);
  for (const auto& a : labels) {
    const NodeId t = n.add_transition(a);
    n.add_arc(last, t);
    last = n.add_place();
    n.add_arc(t, last);
  }
  wf.end = n.add_transition(std::nullopt, "t_end");
  wf.sink = n.add_place("o");
  n.add_arc(last, wf.end);
  n.add_arc(wf.end, wf.sink);
  return wf;
}

inline NodeId id(const WorkflowNet& wf, const std::string& name) {
  auto found = wf.net.find(name);
  if (!found) throw std::out_of_range("no node named " + name);
  return *found;
}

}  // namespace synthminer::testing
