#pragma once

#include <set>

#include "synthminer/event_log.hpp"
#include "synthminer/petri_net.hpp"

namespace synthminer {

/// Reduced search space for adding one activity.
struct NodeSet {
  std::set<NodeId> nodes;
  Provenance provenance = Provenance::exact;
  std::set<NodeId> t_pre;
  std::set<NodeId> t_fol;
};

struct ReduceOptions {
  PathMode mode = PathMode::exact;
  std::size_t path_budget = kDefaultPathBudget;
};

/// Transitions labeled by the causal predecessors (successors) of `a` in the
/// log, defaulting to {start} ({end}) when there are none, and every node on
/// an elementary path between the two sets. When no such path exists the
/// result is every node except source and sink, with fallback provenance.
NodeSet reduce(const Activity& a, const LogStats& stats, const WorkflowNet& wf, const Rational& threshold,
               const ReduceOptions& options = {});
NodeSet reduce(const Activity& a, const EventLog& log, const WorkflowNet& wf, const Rational& threshold,
               const ReduceOptions& options = {});

/// |V| / (|P u T| - 2). Throws std::invalid_argument when the net has at
/// most two nodes.
Rational search_space_ratio(const NodeSet& v, const WorkflowNet& wf);

}  // namespace synthminer
