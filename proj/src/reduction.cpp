#include "synthminer/reduction.hpp"

#include <cassert>
#include <stdexcept>

namespace synthminer {

namespace {

std::set<NodeId> labeled(const PetriNet& net, const std::set<Activity>& labels) {
  std::set<NodeId> out;
  for (NodeId t : net.transitions()) {
    const auto& l = net.node(t).label;
    if (l && labels.count(*l)) out.insert(t);
  }
  return out;
}

}  // namespace

NodeSet reduce(const Activity& a, const LogStats& stats, const WorkflowNet& wf, const Rational& threshold,
               const ReduceOptions& options) {
  NodeSet v;
  // A label set whose only member is `a` itself (not yet in the net) yields no
  // transitions; that case takes the same default as an empty label set.
  v.t_pre = labeled(wf.net, stats.preceding(a, threshold));
  if (v.t_pre.empty()) v.t_pre = {wf.start};
  v.t_fol = labeled(wf.net, stats.following(a, threshold));
  if (v.t_fol.empty()) v.t_fol = {wf.end};

  PathNodes paths = path_nodes(v.t_pre, v.t_fol, wf.net, options.mode, options.path_budget);
  if (paths.nodes.empty()) {
    for (std::uint32_t k = 0; k < wf.net.node_count(); ++k)
      if (NodeId{k} != wf.source && NodeId{k} != wf.sink) v.nodes.insert(NodeId{k});
    v.provenance = Provenance::fallback;
    return v;
  }
  assert(!paths.nodes.count(wf.source) && !paths.nodes.count(wf.sink));
  v.nodes = std::move(paths.nodes);
  v.provenance = paths.provenance;
  return v;
}

NodeSet reduce(const Activity& a, const EventLog& log, const WorkflowNet& wf, const Rational& threshold,
               const ReduceOptions& options) {
  return reduce(a, LogStats(log), wf, threshold, options);
}

Rational search_space_ratio(const NodeSet& v, const WorkflowNet& wf) {
  const std::size_t n = wf.net.node_count();
  if (n <= 2) throw std::invalid_argument("search_space_ratio: net has no nodes besides source and sink");
  Rational r(static_cast<unsigned long>(v.nodes.size()), static_cast<unsigned long>(n - 2));
  r.canonicalize();
  return r;
}

}  // namespace synthminer
