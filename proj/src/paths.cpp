#include <deque>

#include "synthminer/petri_net.hpp"

namespace synthminer {

namespace {

std::vector<char> sweep(const PetriNet& net, const std::set<NodeId>& seeds, bool forward) {
  std::vector<char> seen(net.node_count(), 0);
  std::deque<NodeId> queue;
  for (NodeId s : seeds) {
    seen[s.value] = 1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : forward ? net.postset(x) : net.preset(x))
      if (!seen[y.value]) {
        seen[y.value] = 1;
        queue.push_back(y);
      }
  }
  return seen;
}

std::set<NodeId> approximate(const PetriNet& net, const std::set<NodeId>& from, const std::set<NodeId>& to) {
  auto fwd = sweep(net, from, true);
  auto bwd = sweep(net, to, false);
  std::set<NodeId> out;
  for (std::uint32_t k = 0; k < net.node_count(); ++k)
    if (fwd[k] && bwd[k]) out.insert(NodeId{k});
  return out;
}

}  // namespace

PathNodes path_nodes(const std::set<NodeId>& from, const std::set<NodeId>& to, const PetriNet& net, PathMode mode,
                     std::size_t budget) {
  PathNodes result;
  if (from.empty() || to.empty()) return result;
  if (mode == PathMode::approx) {
    result.nodes = approximate(net, from, to);
    result.provenance = Provenance::approximated;
    return result;
  }

  // Only nodes that can still reach `to` are worth expanding; this prunes
  // without changing the exact answer.
  const auto useful = sweep(net, to, false);
  std::vector<char> is_target(net.node_count(), 0);
  for (NodeId t : to) is_target[t.value] = 1;

  std::vector<char> on_path(net.node_count(), 0);
  std::vector<char> included(net.node_count(), 0);
  std::vector<NodeId> path;
  bool over_budget = false;

  auto dfs = [&](auto&& self, NodeId x) -> void {
    if (over_budget) return;
    if (++result.expanded > budget) {
      over_budget = true;
      return;
    }
    on_path[x.value] = 1;
    path.push_back(x);
    if (is_target[x.value])
      for (NodeId y : path) included[y.value] = 1;
    for (NodeId y : net.postset(x))
      if (useful[y.value] && !on_path[y.value]) self(self, y);
    path.pop_back();
    on_path[x.value] = 0;
  };

  for (NodeId x : from)
    if (useful[x.value]) dfs(dfs, x);

  if (over_budget) {
    result.nodes = approximate(net, from, to);
    result.provenance = Provenance::approximated;
    return result;
  }
  for (std::uint32_t k = 0; k < net.node_count(); ++k)
    if (included[k]) result.nodes.insert(NodeId{k});
  result.provenance = Provenance::exact;
  return result;
}

}  // namespace synthminer
