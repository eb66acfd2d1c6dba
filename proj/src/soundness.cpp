#include <deque>
#include <unordered_map>

#include "synthminer/petri_net.hpp"

namespace synthminer {

namespace {

bool strictly_covers(const Marking& big, const Marking& small) {
  bool strict = false;
  for (std::size_t k = 0; k < big.tokens.size(); ++k) {
    if (big.tokens[k] < small.tokens[k]) return false;
    if (big.tokens[k] > small.tokens[k]) strict = true;
  }
  return strict;
}

SoundnessResult verdict(SoundnessStatus s, std::string reason, std::size_t states) {
  return {s, std::move(reason), states};
}

}  // namespace

// Explicit state-space exploration from [i]. The net is sound iff the graph
// is finite, [o] is reachable from every state, no state strictly covers
// [o], and every transition labels some edge.
SoundnessResult check_soundness(const WorkflowNet& wf, std::size_t state_budget) {
  const PetriNet& net = wf.net;
  if (!is_workflow_net(wf)) return verdict(SoundnessStatus::unsound, "not a workflow net", 0);

  const std::size_t sink_idx = net.index_of(wf.sink);
  const Marking initial = marking_of(net, {wf.source});
  const Marking final_marking = marking_of(net, {wf.sink});

  std::vector<Marking> states{initial};
  std::vector<std::size_t> parent{0};
  std::unordered_map<Marking, std::size_t, MarkingHash> index{{initial, 0}};
  std::vector<std::vector<std::size_t>> predecessors(1);
  std::vector<char> fired(net.node_count(), 0);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Marking m = states[cur];

    if (m.tokens[sink_idx] > 0 && m != final_marking)
      return verdict(SoundnessStatus::unsound, "improper completion: sink marked together with other tokens",
                     states.size());

    for (NodeId t : enabled(net, m)) {
      fired[t.value] = 1;
      Marking next = fire(net, m, t);
      auto [it, fresh] = index.try_emplace(next, states.size());
      if (fresh) {
        for (std::size_t a = cur;; a = parent[a]) {
          if (strictly_covers(next, states[a]))
            return verdict(SoundnessStatus::unsound, "unbounded: a reachable marking covers an ancestor",
                           states.size());
          if (a == 0) break;
        }
        states.push_back(std::move(next));
        parent.push_back(cur);
        predecessors.emplace_back();
        if (states.size() > state_budget)
          return verdict(SoundnessStatus::indeterminate, "state budget exceeded", states.size());
        queue.push_back(it->second);
      }
      predecessors[it->second].push_back(cur);
    }
  }

  auto final_it = index.find(final_marking);
  if (final_it == index.end())
    return verdict(SoundnessStatus::unsound, "final marking [o] unreachable", states.size());

  std::vector<char> reaches(states.size(), 0);
  std::deque<std::size_t> back{final_it->second};
  reaches[final_it->second] = 1;
  while (!back.empty()) {
    const std::size_t s = back.front();
    back.pop_front();
    for (std::size_t p : predecessors[s])
      if (!reaches[p]) {
        reaches[p] = 1;
        back.push_back(p);
      }
  }
  for (std::size_t s = 0; s < states.size(); ++s)
    if (!reaches[s]) return verdict(SoundnessStatus::unsound, "a reachable marking cannot complete", states.size());

  for (NodeId t : net.transitions())
    if (!fired[t.value])
      return verdict(SoundnessStatus::unsound, "dead transition " + net.node(t).name, states.size());

  return verdict(SoundnessStatus::sound, {}, states.size());
}

}  // namespace synthminer
