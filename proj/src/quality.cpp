#include "synthminer/quality.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

namespace synthminer {

double f1(double fitness, double precision) {
  if (fitness + precision <= 0) return 0;
  return 2 * fitness * precision / (fitness + precision);
}

namespace {

// Prefix tree of the log; every node is a prefix state.
struct TrieNode {
  std::map<Activity, std::unique_ptr<TrieNode>> children;
  std::uint64_t through = 0;  // traces having this prefix
  std::uint64_t ending = 0;   // traces equal to this prefix
};

TrieNode build_trie(const EventLog& log) {
  TrieNode root;
  for (const auto& [trace, count] : log.variants()) {
    TrieNode* node = &root;
    node->through += count;
    for (const auto& a : trace) {
      auto& child = node->children[a];
      if (!child) child = std::make_unique<TrieNode>();
      node = child.get();
      node->through += count;
    }
    node->ending += count;
  }
  return root;
}

struct ReplayState {
  Marking marking;
  std::uint64_t produced = 0;
  std::uint64_t consumed = 0;
  std::uint64_t missing = 0;
  bool failed = false;
};

class Replayer {
 public:
  Replayer(const WorkflowNet& wf, const ReplayOptions& options) : wf_(wf), net_(wf.net), options_(options) {
    for (NodeId t : net_.transitions()) {
      const auto& l = net_.node(t).label;
      if (l) by_label_[*l].push_back(t);
      else silent_.push_back(t);
    }
  }

  ReplayState initial() const {
    ReplayState s{marking_of(net_, {wf_.source}), 1, 0, 0, false};
    return s;
  }

  void fire(ReplayState& s, NodeId t) const {
    s.marking = synthminer::fire(net_, s.marking, t);
    s.consumed += net_.preset(t).size();
    s.produced += net_.postset(t).size();
  }

  void replay_event(ReplayState& s, const Activity& a) const {
    auto it = by_label_.find(a);
    if (it == by_label_.end()) {
      // No transition carries this label: count one missing token.
      s.missing += 1;
      s.consumed += 1;
      s.failed = true;
      return;
    }
    const auto& candidates = it->second;
    for (NodeId t : candidates)
      if (is_enabled(net_, s.marking, t)) {
        fire(s, t);
        return;
      }
    auto path = silent_path(s.marking, [&](const Marking& m) {
      return std::any_of(candidates.begin(), candidates.end(), [&](NodeId t) { return is_enabled(net_, m, t); });
    });
    if (path) {
      for (NodeId t : *path) fire(s, t);
      for (NodeId t : candidates)
        if (is_enabled(net_, s.marking, t)) {
          fire(s, t);
          return;
        }
    }
    // Force the candidate missing the fewest tokens.
    NodeId best = candidates.front();
    std::size_t best_missing = SIZE_MAX;
    for (NodeId t : candidates) {
      std::size_t miss = 0;
      for (NodeId p : net_.preset(t))
        if (s.marking.tokens[net_.index_of(p)] == 0) ++miss;
      if (miss < best_missing) {
        best_missing = miss;
        best = t;
      }
    }
    for (NodeId p : net_.preset(best)) {
      auto& tok = s.marking.tokens[net_.index_of(p)];
      if (tok == 0) {
        ++tok;
        ++s.missing;
      }
    }
    fire(s, best);
    s.failed = true;
  }

  /// Consumes the sink token at the end of a trace; returns remaining tokens.
  std::uint64_t finish(ReplayState& s) const {
    const std::size_t sink = net_.index_of(wf_.sink);
    if (s.marking.tokens[sink] == 0) {
      auto path = silent_path(s.marking, [&](const Marking& m) { return m.tokens[sink] > 0; });
      if (path)
        for (NodeId t : *path) fire(s, t);
    }
    if (s.marking.tokens[sink] > 0) --s.marking.tokens[sink];
    else ++s.missing;
    ++s.consumed;
    return s.marking.total();
  }

  /// Visible labels enabled after at most lookahead_depth silent firings.
  std::set<Activity> enabled_labels(const Marking& start) const {
    std::set<Activity> out;
    visit_silent_closure(start, [&](const Marking& m) {
      for (const auto& [label, ts] : by_label_)
        if (!out.count(label) &&
            std::any_of(ts.begin(), ts.end(), [&](NodeId t) { return is_enabled(net_, m, t); }))
          out.insert(label);
      return false;
    });
    return out;
  }

 private:
  static constexpr std::size_t kClosureLimit = 10'000;

  // Breadth-first over silent firings in creation order; stops when `stop`
  // returns true for a marking, or at the depth/size limits.
  template <typename F>
  std::optional<std::size_t> visit_silent_closure(const Marking& start, F&& stop,
                                                  std::vector<Marking>* states = nullptr,
                                                  std::vector<std::pair<std::size_t, NodeId>>* parents = nullptr) const {
    std::vector<Marking> local_states;
    std::vector<std::pair<std::size_t, NodeId>> local_parents;
    auto& st = states ? *states : local_states;
    auto& par = parents ? *parents : local_parents;
    st.assign(1, start);
    par.assign(1, {0, NodeId{}});
    std::vector<std::size_t> depth{0};
    std::unordered_map<Marking, std::size_t, MarkingHash> seen{{start, 0}};
    for (std::size_t k = 0; k < st.size(); ++k) {
      if (stop(st[k])) return k;
      if (depth[k] >= options_.lookahead_depth) continue;
      for (NodeId t : silent_) {
        if (!is_enabled(net_, st[k], t)) continue;
        Marking next = synthminer::fire(net_, st[k], t);
        if (seen.count(next)) continue;
        if (st.size() >= kClosureLimit) return std::nullopt;
        seen.emplace(next, st.size());
        st.push_back(std::move(next));
        par.emplace_back(k, t);
        depth.push_back(depth[k] + 1);
      }
    }
    return std::nullopt;
  }

  template <typename F>
  std::optional<std::vector<NodeId>> silent_path(const Marking& start, F&& goal) const {
    std::vector<Marking> states;
    std::vector<std::pair<std::size_t, NodeId>> parents;
    auto hit = visit_silent_closure(start, goal, &states, &parents);
    if (!hit) return std::nullopt;
    std::vector<NodeId> path;
    for (std::size_t k = *hit; k != 0; k = parents[k].first) path.push_back(parents[k].second);
    std::reverse(path.begin(), path.end());
    return path;
  }

  const WorkflowNet& wf_;
  const PetriNet& net_;
  ReplayOptions options_;
  std::map<Activity, std::vector<NodeId>> by_label_;
  std::vector<NodeId> silent_;
};

struct Totals {
  double missing = 0, consumed = 0, remaining = 0, produced = 0;
  double escaping = 0, weight = 0;
};

Totals replay_log(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options, bool want_fitness,
                  bool want_precision) {
  const Replayer replayer(wf, options);
  const TrieNode root = build_trie(log);
  Totals totals;

  std::function<void(const TrieNode&, const ReplayState&)> walk = [&](const TrieNode& node, const ReplayState& s) {
    if (want_fitness && node.ending > 0) {
      ReplayState end = s;
      const double remaining = static_cast<double>(replayer.finish(end));
      const double w = static_cast<double>(node.ending);
      totals.missing += w * static_cast<double>(end.missing);
      totals.consumed += w * static_cast<double>(end.consumed);
      totals.remaining += w * remaining;
      totals.produced += w * static_cast<double>(end.produced);
    }
    // Every prefix state counts, weighted by the traces reaching it; at a
    // trace end any enabled label escapes unless another trace continues.
    if (want_precision && !s.failed) {
      const auto en = replayer.enabled_labels(s.marking);
      if (!en.empty()) {
        std::size_t escaping = 0;
        for (const auto& label : en)
          if (!node.children.count(label)) ++escaping;
        const double w = static_cast<double>(node.through);
        totals.escaping += w * static_cast<double>(escaping) / static_cast<double>(en.size());
        totals.weight += w;
      }
    }
    for (const auto& [label, child] : node.children) {
      ReplayState next = s;
      replayer.replay_event(next, label);
      walk(*child, next);
    }
  };
  walk(root, replayer.initial());
  return totals;
}

double fitness_of(const Totals& t) {
  if (t.consumed == 0 || t.produced == 0) return 1.0;
  const double v = 0.5 * (1 - t.missing / t.consumed) + 0.5 * (1 - t.remaining / t.produced);
  return std::clamp(v, 0.0, 1.0);
}

double precision_of(const Totals& t) {
  if (t.weight == 0) return 1.0;
  return std::clamp(1 - t.escaping / t.weight, 0.0, 1.0);
}

}  // namespace

double replay_fitness(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options) {
  return fitness_of(replay_log(wf, log, options, true, false));
}

double precision(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options) {
  return precision_of(replay_log(wf, log, options, false, true));
}

QualityScore evaluate(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options) {
  const Totals t = replay_log(wf, log, options, true, true);
  QualityScore q;
  q.fitness = fitness_of(t);
  q.precision = precision_of(t);
  q.f1 = f1(q.fitness, q.precision);
  return q;
}

}  // namespace synthminer
