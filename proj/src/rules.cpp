#include "synthminer/rules.hpp"

#include <algorithm>

namespace synthminer {

const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::abstraction: return "abstraction";
    case RuleKind::linear_transition: return "linear_transition";
    case RuleKind::linear_place: return "linear_place";
    case RuleKind::dual_abstraction: return "dual_abstraction";
  }
  return "?";
}

const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::none: return "none";
    case Rejection::empty_relation: return "empty relation";
    case Rejection::not_fully_connected: return "not fully connected";
    case Rejection::bad_node: return "bad node";
    case Rejection::not_linearly_dependent: return "not linearly dependent";
    case Rejection::not_free_choice: return "not free-choice";
    case Rejection::not_workflow_net: return "not a workflow net";
    case Rejection::not_sound: return "not sound";
  }
  return "?";
}

nlohmann::ordered_json to_json(const RuleApplication& app, const PetriNet& net) {
  auto names = [&](const std::vector<NodeId>& ids) {
    std::vector<std::string> out;
    for (NodeId id : ids) out.push_back(net.node(id).name);
    return out;
  };
  nlohmann::ordered_json j;
  j["rule"] = to_string(app.rule);
  j["pre"] = names(app.pre);
  j["post"] = names(app.post);
  j["label"] = app.label ? nlohmann::ordered_json(*app.label) : nlohmann::ordered_json(nullptr);
  if (app.new_place) j["new_place"] = net.node(*app.new_place).name;
  if (app.new_transition) j["new_transition"] = net.node(*app.new_transition).name;
  return j;
}

WorkflowNet require(const RuleOutcome& outcome) {
  if (!outcome) throw RuleError(outcome.application.rule, outcome.rejection);
  return *outcome.net;
}

IntMatrix short_circuited_incidence(const WorkflowNet& wf) {
  const IncidenceMatrix inc = incidence_matrix(wf.net);
  IntMatrix m(inc.places.size(), std::vector<long long>(inc.transitions.size() + 1, 0));
  for (std::size_t r = 0; r < inc.places.size(); ++r)
    for (std::size_t c = 0; c < inc.transitions.size(); ++c) m[r][c] = inc.entries[r][c];
  m[wf.net.index_of(wf.sink)].back() = -1;
  m[wf.net.index_of(wf.source)].back() = 1;
  return m;
}

namespace {

std::vector<NodeId> normalized(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool all_of_kind(const PetriNet& net, const std::vector<NodeId>& ids, NodeKind kind) {
  return std::all_of(ids.begin(), ids.end(),
                     [&](NodeId id) { return id.value < net.node_count() && net.node(id).kind == kind; });
}

RuleOutcome reject(RuleApplication app, Rejection why) { return {std::nullopt, why, std::move(app)}; }

// Structural and behavioral checks shared by all rules.
RuleOutcome finish(WorkflowNet result, RuleApplication app, bool check_sound, const RuleOptions& options) {
  if (!is_workflow_net(result)) return reject(std::move(app), Rejection::not_workflow_net);
  if (!is_free_choice(result.net)) return reject(std::move(app), Rejection::not_free_choice);
  if (check_sound && !is_sound(result, options.state_budget)) return reject(std::move(app), Rejection::not_sound);
  return {std::move(result), Rejection::none, std::move(app)};
}

}  // namespace

RuleOutcome apply_abstraction(const WorkflowNet& wf, const std::vector<NodeId>& transitions,
                              const std::vector<NodeId>& places, const Label& label) {
  RuleApplication app{RuleKind::abstraction, normalized(transitions), normalized(places), label, {}, {}};
  const PetriNet& n = wf.net;
  if (app.pre.empty() || app.post.empty()) return reject(std::move(app), Rejection::empty_relation);
  if (!all_of_kind(n, app.pre, NodeKind::transition) || !all_of_kind(n, app.post, NodeKind::place))
    return reject(std::move(app), Rejection::bad_node);
  // Inserting in front of the sink would detach the end transition from it.
  if (std::count(app.post.begin(), app.post.end(), wf.sink)) return reject(std::move(app), Rejection::bad_node);
  for (NodeId r : app.pre)
    for (NodeId s : app.post)
      if (!n.has_arc(r, s)) return reject(std::move(app), Rejection::not_fully_connected);

  WorkflowNet out = wf;
  for (NodeId r : app.pre)
    for (NodeId s : app.post) out.net.remove_arc(r, s);
  NodeId p = out.net.add_place();
  NodeId t = out.net.add_transition(label);
  for (NodeId r : app.pre) out.net.add_arc(r, p);
  out.net.add_arc(p, t);
  for (NodeId s : app.post) out.net.add_arc(t, s);
  app.new_place = p;
  app.new_transition = t;
  return finish(std::move(out), std::move(app), false, {});
}

RuleOutcome apply_dual_abstraction(const WorkflowNet& wf, const std::vector<NodeId>& places,
                                   const std::vector<NodeId>& transitions, const Label& label) {
  RuleApplication app{RuleKind::dual_abstraction, normalized(places), normalized(transitions), label, {}, {}};
  const PetriNet& n = wf.net;
  if (app.pre.empty() || app.post.empty()) return reject(std::move(app), Rejection::empty_relation);
  if (!all_of_kind(n, app.pre, NodeKind::place) || !all_of_kind(n, app.post, NodeKind::transition))
    return reject(std::move(app), Rejection::bad_node);
  // Inserting behind the source would detach the start transition from it.
  if (std::count(app.pre.begin(), app.pre.end(), wf.source)) return reject(std::move(app), Rejection::bad_node);
  for (NodeId s : app.pre)
    for (NodeId r : app.post)
      if (!n.has_arc(s, r)) return reject(std::move(app), Rejection::not_fully_connected);

  WorkflowNet out = wf;
  for (NodeId s : app.pre)
    for (NodeId r : app.post) out.net.remove_arc(s, r);
  NodeId t = out.net.add_transition(label);
  NodeId p = out.net.add_place();
  for (NodeId s : app.pre) out.net.add_arc(s, t);
  out.net.add_arc(t, p);
  for (NodeId r : app.post) out.net.add_arc(p, r);
  app.new_place = p;
  app.new_transition = t;
  return finish(std::move(out), std::move(app), false, {});
}

RuleOutcome apply_linear_transition(const WorkflowNet& wf, const std::vector<NodeId>& pre_places,
                                    const std::vector<NodeId>& post_places, const Label& label,
                                    const RuleOptions& options) {
  RuleApplication app{RuleKind::linear_transition, normalized(pre_places), normalized(post_places), label, {}, {}};
  const PetriNet& n = wf.net;
  if (app.pre.empty() || app.post.empty()) return reject(std::move(app), Rejection::empty_relation);
  if (!all_of_kind(n, app.pre, NodeKind::place) || !all_of_kind(n, app.post, NodeKind::place))
    return reject(std::move(app), Rejection::bad_node);

  std::vector<long long> column(n.places().size(), 0);
  for (NodeId p : app.pre) column[n.index_of(p)] -= 1;
  for (NodeId p : app.post) column[n.index_of(p)] += 1;
  if (!is_linear_combination(short_circuited_incidence(wf), column).dependent)
    return reject(std::move(app), Rejection::not_linearly_dependent);

  WorkflowNet out = wf;
  NodeId t = out.net.add_transition(label);
  for (NodeId p : app.pre) out.net.add_arc(p, t);
  for (NodeId p : app.post) out.net.add_arc(t, p);
  app.new_transition = t;
  return finish(std::move(out), std::move(app), options.verify_soundness, options);
}

RuleOutcome apply_linear_place(const WorkflowNet& wf, const std::vector<NodeId>& pre_transitions,
                               const std::vector<NodeId>& post_transitions, const RuleOptions& options) {
  RuleApplication app{RuleKind::linear_place, normalized(pre_transitions), normalized(post_transitions),
                      std::nullopt, {}, {}};
  const PetriNet& n = wf.net;
  if (app.pre.empty() || app.post.empty()) return reject(std::move(app), Rejection::empty_relation);
  if (!all_of_kind(n, app.pre, NodeKind::transition) || !all_of_kind(n, app.post, NodeKind::transition))
    return reject(std::move(app), Rejection::bad_node);

  // Row over transitions plus the short-circuit column (always 0 here).
  std::vector<long long> row(n.transitions().size() + 1, 0);
  for (NodeId t : app.pre) row[n.index_of(t)] += 1;
  for (NodeId t : app.post) row[n.index_of(t)] -= 1;
  if (!is_linear_combination(transpose(short_circuited_incidence(wf)), row).dependent)
    return reject(std::move(app), Rejection::not_linearly_dependent);

  WorkflowNet out = wf;
  NodeId p = out.net.add_place();
  for (NodeId t : app.pre) out.net.add_arc(t, p);
  for (NodeId t : app.post) out.net.add_arc(p, t);
  app.new_place = p;
  return finish(std::move(out), std::move(app), options.verify_soundness, options);
}

}  // namespace synthminer
