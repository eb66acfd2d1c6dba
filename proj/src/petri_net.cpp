#include "synthminer/petri_net.hpp"

#include <algorithm>
#include <deque>

namespace synthminer {

std::string PetriNet::fresh_name(char prefix) {
  std::size_t& counter = prefix == 'p' ? place_counter_ : transition_counter_;
  for (;;) {
    std::string name = prefix + std::to_string(++counter);
    if (!find(name)) return name;
  }
}

NodeId PetriNet::add_place(std::string name) {
  if (name.empty()) name = fresh_name('p');
  if (find(name)) throw NetError("duplicate node name '" + name + "'");
  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back({NodeKind::place, std::move(name), std::nullopt});
  pre_.emplace_back();
  post_.emplace_back();
  index_.push_back(places_.size());
  places_.push_back(id);
  return id;
}

NodeId PetriNet::add_transition(Label label, std::string name) {
  if (name.empty()) name = fresh_name('t');
  if (find(name)) throw NetError("duplicate node name '" + name + "'");
  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back({NodeKind::transition, std::move(name), std::move(label)});
  pre_.emplace_back();
  post_.emplace_back();
  index_.push_back(transitions_.size());
  transitions_.push_back(id);
  return id;
}

std::optional<NodeId> PetriNet::find(const std::string& name) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (nodes_[k].name == name) return NodeId{static_cast<std::uint32_t>(k)};
  return std::nullopt;
}

namespace {

void insert_sorted(std::vector<NodeId>& v, NodeId id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) v.insert(it, id);
}

bool erase_sorted(std::vector<NodeId>& v, NodeId id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) return false;
  v.erase(it);
  return true;
}

}  // namespace

void PetriNet::add_arc(NodeId from, NodeId to) {
  if (from.value >= nodes_.size() || to.value >= nodes_.size())
    throw NetError("arc references an unknown node");
  if (node(from).kind == node(to).kind)
    throw NetError("arc " + node(from).name + " -> " + node(to).name + " is not bipartite");
  if (has_arc(from, to)) return;
  insert_sorted(post_[from.value], to);
  insert_sorted(pre_[to.value], from);
  ++arc_count_;
}

void PetriNet::remove_arc(NodeId from, NodeId to) {
  if (erase_sorted(post_.at(from.value), to)) {
    erase_sorted(pre_.at(to.value), from);
    --arc_count_;
  }
}

bool PetriNet::has_arc(NodeId from, NodeId to) const {
  const auto& out = post_.at(from.value);
  return std::binary_search(out.begin(), out.end(), to);
}

bool PetriNet::operator==(const PetriNet& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const auto& a = nodes_[k];
    const auto& b = other.nodes_[k];
    if (a.kind != b.kind || a.name != b.name || a.label != b.label) return false;
  }
  return post_ == other.post_;
}

WorkflowNet initial_net() {
  WorkflowNet wf;
  wf.source = wf.net.add_place("i");
  wf.start = wf.net.add_transition(std::nullopt, "t_start");
  NodeId p1 = wf.net.add_place("p1");
  wf.end = wf.net.add_transition(std::nullopt, "t_end");
  wf.sink = wf.net.add_place("o");
  wf.net.add_arc(wf.source, wf.start);
  wf.net.add_arc(wf.start, p1);
  wf.net.add_arc(p1, wf.end);
  wf.net.add_arc(wf.end, wf.sink);
  return wf;
}

std::vector<std::string> workflow_violations(const WorkflowNet& wf) {
  const PetriNet& n = wf.net;
  std::vector<std::string> out;
  auto valid = [&](NodeId id) { return id.value < n.node_count(); };
  if (!valid(wf.source) || !valid(wf.sink) || !valid(wf.start) || !valid(wf.end)) {
    out.push_back("distinguished node out of range");
    return out;
  }
  if (!n.is_place(wf.source) || !n.is_place(wf.sink)) out.push_back("source/sink must be places");
  if (!n.is_transition(wf.start) || !n.is_transition(wf.end))
    out.push_back("start/end must be transitions");
  if (!out.empty()) return out;

  if (!n.preset(wf.source).empty()) out.push_back("source place has input arcs");
  if (!n.postset(wf.sink).empty()) out.push_back("sink place has output arcs");
  if (n.postset(wf.source) != std::vector<NodeId>{wf.start}) out.push_back("source postset is not {start}");
  if (n.preset(wf.start) != std::vector<NodeId>{wf.source}) out.push_back("start preset is not {source}");
  if (n.preset(wf.sink) != std::vector<NodeId>{wf.end}) out.push_back("sink preset is not {end}");
  if (n.postset(wf.end) != std::vector<NodeId>{wf.sink}) out.push_back("end postset is not {sink}");

  auto sweep = [&](NodeId seed, bool forward) {
    std::vector<char> seen(n.node_count(), 0);
    std::deque<NodeId> queue{seed};
    seen[seed.value] = 1;
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop_front();
      for (NodeId y : forward ? n.postset(x) : n.preset(x))
        if (!seen[y.value]) {
          seen[y.value] = 1;
          queue.push_back(y);
        }
    }
    return seen;
  };
  auto from_source = sweep(wf.source, true);
  auto to_sink = sweep(wf.sink, false);
  for (std::size_t k = 0; k < n.node_count(); ++k)
    if (!from_source[k] || !to_sink[k])
      out.push_back("node " + n.node(NodeId{static_cast<std::uint32_t>(k)}).name +
                    " is not on a source-to-sink path");
  return out;
}

bool is_workflow_net(const WorkflowNet& wf) { return workflow_violations(wf).empty(); }

bool is_free_choice(const PetriNet& net) {
  // Transitions sharing an input place must have equal presets; it suffices
  // to compare every transition of p's postset with the first one.
  for (NodeId p : net.places()) {
    const auto& out = net.postset(p);
    for (std::size_t k = 1; k < out.size(); ++k)
      if (net.preset(out[k]) != net.preset(out[0])) return false;
  }
  return true;
}

std::string display_label(const WorkflowNet& wf, NodeId t) {
  const Node& n = wf.net.node(t);
  if (n.label) return *n.label;
  if (t == wf.start) return "⊤";
  if (t == wf.end) return "⊥";
  return "τ";
}

std::vector<Activity> visible_labels(const PetriNet& net) {
  std::vector<Activity> out;
  for (NodeId t : net.transitions())
    if (net.node(t).label) out.push_back(*net.node(t).label);
  return out;
}

std::uint64_t Marking::total() const {
  std::uint64_t n = 0;
  for (auto v : tokens) n += v;
  return n;
}

std::size_t MarkingHash::operator()(const Marking& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.tokens) h = (h ^ v) * 1099511628211ull;
  return h;
}

Marking empty_marking(const PetriNet& net) { return Marking{std::vector<std::uint32_t>(net.places().size(), 0)}; }

Marking marking_of(const PetriNet& net, std::initializer_list<NodeId> places) {
  Marking m = empty_marking(net);
  for (NodeId p : places) ++m.tokens.at(net.index_of(p));
  return m;
}

bool is_enabled(const PetriNet& net, const Marking& m, NodeId t) {
  for (NodeId p : net.preset(t))
    if (m.tokens[net.index_of(p)] == 0) return false;
  return true;
}

std::vector<NodeId> enabled(const PetriNet& net, const Marking& m) {
  std::vector<NodeId> out;
  for (NodeId t : net.transitions())
    if (is_enabled(net, m, t)) out.push_back(t);
  return out;
}

Marking fire(const PetriNet& net, const Marking& m, NodeId t) {
  if (!net.is_transition(t)) throw NetError(net.node(t).name + " is not a transition");
  if (!is_enabled(net, m, t)) throw NetError("transition " + net.node(t).name + " is not enabled");
  Marking next = m;
  for (NodeId p : net.preset(t)) --next.tokens[net.index_of(p)];
  for (NodeId p : net.postset(t)) ++next.tokens[net.index_of(p)];
  return next;
}

std::vector<int> IncidenceMatrix::column(std::size_t j) const {
  std::vector<int> col;
  col.reserve(entries.size());
  for (const auto& row : entries) col.push_back(row.at(j));
  return col;
}

IncidenceMatrix incidence_matrix(const PetriNet& net) {
  IncidenceMatrix m;
  m.places = net.places();
  m.transitions = net.transitions();
  m.entries.assign(m.places.size(), std::vector<int>(m.transitions.size(), 0));
  for (NodeId t : net.transitions()) {
    const std::size_t j = net.index_of(t);
    for (NodeId p : net.preset(t)) m.entries[net.index_of(p)][j] -= 1;
    for (NodeId p : net.postset(t)) m.entries[net.index_of(p)][j] += 1;
  }
  return m;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::approximated: return "approximated";
    case Provenance::fallback: return "fallback";
  }
  return "?";
}

}  // namespace synthminer
