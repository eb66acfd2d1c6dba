#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthminer/event_log.hpp"

namespace synthminer {

enum class NodeKind { place, transition };

/// Dense node handle; ids are handed out in creation order and never reused.
struct NodeId {
  std::uint32_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

/// A transition label; std::nullopt is the silent label tau.
using Label = std::optional<Activity>;

struct Node {
  NodeKind kind;
  std::string name;  // unique within the net, used as PNML id
  Label label;       // transitions only
};

class NetError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PetriNet {
 public:
  NodeId add_place(std::string name = {});
  NodeId add_transition(Label label, std::string name = {});

  /// Throws NetError unless the arc joins a place and a transition.
  void add_arc(NodeId from, NodeId to);
  void remove_arc(NodeId from, NodeId to);
  bool has_arc(NodeId from, NodeId to) const;

  const Node& node(NodeId id) const { return nodes_.at(id.value); }
  bool is_place(NodeId id) const { return node(id).kind == NodeKind::place; }
  bool is_transition(NodeId id) const { return node(id).kind == NodeKind::transition; }
  std::optional<NodeId> find(const std::string& name) const;

  /// Sorted by creation order.
  const std::vector<NodeId>& preset(NodeId id) const { return pre_.at(id.value); }
  const std::vector<NodeId>& postset(NodeId id) const { return post_.at(id.value); }

  const std::vector<NodeId>& places() const { return places_; }
  const std::vector<NodeId>& transitions() const { return transitions_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  /// Position of a place among places() (marking index) or of a transition
  /// among transitions() (incidence column).
  std::size_t index_of(NodeId id) const { return index_.at(id.value); }

  bool operator==(const PetriNet& other) const;

 private:
  std::string fresh_name(char prefix);

  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> pre_;
  std::vector<std::vector<NodeId>> post_;
  std::vector<NodeId> places_;
  std::vector<NodeId> transitions_;
  std::vector<std::size_t> index_;
  std::size_t arc_count_ = 0;
  std::size_t place_counter_ = 0;
  std::size_t transition_counter_ = 0;
};

/// Petri net with dedicated source/sink places and start/end transitions.
struct WorkflowNet {
  PetriNet net;
  NodeId source;
  NodeId sink;
  NodeId start;
  NodeId end;

  bool operator==(const WorkflowNet&) const = default;
};

/// i -> start -> p1 -> end -> o, with silent start/end.
WorkflowNet initial_net();

/// Structural workflow-net conditions; returns human-readable violations.
std::vector<std::string> workflow_violations(const WorkflowNet& wf);
bool is_workflow_net(const WorkflowNet& wf);

bool is_free_choice(const PetriNet& net);

/// Text shown for a transition: its label, "⊤"/"⊥" for start/end, else "τ".
std::string display_label(const WorkflowNet& wf, NodeId t);

/// Labels of visible transitions (with repetitions) in creation order.
std::vector<Activity> visible_labels(const PetriNet& net);

// -- token semantics ------------------------------------------------------

struct Marking {
  std::vector<std::uint32_t> tokens;  // indexed by PetriNet::index_of(place)

  auto operator<=>(const Marking&) const = default;
  std::uint64_t total() const;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const;
};

Marking empty_marking(const PetriNet& net);
Marking marking_of(const PetriNet& net, std::initializer_list<NodeId> places);
bool is_enabled(const PetriNet& net, const Marking& m, NodeId t);
std::vector<NodeId> enabled(const PetriNet& net, const Marking& m);
/// Throws NetError when t is not enabled.
Marking fire(const PetriNet& net, const Marking& m, NodeId t);

// -- incidence --------------------------------------------------------------

/// Rows are places, columns transitions, both in creation order.
/// entry(p,t) = [(t,p) in F] - [(p,t) in F].
struct IncidenceMatrix {
  std::vector<NodeId> places;
  std::vector<NodeId> transitions;
  std::vector<std::vector<int>> entries;

  std::vector<int> column(std::size_t j) const;
};

IncidenceMatrix incidence_matrix(const PetriNet& net);

// -- soundness --------------------------------------------------------------

enum class SoundnessStatus { sound, unsound, indeterminate };

struct SoundnessResult {
  SoundnessStatus status = SoundnessStatus::indeterminate;
  std::string reason;
  std::size_t states = 0;

  bool sound() const { return status == SoundnessStatus::sound; }
};

inline constexpr std::size_t kDefaultStateBudget = 100'000;

SoundnessResult check_soundness(const WorkflowNet& wf, std::size_t state_budget = kDefaultStateBudget);
inline bool is_sound(const WorkflowNet& wf, std::size_t state_budget = kDefaultStateBudget) {
  return check_soundness(wf, state_budget).sound();
}

// -- paths ------------------------------------------------------------------

enum class PathMode { exact, approx };
enum class Provenance { exact, approximated, fallback };

const char* to_string(Provenance p);

struct PathNodes {
  std::set<NodeId> nodes;
  Provenance provenance = Provenance::exact;
  std::size_t expanded = 0;  // DFS expansions spent in exact mode
};

inline constexpr std::size_t kDefaultPathBudget = 50'000;

/// Nodes lying on some elementary path from a node of `from` to a node of
/// `to`. Exact mode falls back to the reachability over-approximation once
/// the DFS exceeds `budget` expansions.
PathNodes path_nodes(const std::set<NodeId>& from, const std::set<NodeId>& to, const PetriNet& net,
                     PathMode mode = PathMode::exact, std::size_t budget = kDefaultPathBudget);

}  // namespace synthminer

template <>
struct std::hash<synthminer::NodeId> {
  std::size_t operator()(const synthminer::NodeId& id) const noexcept { return id.value; }
};
