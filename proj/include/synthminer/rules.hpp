#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "synthminer/linear.hpp"
#include "synthminer/petri_net.hpp"

namespace synthminer {

enum class RuleKind { abstraction, linear_transition, linear_place, dual_abstraction };

const char* to_string(RuleKind k);

/// Audit record of one rule application.
///
/// `pre`/`post` mean, per rule:
///   abstraction:        R (transitions), S (places)
///   dual_abstraction:   S (places), R (transitions)
///   linear_transition:  preset, postset of the new transition
///   linear_place:       preset, postset of the new place
struct RuleApplication {
  RuleKind rule = RuleKind::abstraction;
  std::vector<NodeId> pre;
  std::vector<NodeId> post;
  Label label;
  std::optional<NodeId> new_place;
  std::optional<NodeId> new_transition;
};

/// Serialized with node names of `net`, which must contain every node the
/// application references (i.e. the net after applying it).
nlohmann::ordered_json to_json(const RuleApplication& app, const PetriNet& net);

enum class Rejection {
  none,
  empty_relation,
  not_fully_connected,
  bad_node,
  not_linearly_dependent,
  not_free_choice,
  not_workflow_net,
  not_sound,
};

const char* to_string(Rejection r);

struct RuleOutcome {
  std::optional<WorkflowNet> net;
  Rejection rejection = Rejection::none;
  RuleApplication application;

  explicit operator bool() const { return net.has_value(); }
};

class RuleError : public std::runtime_error {
 public:
  RuleError(RuleKind rule, Rejection why)
      : std::runtime_error(std::string(to_string(rule)) + " rejected: " + to_string(why)), rejection(why) {}
  Rejection rejection;
};

/// Returns the resulting net or throws RuleError.
WorkflowNet require(const RuleOutcome& outcome);

struct RuleOptions {
  /// The linear rules re-verify soundness of their result by state-space
  /// exploration; a result that is unsound or exceeds the budget is rejected.
  bool verify_soundness = true;
  std::size_t state_budget = kDefaultStateBudget;
};

/// psi_A: R x S must be a non-empty subset of F. Removes R x S and inserts
/// R -> p -> t -> S with t labeled `label`.
RuleOutcome apply_abstraction(const WorkflowNet& wf, const std::vector<NodeId>& transitions,
                              const std::vector<NodeId>& places, const Label& label);

/// psi_D: S x R must be a non-empty subset of F. Removes S x R and inserts
/// S -> t -> p -> R with t labeled `label`.
RuleOutcome apply_dual_abstraction(const WorkflowNet& wf, const std::vector<NodeId>& places,
                                   const std::vector<NodeId>& transitions, const Label& label);

/// psi_T: adds a transition with the given pre/post places if its column in
/// the short-circuited incidence matrix is a rational combination of the
/// existing columns and the result stays free-choice (and sound).
RuleOutcome apply_linear_transition(const WorkflowNet& wf, const std::vector<NodeId>& pre_places,
                                    const std::vector<NodeId>& post_places, const Label& label,
                                    const RuleOptions& options = {});

/// psi_P: adds an unmarked place with the given pre/post transitions if its
/// row is a rational combination of the existing place rows of the
/// short-circuited net and the result stays free-choice (and sound).
RuleOutcome apply_linear_place(const WorkflowNet& wf, const std::vector<NodeId>& pre_transitions,
                               const std::vector<NodeId>& post_transitions, const RuleOptions& options = {});

/// Incidence of the net short-circuited by an extra transition sink -> source.
/// Rows follow net.places(); the extra transition is the last column.
IntMatrix short_circuited_incidence(const WorkflowNet& wf);

}  // namespace synthminer
