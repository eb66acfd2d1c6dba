#pragma once

#include "synthminer/event_log.hpp"
#include "synthminer/petri_net.hpp"

namespace synthminer {

struct QualityScore {
  double fitness = 0;
  double precision = 0;
  double f1 = 0;
};

struct ReplayOptions {
  /// Maximum number of silent firings tried to enable the next event.
  std::size_t lookahead_depth = 5;
};

/// Token-based replay fitness:
///   1/2 (1 - missing/consumed) + 1/2 (1 - remaining/produced),
/// totals aggregated over the log, weighted by multiplicity.
double replay_fitness(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options = {});

/// Escaping-edges precision over the prefix states of the log: the weighted
/// share of enabled visible labels never observed after the same prefix.
double precision(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options = {});

/// Harmonic mean; 0 when both inputs are 0.
double f1(double fitness, double precision);

/// Fitness and precision from one shared replay pass.
QualityScore evaluate(const WorkflowNet& wf, const EventLog& log, const ReplayOptions& options = {});

}  // namespace synthminer
