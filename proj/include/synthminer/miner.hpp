#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "synthminer/candidates.hpp"
#include "synthminer/ordering.hpp"
#include "synthminer/quality.hpp"
#include "synthminer/reduction.hpp"

namespace synthminer {

struct DiscoveryConfig {
  OrderingStrategy strategy{OrderingStrategy::Kind::bfs, OrderingStrategy::Direction::start};
  Rational threshold{9, 10};
  Rational coverage{95, 100};
  CandidateOptions candidates;
  ReduceOptions reduction;
  ReplayOptions replay;
  /// 1 scores candidates serially; more uses the OpenMP kernel.
  int jobs = 1;
};

/// Throws std::invalid_argument naming the first out-of-range field.
void validate(const DiscoveryConfig& config);

struct IterationRecord {
  std::size_t index = 0;  // 1-based
  Activity activity;
  std::size_t net_nodes = 0;  // |P u T| of the net the activity is added to
  std::size_t v_size = 0;
  Rational ratio;
  Provenance provenance = Provenance::exact;
  std::vector<std::string> t_pre;
  std::vector<std::string> t_fol;
  std::size_t candidates = 0;
  bool widened = false;  // candidates came from the full node set retry
  Pattern pattern = Pattern::sequence;
  nlohmann::ordered_json applications = nlohmann::ordered_json::array();
  QualityScore quality;
  double millis = 0;
};

struct DiscoveryReport {
  std::string strategy;
  ActivityOrder order;
  std::vector<std::string> warnings;
  std::uint64_t traces_in = 0;
  std::uint64_t traces_kept = 0;
  std::size_t variants_kept = 0;
  std::vector<IterationRecord> iterations;
  QualityScore final_quality;
  double total_millis = 0;
};

struct DiscoveryResult {
  WorkflowNet net;
  DiscoveryReport report;
};

class DiscoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incremental discovery: order the activities, then per activity project
/// the log, reduce the search space, generate candidates and keep the best.
DiscoveryResult discover(const EventLog& log, const DiscoveryConfig& config = {});

/// Index of the best candidate: highest F1, then fitness, then fewer nodes,
/// then smallest canonical form. Throws std::invalid_argument when empty.
std::size_t select_best(const std::vector<CandidateNet>& candidates, const std::vector<QualityScore>& scores);
const CandidateNet& select_best(const std::vector<CandidateNet>& candidates, const EventLog& log,
                                const ReplayOptions& options = {});

// -- report output ------------------------------------------------------------

/// Versioned JSON report ("schema": 1). Duration fields are "millis" per
/// iteration and "total_millis".
nlohmann::ordered_json report_to_json(const DiscoveryReport& report, const DiscoveryConfig& config);

/// One row per iteration:
/// i,activity,v_size,ratio,provenance,candidates,fitness,precision,f1,millis
std::string report_to_csv(const DiscoveryReport& report);

/// Exact decimal ("0.9") or fraction ("9/10") text to a rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace synthminer
