#include "synthminer/miner.hpp"

#include <algorithm>
#include <chrono>

#include "synthminer/scoring.hpp"

namespace synthminer {

void validate(const DiscoveryConfig& c) {
  if (c.threshold < 0 || c.threshold > 1) throw std::invalid_argument("threshold must lie in [0,1]");
  if (c.coverage <= 0 || c.coverage > 1) throw std::invalid_argument("coverage must lie in (0,1]");
  if (c.candidates.max_subset_size < 1) throw std::invalid_argument("max subset size must be at least 1");
  if (c.candidates.max_parallel_subset_size < 1)
    throw std::invalid_argument("max parallel subset size must be at least 1");
  if (c.candidates.patterns == PatternSet::none()) throw std::invalid_argument("pattern set is empty");
  if (c.reduction.path_budget < 1) throw std::invalid_argument("path budget must be at least 1");
  if (c.candidates.rules.state_budget < 1) throw std::invalid_argument("state budget must be at least 1");
  if (c.jobs < 0) throw std::invalid_argument("jobs must be non-negative");
}

std::size_t select_best(const std::vector<CandidateNet>& candidates, const std::vector<QualityScore>& scores) {
  if (candidates.empty()) throw std::invalid_argument("select_best: no candidates");
  if (candidates.size() != scores.size()) throw std::invalid_argument("select_best: one score per candidate");
  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    const auto& a = scores[k];
    const auto& b = scores[best];
    if (a.f1 != b.f1) {
      if (a.f1 > b.f1) best = k;
      continue;
    }
    if (a.fitness != b.fitness) {
      if (a.fitness > b.fitness) best = k;
      continue;
    }
    const auto na = candidates[k].net.net.node_count();
    const auto nb = candidates[best].net.net.node_count();
    if (na != nb) {
      if (na < nb) best = k;
      continue;
    }
    if (candidates[k].canonical < candidates[best].canonical) best = k;
  }
  return best;
}

const CandidateNet& select_best(const std::vector<CandidateNet>& candidates, const EventLog& log,
                                const ReplayOptions& options) {
  return candidates[select_best(candidates, score_candidates_serial(candidates, log, options))];
}

namespace {

std::vector<std::string> names(const PetriNet& net, const std::set<NodeId>& ids) {
  std::vector<std::string> out;
  for (NodeId id : ids) out.push_back(net.node(id).name);
  return out;
}

void check_loop_invariant(const WorkflowNet& wf, const ActivityOrder& placed, std::size_t state_budget) {
  auto problems = workflow_violations(wf);
  if (!problems.empty()) throw std::logic_error("discovered net is not a workflow net: " + problems.front());
  if (!is_free_choice(wf.net)) throw std::logic_error("discovered net is not free-choice");
  auto sound = check_soundness(wf, state_budget);
  if (sound.status == SoundnessStatus::unsound)
    throw std::logic_error("discovered net is unsound: " + sound.reason);
  auto labels = visible_labels(wf.net);
  std::sort(labels.begin(), labels.end());
  ActivityOrder expected = placed;
  std::sort(expected.begin(), expected.end());
  if (labels != expected) throw std::logic_error("discovered net does not carry each placed activity exactly once");
}

}  // namespace

DiscoveryResult discover(const EventLog& log, const DiscoveryConfig& config) {
  using Clock = std::chrono::steady_clock;
  validate(config);
  const auto run_start = Clock::now();

  if (log.empty()) throw DiscoveryError("event log is empty");
  const EventLog filtered = filter_variants(log, config.coverage);

  DiscoveryResult result{initial_net(), {}};
  DiscoveryReport& report = result.report;
  report.strategy = to_string(config.strategy);
  report.traces_in = log.trace_count();
  report.traces_kept = filtered.trace_count();
  report.variants_kept = filtered.variants().size();

  OrderDiagnostics diag;
  report.order = make_order(filtered, config.strategy, &diag);
  report.warnings = diag.warnings;

  std::set<Activity> placed;
  for (std::size_t i = 0; i < report.order.size(); ++i) {
    const auto iteration_start = Clock::now();
    const Activity& a = report.order[i];
    placed.insert(a);
    const EventLog projected = project(filtered, placed);
    const LogStats stats(projected);
    WorkflowNet& wf = result.net;

    IterationRecord rec;
    rec.index = i + 1;
    rec.activity = a;
    rec.net_nodes = wf.net.node_count();

    NodeSet v = reduce(a, stats, wf, config.threshold, config.reduction);
    rec.v_size = v.nodes.size();
    rec.ratio = search_space_ratio(v, wf);
    rec.provenance = v.provenance;
    rec.t_pre = names(wf.net, v.t_pre);
    rec.t_fol = names(wf.net, v.t_fol);

    auto candidates = generate_candidates(wf, v, a, config.candidates);
    if (candidates.empty()) {
      NodeSet full = v;
      full.nodes.clear();
      for (std::uint32_t k = 0; k < wf.net.node_count(); ++k)
        if (NodeId{k} != wf.source && NodeId{k} != wf.sink) full.nodes.insert(NodeId{k});
      full.provenance = Provenance::fallback;
      candidates = generate_candidates(wf, full, a, config.candidates);
      rec.widened = true;
    }
    if (candidates.empty())
      throw DiscoveryError("no candidate net for activity '" + a + "' in iteration " + std::to_string(i + 1));
    rec.candidates = candidates.size();

    const auto scores = config.jobs > 1 ? score_candidates_parallel(candidates, projected, config.replay, config.jobs)
                                        : score_candidates_serial(candidates, projected, config.replay);
    const std::size_t best = select_best(candidates, scores);
    CandidateNet& chosen = candidates[best];
    rec.pattern = chosen.pattern;
    for (const auto& app : chosen.applications) rec.applications.push_back(to_json(app, chosen.net.net));
    rec.quality = scores[best];
    result.net = std::move(chosen.net);

    ActivityOrder so_far(report.order.begin(), report.order.begin() + static_cast<std::ptrdiff_t>(i + 1));
    check_loop_invariant(result.net, so_far, config.candidates.rules.state_budget);

    rec.millis = std::chrono::duration<double, std::milli>(Clock::now() - iteration_start).count();
    report.iterations.push_back(std::move(rec));
  }

  report.final_quality = report.iterations.empty() ? evaluate(result.net, filtered, config.replay)
                                                   : report.iterations.back().quality;
  report.total_millis = std::chrono::duration<double, std::milli>(Clock::now() - run_start).count();
  return result;
}

}  // namespace synthminer
