#include "synthminer/scoring.hpp"

#include <omp.h>

namespace synthminer {

std::vector<QualityScore> score_candidates_serial(const std::vector<CandidateNet>& candidates, const EventLog& log,
                                                  const ReplayOptions& options) {
  std::vector<QualityScore> scores;
  scores.reserve(candidates.size());
  for (const auto& c : candidates) scores.push_back(evaluate(c.net, log, options));
  return scores;
}

std::vector<QualityScore> score_candidates_parallel(const std::vector<CandidateNet>& candidates,
                                                    const EventLog& log, const ReplayOptions& options, int jobs) {
  std::vector<QualityScore> scores(candidates.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < n; ++k) scores[static_cast<std::size_t>(k)] = evaluate(candidates[k].net, log, options);
  return scores;
}

}  // namespace synthminer
