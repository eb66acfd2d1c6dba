#pragma once

#include <vector>

#include "synthminer/candidates.hpp"
#include "synthminer/quality.hpp"

namespace synthminer {

/// Reference implementation: candidates scored one after another.
std::vector<QualityScore> score_candidates_serial(const std::vector<CandidateNet>& candidates, const EventLog& log,
                                                  const ReplayOptions& options);

/// OpenMP version; `jobs` <= 0 uses the OpenMP default thread count.
/// Produces exactly the serial result: each slot is written by one thread
/// and replay itself is deterministic.
std::vector<QualityScore> score_candidates_parallel(const std::vector<CandidateNet>& candidates,
                                                    const EventLog& log, const ReplayOptions& options, int jobs = 0);

}  // namespace synthminer
