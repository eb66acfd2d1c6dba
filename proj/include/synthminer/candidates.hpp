#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "synthminer/reduction.hpp"
#include "synthminer/rules.hpp"

namespace synthminer {

enum class Pattern { sequence, choice, parallel, skip, self_loop };

const char* to_string(Pattern p);

/// Bit set over Pattern. CLI spelling: "seq,choice,par,skip,loop".
struct PatternSet {
  unsigned bits = 0x1f;

  bool has(Pattern p) const { return bits & (1u << static_cast<unsigned>(p)); }
  void set(Pattern p) { bits |= 1u << static_cast<unsigned>(p); }
  static PatternSet none() { return PatternSet{0}; }
  bool operator==(const PatternSet&) const = default;
};

/// Throws std::invalid_argument on an unknown pattern name.
PatternSet parse_patterns(std::string_view list);
std::string to_string(const PatternSet& set);

struct CandidateNet {
  WorkflowNet net;
  Pattern pattern = Pattern::sequence;
  std::vector<RuleApplication> applications;
  std::string canonical;
};

struct CandidateOptions {
  std::size_t max_subset_size = 3;
  /// Bound on the transition sets bridged by a parallel branch.
  std::size_t max_parallel_subset_size = 2;
  PatternSet patterns;
  RuleOptions rules;
};

/// Candidate nets adding one `a`-labeled transition, every rule application
/// confined to `v` (plus nodes created inside the same composite pattern).
/// Deduplicated up to isomorphism and sorted by canonical form.
std::vector<CandidateNet> generate_candidates(const WorkflowNet& wf, const NodeSet& v, const Activity& a,
                                              const CandidateOptions& options = {});

/// Orthogonal-complement membership test: a vector lies in the span of a set
/// of integer vectors iff it is orthogonal to every vector of the complement.
/// Precompute once per net, then test many targets cheaply.
class SpanTest {
 public:
  /// `vectors` are the spanning vectors, all of equal dimension `dim`.
  SpanTest(const std::vector<std::vector<long long>>& vectors, std::size_t dim);
  bool contains(const std::vector<long long>& v) const;

 private:
  std::vector<std::vector<Rational>> complement_;
};

}  // namespace synthminer
