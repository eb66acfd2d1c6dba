#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace synthminer {

using Rational = mpq_class;

/// Activity labels compare byte-wise; that order is the tie-break everywhere.
using Activity = std::string;
using Trace = std::vector<Activity>;

/// Multiset of traces, stored as variant -> multiplicity.
class EventLog {
 public:
  EventLog() = default;

  void add(Trace trace, std::uint64_t count = 1);

  const std::map<Trace, std::uint64_t>& variants() const { return variants_; }
  const std::set<Activity>& activities() const { return activities_; }

  std::uint64_t trace_count() const;
  std::uint64_t event_count() const;
  bool empty() const { return variants_.empty(); }

  bool operator==(const EventLog& other) const = default;

 private:
  std::map<Trace, std::uint64_t> variants_;
  std::set<Activity> activities_;
};

/// Directly-follows graph of a log.
struct Dfg {
  std::set<Activity> nodes;
  std::map<std::pair<Activity, Activity>, std::uint64_t> arcs;
  std::map<Activity, std::uint64_t> start_counts;
  std::map<Activity, std::uint64_t> end_counts;
};

EventLog project(const EventLog& log, const std::set<Activity>& keep);
EventLog reverse(const EventLog& log);

/// Keeps the most frequent variants until they cover `coverage` of all
/// traces. Ties in multiplicity go to the lexicographically smaller trace.
/// Throws std::invalid_argument on an empty log or coverage outside (0,1].
EventLog filter_variants(const EventLog& log, const Rational& coverage);

std::uint64_t activity_count(const Activity& a, const EventLog& log);
std::uint64_t direct_succession(const Activity& a, const Activity& b, const EventLog& log);
Rational causal_strength(const Activity& a, const Activity& b, const EventLog& log);
std::set<Activity> preceding_set(const Activity& a, const EventLog& log, const Rational& c);
std::set<Activity> following_set(const Activity& a, const EventLog& log, const Rational& c);
Dfg build_dfg(const EventLog& log);

/// Precomputed counts of one log. The free functions above recompute from
/// scratch; miners and orderings query this instead.
class LogStats {
 public:
  explicit LogStats(const EventLog& log);

  std::uint64_t count(const Activity& a) const;
  std::uint64_t follows(const Activity& a, const Activity& b) const;
  Rational causal(const Activity& a, const Activity& b) const;
  std::set<Activity> preceding(const Activity& a, const Rational& c) const;
  std::set<Activity> following(const Activity& a, const Rational& c) const;

  const Dfg& dfg() const { return dfg_; }
  const std::set<Activity>& activities() const { return dfg_.nodes; }

 private:
  Dfg dfg_;
  std::map<Activity, std::uint64_t> counts_;
};

}  // namespace synthminer
