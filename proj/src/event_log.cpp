#include "synthminer/event_log.hpp"

#include <algorithm>
#include <stdexcept>

namespace synthminer {

void EventLog::add(Trace trace, std::uint64_t count) {
  if (count == 0) return;
  for (const auto& a : trace) activities_.insert(a);
  variants_[std::move(trace)] += count;
}

std::uint64_t EventLog::trace_count() const {
  std::uint64_t n = 0;
  for (const auto& [trace, count] : variants_) n += count;
  return n;
}

std::uint64_t EventLog::event_count() const {
  std::uint64_t n = 0;
  for (const auto& [trace, count] : variants_) n += trace.size() * count;
  return n;
}

EventLog project(const EventLog& log, const std::set<Activity>& keep) {
  EventLog out;
  for (const auto& [trace, count] : log.variants()) {
    Trace projected;
    for (const auto& a : trace)
      if (keep.count(a)) projected.push_back(a);
    out.add(std::move(projected), count);
  }
  return out;
}

EventLog reverse(const EventLog& log) {
  EventLog out;
  for (const auto& [trace, count] : log.variants())
    out.add(Trace(trace.rbegin(), trace.rend()), count);
  return out;
}

EventLog filter_variants(const EventLog& log, const Rational& coverage) {
  if (log.empty()) throw std::invalid_argument("filter_variants: empty log");
  if (coverage <= 0 || coverage > 1)
    throw std::invalid_argument("filter_variants: coverage must lie in (0,1]");

  std::vector<std::pair<const Trace*, std::uint64_t>> ranked;
  for (const auto& [trace, count] : log.variants()) ranked.emplace_back(&trace, count);
  // variants() iterates in lexicographic order, so a stable sort keeps that
  // order among equal multiplicities.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });

  const Rational target = coverage * Rational(static_cast<unsigned long>(log.trace_count()));
  EventLog out;
  std::uint64_t covered = 0;
  for (const auto& [trace, count] : ranked) {
    if (Rational(static_cast<unsigned long>(covered)) >= target) break;
    out.add(*trace, count);
    covered += count;
  }
  return out;
}

std::uint64_t activity_count(const Activity& a, const EventLog& log) {
  std::uint64_t n = 0;
  for (const auto& [trace, count] : log.variants())
    n += count * static_cast<std::uint64_t>(std::count(trace.begin(), trace.end(), a));
  return n;
}

std::uint64_t direct_succession(const Activity& a, const Activity& b, const EventLog& log) {
  std::uint64_t n = 0;
  for (const auto& [trace, count] : log.variants())
    for (std::size_t k = 0; k + 1 < trace.size(); ++k)
      if (trace[k] == a && trace[k + 1] == b) n += count;
  return n;
}

namespace {

Rational causal_from_counts(bool same, std::uint64_t ab, std::uint64_t ba) {
  const Rational x(static_cast<unsigned long>(ab));
  const Rational y(static_cast<unsigned long>(ba));
  Rational r = same ? Rational(x / (x + 1)) : Rational((x - y) / (x + y + 1));
  r.canonicalize();
  return r;
}

}  // namespace

Rational causal_strength(const Activity& a, const Activity& b, const EventLog& log) {
  return causal_from_counts(a == b, direct_succession(a, b, log), direct_succession(b, a, log));
}

std::set<Activity> preceding_set(const Activity& a, const EventLog& log, const Rational& c) {
  std::set<Activity> out;
  for (const auto& x : log.activities())
    if (causal_strength(x, a, log) >= c) out.insert(x);
  return out;
}

std::set<Activity> following_set(const Activity& a, const EventLog& log, const Rational& c) {
  std::set<Activity> out;
  for (const auto& x : log.activities())
    if (causal_strength(a, x, log) >= c) out.insert(x);
  return out;
}

Dfg build_dfg(const EventLog& log) {
  Dfg dfg;
  for (const auto& [trace, count] : log.variants()) {
    if (trace.empty()) continue;
    dfg.start_counts[trace.front()] += count;
    dfg.end_counts[trace.back()] += count;
    for (std::size_t k = 0; k < trace.size(); ++k) {
      dfg.nodes.insert(trace[k]);
      if (k + 1 < trace.size()) dfg.arcs[{trace[k], trace[k + 1]}] += count;
    }
  }
  return dfg;
}

LogStats::LogStats(const EventLog& log) : dfg_(build_dfg(log)) {
  for (const auto& [trace, count] : log.variants())
    for (const auto& a : trace) counts_[a] += count;
}

std::uint64_t LogStats::count(const Activity& a) const {
  auto it = counts_.find(a);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t LogStats::follows(const Activity& a, const Activity& b) const {
  auto it = dfg_.arcs.find({a, b});
  return it == dfg_.arcs.end() ? 0 : it->second;
}

Rational LogStats::causal(const Activity& a, const Activity& b) const {
  return causal_from_counts(a == b, follows(a, b), follows(b, a));
}

std::set<Activity> LogStats::preceding(const Activity& a, const Rational& c) const {
  std::set<Activity> out;
  for (const auto& x : dfg_.nodes)
    if (causal(x, a) >= c) out.insert(x);
  return out;
}

std::set<Activity> LogStats::following(const Activity& a, const Rational& c) const {
  std::set<Activity> out;
  for (const auto& x : dfg_.nodes)
    if (causal(a, x) >= c) out.insert(x);
  return out;
}

}  // namespace synthminer
