#include "synthminer/ordering.hpp"

#include <algorithm>
#include <set>

namespace synthminer {

std::string to_string(const OrderingStrategy& s) {
  using K = OrderingStrategy::Kind;
  if (s.kind == K::frequency) return "freq";
  std::string base = s.kind == K::bfs ? "bfs" : "dfs";
  return base + (s.direction == OrderingStrategy::Direction::start ? "-start" : "-end");
}

const std::vector<OrderingStrategy>& all_strategies() {
  using K = OrderingStrategy::Kind;
  using D = OrderingStrategy::Direction;
  static const std::vector<OrderingStrategy> all{
      {K::frequency, D::start}, {K::bfs, D::start}, {K::bfs, D::end}, {K::dfs, D::start}, {K::dfs, D::end}};
  return all;
}

std::optional<OrderingStrategy> parse_strategy(std::string_view name) {
  for (const auto& s : all_strategies())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::vector<Activity> sort_dfa(const Activity& a, const LogStats& stats) {
  std::vector<std::pair<Activity, std::uint64_t>> succ;
  for (const auto& [arc, count] : stats.dfg().arcs)
    if (arc.first == a) succ.emplace_back(arc.second, count);
  // arcs are keyed lexicographically, so stable_sort leaves ties alphabetical
  std::stable_sort(succ.begin(), succ.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
  std::vector<Activity> out;
  for (auto& [b, count] : succ) out.push_back(std::move(b));
  return out;
}

std::vector<Activity> sort_dfa(const Activity& a, const EventLog& log) { return sort_dfa(a, LogStats(log)); }

namespace {

ActivityOrder frequency_order(const LogStats& stats) {
  ActivityOrder out(stats.activities().begin(), stats.activities().end());
  std::stable_sort(out.begin(), out.end(),
                   [&](const Activity& x, const Activity& y) { return stats.count(x) > stats.count(y); });
  return out;
}

void append_remainder(ActivityOrder& sigma, const LogStats& stats, OrderDiagnostics* diag) {
  std::set<Activity> placed(sigma.begin(), sigma.end());
  for (const auto& a : frequency_order(stats))
    if (!placed.count(a)) sigma.push_back(a);
  if (diag) {
    diag->disconnected = true;
    diag->warnings.push_back(
        "directly-follows graph does not reach every activity; remainder appended in frequency order");
  }
}

}  // namespace

ActivityOrder order_frequency(const EventLog& log) { return frequency_order(LogStats(log)); }

std::vector<Activity> ranked_start_activities(const LogStats& stats) {
  std::vector<Activity> starts;
  for (const auto& [a, n] : stats.dfg().start_counts) starts.push_back(a);
  const auto& sc = stats.dfg().start_counts;
  std::stable_sort(starts.begin(), starts.end(), [&](const Activity& x, const Activity& y) {
    if (sc.at(x) != sc.at(y)) return sc.at(x) > sc.at(y);
    return stats.count(x) > stats.count(y);
  });
  return starts;
}

ActivityOrder order_bfs(const EventLog& log, OrderDiagnostics* diag) {
  const LogStats stats(log);
  const std::size_t total = stats.activities().size();
  ActivityOrder sigma = ranked_start_activities(stats);
  std::set<Activity> placed(sigma.begin(), sigma.end());

  for (std::size_t i = 0; sigma.size() != total; ++i) {
    if (i >= sigma.size()) {
      append_remainder(sigma, stats, diag);
      break;
    }
    for (auto& b : sort_dfa(sigma[i], stats))
      if (placed.insert(b).second) sigma.push_back(b);
  }
  return sigma;
}

ActivityOrder order_dfs(const EventLog& log, OrderDiagnostics* diag) {
  const LogStats stats(log);
  const std::size_t total = stats.activities().size();
  if (total == 0) return {};

  std::vector<Activity> stack = ranked_start_activities(stats);
  if (stack.empty()) {
    ActivityOrder sigma;
    append_remainder(sigma, stats, diag);
    return sigma;
  }
  ActivityOrder sigma{stack.front()};
  stack.erase(stack.begin());
  std::set<Activity> placed{sigma.front()};

  while (sigma.size() != total) {
    std::vector<Activity> fresh;
    for (auto& b : sort_dfa(sigma.back(), stats))
      if (!placed.count(b)) fresh.push_back(b);

    if (!fresh.empty()) {
      sigma.push_back(fresh.front());
    } else if (!stack.empty()) {
      sigma.push_back(stack.front());
    } else {
      append_remainder(sigma, stats, diag);
      break;
    }
    placed.insert(sigma.back());

    // New discoveries go in front of the stack; already placed or already
    // stacked activities are dropped from them.
    std::set<Activity> stacked(stack.begin(), stack.end());
    std::vector<Activity> next;
    for (auto& b : fresh)
      if (!placed.count(b) && !stacked.count(b)) next.push_back(b);
    for (auto& b : stack)
      if (!placed.count(b)) next.push_back(b);
    stack = std::move(next);
  }
  return sigma;
}

ActivityOrder make_order(const EventLog& log, const OrderingStrategy& strategy, OrderDiagnostics* diag) {
  using K = OrderingStrategy::Kind;
  if (strategy.kind == K::frequency) return order_frequency(log);
  const EventLog source = strategy.direction == OrderingStrategy::Direction::start ? log : reverse(log);
  return strategy.kind == K::bfs ? order_bfs(source, diag) : order_dfs(source, diag);
}

}  // namespace synthminer
