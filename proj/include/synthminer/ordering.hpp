#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synthminer/event_log.hpp"

namespace synthminer {

/// Duplicate-free sequence covering every activity of a log.
using ActivityOrder = std::vector<Activity>;

struct OrderingStrategy {
  enum class Kind { frequency, bfs, dfs };
  enum class Direction { start, end };

  Kind kind = Kind::bfs;
  Direction direction = Direction::start;

  bool operator==(const OrderingStrategy&) const = default;
};

/// CLI names: freq, bfs-start, bfs-end, dfs-start, dfs-end.
std::string to_string(const OrderingStrategy& s);
std::optional<OrderingStrategy> parse_strategy(std::string_view name);
const std::vector<OrderingStrategy>& all_strategies();

struct OrderDiagnostics {
  bool disconnected = false;  // remainder appended in frequency order
  std::vector<std::string> warnings;
};

/// Successors of `a` by descending #(a,b,L), ties lexicographic.
std::vector<Activity> sort_dfa(const Activity& a, const LogStats& stats);
std::vector<Activity> sort_dfa(const Activity& a, const EventLog& log);

/// Descending #(a,L), ties alphabetical.
ActivityOrder order_frequency(const EventLog& log);

/// Start activities ranked by how many traces they start, then total
/// frequency, then alphabetically.
std::vector<Activity> ranked_start_activities(const LogStats& stats);

ActivityOrder order_bfs(const EventLog& log, OrderDiagnostics* diag = nullptr);
ActivityOrder order_dfs(const EventLog& log, OrderDiagnostics* diag = nullptr);

/// The end direction runs the same search on the reversed log.
ActivityOrder make_order(const EventLog& log, const OrderingStrategy& strategy, OrderDiagnostics* diag = nullptr);

}  // namespace synthminer
