#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthminer/event_log.hpp"

namespace synthminer {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Bad column mapping or option combination.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LogReadResult {
  EventLog log;
  std::size_t skipped_events = 0;  // XES events without concept:name
  std::size_t rejected_rows = 0;   // CSV rows with unparsable timestamps
  std::vector<std::string> warnings;
};

LogReadResult parse_xes(std::istream& in);

struct CsvColumns {
  std::string case_col = "case";
  std::string activity_col = "activity";
  std::optional<std::string> time_col;
};

LogReadResult parse_csv(std::istream& in, const CsvColumns& columns);

/// Seconds since the epoch for ISO-8601 timestamps
/// (YYYY-MM-DD[T ]hh:mm[:ss[.fff]][Z|+hh:mm]) or a plain number.
std::optional<double> parse_timestamp(const std::string& text);

/// Canonical JSON form: [{"variant": [...], "count": n}, ...] in variant order.
std::string log_to_json(const EventLog& log);
EventLog log_from_json(std::istream& in);

/// Dispatches on the file extension (.xes, .csv, .json).
LogReadResult read_log_file(const std::string& path, const CsvColumns& columns);

}  // namespace synthminer
