#include "synthminer/log_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <boost/tokenizer.hpp>
#include <json.hpp>

namespace synthminer {

namespace pt = boost::property_tree;

namespace {

std::optional<std::string> concept_name(const pt::ptree& element) {
  for (const auto& [tag, child] : element) {
    if (tag != "string") continue;
    auto key = child.get_optional<std::string>("<xmlattr>.key");
    if (!key || *key != "concept:name") continue;
    if (auto value = child.get_optional<std::string>("<xmlattr>.value")) return *value;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

LogReadResult parse_xes(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("malformed XES: " + e.message(), e.line(), 0);
  }

  LogReadResult result;
  auto root = tree.get_child_optional("log");
  if (!root) throw ParseError("XES document has no <log> root element");

  for (const auto& [tag, trace_node] : *root) {
    if (tag != "trace") continue;
    Trace trace;
    for (const auto& [event_tag, event_node] : trace_node) {
      if (event_tag != "event") continue;
      auto name = concept_name(event_node);
      if (!name || name->empty()) {
        ++result.skipped_events;
        continue;
      }
      trace.push_back(*name);
    }
    result.log.add(std::move(trace));
  }
  if (result.skipped_events > 0)
    result.warnings.push_back(std::to_string(result.skipped_events) +
                              " event(s) without concept:name skipped");
  if (result.log.empty()) result.warnings.push_back("log contains no traces");
  return result;
}

namespace {

long long days_from_civil(long long y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<double> parse_timestamp(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) return std::nullopt;

  {
    std::size_t used = 0;
    try {
      double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
  }

  int year = 0, month = 0, day = 0, hour = 0, minute = 0;
  int consumed = 0;
  if (std::sscanf(text.c_str(), "%4d-%2d-%2d%n", &year, &month, &day, &consumed) != 3 ||
      consumed != 10)
    return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;

  double seconds = 0;
  std::size_t pos = 10;
  if (pos < text.size()) {
    if (text[pos] != 'T' && text[pos] != ' ') return std::nullopt;
    ++pos;
    int n = 0;
    if (std::sscanf(text.c_str() + pos, "%2d:%2d%n", &hour, &minute, &n) != 2 || n != 5)
      return std::nullopt;
    pos += 5;
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      std::size_t end = pos;
      while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '.'))
        ++end;
      if (end == pos) return std::nullopt;
      try {
        seconds = std::stod(text.substr(pos, end - pos));
      } catch (const std::exception&) {
        return std::nullopt;
      }
      pos = end;
    }
    if (hour > 23 || minute > 59 || seconds >= 61) return std::nullopt;
  }

  double offset = 0;
  if (pos < text.size()) {
    if (text[pos] == 'Z' && pos + 1 == text.size()) {
    } else if (text[pos] == '+' || text[pos] == '-') {
      int oh = 0, om = 0, n = 0;
      const char* tz = text.c_str() + pos + 1;
      if (std::sscanf(tz, "%2d:%2d%n", &oh, &om, &n) == 2 && pos + 1 + n == text.size()) {
      } else if (std::sscanf(tz, "%2d%2d%n", &oh, &om, &n) == 2 && pos + 1 + n == text.size()) {
      } else {
        return std::nullopt;
      }
      offset = (text[pos] == '+' ? 1 : -1) * (oh * 3600.0 + om * 60.0);
    } else {
      return std::nullopt;
    }
  }

  const double days = static_cast<double>(days_from_civil(year, month, day));
  return days * 86400.0 + hour * 3600.0 + minute * 60.0 + seconds - offset;
}

LogReadResult parse_csv(std::istream& in, const CsvColumns& columns) {
  using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;

  auto split = [](const std::string& line) {
    std::string l = line;
    if (!l.empty() && l.back() == '\r') l.pop_back();
    std::vector<std::string> fields;
    try {
      Tokenizer tok(l);
      for (const auto& f : tok) fields.push_back(trim(f));
    } catch (const boost::escaped_list_error& e) {
      throw ParseError(std::string("malformed CSV row: ") + e.what());
    }
    return fields;
  };

  LogReadResult result;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split(line);
      break;
    }
  }
  if (header.empty()) {
    result.warnings.push_back("log contains no traces");
    return result;
  }

  auto index_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ConfigError("CSV header has no column named '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t case_idx = index_of(columns.case_col);
  const std::size_t act_idx = index_of(columns.activity_col);
  std::optional<std::size_t> time_idx;
  if (columns.time_col) time_idx = index_of(*columns.time_col);

  struct Row {
    double time;
    std::size_t order;
    std::string activity;
  };
  std::vector<std::string> case_order;
  std::map<std::string, std::vector<Row>> cases;
  std::size_t order = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    const std::size_t needed = std::max({case_idx, act_idx, time_idx.value_or(0)}) + 1;
    if (fields.size() < needed)
      throw ParseError("CSV row has " + std::to_string(fields.size()) + " field(s), expected " +
                           std::to_string(needed),
                       line_no, 0);
    double t = 0;
    if (time_idx) {
      auto parsed = parse_timestamp(fields[*time_idx]);
      if (!parsed) {
        ++result.rejected_rows;
        continue;
      }
      t = *parsed;
    }
    const std::string& case_id = fields[case_idx];
    auto [it, fresh] = cases.try_emplace(case_id);
    if (fresh) case_order.push_back(case_id);
    it->second.push_back({t, order++, fields[act_idx]});
  }

  for (const auto& case_id : case_order) {
    auto& rows = cases[case_id];
    if (time_idx)
      std::stable_sort(rows.begin(), rows.end(),
                       [](const Row& a, const Row& b) { return a.time < b.time; });
    Trace trace;
    for (auto& r : rows) trace.push_back(std::move(r.activity));
    result.log.add(std::move(trace));
  }
  if (result.rejected_rows > 0)
    result.warnings.push_back(std::to_string(result.rejected_rows) +
                              " row(s) with unparsable timestamp rejected");
  if (result.log.empty()) result.warnings.push_back("log contains no traces");
  return result;
}

std::string log_to_json(const EventLog& log) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [trace, count] : log.variants()) {
    nlohmann::ordered_json entry;
    entry["variant"] = trace;
    entry["count"] = count;
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

EventLog log_from_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed log JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("log JSON must be an array of {variant, count}");
  EventLog log;
  try {
    for (const auto& entry : doc)
      log.add(entry.at("variant").get<Trace>(), entry.value("count", std::uint64_t{1}));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad log JSON entry: ") + e.what());
  }
  return log;
}

LogReadResult read_log_file(const std::string& path, const CsvColumns& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open log file '" + path + "'");
  auto ends_with = [&](const char* suffix) {
    std::string s(suffix);
    if (path.size() < s.size()) return false;
    return std::equal(s.rbegin(), s.rend(), path.rbegin(),
                      [](char a, char b) { return a == std::tolower(static_cast<unsigned char>(b)); });
  };
  if (ends_with(".xes")) return parse_xes(in);
  if (ends_with(".csv")) return parse_csv(in, columns);
  if (ends_with(".json")) {
    LogReadResult r;
    r.log = log_from_json(in);
    return r;
  }
  throw ConfigError("unknown log format for '" + path + "' (expected .xes, .csv or .json)");
}

}  // namespace synthminer
