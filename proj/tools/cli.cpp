#include "synthminer/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "synthminer/log_io.hpp"
#include "synthminer/miner.hpp"
#include "synthminer/pnml.hpp"

namespace synthminer {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LogFlags {
  std::string path;
  CsvColumns columns;
  std::string time_col;

  void attach(CLI::App& app) {
    app.add_option("--log", path, "Event log (.xes, .csv or .json)")->required();
    app.add_option("--case-col", columns.case_col, "CSV case id column")->capture_default_str();
    app.add_option("--activity-col", columns.activity_col, "CSV activity column")->capture_default_str();
    app.add_option("--time-col", time_col, "CSV timestamp column; rows are sorted by it within a case");
  }

  EventLog load(std::ostream& err) {
    if (!time_col.empty()) columns.time_col = time_col;
    auto result = read_log_file(path, columns);
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    if (result.log.empty()) throw InputError("log '" + path + "' contains no traces");
    return std::move(result.log);
  }
};

std::string strategy_names() {
  std::string out;
  for (const auto& s : all_strategies()) out += (out.empty() ? "" : ", ") + to_string(s);
  return out;
}

CLI::Validator strategy_validator() {
  return CLI::Validator(
      [](std::string& name) -> std::string {
        if (parse_strategy(name)) return {};
        return "unknown ordering '" + name + "'; valid orderings: " + strategy_names();
      },
      "{" + strategy_names() + "}", "ORDERING");
}

CLI::Validator patterns_validator() {
  return CLI::Validator(
      [](std::string& list) -> std::string {
        try {
          parse_patterns(list);
          return {};
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
      },
      "LIST", "PATTERNS");
}

CLI::Validator rational_validator() {
  return CLI::Validator(
      [](std::string& text) -> std::string {
        try {
          parse_rational(text);
          return {};
        } catch (const std::invalid_argument& e) {
          return e.what();
        }
      },
      "NUMBER", "RATIONAL");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::ios_base::failure("error writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

WorkflowNet load_net(const std::string& path, const std::string& format) {
  std::istringstream in(read_file(path));
  if (format == "dot") return parse_dot(in);
  return parse_pnml(in);
}

nlohmann::ordered_json quality_json(const QualityScore& q) {
  return {{"fitness", q.fitness}, {"precision", q.precision}, {"f1", q.f1}};
}

struct DiscoverCommand {
  LogFlags log;
  std::string ordering;
  std::string threshold = "0.9";
  std::string coverage = "0.95";
  std::size_t max_subset_size;
  std::size_t max_parallel_subset_size;
  std::string patterns;
  std::string path_mode = "exact";
  std::size_t path_budget;
  std::size_t state_budget;
  std::size_t lookahead;
  int jobs;
  std::string export_pnml, export_dot, report, csv;

  explicit DiscoverCommand(CLI::App& app) {
    const DiscoveryConfig defaults;
    ordering = to_string(defaults.strategy);
    max_subset_size = defaults.candidates.max_subset_size;
    max_parallel_subset_size = defaults.candidates.max_parallel_subset_size;
    patterns = to_string(defaults.candidates.patterns);
    path_budget = defaults.reduction.path_budget;
    state_budget = defaults.candidates.rules.state_budget;
    lookahead = defaults.replay.lookahead_depth;
    jobs = defaults.jobs;

    log.attach(app);
    app.add_option("--ordering", ordering, "Activity ordering strategy")
        ->check(strategy_validator())
        ->capture_default_str();
    app.add_option("--threshold", threshold, "Causal-strength threshold c (decimal or fraction)")
        ->check(rational_validator())
        ->capture_default_str();
    app.add_option("--coverage", coverage, "Share of traces kept by the variant filter")
        ->check(rational_validator())
        ->capture_default_str();
    app.add_option("--max-subset-size", max_subset_size, "Largest subset tried by a rule application")
        ->capture_default_str();
    app.add_option("--max-parallel-subset-size", max_parallel_subset_size,
                   "Largest transition set bridged by a parallel branch")
        ->capture_default_str();
    app.add_option("--patterns", patterns, "Enabled candidate patterns")
        ->check(patterns_validator())
        ->capture_default_str();
    app.add_option("--path-mode", path_mode, "Path-node computation")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    app.add_option("--path-budget", path_budget, "Path expansions before exact mode falls back")->capture_default_str();
    app.add_option("--state-budget", state_budget, "Reachable markings explored by soundness checks")
        ->capture_default_str();
    app.add_option("--lookahead", lookahead, "Silent firings tried during replay")->capture_default_str();
    app.add_option("--jobs", jobs, "Threads scoring candidates (1 = serial)")->capture_default_str();
    app.add_option("--export-pnml", export_pnml, "Write the final net as PNML");
    app.add_option("--export-dot", export_dot, "Write the final net as DOT");
    app.add_option("--report", report, "Write the discovery report (JSON)");
    app.add_option("--csv", csv, "Write one row per iteration (CSV)");
  }

  DiscoveryConfig config() const {
    DiscoveryConfig c;
    c.strategy = *parse_strategy(ordering);
    c.threshold = parse_rational(threshold);
    c.coverage = parse_rational(coverage);
    c.candidates.max_subset_size = max_subset_size;
    c.candidates.max_parallel_subset_size = max_parallel_subset_size;
    c.candidates.patterns = parse_patterns(patterns);
    c.candidates.rules.state_budget = state_budget;
    c.reduction.mode = path_mode == "approx" ? PathMode::approx : PathMode::exact;
    c.reduction.path_budget = path_budget;
    c.replay.lookahead_depth = lookahead;
    c.jobs = jobs;
    validate(c);
    return c;
  }

  int run(std::ostream& out, std::ostream& err) {
    DiscoveryConfig cfg;
    try {
      cfg = config();
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    const EventLog input = log.load(err);
    DiscoveryResult result;
    try {
      result = discover(input, cfg);
    } catch (const DiscoveryError& e) {
      err << "error: discovery aborted: " << e.what() << '\n';
      return kExitAbort;
    } catch (const std::logic_error& e) {
      err << "error: discovery aborted: " << e.what() << '\n';
      return kExitAbort;
    }
    for (const auto& w : result.report.warnings) err << "warning: " << w << '\n';
    if (!export_pnml.empty()) write_file(export_pnml, to_pnml(result.net));
    if (!export_dot.empty()) write_file(export_dot, to_dot(result.net));
    if (!report.empty()) write_file(report, report_to_json(result.report, cfg).dump(2) + "\n");
    if (!csv.empty()) write_file(csv, report_to_csv(result.report));
    nlohmann::ordered_json summary;
    summary["ordering"] = ordering;
    summary["order"] = result.report.order;
    summary["final"] = quality_json(result.report.final_quality);
    out << summary.dump(2) << '\n';
    return kExitOk;
  }
};

struct OrderCommand {
  LogFlags log;
  std::string ordering;

  explicit OrderCommand(CLI::App& app) {
    log.attach(app);
    app.add_option("--ordering", ordering, "Print one strategy only (default: all)")->check(strategy_validator());
  }

  int run(std::ostream& out, std::ostream& err) {
    const EventLog input = log.load(err);
    auto one = [&](const OrderingStrategy& s) {
      OrderDiagnostics diag;
      auto order = make_order(input, s, &diag);
      for (const auto& w : diag.warnings) err << "warning: " << to_string(s) << ": " << w << '\n';
      return nlohmann::ordered_json(order);
    };
    if (!ordering.empty()) {
      out << one(*parse_strategy(ordering)).dump() << '\n';
    } else {
      nlohmann::ordered_json all;
      for (const auto& s : all_strategies()) all[to_string(s)] = one(s);
      out << all.dump(2) << '\n';
    }
    return kExitOk;
  }
};

struct EvaluateCommand {
  LogFlags log;
  std::string net;
  std::size_t lookahead = ReplayOptions{}.lookahead_depth;

  explicit EvaluateCommand(CLI::App& app) {
    app.add_option("--net", net, "Workflow net (PNML)")->required();
    log.attach(app);
    app.add_option("--lookahead", lookahead, "Silent firings tried during replay")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream& err) {
    const WorkflowNet wf = load_net(net, has_suffix(net, ".dot") ? "dot" : "pnml");
    const EventLog input = log.load(err);
    out << quality_json(evaluate(wf, input, ReplayOptions{lookahead})).dump(2) << '\n';
    return kExitOk;
  }
};

struct ConvertCommand {
  std::string input, output, from, to;

  explicit ConvertCommand(CLI::App& app) {
    app.add_option("--input", input, "Net to convert (.pnml or .dot)")->required();
    app.add_option("--output", output, "Destination (default: standard output)");
    app.add_option("--from", from, "Input format (default: from the extension)")->check(CLI::IsMember({"pnml", "dot"}));
    app.add_option("--to", to, "Output format (default: from the extension, else dot)")
        ->check(CLI::IsMember({"pnml", "dot"}));
  }

  int run(std::ostream& out, std::ostream&) {
    const std::string in_format = !from.empty() ? from : (has_suffix(input, ".dot") || has_suffix(input, ".gv")) ? "dot" : "pnml";
    std::string out_format = to;
    if (out_format.empty()) out_format = has_suffix(output, ".pnml") || has_suffix(output, ".xml") ? "pnml" : "dot";
    const WorkflowNet wf = load_net(input, in_format);
    const std::string text = out_format == "pnml" ? to_pnml(wf) : to_dot(wf);
    if (output.empty()) out << text;
    else write_file(output, text);
    return kExitOk;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discovers sound free-choice workflow nets from event logs", "synthminer"};
  app.require_subcommand(1, 1);
  auto* discover_cmd = app.add_subcommand("discover", "Discover a workflow net from an event log");
  auto* order_cmd = app.add_subcommand("order", "Print activity orderings as JSON");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a net against a log (fitness, precision, F1)");
  auto* convert_cmd = app.add_subcommand("convert", "Convert a net between PNML and DOT");
  DiscoverCommand discover_args(*discover_cmd);
  OrderCommand order_args(*order_cmd);
  EvaluateCommand evaluate_args(*evaluate_cmd);
  ConvertCommand convert_args(*convert_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*discover_cmd) return discover_args.run(out, err);
    if (*order_cmd) return order_args.run(out, err);
    if (*evaluate_cmd) return evaluate_args.run(out, err);
    return convert_args.run(out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace synthminer
