#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "synthminer/miner.hpp"

namespace synthminer {

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("not a number: '" + text + "'"); };
  if (text.empty()) throw bad();
  std::string s = text;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw bad();
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    auto digits = [](const std::string& d) {
      return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (!digits(num) || !digits(den)) throw bad();
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r = Rational(mpz_class(num), d);
  } else {
    const auto dot = s.find('.');
    std::string whole = s.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    for (char c : whole + frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    r = Rational(mpz_class(whole.empty() ? "0" : whole) * den + mpz_class(frac.empty() ? "0" : frac), den);
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

double to_double(const Rational& r) { return r.get_d(); }

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json quality_json(const QualityScore& q) {
  return {{"fitness", q.fitness}, {"precision", q.precision}, {"f1", q.f1}};
}

}  // namespace

nlohmann::ordered_json report_to_json(const DiscoveryReport& report, const DiscoveryConfig& config) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["config"] = {
      {"ordering", to_string(config.strategy)},
      {"threshold", to_string(config.threshold)},
      {"coverage", to_string(config.coverage)},
      {"max_subset_size", config.candidates.max_subset_size},
      {"max_parallel_subset_size", config.candidates.max_parallel_subset_size},
      {"patterns", to_string(config.candidates.patterns)},
      {"path_mode", config.reduction.mode == PathMode::exact ? "exact" : "approx"},
      {"path_budget", config.reduction.path_budget},
      {"state_budget", config.candidates.rules.state_budget},
      {"lookahead", config.replay.lookahead_depth},
      {"jobs", config.jobs},
  };
  j["log"] = {{"traces", report.traces_in}, {"traces_kept", report.traces_kept}, {"variants_kept", report.variants_kept}};
  j["order"] = report.order;
  j["warnings"] = report.warnings;
  auto& its = j["iterations"] = nlohmann::ordered_json::array();
  for (const auto& r : report.iterations) {
    its.push_back({
        {"i", r.index},
        {"activity", r.activity},
        {"net_nodes", r.net_nodes},
        {"v_size", r.v_size},
        {"ratio", to_string(r.ratio)},
        {"ratio_value", to_double(r.ratio)},
        {"provenance", to_string(r.provenance)},
        {"t_pre", r.t_pre},
        {"t_fol", r.t_fol},
        {"candidates", r.candidates},
        {"widened", r.widened},
        {"pattern", to_string(r.pattern)},
        {"applications", r.applications},
        {"fitness", r.quality.fitness},
        {"precision", r.quality.precision},
        {"f1", r.quality.f1},
        {"millis", r.millis},
    });
  }
  j["final"] = quality_json(report.final_quality);
  j["total_millis"] = report.total_millis;
  return j;
}

std::string report_to_csv(const DiscoveryReport& report) {
  std::ostringstream out;
  out << "i,activity,v_size,ratio,provenance,candidates,fitness,precision,f1,millis\n";
  for (const auto& r : report.iterations) {
    out << r.index << ',' << csv_field(r.activity) << ',' << r.v_size << ',' << fixed(to_double(r.ratio), 6) << ','
        << to_string(r.provenance) << ',' << r.candidates << ',' << fixed(r.quality.fitness, 6) << ','
        << fixed(r.quality.precision, 6) << ',' << fixed(r.quality.f1, 6) << ',' << fixed(r.millis, 3) << '\n';
  }
  return out.str();
}

}  // namespace synthminer
