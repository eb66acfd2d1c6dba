// Serial versus OpenMP candidate scoring, and a full discovery run.

#include <benchmark/benchmark.h>

#include "synthminer/miner.hpp"
#include "synthminer/scoring.hpp"

using namespace synthminer;

namespace {

EventLog synthetic_log(int activities) {
  // A chain with one optional activity in every third position.
  EventLog log;
  Trace full, skipped;
  for (int k = 0; k < activities; ++k) {
    const Activity a = "a" + std::to_string(k);
    full.push_back(a);
    if (k % 3 != 1) skipped.push_back(a);
  }
  log.add(full, 40);
  log.add(skipped, 25);
  return log;
}

struct Fixture {
  std::vector<CandidateNet> candidates;
  EventLog log;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    Fixture f;
    f.log = synthetic_log(12);
    DiscoveryConfig c;
    c.strategy = *parse_strategy("freq");
    // Net holding all but the last activity, then every candidate for it.
    const auto order = make_order(f.log, c.strategy);
    const Activity last = order.back();
    std::set<Activity> keep(order.begin(), order.end() - 1);
    const auto partial = discover(project(f.log, keep), c);
    NodeSet v;
    for (std::uint32_t k = 0; k < partial.net.net.node_count(); ++k)
      if (NodeId{k} != partial.net.source && NodeId{k} != partial.net.sink) v.nodes.insert(NodeId{k});
    f.candidates = generate_candidates(partial.net, v, last);
    return f;
  }();
  return f;
}

void BM_ScoreSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(score_candidates_serial(f.candidates, f.log, {}));
  state.counters["candidates"] = static_cast<double>(f.candidates.size());
}

void BM_ScoreParallel(benchmark::State& state) {
  const auto& f = fixture();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(score_candidates_parallel(f.candidates, f.log, {}, jobs));
  state.counters["candidates"] = static_cast<double>(f.candidates.size());
}

void BM_Discover(benchmark::State& state) {
  const EventLog log = synthetic_log(static_cast<int>(state.range(0)));
  DiscoveryConfig c;
  c.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(discover(log, c));
}

}  // namespace

BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Discover)->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
