#include "synthminer/candidates.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "synthminer/canonical.hpp"

namespace synthminer {

const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::sequence: return "sequence";
    case Pattern::choice: return "choice";
    case Pattern::parallel: return "parallel";
    case Pattern::skip: return "skip";
    case Pattern::self_loop: return "self-loop";
  }
  return "?";
}

namespace {

constexpr std::pair<const char*, Pattern> kPatternNames[] = {
    {"seq", Pattern::sequence}, {"choice", Pattern::choice}, {"par", Pattern::parallel},
    {"skip", Pattern::skip},    {"loop", Pattern::self_loop}};

}  // namespace

PatternSet parse_patterns(std::string_view list) {
  PatternSet set = PatternSet::none();
  std::string token;
  std::istringstream in{std::string(list)};
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    bool known = false;
    for (const auto& [name, p] : kPatternNames)
      if (token == name) {
        set.set(p);
        known = true;
      }
    if (!known) throw std::invalid_argument("unknown pattern '" + token + "' (valid: seq,choice,par,skip,loop)");
  }
  return set;
}

std::string to_string(const PatternSet& set) {
  std::string out;
  for (const auto& [name, p] : kPatternNames)
    if (set.has(p)) {
      if (!out.empty()) out += ',';
      out += name;
    }
  return out;
}

SpanTest::SpanTest(const std::vector<std::vector<long long>>& vectors, std::size_t dim) {
  // Null space of the matrix whose rows are `vectors`.
  std::vector<std::vector<Rational>> a;
  for (const auto& v : vectors) {
    std::vector<Rational> row(dim);
    for (std::size_t k = 0; k < dim; ++k) row[k] = static_cast<long>(v.at(k));
    a.push_back(std::move(row));
  }
  std::vector<std::ptrdiff_t> pivot_row_of(dim, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t k = c; k < dim; ++k) a[rank][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < dim; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_row_of[c] = static_cast<std::ptrdiff_t>(rank);
    ++rank;
  }
  for (std::size_t f = 0; f < dim; ++f) {
    if (pivot_row_of[f] >= 0) continue;
    std::vector<Rational> y(dim, Rational(0));
    y[f] = 1;
    for (std::size_t c = 0; c < dim; ++c)
      if (pivot_row_of[c] >= 0) y[c] = -a[static_cast<std::size_t>(pivot_row_of[c])][f];
    complement_.push_back(std::move(y));
  }
}

bool SpanTest::contains(const std::vector<long long>& v) const {
  for (const auto& y : complement_) {
    Rational dot = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) dot += y[k] * static_cast<long>(v[k]);
    if (dot != 0) return false;
  }
  return true;
}

namespace {

// Non-empty subsets of `items` with at most `max_size` elements, by size
// then lexicographic index order.
void for_each_subset(const std::vector<NodeId>& items, std::size_t max_size,
                     const std::function<void(const std::vector<NodeId>&)>& fn) {
  std::vector<NodeId> chosen;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t want) {
    if (chosen.size() == want) {
      fn(chosen);
      return;
    }
    for (std::size_t k = start; k < items.size(); ++k) {
      chosen.push_back(items[k]);
      rec(k + 1, want);
      chosen.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(max_size, items.size()); ++size) rec(0, size);
}

std::vector<NodeId> intersect(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Generator {
 public:
  Generator(const WorkflowNet& wf, const NodeSet& v, const Activity& a, const CandidateOptions& options)
      : wf_(wf), v_(v), a_(a), options_(options) {
    for (NodeId id : v.nodes) (wf.net.is_place(id) ? places_ : transitions_).push_back(id);
  }

  std::vector<CandidateNet> run() {
    const auto& pats = options_.patterns;
    if (pats.has(Pattern::sequence)) sequences();
    if (pats.has(Pattern::choice)) choices();
    if (pats.has(Pattern::self_loop)) self_loops();
    if (pats.has(Pattern::parallel)) parallels();
    if (pats.has(Pattern::skip)) skips();

    std::sort(out_.begin(), out_.end(),
              [](const CandidateNet& x, const CandidateNet& y) { return x.canonical < y.canonical; });
    return std::move(out_);
  }

 private:
  bool in_v(NodeId id) const { return v_.nodes.count(id) > 0; }

  void keep(const RuleOutcome& outcome, Pattern pattern, std::vector<RuleApplication> prior = {}) {
    if (!outcome) return;
    CandidateNet c{*outcome.net, pattern, std::move(prior), canonical_form(*outcome.net)};
    c.applications.push_back(outcome.application);
    if (!seen_.insert(c.canonical).second) return;
#ifndef NDEBUG
    assert(is_sound(c.net, options_.rules.state_budget));
#endif
    out_.push_back(std::move(c));
  }

  void sequences() {
    const PetriNet& n = wf_.net;
    for_each_subset(places_, options_.max_subset_size, [&](const std::vector<NodeId>& s) {
      std::vector<NodeId> common = transitions_;
      for (NodeId p : s) common = intersect(common, n.preset(p));
      for_each_subset(common, options_.max_subset_size, [&](const std::vector<NodeId>& r) {
        keep(apply_abstraction(wf_, r, s, a_), Pattern::sequence);
      });
    });
    for_each_subset(places_, options_.max_subset_size, [&](const std::vector<NodeId>& s) {
      std::vector<NodeId> common = transitions_;
      for (NodeId p : s) common = intersect(common, n.postset(p));
      for_each_subset(common, options_.max_subset_size, [&](const std::vector<NodeId>& r) {
        keep(apply_dual_abstraction(wf_, s, r, a_), Pattern::sequence);
      });
    });
  }

  void choices() {
    const PetriNet& n = wf_.net;
    for (NodeId t : transitions_) {
      const auto& pre = n.preset(t);
      const auto& post = n.postset(t);
      if (!std::all_of(pre.begin(), pre.end(), [&](NodeId p) { return in_v(p); })) continue;
      if (!std::all_of(post.begin(), post.end(), [&](NodeId p) { return in_v(p); })) continue;
      keep(apply_linear_transition(wf_, pre, post, a_, options_.rules), Pattern::choice);
    }
  }

  void self_loops() {
    const PetriNet& n = wf_.net;
    for (NodeId p : places_) {
      // free-choice demands every transition consuming from p to have preset {p}
      const auto& out = n.postset(p);
      if (!std::all_of(out.begin(), out.end(), [&](NodeId t) { return n.preset(t).size() == 1; })) continue;
      keep(apply_linear_transition(wf_, {p}, {p}, a_, options_.rules), Pattern::self_loop);
    }
  }

  // New place between transition sets X and Y, then the activity inserted on
  // it, giving a branch concurrent to everything between X and Y.
  void parallels() {
    const PetriNet& n = wf_.net;
    const IntMatrix sc = short_circuited_incidence(wf_);
    const SpanTest rows(sc, n.transitions().size() + 1);
    const std::size_t bound = std::min(options_.max_subset_size, options_.max_parallel_subset_size);

    std::vector<NodeId> producers, consumers;
    for (NodeId t : transitions_) {
      if (t != wf_.end) producers.push_back(t);
      if (t != wf_.start) consumers.push_back(t);
    }

    for_each_subset(consumers, bound, [&](const std::vector<NodeId>& y) {
      // free-choice after adding p to every preset in Y: all of Y share a
      // preset, and no place of that preset feeds a transition outside Y.
      const auto& pre0 = n.preset(y.front());
      for (NodeId t : y)
        if (n.preset(t) != pre0) return;
      for (NodeId q : pre0)
        for (NodeId u : n.postset(q))
          if (!std::binary_search(y.begin(), y.end(), u)) return;

      for_each_subset(producers, bound, [&](const std::vector<NodeId>& x) {
        if (!intersect(x, y).empty()) return;
        std::vector<long long> row(n.transitions().size() + 1, 0);
        for (NodeId t : x) row[n.index_of(t)] += 1;
        for (NodeId t : y) row[n.index_of(t)] -= 1;
        if (!rows.contains(row)) return;

        RuleOutcome place = apply_linear_place(wf_, x, y, options_.rules);
        if (!place) return;
        RuleOutcome branch = apply_abstraction(*place.net, x, {*place.application.new_place}, a_);
        keep(branch, Pattern::parallel, {place.application});
      });
    });
  }

  // Optional variants: a silent twin of the new transition.
  void skips() {
    const std::size_t base_count = out_.size();
    for (std::size_t k = 0; k < base_count; ++k) {
      if (out_[k].pattern != Pattern::sequence && out_[k].pattern != Pattern::parallel) continue;
      const CandidateNet base = out_[k];  // keep() may reallocate out_
      const NodeId t = *base.applications.back().new_transition;
      const PetriNet& n = base.net.net;
      RuleOutcome outcome = apply_linear_transition(base.net, n.preset(t), n.postset(t), std::nullopt, options_.rules);
      std::vector<RuleApplication> prior = base.applications;
      keep(outcome, Pattern::skip, std::move(prior));
    }
  }

  const WorkflowNet& wf_;
  const NodeSet& v_;
  const Activity& a_;
  const CandidateOptions& options_;
  std::vector<NodeId> places_;
  std::vector<NodeId> transitions_;
  std::vector<CandidateNet> out_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

std::vector<CandidateNet> generate_candidates(const WorkflowNet& wf, const NodeSet& v, const Activity& a,
                                              const CandidateOptions& options) {
  return Generator(wf, v, a, options).run();
}

}  // namespace synthminer
