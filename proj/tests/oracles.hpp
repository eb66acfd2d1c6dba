#pragma once

// Deliberately naive reference implementations used to cross-check the
// library on small random inputs.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "synthminer/linear.hpp"
#include "synthminer/petri_net.hpp"

namespace synthminer::oracle {

// -- paths --------------------------------------------------------------------

/// Enumerates every simple path from each source without pruning and keeps
/// the nodes of those ending in `to`.
inline std::set<NodeId> elementary_path_nodes(const std::set<NodeId>& from, const std::set<NodeId>& to,
                                              const PetriNet& net) {
  std::set<NodeId> out;
  std::vector<NodeId> path;
  std::function<void(NodeId)> walk = [&](NodeId x) {
    path.push_back(x);
    if (to.count(x)) out.insert(path.begin(), path.end());
    for (NodeId y : net.postset(x))
      if (std::find(path.begin(), path.end(), y) == path.end()) walk(y);
    path.pop_back();
  };
  for (NodeId x : from) walk(x);
  return out;
}

/// Random bipartite net with `nodes` nodes and arc probability `density`.
inline PetriNet random_net(std::mt19937& rng, std::size_t nodes, double density) {
  PetriNet net;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < nodes; ++k) {
    if (coin(rng)) net.add_place();
    else net.add_transition(std::string(1, static_cast<char>('a' + k)));
  }
  std::bernoulli_distribution arc(density);
  for (std::uint32_t a = 0; a < nodes; ++a)
    for (std::uint32_t b = 0; b < nodes; ++b)
      if (net.is_place(NodeId{a}) != net.is_place(NodeId{b}) && arc(rng)) net.add_arc(NodeId{a}, NodeId{b});
  return net;
}

// -- soundness ----------------------------------------------------------------

enum class Verdict { sound, unsound };

/// Reachability graph built by plain DFS with a token cap standing in for
/// unboundedness; option to complete is checked per state by its own search.
inline Verdict naive_soundness(const WorkflowNet& wf, std::uint32_t cap = 6) {
  const PetriNet& net = wf.net;
  if (!is_workflow_net(wf)) return Verdict::unsound;
  using M = std::vector<std::uint32_t>;
  const std::size_t np = net.places().size();
  M init(np, 0), fin(np, 0);
  init[net.index_of(wf.source)] = 1;
  fin[net.index_of(wf.sink)] = 1;

  auto successors = [&](const M& m) {
    std::vector<std::pair<NodeId, M>> out;
    for (NodeId t : net.transitions()) {
      bool ok = true;
      for (NodeId p : net.preset(t)) ok = ok && m[net.index_of(p)] > 0;
      if (!ok) continue;
      M n = m;
      for (NodeId p : net.preset(t)) --n[net.index_of(p)];
      for (NodeId p : net.postset(t)) ++n[net.index_of(p)];
      out.emplace_back(t, n);
    }
    return out;
  };

  std::set<M> seen{init};
  std::vector<M> stack{init};
  std::set<NodeId> fired;
  while (!stack.empty()) {
    M m = stack.back();
    stack.pop_back();
    for (auto& [t, n] : successors(m)) {
      fired.insert(t);
      if (std::any_of(n.begin(), n.end(), [&](auto v) { return v > cap; })) return Verdict::unsound;
      if (seen.insert(n).second) stack.push_back(n);
    }
  }
  if (fired.size() != net.transitions().size()) return Verdict::unsound;
  const std::size_t o = net.index_of(wf.sink);
  for (const M& m : seen) {
    if (m[o] > 0 && m != fin) return Verdict::unsound;
    std::set<M> reach{m};
    std::vector<M> work{m};
    bool done = m == fin;
    while (!work.empty() && !done) {
      M x = work.back();
      work.pop_back();
      for (auto& [t, n] : successors(x)) {
        if (n == fin) done = true;
        if (reach.insert(n).second) work.push_back(n);
      }
    }
    if (!done) return Verdict::unsound;
  }
  return Verdict::sound;
}

/// initial_net() plus `extra` random nodes wired to interior nodes; returns
/// nullopt when the result violates the workflow-net conditions.
inline std::optional<WorkflowNet> random_workflow_net(std::mt19937& rng, std::size_t extra) {
  WorkflowNet wf = initial_net();
  PetriNet& net = wf.net;
  std::bernoulli_distribution coin(0.5);
  std::vector<NodeId> added;
  for (std::size_t k = 0; k < extra; ++k)
    added.push_back(coin(rng) ? net.add_place() : net.add_transition(std::string(1, static_cast<char>('a' + k))));
  auto interior = [&](NodeId x) { return x != wf.source && x != wf.sink; };
  std::bernoulli_distribution arc(0.35);
  for (NodeId x : added)
    for (std::uint32_t k = 0; k < net.node_count(); ++k) {
      const NodeId y{k};
      if (!interior(y) || net.is_place(x) == net.is_place(y)) continue;
      if (arc(rng) && y != wf.start) net.add_arc(x, y);  // nothing may enter start
      if (arc(rng) && y != wf.end) net.add_arc(y, x);    // nothing may leave end
    }
  if (!is_workflow_net(wf)) return std::nullopt;
  return wf;
}

// -- linear algebra -----------------------------------------------------------

/// Rank by fraction-free (Bareiss) elimination over big integers.
inline std::size_t rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t())) throw std::logic_error("inexact Bareiss step");
        m[i][j] = num / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// v is a combination of the columns of A iff rank(A) == rank([A | v]).
inline bool in_column_span(const IntMatrix& a, const std::vector<long long>& v) {
  std::vector<std::vector<mpz_class>> base, extended;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<mpz_class> row;
    for (long long x : (a.empty() ? std::vector<long long>{} : a[i])) row.emplace_back(static_cast<long>(x));
    base.push_back(row);
    row.emplace_back(static_cast<long>(v[i]));
    extended.push_back(row);
  }
  const bool no_columns = a.empty() || a[0].empty();
  const std::size_t rb = no_columns ? 0 : rank(base);
  return rb == rank(extended);
}

}  // namespace synthminer::oracle
