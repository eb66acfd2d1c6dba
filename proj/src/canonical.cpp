#include "synthminer/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace synthminer {

namespace {

std::vector<std::size_t> rank_signatures(const std::vector<std::string>& sig) {
  std::vector<std::string> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> color(sig.size());
  for (std::size_t k = 0; k < sig.size(); ++k)
    color[k] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[k]) - sorted.begin());
  return color;
}

std::size_t distinct(const std::vector<std::size_t>& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

}  // namespace

std::string canonical_form(const WorkflowNet& wf) {
  const PetriNet& n = wf.net;
  const std::size_t size = n.node_count();

  std::vector<std::string> initial(size);
  for (std::uint32_t k = 0; k < size; ++k) {
    const NodeId id{k};
    if (id == wf.source) initial[k] = "I";
    else if (id == wf.sink) initial[k] = "O";
    else if (n.is_place(id)) initial[k] = "P";
    else if (id == wf.start) initial[k] = "T^";
    else if (id == wf.end) initial[k] = "T$";
    else if (n.node(id).label) initial[k] = "T:" + *n.node(id).label;
    else initial[k] = "T~";
  }

  std::vector<std::size_t> color = rank_signatures(initial);
  std::size_t classes = distinct(color);
  for (std::size_t round = 0; round < size; ++round) {
    std::vector<std::string> sig(size);
    for (std::uint32_t k = 0; k < size; ++k) {
      std::vector<std::size_t> in, out;
      for (NodeId y : n.preset(NodeId{k})) in.push_back(color[y.value]);
      for (NodeId y : n.postset(NodeId{k})) out.push_back(color[y.value]);
      std::sort(in.begin(), in.end());
      std::sort(out.begin(), out.end());
      std::ostringstream os;
      os << color[k] << '|';
      for (auto c : in) os << c << ',';
      os << '|';
      for (auto c : out) os << c << ',';
      sig[k] = os.str();
    }
    auto next = rank_signatures(sig);
    const std::size_t next_classes = distinct(next);
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }

  std::vector<std::pair<std::size_t, std::string>> nodes;
  for (std::uint32_t k = 0; k < size; ++k) nodes.emplace_back(color[k], initial[k]);
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::uint32_t k = 0; k < size; ++k)
    for (NodeId y : n.postset(NodeId{k})) arcs.emplace_back(color[k], color[y.value]);
  std::sort(arcs.begin(), arcs.end());

  std::ostringstream os;
  os << "N";
  for (const auto& [c, s] : nodes) os << ' ' << c << '=' << s;
  os << " A";
  for (const auto& [a, b] : arcs) os << ' ' << a << '>' << b;
  return os.str();
}

}  // namespace synthminer
