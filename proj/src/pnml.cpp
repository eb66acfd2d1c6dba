#include "synthminer/pnml.hpp"

#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "synthminer/log_io.hpp"

namespace synthminer {

namespace pt = boost::property_tree;

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Completes source/sink (given or inferred from empty pre/postsets) and
// start/end, then validates the workflow-net conditions.
WorkflowNet finish_workflow(WorkflowNet wf, std::optional<NodeId> source, std::optional<NodeId> sink) {
  const PetriNet& net = wf.net;
  if (!source) {
    for (NodeId p : net.places())
      if (net.preset(p).empty()) {
        if (source) throw ParseError("net has no initial marking and several source candidates");
        source = p;
      }
  }
  if (!sink) {
    for (NodeId p : net.places())
      if (net.postset(p).empty()) {
        if (sink) throw ParseError("net has several sink candidates");
        sink = p;
      }
  }
  if (!source || !sink) throw ParseError("net has no identifiable source/sink place");
  wf.source = *source;
  wf.sink = *sink;
  if (net.postset(wf.source).size() != 1 || net.preset(wf.sink).size() != 1)
    throw ParseError("not a workflow net: source/sink must have exactly one start/end transition");
  wf.start = net.postset(wf.source).front();
  wf.end = net.preset(wf.sink).front();
  auto problems = workflow_violations(wf);
  if (!problems.empty()) throw ParseError("not a workflow net: " + problems.front());
  return wf;
}

}  // namespace

std::string to_pnml(const WorkflowNet& wf) {
  const PetriNet& n = wf.net;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<pnml>\n"
     << "  <net id=\"net1\" type=\"http://www.pnml.org/version-2009/grammar/pnmlcoremodel\">\n"
     << "    <name>\n      <text>workflow net</text>\n    </name>\n"
     << "    <page id=\"page1\">\n";
  for (std::uint32_t k = 0; k < n.node_count(); ++k) {
    const NodeId id{k};
    const Node& node = n.node(id);
    const std::string nid = xml_escape(node.name);
    if (node.kind == NodeKind::place) {
      os << "      <place id=\"" << nid << "\">\n"
         << "        <name>\n          <text>" << nid << "</text>\n        </name>\n";
      if (id == wf.source) os << "        <initialMarking>\n          <text>1</text>\n        </initialMarking>\n";
      os << "      </place>\n";
    } else {
      os << "      <transition id=\"" << nid << "\">\n"
         << "        <name>\n          <text>" << (node.label ? xml_escape(*node.label) : "") << "</text>\n"
         << "        </name>\n";
      if (!node.label)
        os << "        <toolspecific tool=\"ProM\" version=\"6.4\" activity=\"$invisible$\" localNodeID=\"" << nid
           << "\"/>\n";
      os << "      </transition>\n";
    }
  }
  std::size_t arc = 0;
  for (std::uint32_t k = 0; k < n.node_count(); ++k)
    for (NodeId to : n.postset(NodeId{k}))
      os << "      <arc id=\"a" << ++arc << "\" source=\"" << xml_escape(n.node(NodeId{k}).name) << "\" target=\""
         << xml_escape(n.node(to).name) << "\"/>\n";
  os << "    </page>\n"
     << "    <finalmarkings>\n      <marking>\n"
     << "        <place idref=\"" << xml_escape(n.node(wf.sink).name) << "\">\n"
     << "          <text>1</text>\n        </place>\n"
     << "      </marking>\n    </finalmarkings>\n"
     << "  </net>\n"
     << "</pnml>\n";
  return os.str();
}

namespace {

struct PnmlReader {
  WorkflowNet wf;
  std::optional<NodeId> source;
  std::vector<std::pair<std::string, std::string>> arcs;

  void visit(const pt::ptree& page) {
    for (const auto& [tag, child] : page) {
      if (tag == "page") {
        visit(child);
      } else if (tag == "place") {
        const std::string id = child.get<std::string>("<xmlattr>.id", "");
        if (id.empty()) throw ParseError("PNML place without id");
        NodeId p = add([&] { return wf.net.add_place(id); });
        const int tokens = child.get<int>("initialMarking.text", 0);
        if (tokens > 0) {
          if (source) throw ParseError("PNML net has more than one marked place");
          source = p;
        }
      } else if (tag == "transition") {
        const std::string id = child.get<std::string>("<xmlattr>.id", "");
        if (id.empty()) throw ParseError("PNML transition without id");
        std::string name = child.get<std::string>("name.text", "");
        bool invisible = name.empty();
        for (const auto& [ttag, tchild] : child)
          if (ttag == "toolspecific" && tchild.get<std::string>("<xmlattr>.activity", "") == "$invisible$")
            invisible = true;
        add([&] { return wf.net.add_transition(invisible ? Label{} : Label{name}, id); });
      } else if (tag == "arc") {
        arcs.emplace_back(child.get<std::string>("<xmlattr>.source", ""), child.get<std::string>("<xmlattr>.target", ""));
      } else if (tag == "finalmarkings") {
        for (const auto& [mtag, marking] : child) {
          if (mtag != "marking") continue;
          for (const auto& [ptag, place] : marking)
            if (ptag == "place" && place.get<int>("text", 0) > 0) final_names.push_back(place.get<std::string>("<xmlattr>.idref", ""));
        }
      }
    }
  }

  template <typename F>
  NodeId add(F&& make) {
    try {
      return make();
    } catch (const NetError& e) {
      throw ParseError(std::string("PNML: ") + e.what());
    }
  }

  std::vector<std::string> final_names;
};

}  // namespace

WorkflowNet parse_pnml(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("malformed PNML: " + e.message(), e.line(), 0);
  }
  auto net_node = tree.get_child_optional("pnml.net");
  if (!net_node) throw ParseError("PNML document has no <pnml><net> element");

  PnmlReader reader;
  try {
    reader.visit(*net_node);
  } catch (const pt::ptree_error& e) {
    throw ParseError(std::string("PNML: ") + e.what());
  }
  PetriNet& net = reader.wf.net;
  for (const auto& [src, dst] : reader.arcs) {
    auto a = net.find(src);
    auto b = net.find(dst);
    if (!a || !b) throw ParseError("PNML arc references unknown node '" + (a ? dst : src) + "'");
    try {
      net.add_arc(*a, *b);
    } catch (const NetError& e) {
      throw ParseError(std::string("PNML: ") + e.what());
    }
  }

  const std::optional<NodeId> sink =
      reader.final_names.size() == 1 ? net.find(reader.final_names.front()) : std::nullopt;
  return finish_workflow(std::move(reader.wf), reader.source, sink);
}

std::string to_dot(const WorkflowNet& wf) {
  const PetriNet& n = wf.net;
  std::ostringstream os;
  os << "digraph workflow_net {\n"
     << "  rankdir=LR;\n"
     << "  node [fontname=\"Helvetica\"];\n";
  for (std::uint32_t k = 0; k < n.node_count(); ++k) {
    const NodeId id{k};
    const Node& node = n.node(id);
    os << "  \"" << dot_escape(node.name) << "\" [";
    if (node.kind == NodeKind::place)
      os << "shape=circle, label=\"" << dot_escape(node.name) << "\"";
    else if (node.label)
      os << "shape=box, label=\"" << dot_escape(*node.label) << "\"";
    else
      os << "shape=box, style=filled, fillcolor=black, fontcolor=white, label=\""
         << dot_escape(display_label(wf, id)) << "\"";
    os << "];\n";
  }
  for (std::uint32_t k = 0; k < n.node_count(); ++k)
    for (NodeId to : n.postset(NodeId{k}))
      os << "  \"" << dot_escape(n.node(NodeId{k}).name) << "\" -> \"" << dot_escape(n.node(to).name) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace synthminer

namespace synthminer {

namespace {

std::string dot_unescape(const std::string& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '\\' && k + 1 < s.size()) ++k;
    out += s[k];
  }
  return out;
}

}  // namespace

WorkflowNet parse_dot(std::istream& in) {
  static const std::regex node_re(R"re(^\s*"((?:[^"\\]|\\.)*)"\s*\[(.*)\];?\s*$)re");
  static const std::regex edge_re(R"re(^\s*"((?:[^"\\]|\\.)*)"\s*->\s*"((?:[^"\\]|\\.)*)"\s*;?\s*$)re");
  static const std::regex attr_re(R"re((\w+)\s*=\s*(?:"((?:[^"\\]|\\.)*)"|([^,\s\]]+)))re");

  WorkflowNet wf;
  PetriNet& net = wf.net;
  std::vector<std::pair<std::string, std::string>> arcs;
  std::string line;
  std::size_t line_no = 0;
  bool opened = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::smatch m;
    if (!opened) {
      if (line.find("digraph") != std::string::npos) opened = true;
      else if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("DOT: expected digraph", line_no);
      continue;
    }
    if (std::regex_match(line, m, edge_re)) {
      arcs.emplace_back(dot_unescape(m[1]), dot_unescape(m[2]));
    } else if (std::regex_match(line, m, node_re)) {
      const std::string name = dot_unescape(m[1]);
      if (name == "node" || name == "edge" || name == "graph") continue;
      std::map<std::string, std::string> attrs;
      const std::string body = m[2];
      for (auto it = std::sregex_iterator(body.begin(), body.end(), attr_re); it != std::sregex_iterator(); ++it)
        attrs[(*it)[1]] = (*it)[2].matched ? dot_unescape((*it)[2]) : std::string((*it)[3]);
      if (net.find(name)) throw ParseError("DOT: duplicate node '" + name + "'", line_no);
      const std::string shape = attrs.count("shape") ? attrs["shape"] : "";
      if (shape == "circle") net.add_place(name);
      else if (shape == "box") {
        const bool silent = attrs.count("style") && attrs["style"].find("filled") != std::string::npos;
        net.add_transition(silent ? Label{} : Label{attrs.count("label") ? attrs["label"] : name}, name);
      } else {
        throw ParseError("DOT: node '" + name + "' has no circle/box shape", line_no);
      }
    }
  }
  if (!opened) throw ParseError("DOT: no digraph found");
  for (const auto& [src, dst] : arcs) {
    auto a = net.find(src);
    auto b = net.find(dst);
    if (!a || !b) throw ParseError("DOT: edge references unknown node '" + (a ? dst : src) + "'");
    try {
      net.add_arc(*a, *b);
    } catch (const NetError& e) {
      throw ParseError(std::string("DOT: ") + e.what());
    }
  }
  return finish_workflow(std::move(wf), std::nullopt, std::nullopt);
}

}  // namespace synthminer
