#pragma once

#include <istream>
#include <string>

#include "synthminer/petri_net.hpp"

namespace synthminer {

/// PNML (core model). Nodes are written in creation order so that parsing
/// the output reproduces the net, ids included. Silent transitions get an
/// empty name plus a ProM `$invisible$` toolspecific marker.
std::string to_pnml(const WorkflowNet& wf);

/// Throws ParseError on malformed XML or when the net is not a workflow net.
WorkflowNet parse_pnml(std::istream& in);

/// GraphViz rendering: places as circles, transitions as boxes, silent
/// transitions as filled boxes.
std::string to_dot(const WorkflowNet& wf);

/// Reads the subset of DOT written by to_dot. Filled boxes are silent; the
/// source and sink are the places without incoming/outgoing arcs.
WorkflowNet parse_dot(std::istream& in);

}  // namespace synthminer
