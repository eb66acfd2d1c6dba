#pragma once

#include <string>

#include "synthminer/petri_net.hpp"

namespace synthminer {

/// Serialization that does not depend on node names or creation order:
/// colors from iterated neighborhood refinement, then sorted node and arc
/// lists. Isomorphic nets map to the same string.
std::string canonical_form(const WorkflowNet& wf);

}  // namespace synthminer
