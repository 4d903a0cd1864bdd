#pragma once

#include <string>

#include "ziggu/oracle.hpp"

namespace ziggu {

// Nodes carry the state as label and short=1 when on the shortest
// solution; edges carry idx, the digit position that changes.
std::string graph_to_dot(const oracle::StateGraph& g);
std::string graph_to_json(const oracle::StateGraph& g);

}  // namespace ziggu
