#include "ziggu/graph_export.hpp"

#include <sstream>

#include <json.hpp>

namespace ziggu {

std::string graph_to_dot(const oracle::StateGraph& g) {
  std::ostringstream os;
  os << "graph ziggu" << g.n() << " {\n";
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const QuatString q = g.state(v);
    os << "  \"" << q.str() << "\" [label=\"" << q.str() << "\"";
    if (is_ziggu(q)) os << ", short=1";
    os << "];\n";
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    for (const auto& e : g.neighbors(v)) {
      if (e.to < v) continue;
      os << "  \"" << g.state(v).str() << "\" -- \"" << g.state(e.to).str()
         << "\" [idx=" << static_cast<int>(e.index) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const oracle::StateGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["edges"] = nlohmann::ordered_json::array();
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const QuatString q = g.state(v);
    doc["nodes"].push_back({{"id", q.str()}, {"short", is_ziggu(q)}});
  }
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    for (const auto& e : g.neighbors(v)) {
      if (e.to < v) continue;
      doc["edges"].push_back(
          {{"from", g.state(v).str()}, {"to", g.state(e.to).str()}, {"idx", e.index}});
    }
  }
  return doc.dump() + "\n";
}

}  // namespace ziggu
