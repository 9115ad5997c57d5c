#include "rauszer/dot.hpp"

namespace rauszer {

std::string dot_hasse(const std::vector<Bits>& nodes, const std::vector<std::string>& labels,
                      std::string_view graph_name) {
  if (labels.size() != nodes.size()) throw InputError("label count does not match node count");
  std::string out = "digraph \"" + std::string(graph_name) + "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j || !(nodes[i].subset_of(nodes[j]) && nodes[i] != nodes[j])) continue;
      bool covering = true;
      for (std::size_t m = 0; m < nodes.size() && covering; ++m) {
        if (m == i || m == j) continue;
        if (nodes[i].subset_of(nodes[m]) && nodes[i] != nodes[m] && nodes[m].subset_of(nodes[j]) &&
            nodes[m] != nodes[j])
          covering = false;
      }
      if (covering) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace rauszer
