#ifndef RAUSZER_DOT_HPP
#define RAUSZER_DOT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rauszer/bits.hpp"

namespace rauszer {

// Hasse diagram of a family of sets under inclusion: nodes labeled, edges
// only for the covering relation (transitive reduction of ⊂).
std::string dot_hasse(const std::vector<Bits>& nodes, const std::vector<std::string>& labels,
                      std::string_view graph_name);

}  // namespace rauszer

#endif
