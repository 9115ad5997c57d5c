#ifndef RAUSZER_INFO_SYSTEM_HPP
#define RAUSZER_INFO_SYSTEM_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rauszer/preorder.hpp"

namespace rauszer {

// An attribute table: objects × attributes → finite token sets. Cells are
// token sets so that both cell equality and cellwise inclusion are
// well-typed; a singleton token is the single-valued case.
struct InformationSystem {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  // cells[obj][attr]
  std::vector<std::vector<std::set<std::string>>> cells;

  // CSV with header `object,<attr>...`; cells are `;`-separated tokens,
  // trimmed, compared case-sensitively.
  static InformationSystem parse_csv(std::string_view text);

  std::optional<std::size_t> object_index(std::string_view label) const;

  // x R y iff f(x,a) = f(y,a) for every attribute. An equivalence.
  Preorder indiscernibility() const;

  // x R y iff f(x,a) ⊆ f(y,a) for every attribute. Its kernel equivalence
  // is the indiscernibility relation.
  Preorder inclusion_preorder() const;
};

struct Approximation {
  Bits lower;
  Bits upper;
  bool definable;  // lower == upper; otherwise X is a rough set
};

// lower = interior(R,X), upper = closure(R,X); lower ⊆ X ⊆ upper.
Approximation approximate(const Preorder& r, const Bits& x);

}  // namespace rauszer

#endif
