#ifndef RAUSZER_SEARCH_HPP
#define RAUSZER_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rauszer {

// Families are enumerated exhaustively up to their caps (preorders: all
// labeled relations; algebras: one per isomorphism class) and sampled with
// the seed beyond them. Results are deterministic given (config, seed).
struct SearchConfig {
  std::string family;    // preorders | kleene-sym-heyting | nelson
  std::string property;  // see search_properties()
  std::size_t max_n = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 100;  // per size beyond the exhaustive cap
};

struct Counterexample {
  std::string structure;
  std::string detail;
};

struct SearchResult {
  SearchConfig config;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

std::vector<std::string> search_families();
std::vector<std::string> search_properties(const std::string& family);

SearchResult run_search(const SearchConfig& cfg);

}  // namespace rauszer

#endif
