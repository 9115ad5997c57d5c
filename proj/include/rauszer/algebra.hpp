#ifndef RAUSZER_ALGEBRA_HPP
#define RAUSZER_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rauszer/bits.hpp"

namespace rauszer {

struct MissingTableError : InputError {
  using InputError::InputError;
};

// A finite lattice-based algebra given by operation tables. Carrier is
// 0..size-1. Optional named tables:
//   unary:  neg (strong/De Morgan negation), hneg (Heyting negation),
//           bneg (Brouwer negation), wneg (weak negation), quant (quantifier)
//   binary: impl (Heyting), minus (Brouwer), wimpl (weak), dimpl (deductive arrow)
// hneg/bneg/wneg are derived from impl/minus/wimpl when absent; explicit
// tables must agree with the derived values.
class FiniteAlgebra {
 public:
  static constexpr const char* kUnaryNames[] = {"neg", "hneg", "bneg", "wneg", "quant"};
  static constexpr const char* kBinaryNames[] = {"impl", "minus", "wimpl", "dimpl"};

  // Validates lattice laws, bounds, ranges, and derived-table consistency;
  // throws LatticeLawError / InputError with the named law and witness.
  static FiniteAlgebra make(int size, std::vector<int> meet, std::vector<int> join, int bot, int top,
                            std::map<std::string, std::vector<int>> ops = {});

  int size() const { return n_; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int bot() const { return bot_; }
  int top() const { return top_; }
  bool leq(int a, int b) const { return meet(a, b) == a; }

  bool has(std::string_view name) const { return ops_.count(std::string(name)) > 0; }
  const std::vector<int>& table(std::string_view name) const;
  int unary(std::string_view name, int a) const { return table(name)[static_cast<std::size_t>(a)]; }
  int binary(std::string_view name, int a, int b) const { return table(name)[idx(a, b)]; }
  const std::map<std::string, std::vector<int>>& ops() const { return ops_; }

  // Heyting negation a ⇒ 0; explicit hneg table wins when present.
  int hneg(int a) const;
  // Brouwer negation 1 -· a.
  int bneg(int a) const;
  // Weak negation a →w 0.
  int wneg(int a) const;

  // First lexicographic triple with a∧(b∨c) ≠ (a∧b)∨(a∧c), if any.
  std::optional<std::array<int, 3>> distributivity_witness() const;
  bool is_distributive() const { return !distributivity_witness().has_value(); }

  // The unique b with a∧b=0, a∨b=1, when one exists.
  std::optional<int> boolean_complement(int a) const;

  // Returns a copy with an extra table (used when deriving impl/minus/wimpl
  // for corpus algebras); replaces any previous table of that name.
  FiniteAlgebra with_table(const std::string& name, std::vector<int> tbl) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  FiniteAlgebra() = default;
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b); }

  int n_ = 0;
  std::vector<int> meet_, join_;
  int bot_ = 0, top_ = 0;
  std::map<std::string, std::vector<int>> ops_;
};

struct Witness {
  std::string axiom;
  std::vector<int> tuple;
  bool operator==(const Witness&) const = default;
};

struct ClassReport {
  std::string class_name;
  bool holds = false;
  std::optional<Witness> witness;  // present iff !holds
};

// Class names: distributive, demorgan, kleene, heyting, brouwer, hb,
// symmetric-heyting, nelson, lukasiewicz3, monadic, deductive.
const std::vector<std::string>& known_classes();

// Exhaustive axiom scan; the witness is the first failing axiom in the
// class's canonical order at its lexicographically least tuple. Missing
// operation tables raise MissingTableError, distinct from axiom failure.
ClassReport check_class(const FiniteAlgebra& a, std::string_view cls);

// Re-evaluates one named axiom instance; lets callers confirm witnesses.
bool eval_axiom(const FiniteAlgebra& a, std::string_view axiom, const std::vector<int>& tuple);

// Greatest x with a∧x ≤ b, when the set of such x has a greatest element.
std::optional<int> relative_pseudocomplement(const FiniteAlgebra& a, int x, int y);
// Least x with a ≤ b∨x, dually.
std::optional<int> pseudo_difference(const FiniteAlgebra& a, int x, int y);

inline constexpr std::size_t kDefaultFilterCap = 20;

enum class FilterKind { all, prime, deductive };

struct FilterSet {
  FilterKind kind;
  std::vector<Bits> members;  // ascending mask order
};

bool is_filter(const FiniteAlgebra& a, const Bits& f);
bool is_prime_filter(const FiniteAlgebra& a, const Bits& f);

// j ≠ 0 with j = a∨b only trivially.
std::vector<int> join_irreducibles(const FiniteAlgebra& a);

// All-subset scan; for distributive lattices the prime family is
// cross-checked against the principal up-sets of join-irreducibles.
FilterSet filters(const FiniteAlgebra& a, FilterKind kind, std::size_t cap = kDefaultFilterCap);

// All-subset scan for the sets closed under modus ponens for the arrow.
FilterSet deductive_systems(const FiniteAlgebra& a, std::string_view arrow, std::size_t cap = kDefaultFilterCap);

// Smallest (by mask) prime filter containing f and avoiding `avoid`.
std::optional<Bits> extend_to_prime(const FiniteAlgebra& a, const Bits& f, int avoid);

bool is_deductive_system(const FiniteAlgebra& a, std::string_view arrow, const Bits& d);

enum class GenMode { chained, conjunctive };

// Least deductive system containing z: modus-ponens closure fixpoint,
// cross-validated against the selected finite-sequence characterization
// (chained arrow nests / conjunction prefixes); a mismatch means the arrow
// is not deductive and raises ConsistencyError. D(∅) is the closure of {1}.
Bits generate_deductive_system(const FiniteAlgebra& a, std::string_view arrow, const Bits& z, GenMode mode);

// {x : a ↣ x ∈ d1}; requires d1 deductive and a ∉ d1; the result is
// verified to be a deductive system containing d1 and a.
Bits generate_from_system_and_element(const FiniteAlgebra& a, std::string_view arrow, const Bits& d1, int x);

}  // namespace rauszer

#endif
