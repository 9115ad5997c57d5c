#ifndef RAUSZER_REPRESENTATION_HPP
#define RAUSZER_REPRESENTATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rauszer/algebra.hpp"
#include "rauszer/opens.hpp"
#include "rauszer/preorder.hpp"

namespace rauszer {

// The prime filters of an algebra, ordered by inclusion. Points are in
// ascending mask order and all derived structure uses that indexing.
// ob1/ob2 are the special-filter kinds of a Nelson input; they may overlap
// (they do exactly where phi has a fixed point).
struct PrimeFilterSpace {
  FiniteAlgebra algebra;
  std::vector<Bits> points;
  Preorder order;
  std::optional<PointInvolution> phi;
  std::optional<Bits> ob1;  // prime deductive systems (by definition)
  std::optional<Bits> ob2;  // image of ob1 under phi
};

// Requires a distributive input; the witness triple is reported otherwise.
PrimeFilterSpace prime_spectrum(const FiniteAlgebra& a, std::size_t filter_cap = kDefaultFilterCap);

// φ(P) = -(∼P). Verifies that every φ(P) is again a point, that φ is an
// antitone involution, (K) at every point for Kleene inputs, and computes
// and checks the Ob₁/Ob₂ kinds for Nelson inputs.
PointInvolution rasiowa_involution(const PrimeFilterSpace& space);

// Convenience: attaches phi (and kinds when applicable) to the space.
PrimeFilterSpace with_rasiowa_involution(PrimeFilterSpace space);

struct LawResult {
  std::string law;
  bool ok = false;
  std::vector<int> witness;  // offending element(s), empty when ok
};

struct StoneEmbedding {
  std::vector<Bits> h;  // element -> set of point indices
  std::vector<LawResult> laws;
  bool all_ok() const;
  const LawResult* find(std::string_view law) const;
};

// h(x) = {P : x ∈ P}. Verifies exactly the laws whose tables exist:
// openness of every h(x), h0 (injective, increasing, h(1)=Ob), h1 for
// meet and join, h2/h3 when impl is present, h4 when minus is present,
// ∼-preservation when neg is present (space must carry phi), weak-
// implication preservation when wimpl is present, and the double-negation
// image identity h(⌐⌞x) = I_R(I_S h(x)) on three-valued inputs.
StoneEmbedding stone_map(const PrimeFilterSpace& space);

struct InterpolationResult {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // point indices
};

// For every pair with P ⊆ φ(P), Q ⊆ φ(Q), P ⊆ φ(Q): some point M has
// P,Q ⊆ M ⊆ φ(P),φ(Q). The bracketed hypothesis Q ⊆ φ(P) is derivable
// from the others; it is asserted, and its failure flags a broken φ.
InterpolationResult interpolation_check(const PrimeFilterSpace& space);

struct MonteiroReport {
  bool n_holds = false;
  std::optional<std::array<int, 3>> n_witness;
  bool interp_holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> interp_witness;
  bool agree = false;
};

// For a Kleene algebra with a →w b := a ⇒ (∼a ∨ b): evaluates the
// exchange inequality (N) over all triples and the interpolation property
// of φ, and reports whether the two verdicts agree (they must).
MonteiroReport monteiro_equivalence(const FiniteAlgebra& a);

// Materializes the opens of the space's order as a finite algebra with
// ∼ and →w induced by φ, and runs the Nelson class check on it.
ClassReport opens_nelson_check(const PrimeFilterSpace& space);

// The opens of a preorder packaged as a finite algebra: meet/join are
// ∩/∪, impl/minus the Heyting/Brouwer operations; neg/wimpl are included
// when an antitone involution is supplied.
struct OpensAlgebra {
  OpensLattice lattice;
  FiniteAlgebra algebra;
};

OpensAlgebra opens_algebra(const Preorder& r, const std::optional<PointInvolution>& v = std::nullopt);

}  // namespace rauszer

#endif
