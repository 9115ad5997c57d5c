#ifndef RAUSZER_ENUMERATE_HPP
#define RAUSZER_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rauszer/algebra.hpp"
#include "rauszer/opens.hpp"
#include "rauszer/preorder.hpp"

namespace rauszer {

// SplitMix64. Fully deterministic across platforms, unlike the standard
// distributions; every randomized corpus records its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t s_;
};

// Brute-force permutation canonization cap.
inline constexpr std::size_t kMaxCanonPoints = 7;
// Exhaustive enumeration caps (beyond them, seeded sampling).
inline constexpr std::size_t kMaxExhaustivePreorder = 5;
inline constexpr int kMaxExhaustiveAlgebra = 5;

// All labeled preorders on n points, by off-diagonal matrix filtering.
void for_each_preorder(std::size_t n, const std::function<void(const Preorder&)>& fn);

// All equivalences on n points (set partitions via restricted growth strings).
void for_each_equivalence(std::size_t n, const std::function<void(const Preorder&)>& fn);

// Random pair set of seeded size, then reflexive-transitive closure.
Preorder random_preorder(std::size_t n, Rng& rng);

// Minimal relation encoding over all relabelings (n ≤ kMaxCanonPoints).
std::vector<std::uint8_t> canonical_preorder_code(const Preorder& p);

// Every involutive point permutation antitone for p.
std::vector<PointInvolution> antitone_involutions(const Preorder& p);

// --- algebra corpus -------------------------------------------------------

FiniteAlgebra chain_algebra(int k);
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Adds impl/minus tables computed by the residuals; throws when a residual
// is missing (non-Heyting or non-Brouwer input).
FiniteAlgebra with_heyting_tables(const FiniteAlgebra& a);

// Order-reversing negation of a k-chain.
std::vector<int> chain_reversal_negation(int k);

// Canonical (up to isomorphism) bounded distributive lattices on n elements.
void for_each_distributive_lattice(int n, const std::function<void(const FiniteAlgebra&)>& fn);

// All De Morgan involutions of a lattice: involutive order-reversing maps.
std::vector<std::vector<int>> demorgan_involutions(const FiniteAlgebra& a);

// Joint canonical code of (order, neg); dedupes negations conjugate under
// lattice automorphisms.
std::vector<std::uint8_t> canonical_lattice_neg_code(const FiniteAlgebra& a, const std::vector<int>& neg);

// Kleene symmetrical Heyting algebras with carrier ≤ max_n, one per
// isomorphism class, carrying neg plus derived impl/minus tables.
std::vector<FiniteAlgebra> kleene_sym_heyting_upto(int max_n);

// The members of the above whose derived weak implication satisfies the
// exchange law; wimpl is attached as a table.
std::vector<FiniteAlgebra> nelson_algebras_upto(int max_n);

}  // namespace rauszer

#endif
