#ifndef RAUSZER_OPENS_HPP
#define RAUSZER_OPENS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rauszer/bits.hpp"
#include "rauszer/preorder.hpp"

namespace rauszer {

// Closure operator induced by a preorder: union of the up-sets of the
// members of X. Satisfies C1-C4.
Bits closure(const Preorder& r, const Bits& x);

// Interior operator: union of the up-sets contained in X. Satisfies I1-I4.
Bits interior(const Preorder& r, const Bits& x);

bool is_open(const Preorder& r, const Bits& x);

// Default point cap for opens enumeration; overridable per call and via
// RAUSZER_MAX_N at the CLI layer.
inline constexpr std::size_t kDefaultOpensCap = 20;
// Guard on the number of generated opens (an identity preorder has 2^n).
inline constexpr std::size_t kMaxOpens = std::size_t{1} << 20;

// The lattice of open (= closed) sets, canonically sorted by ascending
// mask value. Built as the union-closure of the up-set family plus ∅.
class OpensLattice {
 public:
  static OpensLattice enumerate(const Preorder& r, std::size_t point_cap = kDefaultOpensCap);

  const Preorder& base() const { return base_; }
  const std::vector<Bits>& members() const { return opens_; }
  std::size_t size() const { return opens_.size(); }
  const Bits& at(std::size_t i) const { return opens_[i]; }
  std::optional<std::size_t> index_of(const Bits& g) const;  // binary search
  bool contains(const Bits& g) const { return index_of(g).has_value(); }

 private:
  OpensLattice(Preorder base, std::vector<Bits> opens)
      : base_(std::move(base)), opens_(std::move(opens)) {}
  Preorder base_;
  std::vector<Bits> opens_;
};

// A point permutation with perm[perm[x]] = x. Antitonicity is relative
// to a preorder and checked where an operation requires it.
class PointInvolution {
 public:
  explicit PointInvolution(std::vector<std::size_t> perm);
  static PointInvolution identity(std::size_t n);

  std::size_t size() const { return perm_.size(); }
  std::size_t operator()(std::size_t x) const {
    if (x >= perm_.size()) throw InputError("involution index out of range");
    return perm_[x];
  }
  const std::vector<std::size_t>& perm() const { return perm_; }

  Bits image(const Bits& x) const;

  // x R y implies perm(y) R perm(x).
  bool antitone_for(const Preorder& r) const;
  // Pointwise Kleene condition: x R perm(x) or perm(x) R x for every x.
  bool kleene_for(const Preorder& r) const;

  bool operator==(const PointInvolution&) const = default;

 private:
  std::vector<std::size_t> perm_;
};

// Heyting implication on opens: interior(-G ∪ H). Arguments must be open;
// a non-open argument is a reported precondition violation, not coerced.
Bits heyting_implies(const Preorder& r, const Bits& g, const Bits& h);
Bits heyting_not(const Preorder& r, const Bits& g);  // G ⇒ ∅

// Brouwer pseudo-difference on opens: closure(G ∩ -H).
Bits brouwer_minus(const Preorder& r, const Bits& g, const Bits& h);
Bits brouwer_not(const Preorder& r, const Bits& g);  // Ob -· G

// De Morgan complement determined by a point involution: -(image of X).
Bits demorgan_complement(const PointInvolution& v, const Bits& x);

// Weak implication G ⇒ (∼G ∪ H); requires an antitone involution.
Bits weak_implies(const Preorder& r, const PointInvolution& v, const Bits& g, const Bits& h);
Bits weak_not(const Preorder& r, const PointInvolution& v, const Bits& g);  // G →w ∅

// Moisil's exception ∼(∼H ⇒ ∼G); coincides with brouwer_minus on the
// opens of any antitone involution.
Bits exception(const Preorder& r, const PointInvolution& v, const Bits& g, const Bits& h);

}  // namespace rauszer

#endif
