#ifndef RAUSZER_PREORDER_HPP
#define RAUSZER_PREORDER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rauszer/bits.hpp"

namespace rauszer {

enum class BuildMode { validate, close };

// A reflexive-transitive relation on points 0..n-1, stored as per-point
// up-set masks: up(x) = {y : x R y}. Immutable after construction.
class Preorder {
 public:
  // mode=validate rejects input that is not already reflexive-transitive
  // (NotPreorderError with a witness pair); mode=close takes the
  // reflexive-transitive closure. Closure is never silent: callers pick.
  static Preorder build(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                        BuildMode mode);

  // Adopts up-set masks directly; validates the preorder invariants.
  static Preorder from_up_sets(std::vector<Bits> up);

  static Preorder identity(std::size_t n);
  static Preorder total(std::size_t n);

  std::size_t size() const { return up_.size(); }

  const Bits& up(std::size_t x) const {
    if (x >= up_.size()) throw InputError("point index out of range");
    return up_[x];
  }

  bool related(std::size_t x, std::size_t y) const { return up(x).test(y); }

  Preorder converse() const;
  Preorder kernel_equivalence() const;  // R ∩ converse(R)

  bool is_symmetric() const;
  bool is_equivalence() const { return is_symmetric(); }
  bool is_antisymmetric() const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Preorder&) const = default;

 private:
  explicit Preorder(std::vector<Bits> up) : up_(std::move(up)) {}
  std::vector<Bits> up_;
};

}  // namespace rauszer

#endif
