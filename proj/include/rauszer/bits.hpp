#ifndef RAUSZER_BITS_HPP
#define RAUSZER_BITS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rauszer/errors.hpp"

namespace rauszer {

// Hard cap on universe size. Desk-scale work fits in one 64-bit word;
// the multi-word representation below keeps larger universes working
// without a special case at call sites.
inline constexpr std::size_t kMaxUniverse = 1024;

// A subset of a tagged universe {0,...,n-1}, stored as a bitmask.
// Value semantics throughout; all operations are pure.
class Bits {
 public:
  Bits() = default;

  explicit Bits(std::size_t universe) : n_(universe), w_(word_count(universe), 0) {
    if (universe > kMaxUniverse) throw CapacityError("universe size exceeds capacity");
  }

  static Bits none(std::size_t universe) { return Bits(universe); }

  static Bits all(std::size_t universe) {
    Bits b(universe);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bits single(std::size_t universe, std::size_t i) {
    Bits b(universe);
    b.set(i);
    return b;
  }

  static Bits of(std::size_t universe, std::initializer_list<std::size_t> xs) {
    Bits b(universe);
    for (auto x : xs) b.set(x);
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  Bits& set(std::size_t i, bool v = true) {
    check_index(i);
    if (v)
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  std::size_t count() const;

  bool subset_of(const Bits& o) const {
    check_same(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    check_same(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  Bits operator&(const Bits& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
  Bits operator|(const Bits& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
  Bits operator-(const Bits& o) const { return zip(o, [](auto a, auto b) { return a & ~b; }); }

  Bits& operator&=(const Bits& o) { return *this = *this & o; }
  Bits& operator|=(const Bits& o) { return *this = *this | o; }

  Bits complement() const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Numeric order of the mask value; the canonical ordering used for all
  // sorted listings (opens, filter sets, spectrum points).
  std::strong_ordering operator<=>(const Bits& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t k = w_.size(); k-- > 0;)
      if (auto c = w_[k] <=> o.w_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::vector<std::size_t> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        std::size_t i = (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
        fn(i);
        w &= w - 1;
      }
    }
  }

  // "{0,2,5}"
  std::string to_string() const;

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h = h * 1099511628211ull ^ w;
    return h;
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) >> 6; }

  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    if (n_ == 0 && !w_.empty()) w_.clear();
  }

  void check_index(std::size_t i) const {
    if (i >= n_) throw InputError("point index " + std::to_string(i) + " out of range for universe of size " + std::to_string(n_));
  }

  void check_same(const Bits& o) const {
    if (n_ != o.n_) throw InputError("universe mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  template <typename Op>
  Bits zip(const Bits& o, Op op) const {
    check_same(o);
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = op(w_[k], o.w_[k]);
    r.trim();
    return r;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace rauszer

#endif
