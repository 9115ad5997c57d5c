#include "rauszer/preorder.hpp"

#include <string>

namespace rauszer {

namespace {

// Witness with the first (lexicographic) pair forced by transitivity but
// missing from the input.
void check_closed(const std::vector<Bits>& up) {
  const std::size_t n = up.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!up[x].test(x))
      throw NotPreorderError("not reflexive: missing pair (" + std::to_string(x) + "," + std::to_string(x) + ")", x, x);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!up[x].test(y)) continue;
      if (!up[y].subset_of(up[x])) {
        for (std::size_t z = 0; z < n; ++z) {
          if (up[y].test(z) && !up[x].test(z))
            throw NotPreorderError("not transitive: (" + std::to_string(x) + "," + std::to_string(y) + ") and (" +
                                       std::to_string(y) + "," + std::to_string(z) + ") force missing (" +
                                       std::to_string(x) + "," + std::to_string(z) + ")",
                                   x, z);
        }
      }
    }
  }
}

void close_transitively(std::vector<Bits>& up) {
  const std::size_t n = up.size();
  // Warshall on up-masks.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];
}

}  // namespace

Preorder Preorder::build(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         BuildMode mode) {
  if (n > kMaxUniverse) throw CapacityError("preorder size exceeds capacity");
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw InputError("pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range for n=" + std::to_string(n));
    up[x].set(y);
  }
  if (mode == BuildMode::close) {
    close_transitively(up);
  } else {
    check_closed(up);
  }
  return Preorder(std::move(up));
}

Preorder Preorder::from_up_sets(std::vector<Bits> up) {
  for (const auto& b : up)
    if (b.universe() != up.size()) throw InputError("up-set universe does not match point count");
  check_closed(up);
  return Preorder(std::move(up));
}

Preorder Preorder::identity(std::size_t n) {
  std::vector<Bits> up;
  up.reserve(n);
  for (std::size_t x = 0; x < n; ++x) up.push_back(Bits::single(n, x));
  return Preorder(std::move(up));
}

Preorder Preorder::total(std::size_t n) {
  return Preorder(std::vector<Bits>(n, Bits::all(n)));
}

Preorder Preorder::converse() const {
  const std::size_t n = size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (up_[y].test(x)) up[x].set(y);
  return Preorder(std::move(up));
}

Preorder Preorder::kernel_equivalence() const {
  Preorder s = converse();
  std::vector<Bits> up;
  up.reserve(size());
  for (std::size_t x = 0; x < size(); ++x) up.push_back(up_[x] & s.up_[x]);
  return Preorder(std::move(up));
}

bool Preorder::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (up_[x].test(y) != up_[y].test(x)) return false;
  return true;
}

bool Preorder::is_antisymmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (up_[x].test(y) && up_[y].test(x)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Preorder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    up_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

}  // namespace rauszer
