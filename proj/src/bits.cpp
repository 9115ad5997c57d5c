#include "rauszer/bits.hpp"

#include <bit>

namespace rauszer {

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Bits::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Bits::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  });
  s += '}';
  return s;
}

}  // namespace rauszer
