#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rauszer/bits.hpp"
#include "rauszer/enumerate.hpp"

using namespace rauszer;

TEST_CASE("construction and membership") {
  Bits b(5);
  CHECK(b.empty());
  CHECK(b.universe() == 5);
  b.set(0).set(3);
  CHECK(b.test(0));
  CHECK(!b.test(1));
  CHECK(b.count() == 2);
  CHECK(b.to_string() == "{0,3}");
  CHECK(Bits::all(3).count() == 3);
  CHECK(Bits::of(4, {1, 2}).members() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("out-of-range access is an input error") {
  Bits b(3);
  CHECK_THROWS_AS(b.set(3), InputError);
  CHECK_THROWS_AS((void)b.test(17), InputError);
  CHECK_THROWS_AS((void)(b & Bits(4)), InputError);
}

TEST_CASE("universe capacity") {
  CHECK_THROWS_AS(Bits(kMaxUniverse + 1), CapacityError);
  CHECK(Bits(kMaxUniverse).universe() == kMaxUniverse);
}

TEST_CASE("boolean operations against word arithmetic") {
  // single-word oracle: plain uint64 masks
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(64);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t ma = rng.next() & full, mb = rng.next() & full;
    Bits a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((ma >> i) & 1) a.set(i);
      if ((mb >> i) & 1) b.set(i);
    }
    auto as_mask = [&](const Bits& x) {
      std::uint64_t m = 0;
      x.for_each([&](std::size_t i) { m |= std::uint64_t{1} << i; });
      return m;
    };
    CHECK(as_mask(a & b) == (ma & mb));
    CHECK(as_mask(a | b) == (ma | mb));
    CHECK(as_mask(a - b) == (ma & ~mb));
    CHECK(as_mask(a.complement()) == (full & ~ma));
    CHECK(a.subset_of(b) == ((ma & ~mb) == 0));
    CHECK(a.intersects(b) == ((ma & mb) != 0));
  }
}

TEST_CASE("multi-word universes") {
  Bits a(130);
  a.set(0).set(64).set(129);
  CHECK(a.count() == 3);
  CHECK(a.complement().count() == 127);
  CHECK(a.subset_of(Bits::all(130)));
  Bits b = a;
  b.set(100);
  CHECK(a.subset_of(b));
  CHECK(!b.subset_of(a));
  CHECK((a & b) == a);
}

TEST_CASE("ordering is numeric mask order") {
  // {1} = 2 sorts after {0} = 1, and {0,1} = 3 after both
  CHECK(Bits::of(3, {0}) < Bits::of(3, {1}));
  CHECK(Bits::of(3, {1}) < Bits::of(3, {0, 1}));
  CHECK(Bits::of(3, {2}) > Bits::of(3, {0, 1}));
  // high words dominate
  Bits lo(70), hi(70);
  lo.set(0);
  hi.set(69);
  CHECK(lo < hi);
}
