#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rauszer/enumerate.hpp"
#include "rauszer/preorder.hpp"

using namespace rauszer;

namespace {

Preorder chain2() { return Preorder::build(2, {{0, 1}}, BuildMode::close); }

}  // namespace

TEST_CASE("closure of the empty pair set is the identity preorder") {
  Preorder p = Preorder::build(2, {}, BuildMode::close);
  CHECK(p.up(0) == Bits::of(2, {0}));
  CHECK(p.up(1) == Bits::of(2, {1}));
  CHECK(p == Preorder::identity(2));
}

TEST_CASE("closure of a chain pair") {
  Preorder p = chain2();
  CHECK(p.up(0) == Bits::of(2, {0, 1}));
  CHECK(p.up(1) == Bits::of(2, {1}));
}

TEST_CASE("validate mode rejects a non-transitive relation with a witness") {
  try {
    Preorder::build(3, {{0, 1}, {1, 2}}, BuildMode::validate);
    FAIL("expected NotPreorderError");
  } catch (const NotPreorderError& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 2);
  }
  // the same pairs close fine
  Preorder p = Preorder::build(3, {{0, 1}, {1, 2}}, BuildMode::close);
  CHECK(p.related(0, 2));
}

TEST_CASE("out-of-range pairs are input errors") {
  CHECK_THROWS_AS(Preorder::build(2, {{0, 2}}, BuildMode::close), InputError);
  CHECK_THROWS_AS(Preorder::build(2, {{5, 0}}, BuildMode::validate), InputError);
}

TEST_CASE("up sets always contain their point") {
  Preorder p = chain2();
  CHECK(p.up(0).test(0));
  CHECK(p.up(1).test(1));
  CHECK(Preorder::identity(2).up(0) == Bits::of(2, {0}));
  CHECK_THROWS_AS((void)p.up(2), InputError);
}

TEST_CASE("converse transposes the relation") {
  Preorder s = chain2().converse();
  CHECK(s.up(0) == Bits::of(2, {0}));
  CHECK(s.up(1) == Bits::of(2, {0, 1}));
  CHECK(Preorder::identity(3).converse() == Preorder::identity(3));
  CHECK(Preorder::total(2).converse() == Preorder::total(2));
}

TEST_CASE("converse is an involution") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Preorder p = random_preorder(1 + rng.below(8), rng);
    CHECK(p.converse().converse() == p);
  }
}

TEST_CASE("kernel equivalence") {
  CHECK(chain2().kernel_equivalence() == Preorder::identity(2));
  CHECK(Preorder::total(3).kernel_equivalence() == Preorder::total(3));
  CHECK(Preorder::identity(4).kernel_equivalence() == Preorder::identity(4));
}

TEST_CASE("kernel is the largest equivalence inside the preorder") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      Preorder k = p.kernel_equivalence();
      REQUIRE(k.is_equivalence());
      for (std::size_t x = 0; x < n; ++x) REQUIRE(k.up(x).subset_of(p.up(x)));
      // every equivalence contained in p sits inside the kernel
      for_each_equivalence(n, [&](const Preorder& e) {
        bool inside = true;
        for (std::size_t x = 0; x < n; ++x)
          if (!e.up(x).subset_of(p.up(x))) inside = false;
        if (inside)
          for (std::size_t x = 0; x < n; ++x) REQUIRE(e.up(x).subset_of(k.up(x)));
      });
    });
  }
}

TEST_CASE("membership matches up-set inclusion") {
  // x R z iff z in R(x) iff R(z) subseteq R(x)
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          REQUIRE(p.related(x, y) == p.up(y).subset_of(p.up(x)));
    });
  }
}

TEST_CASE("from_up_sets validates invariants") {
  std::vector<Bits> bad{Bits(2), Bits::of(2, {1})};  // first row misses reflexivity
  CHECK_THROWS_AS(Preorder::from_up_sets(bad), NotPreorderError);
  std::vector<Bits> nontrans{Bits::of(3, {0, 1}), Bits::of(3, {1, 2}), Bits::of(3, {2})};
  CHECK_THROWS_AS(Preorder::from_up_sets(nontrans), NotPreorderError);
}

TEST_CASE("pair round trip") {
  Preorder p = Preorder::build(3, {{0, 1}, {1, 2}}, BuildMode::close);
  Preorder q = Preorder::build(3, p.pairs(), BuildMode::validate);
  CHECK(p == q);
}
