#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "rauszer/enumerate.hpp"
#include "rauszer/opens.hpp"

using namespace rauszer;

namespace {

Preorder chain2() { return Preorder::build(2, {{0, 1}}, BuildMode::close); }

// Point-quantifier oracles evaluated straight off the relation, kept
// independent of the up-set union implementation they check.
Bits closure_oracle(const Preorder& r, const Bits& x) {
  Bits out(r.size());
  for (std::size_t y = 0; y < r.size(); ++y) {
    bool in = false;
    x.for_each([&](std::size_t p) {
      if (r.related(p, y)) in = true;
    });
    if (in) out.set(y);
  }
  return out;
}

Bits interior_oracle(const Preorder& r, const Bits& x) {
  Bits out(r.size());
  for (std::size_t y = 0; y < r.size(); ++y) {
    bool in = false;
    for (std::size_t p = 0; p < r.size() && !in; ++p) {
      if (!r.related(p, y)) continue;
      bool inside = true;
      for (std::size_t z = 0; z < r.size(); ++z)
        if (r.related(p, z) && !x.test(z)) inside = false;
      if (inside) in = true;
    }
    if (in) out.set(y);
  }
  return out;
}

Bits bits_from_mask(std::size_t n, std::uint64_t m) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1) b.set(i);
  return b;
}

template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) fn(bits_from_mask(n, m));
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(chain2(), Bits(2)).empty());
  CHECK(closure(chain2(), Bits::of(2, {0})) == Bits::of(2, {0, 1}));
  for_each_subset(3, [&](const Bits& x) { CHECK(closure(Preorder::identity(3), x) == x); });
  CHECK_THROWS_AS(closure(chain2(), Bits(3)), InputError);
}

TEST_CASE("interior examples") {
  CHECK(interior(chain2(), Bits::all(2)) == Bits::all(2));
  CHECK(interior(chain2(), Bits::of(2, {0})).empty());
  for_each_subset(3, [&](const Bits& x) { CHECK(interior(Preorder::identity(3), x) == x); });
}

TEST_CASE("operators agree with the point-quantifier oracles") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Preorder p = random_preorder(1 + rng.below(7), rng);
    for (int k = 0; k < 32; ++k) {
      Bits x = bits_from_mask(p.size(), rng.next());
      CHECK(closure(p, x) == closure_oracle(p, x));
      CHECK(interior(p, x) == interior_oracle(p, x));
    }
  }
}

TEST_CASE("closure and interior axioms on random preorders") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Preorder p = random_preorder(1 + rng.below(6), rng);
    const std::size_t n = p.size();
    CHECK(closure(p, Bits(n)).empty());                 // C1
    CHECK(interior(p, Bits::all(n)) == Bits::all(n));   // I1
    for_each_subset(n, [&](const Bits& x) {
      CHECK(x.subset_of(closure(p, x)));                          // C2
      CHECK(interior(p, x).subset_of(x));                         // I2
      CHECK(closure(p, closure(p, x)) == closure(p, x));          // C4
      CHECK(interior(p, interior(p, x)) == interior(p, x));       // I4
      CHECK(interior(p, closure(p, x)) == closure(p, x));         // conjugacy
      CHECK(closure(p, interior(p, x)) == interior(p, x));
    });
    for_each_subset(n, [&](const Bits& x) {
      for_each_subset(n, [&](const Bits& y) {
        CHECK(closure(p, x | y) == (closure(p, x) | closure(p, y)));     // C3
        CHECK(interior(p, x & y) == (interior(p, x) & interior(p, y)));  // I3
      });
    });
  }
}

TEST_CASE("duality through the converse") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Preorder p = random_preorder(1 + rng.below(7), rng);
    Preorder s = p.converse();
    for (int k = 0; k < 32; ++k) {
      Bits x = bits_from_mask(p.size(), rng.next());
      CHECK(closure(p, x) == interior(s, x.complement()).complement());
      CHECK(closure(s, x) == interior(p, x.complement()).complement());
    }
  }
}

TEST_CASE("opens enumeration examples") {
  OpensLattice id2 = OpensLattice::enumerate(Preorder::identity(2));
  CHECK(id2.size() == 4);
  OpensLattice ch = OpensLattice::enumerate(chain2());
  REQUIRE(ch.size() == 3);
  CHECK(ch.at(0) == Bits(2));
  CHECK(ch.at(1) == Bits::of(2, {1}));
  CHECK(ch.at(2) == Bits::of(2, {0, 1}));
  CHECK(OpensLattice::enumerate(Preorder::total(2)).size() == 2);
  CHECK_THROWS_AS(OpensLattice::enumerate(Preorder::identity(3), 2), CapacityError);
}

TEST_CASE("opens are exactly the interior fixpoints, which are the closure fixpoints") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      OpensLattice lat = OpensLattice::enumerate(p);
      std::vector<Bits> fix;
      for_each_subset(n, [&](const Bits& x) {
        bool open = interior(p, x) == x;
        REQUIRE(open == (closure(p, x) == x));
        if (open) fix.push_back(x);
      });
      std::sort(fix.begin(), fix.end());
      REQUIRE(lat.members() == fix);
      // closed under binary unions and intersections
      for (const Bits& g : lat.members())
        for (const Bits& h : lat.members()) {
          REQUIRE(lat.contains(g | h));
          REQUIRE(lat.contains(g & h));
        }
      REQUIRE(lat.contains(Bits(n)));
      REQUIRE(lat.contains(Bits::all(n)));
    });
  }
}

TEST_CASE("heyting implication examples and errors") {
  Preorder p = chain2();
  const Bits full = Bits::all(2), h1 = Bits::of(2, {1});
  CHECK(heyting_implies(p, Bits(2), h1) == full);
  CHECK(heyting_implies(p, full, h1) == h1);
  CHECK(heyting_implies(p, h1, h1) == full);
  CHECK(heyting_not(p, full) == Bits(2));
  CHECK_THROWS_AS(heyting_implies(p, Bits::of(2, {0}), h1), PreconditionError);  // {0} is not open
}

TEST_CASE("brouwer difference examples") {
  Preorder p = chain2();
  const Bits full = Bits::all(2), h1 = Bits::of(2, {1});
  CHECK(brouwer_minus(p, h1, full) == Bits(2));       // G ⊆ H
  CHECK(brouwer_minus(p, full, h1) == full);          // closure of {0}
  CHECK(brouwer_minus(p, h1, Bits(2)) == h1);         // H = ∅
  CHECK(brouwer_not(p, full) == Bits(2));
  CHECK_THROWS_AS(brouwer_minus(p, Bits::of(2, {0}), h1), PreconditionError);
}

TEST_CASE("residuation on all small preorders") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      OpensLattice lat = OpensLattice::enumerate(p);
      for (const Bits& g : lat.members())
        for (const Bits& h : lat.members()) {
          Bits r = heyting_implies(p, g, h);
          Bits d = brouwer_minus(p, g, h);
          REQUIRE(is_open(p, r));
          REQUIRE(is_open(p, d));
          REQUIRE((g & r).subset_of(h));          // H1
          REQUIRE(g.subset_of(h | d));            // B1
          for (const Bits& x : lat.members()) {
            REQUIRE(((g & x).subset_of(h)) == x.subset_of(r));  // H2 both ways
            REQUIRE(g.subset_of(h | x) == d.subset_of(x));      // B2 both ways
          }
        }
    });
  }
}

TEST_CASE("point involutions") {
  CHECK_THROWS_AS(PointInvolution({1, 2, 0}), InputError);  // 3-cycle, not involutive
  CHECK_THROWS_AS(PointInvolution({2, 1}), InputError);     // out of range
  PointInvolution swap({1, 0});
  CHECK(swap.antitone_for(chain2()));
  CHECK(!PointInvolution::identity(2).antitone_for(chain2()));
  CHECK(PointInvolution::identity(2).antitone_for(Preorder::identity(2)));
  CHECK(swap.kleene_for(chain2()));
}

TEST_CASE("de morgan complement examples") {
  PointInvolution id2 = PointInvolution::identity(2);
  CHECK(demorgan_complement(id2, Bits::of(2, {0})) == Bits::of(2, {1}));
  PointInvolution swap({1, 0});
  CHECK(demorgan_complement(swap, Bits::of(2, {1})) == Bits::of(2, {1}));
  CHECK(demorgan_complement(swap, Bits(2)) == Bits::all(2));
  // involutive, De Morgan over meet/join, antitone image behavior
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 1 + rng.below(6);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = 0; i + 1 < n; i += 2) std::swap(perm[i], perm[i + 1]);
    PointInvolution v(perm);
    Bits x = bits_from_mask(n, rng.next()), y = bits_from_mask(n, rng.next());
    CHECK(demorgan_complement(v, demorgan_complement(v, x)) == x);
    CHECK(demorgan_complement(v, x & y) == (demorgan_complement(v, x) | demorgan_complement(v, y)));
  }
}

TEST_CASE("antitone involutions carry opens to opens") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      OpensLattice lat = OpensLattice::enumerate(p);
      for (const PointInvolution& v : antitone_involutions(p))
        for (const Bits& g : lat.members()) REQUIRE(is_open(p, demorgan_complement(v, g)));
    });
  }
}

TEST_CASE("weak implication") {
  Preorder p = chain2();
  PointInvolution swap({1, 0});
  const Bits full = Bits::all(2);
  CHECK(weak_implies(p, swap, full, full) == full);                   // M1 instance
  CHECK(weak_implies(p, swap, Bits(2), Bits::of(2, {1})) == full);    // vacuous antecedent
  // full →w ∅ is forced to ∅ by M2: full ∩ (full →w ∅) = full ∩ (∼full ∪ ∅) = ∅
  CHECK(weak_implies(p, swap, full, Bits(2)) == Bits(2));
  CHECK(weak_not(p, swap, full) == Bits(2));
  CHECK_THROWS_AS(weak_implies(p, PointInvolution::identity(2), full, full), PreconditionError);
}

TEST_CASE("weak implication laws across involutions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      OpensLattice lat = OpensLattice::enumerate(p);
      const Bits full = Bits::all(n);
      for (const PointInvolution& v : antitone_involutions(p)) {
        const bool kleene = v.kleene_for(p);
        for (const Bits& g : lat.members()) {
          REQUIRE(weak_implies(p, v, g, g) == full);  // M1
          for (const Bits& h : lat.members()) {
            Bits ng = demorgan_complement(v, g);
            REQUIRE((g & weak_implies(p, v, g, h)) == (g & (ng | h)));  // M2
            if (kleene) REQUIRE((g & ng).subset_of(h | demorgan_complement(v, h)));  // M0
            for (const Bits& k : lat.members())
              REQUIRE(weak_implies(p, v, g, weak_implies(p, v, h, k))
                          .subset_of(weak_implies(p, v, g & h, k)));  // M3
          }
        }
      }
    });
  }
}

TEST_CASE("the weak implication is the unit exactly on the absorbed antecedents") {
  // G →w H = Ob iff G = G ∩ (∼G ∪ H)
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      OpensLattice lat = OpensLattice::enumerate(p);
      const Bits full = Bits::all(n);
      for (const PointInvolution& v : antitone_involutions(p))
        for (const Bits& g : lat.members())
          for (const Bits& h : lat.members()) {
            const bool unit = weak_implies(p, v, g, h) == full;
            REQUIRE(unit == (g == (g & (demorgan_complement(v, g) | h))));
          }
    });
  }
}

TEST_CASE("exception operation") {
  Preorder p = chain2();
  PointInvolution swap({1, 0});
  const Bits full = Bits::all(2), h1 = Bits::of(2, {1});
  CHECK(exception(p, swap, h1, full) == Bits(2));  // G ⊆ H
  CHECK(exception(p, swap, full, h1) == full);
  CHECK(exception(p, swap, h1, h1) == Bits(2));
}

TEST_CASE("exception equals the brouwer difference on opens") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_preorder(n, [&](const Preorder& p) {
      OpensLattice lat = OpensLattice::enumerate(p);
      for (const PointInvolution& v : antitone_involutions(p))
        for (const Bits& g : lat.members())
          for (const Bits& h : lat.members())
            REQUIRE(exception(p, v, g, h) == brouwer_minus(p, g, h));
    });
  }
}

TEST_CASE("operators work past the single-word boundary") {
  // a 100-point chain: 0 R 1 R ... R 99
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < 100; ++i) pairs.emplace_back(i, i + 1);
  Preorder p = Preorder::build(100, pairs, BuildMode::close);
  CHECK(p.up(0) == Bits::all(100));
  CHECK(p.up(99) == Bits::of(100, {99}));
  CHECK(closure(p, Bits::of(100, {70})) == p.up(70));
  Bits tail(100);
  for (std::size_t i = 30; i < 100; ++i) tail.set(i);
  CHECK(interior(p, tail) == tail);
  CHECK(interior(p, tail.complement()).empty());
  CHECK(p.kernel_equivalence() == Preorder::identity(100));
  CHECK(p.converse().converse() == p);
}

TEST_CASE("equivalences: quantifier laws and interior duality") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_equivalence(n, [&](const Preorder& p) {
      REQUIRE(closure(p, Bits(n)).empty());
      for_each_subset(n, [&](const Bits& x) {
        REQUIRE(x.subset_of(closure(p, x)));
        REQUIRE(interior(p, x) == closure(p, x.complement()).complement());
        for_each_subset(n, [&](const Bits& y) {
          REQUIRE(closure(p, x & closure(p, y)) == (closure(p, x) & closure(p, y)));
        });
      });
    });
  }
}
