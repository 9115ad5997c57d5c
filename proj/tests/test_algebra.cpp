#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rauszer/algebra.hpp"
#include "rauszer/enumerate.hpp"

using namespace rauszer;

namespace {

FiniteAlgebra bool2() {
  return FiniteAlgebra::make(2, {0, 0, 0, 1}, {0, 1, 1, 1}, 0, 1,
                             {{"neg", {1, 0}}, {"impl", {1, 1, 0, 1}}, {"dimpl", {1, 1, 0, 1}}});
}

FiniteAlgebra chain3_demorgan() { return chain_algebra(3).with_table("neg", {2, 1, 0}); }

FiniteAlgebra nelson3() {
  return with_heyting_tables(chain3_demorgan()).with_table("wimpl", {2, 2, 2, 2, 2, 2, 0, 1, 2});
}

// 2x2 lattice: 0 < {1,2} < 3
FiniteAlgebra diamond() { return product_algebra(chain_algebra(2), chain_algebra(2)); }

// modular non-distributive lattice with three atoms
FiniteAlgebra m3() {
  return FiniteAlgebra::make(5,
                             {0, 0, 0, 0, 0,
                              0, 1, 0, 0, 1,
                              0, 0, 2, 0, 2,
                              0, 0, 0, 3, 3,
                              0, 1, 2, 3, 4},
                             {0, 1, 2, 3, 4,
                              1, 1, 4, 4, 4,
                              2, 4, 2, 4, 4,
                              3, 4, 4, 3, 4,
                              4, 4, 4, 4, 4},
                             0, 4);
}

}  // namespace

TEST_CASE("construction and derived order") {
  FiniteAlgebra a = chain_algebra(3);
  CHECK(a.leq(0, 2));
  CHECK(!a.leq(2, 1));
  CHECK(a.bot() == 0);
  CHECK(a.top() == 2);
  CHECK(a.meet(1, 2) == 1);
  CHECK(a.join(1, 2) == 2);
}

TEST_CASE("lattice law violations carry the law name and witness") {
  try {
    FiniteAlgebra::make(2, {0, 0, 0, 0}, {0, 1, 1, 1}, 0, 1);
    FAIL("expected LatticeLawError");
  } catch (const LatticeLawError& e) {
    CHECK(e.law == "idempotence-meet");
    CHECK(e.tuple == std::vector<int>{1});
  }
  try {
    FiniteAlgebra::make(2, {0, 0, 0, 1}, {0, 1, 1, 1}, 1, 1);
    FAIL("expected LatticeLawError");
  } catch (const LatticeLawError& e) {
    CHECK(e.law == "bot-least");
  }
  CHECK_THROWS_AS(FiniteAlgebra::make(2, {0, 0, 0, 5}, {0, 1, 1, 1}, 0, 1), InputError);  // range
  CHECK_THROWS_AS(FiniteAlgebra::make(2, {0, 0, 0, 1}, {0, 1, 1, 1}, 0, 1, {{"mystery", {0, 1}}}),
                  InputError);  // unknown table
}

TEST_CASE("explicit negation tables must agree with the derived formulas") {
  FiniteAlgebra hb3 = with_heyting_tables(chain_algebra(3));
  // derived ⌐ on the 3-chain is [2,0,0]
  CHECK(hb3.hneg(0) == 2);
  CHECK(hb3.hneg(1) == 0);
  CHECK(hb3.with_table("hneg", {2, 0, 0}).hneg(1) == 0);
  CHECK_THROWS_AS(hb3.with_table("hneg", {2, 2, 0}), InputError);
  // derived ⌞ on the 3-chain is [2,2,0]
  CHECK(hb3.bneg(0) == 2);
  CHECK(hb3.bneg(1) == 2);
  CHECK(hb3.bneg(2) == 0);
  CHECK_THROWS_AS(hb3.with_table("bneg", {0, 0, 0}), InputError);
}

TEST_CASE("class checks on the 3-chain with the symmetric negation") {
  FiniteAlgebra a = chain3_demorgan();
  CHECK(check_class(a, "distributive").holds);
  CHECK(check_class(a, "demorgan").holds);
  CHECK(check_class(a, "kleene").holds);
}

TEST_CASE("diamond with atom-fixing negation is de morgan but not kleene") {
  FiniteAlgebra a = diamond().with_table("neg", {3, 1, 2, 0});
  CHECK(check_class(a, "demorgan").holds);
  ClassReport rep = check_class(a, "kleene");
  REQUIRE(!rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->axiom == "K");
  CHECK(rep.witness->tuple == std::vector<int>{1, 2});
  CHECK(!eval_axiom(a, rep.witness->axiom, rep.witness->tuple));
}

TEST_CASE("three-valued check via the hb laws and condition T") {
  FiniteAlgebra a = with_heyting_tables(chain_algebra(3));
  CHECK(check_class(a, "heyting").holds);
  CHECK(check_class(a, "brouwer").holds);
  CHECK(check_class(a, "hb").holds);
  CHECK(check_class(a, "lukasiewicz3").holds);
  // ⌐⌞a = a in a boolean algebra, so T reduces to (a⇒b) ∨ (b⇒a) = 1,
  // which classical implication satisfies
  FiniteAlgebra d = with_heyting_tables(diamond());
  CHECK(check_class(d, "hb").holds);
  CHECK(check_class(d, "lukasiewicz3").holds);
  // the 4-chain is hb but not three-valued: at (2,1) both joinands drop
  FiniteAlgebra c4 = with_heyting_tables(chain_algebra(4));
  CHECK(check_class(c4, "hb").holds);
  ClassReport t4 = check_class(c4, "lukasiewicz3");
  REQUIRE(!t4.holds);
  CHECK(t4.witness->axiom == "T");
  CHECK(t4.witness->tuple == std::vector<int>{2, 1});
}

TEST_CASE("nelson class") {
  CHECK(check_class(nelson3(), "nelson").holds);
  CHECK(check_class(nelson3(), "symmetric-heyting").holds);
  CHECK_THROWS_AS(check_class(chain3_demorgan(), "nelson"), MissingTableError);
  CHECK_THROWS_AS(check_class(chain_algebra(3), "kleene"), MissingTableError);
  CHECK_THROWS_AS(check_class(chain_algebra(3), "no-such-class"), InputError);
  // breaking N2: point the weak implication at the wrong constant
  FiniteAlgebra bad = with_heyting_tables(chain3_demorgan()).with_table("wimpl", {2, 2, 2, 2, 2, 2, 2, 1, 2});
  ClassReport rep = check_class(bad, "nelson");
  REQUIRE(!rep.holds);
  CHECK(rep.witness->axiom == "N2");
  CHECK(!eval_axiom(bad, rep.witness->axiom, rep.witness->tuple));
}

TEST_CASE("monadic class") {
  FiniteAlgebra d = diamond().with_table("quant", {0, 3, 3, 3});
  CHECK(check_class(d, "monadic").holds);
  ClassReport rep = check_class(chain_algebra(3).with_table("quant", {0, 1, 2}), "monadic");
  REQUIRE(!rep.holds);
  CHECK(rep.witness->axiom == "boolean-complement");
  CHECK(rep.witness->tuple == std::vector<int>{1});
  // a quantifier that forgets E2
  FiniteAlgebra bad = diamond().with_table("quant", {0, 1, 3, 3});
  ClassReport rep2 = check_class(bad, "monadic");
  REQUIRE(!rep2.holds);
  CHECK(!eval_axiom(bad, rep2.witness->axiom, rep2.witness->tuple));
}

TEST_CASE("deductive class") {
  CHECK(check_class(bool2(), "deductive").holds);
  ClassReport rep = check_class(bool2().with_table("dimpl", {1, 1, 1, 1}), "deductive");
  REQUIRE(!rep.holds);
  CHECK(rep.witness->axiom == "I3");
  CHECK(rep.witness->tuple == std::vector<int>{0});
}

TEST_CASE("heyting check rejects a wrong implication table with a witness") {
  FiniteAlgebra bad = chain_algebra(3).with_table("impl", {2, 2, 2, 2, 2, 2, 2, 2, 2});
  ClassReport rep = check_class(bad, "heyting");
  REQUIRE(!rep.holds);
  CHECK(rep.witness->axiom == "H1");
  CHECK(rep.witness->tuple == std::vector<int>{1, 0});
}

TEST_CASE("residuals") {
  FiniteAlgebra c3 = chain_algebra(3);
  CHECK(relative_pseudocomplement(c3, 0, 1) == 2);  // a <= b gives top
  CHECK(relative_pseudocomplement(c3, 2, 1) == 1);
  CHECK(pseudo_difference(c3, 1, 2) == 0);  // a <= b gives bot
  CHECK(pseudo_difference(c3, 2, 1) == 2);
  CHECK(pseudo_difference(c3, 1, 0) == 1);
  FiniteAlgebra d = diamond();
  CHECK(relative_pseudocomplement(d, 1, 2) == 2);  // atom ⇒ other atom = other atom
  // three incomparable candidates leave no greatest element
  CHECK(!relative_pseudocomplement(m3(), 1, 2).has_value());
  CHECK(!pseudo_difference(m3(), 4, 1).has_value());
}

TEST_CASE("residuation law for the derived tables") {
  for (const FiniteAlgebra& a : {with_heyting_tables(chain_algebra(4)), with_heyting_tables(diamond())}) {
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        const int r = a.binary("impl", x, y);
        const int dd = a.binary("minus", x, y);
        for (int c = 0; c < a.size(); ++c) {
          CHECK(a.leq(a.meet(x, c), y) == a.leq(c, r));
          CHECK(a.leq(x, a.join(y, c)) == a.leq(dd, c));
        }
        CHECK(a.join(x, y) == a.join(y, dd));  // a ∨ b = b ∨ (a -· b)
      }
  }
}

TEST_CASE("filter enumeration") {
  FilterSet all = filters(chain_algebra(3), FilterKind::all);
  REQUIRE(all.members.size() == 3);
  CHECK(all.members[0] == Bits::of(3, {2}));
  CHECK(all.members[1] == Bits::of(3, {1, 2}));
  CHECK(all.members[2] == Bits::of(3, {0, 1, 2}));

  FilterSet prime = filters(chain_algebra(3), FilterKind::prime);
  REQUIRE(prime.members.size() == 2);
  CHECK(prime.members[0] == Bits::of(3, {2}));
  CHECK(prime.members[1] == Bits::of(3, {1, 2}));

  FilterSet bp = filters(bool2(), FilterKind::prime);
  REQUIRE(bp.members.size() == 1);
  CHECK(bp.members[0] == Bits::of(2, {1}));

  FilterSet dp = filters(diamond(), FilterKind::prime);
  REQUIRE(dp.members.size() == 2);
  CHECK(dp.members[0] == Bits::of(4, {1, 3}));
  CHECK(dp.members[1] == Bits::of(4, {2, 3}));

  CHECK_THROWS_AS(filters(chain_algebra(21), FilterKind::all), CapacityError);
}

TEST_CASE("filters are closed under intersection") {
  for (const FiniteAlgebra& a : {chain_algebra(4), diamond(), m3()}) {
    FilterSet all = filters(a, FilterKind::all);
    for (const Bits& f : all.members)
      for (const Bits& g : all.members) {
        Bits meet = f & g;
        bool found = false;
        for (const Bits& h : all.members)
          if (h == meet) found = true;
        CHECK(found);
      }
  }
}

TEST_CASE("join irreducibles") {
  CHECK(join_irreducibles(chain_algebra(3)) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(diamond()) == std::vector<int>{1, 2});
}

TEST_CASE("extend to prime") {
  FiniteAlgebra c3 = chain_algebra(3);
  CHECK(extend_to_prime(c3, Bits::of(3, {2}), 0) == Bits::of(3, {2}));
  FiniteAlgebra d = diamond();
  CHECK(extend_to_prime(d, Bits::of(4, {3}), 1) == Bits::of(4, {2, 3}));
  // an already-prime filter is its own smallest extension
  CHECK(extend_to_prime(d, Bits::of(4, {1, 3}), 2) == Bits::of(4, {1, 3}));
  CHECK_THROWS_AS(extend_to_prime(c3, Bits::of(3, {0}), 1), PreconditionError);   // not a filter
  CHECK_THROWS_AS(extend_to_prime(c3, Bits::of(3, {1, 2}), 1), PreconditionError);  // avoid inside
}

TEST_CASE("deductive system enumeration") {
  FilterSet ds = deductive_systems(nelson3(), "wimpl");
  REQUIRE(ds.kind == FilterKind::deductive);
  REQUIRE(ds.members.size() == 2);
  CHECK(ds.members[0] == Bits::of(3, {2}));
  CHECK(ds.members[1] == Bits::all(3));
  for (const Bits& d : ds.members) CHECK(is_deductive_system(nelson3(), "wimpl", d));
  // over the boolean implication every filter is a deductive system
  FilterSet bd = deductive_systems(bool2(), "dimpl");
  CHECK(bd.members.size() == 2);
}

TEST_CASE("extend_to_prime reports absence when no prime filter exists") {
  // the three-atom modular lattice has no prime filters at all
  CHECK(filters(m3(), FilterKind::prime).members.empty());
  CHECK(!extend_to_prime(m3(), Bits::of(5, {4}), 0).has_value());
}

TEST_CASE("deductive system membership") {
  FiniteAlgebra n3 = nelson3();
  CHECK(is_deductive_system(n3, "wimpl", Bits::of(3, {2})));
  CHECK(!is_deductive_system(n3, "wimpl", Bits::of(3, {1, 2})));  // m →w 0 = 1 forces 0
  CHECK(is_deductive_system(n3, "wimpl", Bits::all(3)));
  CHECK(!is_deductive_system(n3, "wimpl", Bits::of(3, {1})));     // misses the unit
}

TEST_CASE("generated deductive systems") {
  FiniteAlgebra n3 = nelson3();
  // {m} explodes to the whole carrier: m →w x = 1 for every x
  CHECK(generate_deductive_system(n3, "wimpl", Bits::of(3, {1}), GenMode::chained) == Bits::all(3));
  CHECK(generate_deductive_system(n3, "wimpl", Bits::of(3, {1}), GenMode::conjunctive) == Bits::all(3));
  CHECK(generate_deductive_system(n3, "wimpl", Bits::of(3, {2}), GenMode::chained) == Bits::of(3, {2}));
  CHECK(generate_deductive_system(n3, "wimpl", Bits(3), GenMode::chained) == Bits::of(3, {2}));  // D(∅)

  FiniteAlgebra b2 = bool2();
  CHECK(generate_deductive_system(b2, "dimpl", Bits::of(2, {1}), GenMode::chained) == Bits::of(2, {1}));
  CHECK(generate_deductive_system(b2, "dimpl", Bits::of(2, {0}), GenMode::chained) == Bits::all(2));
  CHECK(generate_deductive_system(b2, "dimpl", Bits::of(2, {0}), GenMode::conjunctive) == Bits::all(2));
}

TEST_CASE("non-deductive arrows are flagged by the characterization cross-check") {
  // meet as an arrow is not deductive
  FiniteAlgebra with_meet_arrow = chain_algebra(3).with_table("dimpl", {0, 0, 0, 0, 1, 1, 0, 1, 2});
  CHECK_THROWS_AS(generate_deductive_system(with_meet_arrow, "dimpl", Bits::of(3, {1}), GenMode::chained),
                  ConsistencyError);
}

TEST_CASE("system extension by an element") {
  FiniteAlgebra n3 = nelson3();
  CHECK(generate_from_system_and_element(n3, "wimpl", Bits::of(3, {2}), 1) == Bits::all(3));
  CHECK(generate_from_system_and_element(bool2(), "dimpl", Bits::of(2, {1}), 0) == Bits::all(2));
  CHECK_THROWS_AS(generate_from_system_and_element(n3, "wimpl", Bits::of(3, {1, 2}), 0), PreconditionError);
  CHECK_THROWS_AS(generate_from_system_and_element(n3, "wimpl", Bits::of(3, {2}), 2), PreconditionError);
}

TEST_CASE("extension agrees with generation from the enlarged set") {
  for (const FiniteAlgebra& a : nelson_algebras_upto(4)) {
    const std::size_t n = static_cast<std::size_t>(a.size());
    for (int x = 0; x < a.size(); ++x) {
      Bits d1 = generate_deductive_system(a, "wimpl", Bits::single(n, static_cast<std::size_t>(x)), GenMode::chained);
      for (int y = 0; y < a.size(); ++y) {
        if (d1.test(static_cast<std::size_t>(y))) continue;
        Bits via_arrow = generate_from_system_and_element(a, "wimpl", d1, y);
        Bits enlarged = d1;
        enlarged.set(static_cast<std::size_t>(y));
        CHECK(via_arrow == generate_deductive_system(a, "wimpl", enlarged, GenMode::chained));
        CHECK(via_arrow == generate_deductive_system(a, "wimpl", enlarged, GenMode::conjunctive));
      }
    }
  }
}

TEST_CASE("nelson incidental laws") {
  for (const FiniteAlgebra& a : nelson_algebras_upto(5)) {
    REQUIRE(check_class(a, "nelson").holds);
    for (int x = 0; x < a.size(); ++x) {
      CHECK(a.binary("wimpl", x, a.top()) == a.top());  // x ↣ 1 = 1
      CHECK(a.binary("wimpl", x, x) == a.top());        // x ↣ x = 1
      for (int y = 0; y < a.size(); ++y) {
        const int nx = a.unary("neg", x);
        CHECK(a.binary("wimpl", a.meet(x, nx), y) == a.top());        // strong explosion
        CHECK(a.binary("wimpl", a.meet(x, a.wneg(x)), y) == a.top()); // weak explosion
        CHECK(a.leq(nx, a.binary("wimpl", x, y)));                    // ∼a ≤ a →w b
        CHECK(a.leq(y, a.binary("wimpl", x, y)));                     // b ≤ a →w b
      }
    }
    // the weak implication is a deductive arrow
    CHECK(check_class(a.with_table("dimpl", a.table("wimpl")), "deductive").holds);
  }
}

TEST_CASE("for a heyting arrow the deductive systems are exactly the filters") {
  for (const FiniteAlgebra& base : {chain_algebra(4), diamond(), with_heyting_tables(chain_algebra(3))}) {
    FiniteAlgebra a = base.has("impl") ? base : with_heyting_tables(base);
    FilterSet ds = deductive_systems(a, "impl");
    FilterSet fs = filters(a, FilterKind::all);
    CHECK(ds.members == fs.members);
  }
}

TEST_CASE("witness soundness on randomly damaged tables") {
  Rng rng(99);
  auto damage = [&](FiniteAlgebra a, const char* table) {
    auto t = a.table(table);
    t[rng.below(t.size())] = static_cast<int>(rng.below(static_cast<std::size_t>(a.size())));
    return a.with_table(table, t);
  };
  for (int trial = 0; trial < 60; ++trial) {
    FiniteAlgebra a = nelson3();
    const char* tables[] = {"neg", "wimpl", "impl", "minus"};
    FiniteAlgebra b = damage(a, tables[rng.below(4)]);
    for (const char* cls : {"kleene", "nelson", "heyting", "hb"}) {
      ClassReport rep = check_class(b, cls);
      if (!rep.holds) {
        REQUIRE(rep.witness.has_value());
        CHECK(!eval_axiom(b, rep.witness->axiom, rep.witness->tuple));
      }
    }
  }
}
