#include "doctest.h"

#include "corpus.hpp"
#include "spectra/entailment.hpp"

using namespace spectra;
using namespace spectra::testing;

namespace {

Presentation pres(int atoms, std::vector<Sequent> axioms) {
  Presentation p = free_presentation(atoms);
  for (const Sequent& s : axioms) p.add_axiom(s);
  return p;
}

}  // namespace

TEST_CASE("saturation of the empty axiom set is reflexivity only") {
  SaturatedRelation r = saturate(pres(1, {}));
  CHECK(r.minimal.empty());  // a |- a is implicit
  CHECK(entails(r, Sequent{0b1, 0b1}));
  CHECK_FALSE(entails(r, Sequent{0, 0b1}));
  CHECK_FALSE(entails(r, Sequent{0b1, 0}));
}

TEST_CASE("cut derives (a |- b) from (x,a |- b) and (a |- b,x)") {
  // atoms x=0, a=1, b=2
  SaturatedRelation r =
      saturate(pres(3, {Sequent{0b011, 0b100}, Sequent{0b010, 0b101}}));
  CHECK(entails(r, Sequent{0b010, 0b100}));
}

TEST_CASE("no cut across an honest disjunction") {
  // axioms |- a,b and a,b |- ; the model a=1,b=0 refutes a |- b.
  Presentation p = pres(2, {Sequent{0, 0b11}, Sequent{0b11, 0}});
  SaturatedRelation r = saturate(p);
  CHECK_FALSE(entails(r, Sequent{0b01, 0b10}));
  CHECK(entails_semantic(p, Sequent{0b01, 0b10}) ==
        entails(r, Sequent{0b01, 0b10}));
}

TEST_CASE("transitivity chains through cut") {
  SaturatedRelation r =
      saturate(pres(3, {Sequent{0b001, 0b010}, Sequent{0b010, 0b100}}));
  CHECK(entails(r, Sequent{0b001, 0b100}));
  CHECK_FALSE(entails(r, Sequent{0b010, 0b001}));
}

TEST_CASE("models enumerates exactly the satisfying valuations") {
  SUBCASE("a |- b keeps 00, 01, 11") {
    auto ms = models(pres(2, {Sequent{0b01, 0b10}}));
    CHECK(ms == std::vector<Valuation>{0b00, 0b10, 0b11});
  }
  SUBCASE("contradictory axioms have no model") {
    auto ms = models(pres(1, {Sequent{0, 0b1}, Sequent{0b1, 0}}));
    CHECK(ms.empty());
  }
  SUBCASE("free lattice has all models") {
    CHECK(models(pres(2, {})).size() == 4);
  }
}

TEST_CASE("entails_semantic spot checks") {
  Presentation split = pres(2, {Sequent{0, 0b11}, Sequent{0b11, 0}});
  CHECK_FALSE(entails_semantic(split, Sequent{0b01, 0b10}));
  Presentation cut = pres(3, {Sequent{0b011, 0b100}, Sequent{0b010, 0b101}});
  CHECK(entails_semantic(cut, Sequent{0b010, 0b100}));
  CHECK(entails_semantic(split, Sequent{0b01, 0b01}));
}

TEST_CASE("unknown atoms are rejected") {
  SaturatedRelation r = saturate(pres(1, {}));
  CHECK_THROWS_AS(entails(r, Sequent{0b10, 0}), UnknownAtomError);
  CHECK_THROWS_AS(entails_semantic(r.presentation, Sequent{0, 0b10}),
                  UnknownAtomError);
}

TEST_CASE("model enumeration cap") {
  Presentation p = free_presentation(21);
  CHECK_THROWS_AS(models(p), CapacityError);
}

TEST_CASE("oracle agreement on seeded random presentations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    Presentation p = random_presentation(rng, 6, 6);
    SaturatedRelation r = saturate(p);
    for (int q = 0; q < 25; ++q) {
      Sequent s = random_sequent(rng, p);
      CAPTURE(trial);
      REQUIRE(entails(r, s) == entails_semantic(p, s));
    }
  }
}

TEST_CASE("closure soundness and cut stability") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p = random_presentation(rng, 5, 5);
    SaturatedRelation r = saturate(p);
    for (const Sequent& ax : p.axioms()) CHECK(entails(r, ax));
    // Cut stability on random data.
    for (int q = 0; q < 10; ++q) {
      Sequent s = random_sequent(rng, p);
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(p.atom_count()) - 1);
      AtomSet x = atom_bit(pick(rng));
      if (entails(r, Sequent{s.ante, s.succ | x}) &&
          entails(r, Sequent{s.ante | x, s.succ}))
        CHECK(entails(r, s));
      // Monotonicity.
      if (entails(r, s)) {
        Sequent weaker{s.ante | atom_bit(pick(rng)), s.succ | atom_bit(pick(rng))};
        CHECK(entails(r, weaker));
      }
    }
  }
}

TEST_CASE("saturation is idempotent on its own output") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Presentation p = random_presentation(rng, 5, 5);
    SaturatedRelation r = saturate(p);
    Presentation q = free_presentation(static_cast<int>(p.atom_count()));
    for (const Sequent& s : r.minimal) q.add_axiom(s);
    SaturatedRelation r2 = saturate(q);
    CHECK(r2.minimal == r.minimal);
  }
}

TEST_CASE("saturated relation is subsumption-minimal") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    SaturatedRelation r = saturate(random_presentation(rng, 5, 6));
    for (std::size_t i = 0; i < r.minimal.size(); ++i)
      for (std::size_t j = 0; j < r.minimal.size(); ++j)
        if (i != j) CHECK_FALSE(r.minimal[i].subsumes(r.minimal[j]));
  }
}
