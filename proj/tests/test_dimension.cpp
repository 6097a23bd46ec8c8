#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "spectra/dimension.hpp"

using namespace spectra;
using namespace spectra::testing;

TEST_CASE("complementary sequences") {
  FpLattice chain = chain_lattice(1);
  Dnf a = Dnf::atom(0);
  SUBCASE("witness for the 3-chain at n = 1") {
    CHECK(is_complementary(chain, {a, a}, {Dnf::bottom(), Dnf::top()}));
  }
  SUBCASE("boolean complement at n = 0") {
    CHECK(is_complementary(boolean4(), {Dnf::atom(0)}, {Dnf::atom(1)}));
  }
  SUBCASE("a has no complement in the 3-chain") {
    ElementTable et(chain);
    for (std::size_t y = 0; y < et.size(); ++y)
      CHECK_FALSE(is_complementary(chain, {a}, {et.rep(y)}));
  }
  SUBCASE("length mismatch is an error") {
    CHECK_THROWS_AS(is_complementary(chain, {a}, {a, a}), Error);
  }
}

TEST_CASE("kdim examples") {
  CHECK(kdim_leq(two_lattice(), 0));
  CHECK(kdim_leq(trivial_lattice(), -1));
  CHECK_FALSE(kdim_leq(two_lattice(), -1));
  CHECK_FALSE(kdim_leq(chain_lattice(1), 0));
  CHECK(kdim_leq(chain_lattice(1), 1));
  CHECK_FALSE(kdim_leq(free_lattice(2), 1));
  CHECK(kdim_leq(free_lattice(2), 2));
}

TEST_CASE("chain oracle") {
  CHECK(kdim_chains(two_lattice()) == 0);
  CHECK(kdim_chains(trivial_lattice()) == -1);
  for (int n = 0; n <= 4; ++n) CHECK(kdim_chains(chain_lattice(n)) == n);
  CHECK(kdim_chains(free_lattice(2)) == 2);
}

TEST_CASE("criterion equals the chain oracle") {
  std::vector<FpLattice> corpus = small_corpus();
  corpus.push_back(chain_lattice(4));
  std::mt19937 rng(41);
  for (int i = 0; i < 10; ++i) corpus.emplace_back(random_presentation(rng, 3, 4));
  for (const FpLattice& t : corpus) {
    int d = kdim_chains(t);
    for (int n = -1; n <= 4; ++n) {
      CAPTURE(d);
      REQUIRE(kdim_leq(t, n) == (d <= n));
    }
  }
}

TEST_CASE("zero-dimensional lattices are the boolean ones") {
  CHECK(is_zero_dimensional(boolean4()));
  CHECK(is_zero_dimensional(trivial_lattice()));
  CHECK(is_zero_dimensional(two_lattice()));
  CHECK_FALSE(is_zero_dimensional(chain_lattice(1)));
  for (const FpLattice& t : small_corpus()) {
    ElementTable et(t);
    bool all_complemented = true;
    for (std::size_t x = 0; x < et.size() && all_complemented; ++x) {
      bool has = false;
      for (std::size_t y = 0; y < et.size(); ++y)
        if (et.meet(x, y) == et.bottom() && et.join(x, y) == et.top()) {
          has = true;
          break;
        }
      all_complemented = has;
    }
    CHECK(is_zero_dimensional(t) == all_complemented);
  }
}

TEST_CASE("relative dimension oracle") {
  SUBCASE("identity fibers are points") {
    CHECK(relative_kdim_oracle(identity_morphism(chain_lattice(1))) == 0);
    CHECK(relative_kdim_oracle(identity_morphism(trivial_lattice())) == -1);
  }
  SUBCASE("2 into the 3-chain has a 2-chain fiber") {
    FpLattice two = two_lattice(), chain = chain_lattice(1);
    Morphism f(two, chain, {});
    CHECK(relative_kdim_oracle(f) == 1);
  }
  SUBCASE("2 into boolean 4 has antichain fibers") {
    Morphism f(two_lattice(), boolean4(), {});
    CHECK(relative_kdim_oracle(f) == 0);
  }
  SUBCASE("2 into the free lattice sees the whole spectrum") {
    Morphism f(two_lattice(), free_lattice(2), {});
    CHECK(relative_kdim_oracle(f) == 2);
  }
}

TEST_CASE("relative dimension criterion") {
  SUBCASE("identity inclusion: k = 0 reduces to the absolute criterion") {
    FpLattice chain = chain_lattice(1);
    MorphismTables mt(identity_morphism(chain));
    CHECK(relative_kdim_leq(mt, 1, 0) == Tri::True);
    // Without auxiliary elements the 3-chain is not zero-dimensional...
    CHECK(relative_kdim_leq(mt, 0, 0) == Tri::Inconclusive);
    // ...but the identity morphism is: one auxiliary element settles it.
    CHECK(relative_kdim_leq(mt, 0, 3) == Tri::True);
  }
  SUBCASE("2 into boolean 4: relative dimension 0") {
    Morphism f(two_lattice(), boolean4(), {});
    MorphismTables mt(f);
    CHECK(relative_kdim_leq(mt, 0) == Tri::True);
  }
  SUBCASE("2 into the 3-chain: 0 inconclusive, 1 holds") {
    Morphism f(two_lattice(), chain_lattice(1), {});
    MorphismTables mt(f);
    CHECK(relative_kdim_leq(mt, 0) == Tri::Inconclusive);
    CHECK(relative_kdim_leq(mt, 1) == Tri::True);
  }
  SUBCASE("criterion matches the fiber oracle on corpus inclusions") {
    // Inclusions: 2 -> t plus identity maps.
    for (const FpLattice& t : small_corpus()) {
      if (t.is_trivial()) continue;
      Morphism f(two_lattice(), t, {});
      MorphismTables mt(f);
      int d = relative_kdim_oracle(f);
      for (int n = 0; n <= 3; ++n) {
        Tri c = relative_kdim_leq(mt, n, 3);
        CAPTURE(n);
        CAPTURE(d);
        if (d <= n)
          REQUIRE(c == Tri::True);
        else
          REQUIRE(c != Tri::True);
      }
    }
  }
}

TEST_CASE("theorem 12 bound on corpus inclusions") {
  for (const FpLattice& t : small_corpus()) {
    if (t.is_trivial()) continue;
    Morphism f(two_lattice(), t, {});
    int m = kdim_chains(two_lattice());
    int n = relative_kdim_oracle(f);
    CHECK(kdim_chains(t) <= (m + 1) * (n + 1) - 1);
  }
  // A nontrivial source: the 3-chain inside the 4-chain.
  FpLattice c1 = chain_lattice(1), c2 = chain_lattice(2);
  Morphism f(c1, c2, {Dnf::atom(0)});
  int m = kdim_chains(c1);
  int n = relative_kdim_oracle(f);
  CHECK(kdim_chains(c2) <= (m + 1) * (n + 1) - 1);
}

TEST_CASE("theorem 13: lying over plus going up bounds the source dimension") {
  std::vector<Morphism> corpus;
  for (const FpLattice& t : small_corpus()) {
    if (!t.is_trivial()) corpus.push_back(Morphism(two_lattice(), t, {}));
    corpus.push_back(identity_morphism(t));
  }
  corpus.push_back(Morphism(chain_lattice(1), chain_lattice(2), {Dnf::atom(0)}));
  FpLattice c1 = chain_lattice(1);
  BooleanEnvelope bo = boolean_envelope(c1);
  corpus.push_back(Morphism(c1, bo.lattice, bo.atom_images));
  for (const Morphism& f : corpus) {
    MorphismTables mt(f);
    bool lo = is_lying_over(f);
    if (lo && is_going_up(mt))
      CHECK(kdim_chains(f.source()) <= kdim_chains(f.target()));
    if (lo && is_going_down(mt))
      CHECK(kdim_chains(f.source()) <= kdim_chains(f.target()));
  }
}

TEST_CASE("theorem 7(3): incomparability is zero relative dimension") {
  std::vector<Morphism> corpus;
  for (const FpLattice& t : small_corpus()) {
    if (!t.is_trivial()) corpus.push_back(Morphism(two_lattice(), t, {}));
    corpus.push_back(identity_morphism(t));
  }
  corpus.push_back(Morphism(chain_lattice(1), chain_lattice(2), {Dnf::atom(0)}));
  for (const Morphism& f : corpus)
    CHECK(has_incomparability(f) == (relative_kdim_oracle(f) <= 0));
}

TEST_CASE("cancellation token interrupts long searches") {
  CancelToken tok;
  tok.cancel();
  CHECK_THROWS_AS(kdim_leq(free_lattice(3), 3, &tok), CancelledError);
}
