#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "spectra/lattice.hpp"
#include "spectra/spectrum.hpp"

using namespace spectra;
using namespace spectra::testing;

namespace {

// Independent oracle: antichains in the powerset of an n-set, counted by
// brute force over all families of subsets.
std::size_t antichain_count_oracle(int n) {
  std::size_t subsets = std::size_t{1} << n;
  std::size_t families = std::size_t{1} << subsets;
  std::size_t count = 0;
  for (std::size_t fam = 0; fam < families; ++fam) {
    bool antichain = true;
    for (std::size_t s = 0; s < subsets && antichain; ++s) {
      if (!(fam >> s & 1)) continue;
      for (std::size_t t = 0; t < subsets && antichain; ++t) {
        if (s == t || !(fam >> t & 1)) continue;
        if ((s & t) == s) antichain = false;  // s subset of t
      }
    }
    if (antichain) ++count;
  }
  return count;
}

Dnf random_dnf(std::mt19937& rng, std::size_t atoms) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<AtomSet> term(0, (AtomSet{1} << atoms) - 1);
  std::vector<AtomSet> terms;
  for (int i = nterms(rng); i > 0; --i) {
    AtomSet t = term(rng);
    if (t) terms.push_back(t);
  }
  return Dnf::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("dnf normal form") {
  CHECK(meet(Dnf::atom(0), Dnf::atom(1)) == Dnf::term(0b11));
  CHECK(join(Dnf::atom(0), Dnf::atom(1)) == Dnf::from_terms({0b01, 0b10}));
  // meet(a|b, c) distributes
  Dnf ab = join(Dnf::atom(0), Dnf::atom(1));
  CHECK(meet(ab, Dnf::atom(2)) == Dnf::from_terms({0b101, 0b110}));
  // absorption: {a} | {ab} = {a}
  CHECK(Dnf::from_terms({0b01, 0b11}) == Dnf::atom(0));
  CHECK(join(Dnf::top(), Dnf::atom(0)) == Dnf::top());
  CHECK(meet(Dnf::bottom(), Dnf::atom(0)) == Dnf::bottom());
}

TEST_CASE("leq on free lattices") {
  FpLattice f2 = free_lattice(2);
  Dnf a = Dnf::atom(0), b = Dnf::atom(1);
  CHECK(f2.leq(meet(a, b), join(a, b)));
  CHECK_FALSE(f2.leq(a, b));
  CHECK(f2.leq(Dnf::bottom(), a));
  CHECK(f2.leq(a, Dnf::top()));
}

TEST_CASE("leq respects axioms") {
  FpLattice c = chain_lattice(2);  // a <= b
  CHECK(c.leq(Dnf::atom(0), Dnf::atom(1)));
  CHECK_FALSE(c.leq(Dnf::atom(1), Dnf::atom(0)));
}

TEST_CASE("leq agrees with the semantic oracle on random elements") {
  std::mt19937 rng(3);
  for (const FpLattice& t : small_corpus()) {
    std::size_t n = t.atom_count();
    for (int i = 0; i < 40; ++i) {
      Dnf u = random_dnf(rng, n), v = random_dnf(rng, n);
      REQUIRE(t.leq(u, v) == leq_semantic(t, u, v));
    }
  }
}

TEST_CASE("element counts of free lattices match the antichain oracle") {
  CHECK(element_count(free_lattice(1)) == 3);
  CHECK(element_count(free_lattice(2)) == 6);
  CHECK(element_count(free_lattice(3)) == 20);
  for (int n = 1; n <= 3; ++n)
    CHECK(element_count(free_lattice(n)) == antichain_count_oracle(n));
  CHECK(element_count(free_lattice(4)) == antichain_count_oracle(4));
}

TEST_CASE("element counts of presented lattices") {
  CHECK(element_count(two_lattice()) == 2);
  CHECK(element_count(trivial_lattice()) == 1);
  CHECK(element_count(chain_lattice(1)) == 3);
  CHECK(element_count(boolean4()) == 4);
  CHECK(element_count(diamond5()) == 5);
}

TEST_CASE("order laws on element tables") {
  for (const FpLattice& t : small_corpus()) {
    ElementTable et(t);
    std::size_t n = et.size();
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(et.leq(x, x));
      for (std::size_t y = 0; y < n; ++y) {
        if (et.leq(x, y) && et.leq(y, x)) CHECK(x == y);
        // meet is the glb, join the lub, per the FpLattice order
        std::size_t m = et.meet(x, y), j = et.join(x, y);
        CHECK(t.leq(et.rep(m), et.rep(x)));
        CHECK(t.leq(et.rep(m), et.rep(y)));
        CHECK(t.leq(et.rep(x), et.rep(j)));
        for (std::size_t z = 0; z < n; ++z) {
          if (et.leq(z, x) && et.leq(z, y)) CHECK(et.leq(z, m));
          if (et.leq(x, z) && et.leq(y, z)) CHECK(et.leq(j, z));
          if (et.leq(x, y) && et.leq(y, z)) CHECK(et.leq(x, z));
        }
      }
    }
  }
}

TEST_CASE("quotients") {
  FpLattice chain = chain_lattice(1);
  SUBCASE("3-chain mod a=1 collapses to 2") {
    CHECK(element_count(quotient(chain, {{Dnf::atom(0), Rel::One}})) == 2);
  }
  SUBCASE("3-chain mod a=0 is the principal filter above a") {
    CHECK(element_count(quotient(chain, {{Dnf::atom(0), Rel::Zero}})) == 2);
  }
  SUBCASE("free on a,b mod a\\/b=1 is the 5-element lattice") {
    FpLattice q = quotient(free_lattice(2),
                           {{join(Dnf::atom(0), Dnf::atom(1)), Rel::One}});
    CHECK(element_count(q) == 5);
  }
  SUBCASE("quotient by 0=1 is trivial") {
    CHECK(element_count(quotient(chain, {{Dnf::top(), Rel::Zero}})) == 1);
  }
}

TEST_CASE("jacobson radical membership") {
  FpLattice chain = chain_lattice(1);
  PrincipalIdeal zero{Dnf::bottom()};
  SUBCASE("in a chain the radical of 0 contains a") {
    CHECK(jacobson_radical_member(chain, Dnf::atom(0), zero));
    CHECK_FALSE(jacobson_radical_member(chain, Dnf::top(), zero));
  }
  SUBCASE("0 always belongs") {
    for (const FpLattice& t : small_corpus())
      CHECK(jacobson_radical_member(t, Dnf::bottom(), zero));
  }
  SUBCASE("boolean complement escapes") {
    CHECK_FALSE(jacobson_radical_member(boolean4(), Dnf::atom(0), zero));
  }
}

TEST_CASE("lemma 1: radical equals intersection of maximal ideals") {
  for (const FpLattice& t : small_corpus()) {
    ElementTable et(t);
    FiniteSpectralSpace x = spec(t);
    // Maximal primes.
    std::vector<std::size_t> maxima;
    for (std::size_t p = 0; p < x.size(); ++p) {
      bool is_max = true;
      for (std::size_t q = 0; q < x.size(); ++q)
        if (q != p && x.specializes(p, q)) is_max = false;
      if (is_max) maxima.push_back(p);
    }
    for (std::size_t g = 0; g < et.size(); ++g)
      for (std::size_t a = 0; a < et.size(); ++a) {
        bool lhs = jacobson_radical_member(t, et.rep(a),
                                           PrincipalIdeal{et.rep(g)});
        bool rhs = true;
        for (std::size_t m : maxima) {
          bool contains_gen = !et.rep(g).eval(x.point(m));
          bool contains_a = !et.rep(a).eval(x.point(m));
          if (contains_gen && !contains_a) rhs = false;
        }
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("heitmann lattice") {
  SUBCASE("He(3-chain) collapses a to 0") {
    CHECK(element_count(heitmann_lattice(chain_lattice(1))) == 2);
  }
  SUBCASE("boolean lattices are fixed") {
    CHECK(element_count(heitmann_lattice(boolean4())) == 4);
  }
  SUBCASE("He(2) = 2") {
    CHECK(element_count(heitmann_lattice(two_lattice())) == 2);
  }
  SUBCASE("idempotence") {
    for (const FpLattice& t : small_corpus()) {
      FpLattice he = heitmann_lattice(t);
      CHECK(element_count(heitmann_lattice(he)) == element_count(he));
    }
  }
}

TEST_CASE("residuals") {
  FpLattice b = boolean4();
  CHECK(b.equal(residual(b, Dnf::bottom(), Dnf::top()), Dnf::bottom()));
  CHECK(b.equal(residual(b, Dnf::atom(0), Dnf::atom(0)), Dnf::top()));
  // residual(0, u) is the complement of u
  CHECK(b.equal(residual(b, Dnf::bottom(), Dnf::atom(0)), Dnf::atom(1)));
  // largest-element property on the corpus
  for (const FpLattice& t : small_corpus()) {
    ElementTable et(t);
    for (std::size_t a = 0; a < et.size(); ++a)
      for (std::size_t bb = 0; bb < et.size(); ++bb) {
        Dnf r = residual(t, et.rep(a), et.rep(bb));
        std::size_t rc = et.cls(r);
        CHECK(et.leq(et.meet(rc, bb), a));
        for (std::size_t y = 0; y < et.size(); ++y)
          if (et.leq(et.meet(y, bb), a)) CHECK(et.leq(y, rc));
      }
  }
}

TEST_CASE("boolean envelope") {
  SUBCASE("Bo(2) = 2") {
    CHECK(element_count(boolean_envelope(two_lattice()).lattice) == 2);
  }
  SUBCASE("Bo(3-chain) is the 4-element boolean algebra") {
    BooleanEnvelope bo = boolean_envelope(chain_lattice(1));
    CHECK(element_count(bo.lattice) == 4);
  }
  SUBCASE("Bo of a boolean lattice keeps its size") {
    CHECK(element_count(boolean_envelope(boolean4()).lattice) == 4);
  }
  SUBCASE("the envelope is boolean: every element complemented") {
    for (const FpLattice& t : small_corpus()) {
      if (spec(t).size() > 5) continue;  // envelope atoms = primes
      BooleanEnvelope bo = boolean_envelope(t);
      ElementTable et(bo.lattice);
      for (std::size_t x = 0; x < et.size(); ++x) {
        bool complemented = false;
        for (std::size_t y = 0; y < et.size(); ++y)
          if (et.meet(x, y) == et.bottom() && et.join(x, y) == et.top()) {
            complemented = true;
            break;
          }
        CHECK(complemented);
      }
    }
  }
  SUBCASE("universal property, finite check: images generate") {
    for (const FpLattice& t : small_corpus()) {
      if (spec(t).size() > 5) continue;
      BooleanEnvelope bo = boolean_envelope(t);
      ElementTable et(bo.lattice);
      // Closure of the images under meet, join and complement reaches all.
      std::vector<bool> reached(et.size(), false);
      reached[et.bottom()] = reached[et.top()] = true;
      for (const Dnf& img : bo.atom_images) reached[et.cls(img)] = true;
      auto complement_of = [&](std::size_t x) {
        for (std::size_t y = 0; y < et.size(); ++y)
          if (et.meet(x, y) == et.bottom() && et.join(x, y) == et.top())
            return y;
        return x;
      };
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t x = 0; x < et.size(); ++x) {
          if (!reached[x]) continue;
          std::size_t cx = complement_of(x);
          if (!reached[cx]) {
            reached[cx] = true;
            grew = true;
          }
          for (std::size_t y = 0; y < et.size(); ++y) {
            if (!reached[y]) continue;
            for (std::size_t z : {et.meet(x, y), et.join(x, y)})
              if (!reached[z]) {
                reached[z] = true;
                grew = true;
              }
          }
        }
      }
      for (std::size_t x = 0; x < et.size(); ++x) CHECK(reached[x]);
    }
  }
}

TEST_CASE("element table capacity") {
  CHECK_THROWS_AS(ElementTable(free_lattice(6)), CapacityError);
}
