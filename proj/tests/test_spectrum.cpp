#include "doctest.h"

#include <random>
#include <set>

#include "corpus.hpp"
#include "spectra/morphism.hpp"
#include "spectra/spectrum.hpp"

using namespace spectra;
using namespace spectra::testing;

TEST_CASE("spectra of the basic lattices") {
  CHECK(spec(trivial_lattice()).size() == 0);
  CHECK(spec(two_lattice()).size() == 1);
  FiniteSpectralSpace chain = spec(chain_lattice(1));
  CHECK(chain.size() == 2);
  CHECK((chain.specializes(0, 1) || chain.specializes(1, 0)));
  CHECK(spec(free_lattice(2)).size() == 4);
}

TEST_CASE("basic opens satisfy the spectrum laws") {
  for (const FpLattice& t : small_corpus()) {
    FiniteSpectralSpace x = spec(t);
    ElementTable et(t);
    for (std::size_t u = 0; u < et.size(); ++u)
      for (std::size_t v = 0; v < et.size(); ++v) {
        auto du = x.basic_open(et.rep(u));
        auto dv = x.basic_open(et.rep(v));
        auto dm = x.basic_open(et.rep(et.meet(u, v)));
        auto dj = x.basic_open(et.rep(et.join(u, v)));
        for (std::size_t p = 0; p < x.size(); ++p) {
          CHECK(dm[p] == (du[p] && dv[p]));
          CHECK(dj[p] == (du[p] || dv[p]));
        }
      }
    auto d0 = x.basic_open(Dnf::bottom());
    auto d1 = x.basic_open(Dnf::top());
    for (std::size_t p = 0; p < x.size(); ++p) {
      CHECK_FALSE(d0[p]);
      CHECK(d1[p]);
    }
  }
}

TEST_CASE("every basic open is open and opens are exactly the down-sets") {
  for (const FpLattice& t : small_corpus()) {
    FiniteSpectralSpace x = spec(t);
    ElementTable et(t);
    std::set<std::vector<bool>> basic;
    for (std::size_t u = 0; u < et.size(); ++u) {
      auto d = x.basic_open(et.rep(u));
      CHECK(x.is_open(d));
      basic.insert(d);
    }
    // Every down-set arises as a basic open (finite spaces).
    std::size_t n = x.size();
    REQUIRE(n <= 16);
    std::size_t down_sets = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = mask >> i & 1;
      if (x.is_open(s)) {
        ++down_sets;
        CHECK(basic.count(s) == 1);
      }
    }
    CHECK(down_sets == basic.size());
  }
}

TEST_CASE("stone duality round trip") {
  SUBCASE("oqc of the empty space is trivial") {
    CHECK(element_count(oqc(spec(trivial_lattice()))) == 1);
  }
  SUBCASE("oqc(spec(3-chain)) is a 3-chain") {
    CHECK(element_count(oqc(spec(chain_lattice(1)))) == 3);
  }
  SUBCASE("oqc(spec(free 2)) has 6 elements") {
    CHECK(element_count(oqc(spec(free_lattice(2)))) == 6);
  }
  SUBCASE("the unit maps are mutually inverse isomorphisms") {
    for (const FpLattice& t : small_corpus()) {
      if (t.is_trivial() || spec(t).size() > 5) continue;
      DualityWitness w = duality_witness(t);
      Morphism fwd(t, w.image, w.forward);
      Morphism bwd(w.image, t, w.backward);
      CHECK(is_isomorphism_pair(fwd, bwd));
    }
  }
  SUBCASE("random presentations round trip") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
      Presentation p = random_presentation(rng, 4, 5);
      FpLattice t(p);
      if (t.is_trivial() || spec(t).size() > 5) continue;
      DualityWitness w = duality_witness(t);
      Morphism fwd(t, w.image, w.forward);
      Morphism bwd(w.image, t, w.backward);
      REQUIRE(is_isomorphism_pair(fwd, bwd));
    }
  }
}

TEST_CASE("patch closure quotients") {
  FpLattice chain = chain_lattice(1);
  FiniteSpectralSpace x = spec(chain);
  // Locate the prime with v(a) = 1.
  std::size_t generic = x.point(0) == 1 ? 0 : 1;
  SUBCASE("keeping one prime collapses to 2 and spec equals Z") {
    FpLattice q = patch_closure_quotient(chain, {generic});
    CHECK(element_count(q) == 2);
    FiniteSpectralSpace xq = spec(q);
    REQUIRE(xq.size() == 1);
    CHECK(xq.point(0) == x.point(generic));
  }
  SUBCASE("keeping all primes is the identity quotient") {
    FpLattice q = patch_closure_quotient(chain, {0, 1});
    CHECK(element_count(q) == element_count(chain));
  }
  SUBCASE("the empty set gives the trivial lattice") {
    CHECK(element_count(patch_closure_quotient(chain, {})) == 1);
  }
  SUBCASE("finite patch closure: spec of the quotient is Z exactly") {
    std::mt19937 rng(31);
    for (const FpLattice& t : small_corpus()) {
      FiniteSpectralSpace xs = spec(t);
      if (xs.size() == 0) continue;
      std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
      std::set<std::size_t> z;
      for (int i = 0; i < 2; ++i) z.insert(pick(rng));
      std::vector<std::size_t> zv(z.begin(), z.end());
      FiniteSpectralSpace xq = spec(patch_closure_quotient(t, zv));
      REQUIRE(xq.size() == zv.size());
      std::set<Valuation> kept, expect;
      for (std::size_t i = 0; i < xq.size(); ++i) kept.insert(xq.point(i));
      for (std::size_t i : zv) expect.insert(xs.point(i));
      CHECK(kept == expect);
    }
  }
}

TEST_CASE("point classification") {
  SUBCASE("3-chain") {
    PointClassification c = classify_points(chain_lattice(1));
    REQUIRE(c.max_points.size() == 1);
    REQUIRE(c.min_points.size() == 1);
    CHECK(c.max_points != c.min_points);
    CHECK(c.jspec_points == c.max_points);
    CHECK(c.jspec_space.size() == 1);
  }
  SUBCASE("boolean lattice is zero-dimensional: max = min = all") {
    PointClassification c = classify_points(boolean4());
    CHECK(c.max_points.size() == 2);
    CHECK(c.min_points.size() == 2);
    CHECK(c.jspec_points.size() == 2);
    CHECK(c.jspec_space.size() == 2);
  }
  SUBCASE("5-element modular lattice has two maximal ideals") {
    PointClassification c = classify_points(diamond5());
    CHECK(c.max_points.size() == 2);
    CHECK(c.min_points.size() == 1);
  }
  SUBCASE("theorem 2: Jspec is the patch closure of Max") {
    // On a finite space the patch closure of Max is Max itself; the dual of
    // the quotient onto He(t) must embed Spec(He(t)) onto those points.
    for (const FpLattice& t : small_corpus()) {
      if (t.is_trivial()) continue;
      PointClassification c = classify_points(t);
      FpLattice he = heitmann_lattice(t);
      Morphism q = atom_identity_morphism(t, he);
      DualMap d = dual_map(q);
      REQUIRE(d.source_space.size() == c.max_points.size());
      std::set<std::size_t> image(d.point_image.begin(), d.point_image.end());
      std::set<std::size_t> expect(c.max_points.begin(), c.max_points.end());
      CHECK(image == expect);
      // Order-isomorphism: specialization transfers both ways.
      for (std::size_t i = 0; i < d.source_space.size(); ++i)
        for (std::size_t j = 0; j < d.source_space.size(); ++j)
          CHECK(d.source_space.specializes(i, j) ==
                d.target_space.specializes(d.point_image[i],
                                           d.point_image[j]));
    }
  }
}

TEST_CASE("normality") {
  CHECK(is_normal(chain_lattice(1)));
  CHECK(is_normal(two_lattice()));
  CHECK(is_completely_normal(two_lattice()));
  CHECK_FALSE(is_normal(diamond5()));
  SUBCASE("lattice criterion matches the point-level reading") {
    for (const FpLattice& t : small_corpus()) {
      FiniteSpectralSpace x = spec(t);
      // Normal: each prime lies below a unique maximal point.
      bool point_normal = true;
      for (std::size_t p = 0; p < x.size(); ++p) {
        int above = 0;
        for (std::size_t m = 0; m < x.size(); ++m) {
          bool is_max = true;
          for (std::size_t q = 0; q < x.size(); ++q)
            if (q != m && x.specializes(m, q)) is_max = false;
          if (is_max && x.specializes(p, m)) ++above;
        }
        if (above != 1) point_normal = false;
      }
      if (x.size() == 0) point_normal = true;
      CHECK(is_normal(t) == point_normal);
      // Completely normal: specializations of a common point are comparable.
      bool point_cn = true;
      for (std::size_t z = 0; z < x.size(); ++z)
        for (std::size_t a = 0; a < x.size(); ++a)
          for (std::size_t b = 0; b < x.size(); ++b)
            if (x.specializes(z, a) && x.specializes(z, b) &&
                !x.specializes(a, b) && !x.specializes(b, a))
              point_cn = false;
      CHECK(is_completely_normal(t) == point_cn);
    }
  }
}

TEST_CASE("subspectral images") {
  FpLattice chain = chain_lattice(1);
  SUBCASE("identity") {
    CHECK(is_subspectral_image(identity_morphism(chain)));
  }
  SUBCASE("quotient by a = 0 embeds V(a)") {
    FpLattice q = quotient(chain, {{Dnf::atom(0), Rel::Zero}});
    CHECK(is_subspectral_image(atom_identity_morphism(chain, q)));
  }
  SUBCASE("quotient by a = 1 embeds D(a)") {
    FpLattice q = quotient(chain, {{Dnf::atom(0), Rel::One}});
    CHECK(is_subspectral_image(atom_identity_morphism(chain, q)));
  }
  SUBCASE("the boolean envelope is not a subspectral image") {
    // Its dual is bijective yet the opens do not restrict.
    FpLattice chain3 = chain_lattice(1);
    BooleanEnvelope bo = boolean_envelope(chain3);
    Morphism f(chain3, bo.lattice, bo.atom_images);
    CHECK_FALSE(is_subspectral_image(f));
  }
}

TEST_CASE("dot emitter") {
  std::string dot = specialization_dot(spec(chain_lattice(1)));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"0\"") != std::string::npos);
  CHECK(dot.find("\"1\"") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
