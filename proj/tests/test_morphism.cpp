#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "spectra/dimension.hpp"
#include "spectra/morphism.hpp"

using namespace spectra;
using namespace spectra::testing;

namespace {

// A mixed corpus: identities, unique maps from 2, quotients, envelopes and
// random maps out of free lattices.
std::vector<Morphism> morphism_corpus() {
  std::vector<Morphism> out;
  for (const FpLattice& t : small_corpus()) {
    out.push_back(identity_morphism(t));
    out.push_back(Morphism(two_lattice(), t, {}));
  }
  FpLattice chain = chain_lattice(1);
  out.push_back(atom_identity_morphism(
      chain, quotient(chain, {{Dnf::atom(0), Rel::Zero}})));
  out.push_back(atom_identity_morphism(
      chain, quotient(chain, {{Dnf::atom(0), Rel::One}})));
  FpLattice f2 = free_lattice(2);
  out.push_back(atom_identity_morphism(f2, diamond5()));
  out.push_back(atom_identity_morphism(f2, boolean4()));
  BooleanEnvelope bo = boolean_envelope(chain);
  out.push_back(Morphism(chain, bo.lattice, bo.atom_images));
  out.push_back(atom_identity_morphism(chain, heitmann_lattice(chain)));
  out.push_back(Morphism(chain, chain_lattice(2), {Dnf::atom(0)}));
  out.push_back(Morphism(chain, chain_lattice(2), {Dnf::atom(1)}));
  out.push_back(Morphism(chain, two_lattice(), {Dnf::top()}));
  out.push_back(Morphism(chain, two_lattice(), {Dnf::bottom()}));
  // Random maps from free lattices (always valid).
  std::mt19937 rng(53);
  std::vector<FpLattice> targets = small_corpus();
  std::uniform_int_distribution<int> pick_target(0, static_cast<int>(targets.size()) - 1);
  for (int i = 0; i < 10; ++i) {
    const FpLattice& tgt = targets[pick_target(rng)];
    std::uniform_int_distribution<AtomSet> term(
        0, tgt.presentation().atom_universe());
    std::uniform_int_distribution<int> nterms(0, 2);
    int src_atoms = 1 + (i % 2);
    std::vector<Dnf> images;
    for (int a = 0; a < src_atoms; ++a) {
      std::vector<AtomSet> ts;
      for (int k = nterms(rng); k > 0; --k) {
        AtomSet tm = term(rng);
        if (tm) ts.push_back(tm);
      }
      images.push_back(Dnf::from_terms(std::move(ts)));
    }
    out.push_back(Morphism(free_lattice(src_atoms), tgt, std::move(images)));
  }
  return out;
}

}  // namespace

TEST_CASE("morphism construction validates axiom preservation") {
  FpLattice chain = chain_lattice(2);  // a <= b
  // a -> u, b -> 0 breaks a <= b in boolean4.
  CHECK_THROWS_AS(Morphism(chain, boolean4(), {Dnf::atom(0), Dnf::bottom()}),
                  MorphismError);
  CHECK_NOTHROW(Morphism(chain, boolean4(), {Dnf::bottom(), Dnf::atom(0)}));
  CHECK_THROWS_AS(Morphism(chain, boolean4(), {Dnf::atom(0)}), MorphismError);
}

TEST_CASE("apply substitutes meets and joins") {
  FpLattice f2 = free_lattice(2);
  Morphism swap(f2, f2, {Dnf::atom(1), Dnf::atom(0)});
  Dnf u = join(meet(Dnf::atom(0), Dnf::atom(1)), Dnf::atom(0));
  CHECK(swap.apply(u) == join(meet(Dnf::atom(0), Dnf::atom(1)), Dnf::atom(1)));
  CHECK(swap.apply(Dnf::top()) == Dnf::top());
  CHECK(swap.apply(Dnf::bottom()) == Dnf::bottom());
}

TEST_CASE("dual maps") {
  SUBCASE("identity dualizes to the identity") {
    DualMap d = dual_map(identity_morphism(chain_lattice(1)));
    for (std::size_t q = 0; q < d.source_space.size(); ++q)
      CHECK(d.source_space.point(q) == d.target_space.point(d.point_image[q]));
  }
  SUBCASE("the envelope dual is a bijection on points") {
    FpLattice chain = chain_lattice(1);
    BooleanEnvelope bo = boolean_envelope(chain);
    Morphism f(chain, bo.lattice, bo.atom_images);
    CHECK(dual_injective(f));
    CHECK(dual_surjective(f));
    CHECK_FALSE(is_subspectral_image(f));  // but not a homeomorphism witness
  }
  SUBCASE("quotient dual is the inclusion of V(a)") {
    FpLattice chain = chain_lattice(1);
    FpLattice q = quotient(chain, {{Dnf::atom(0), Rel::Zero}});
    Morphism f = atom_identity_morphism(chain, q);
    DualMap d = dual_map(f);
    REQUIRE(d.source_space.size() == 1);
    // The surviving prime has a in its ideal: v(a) = 0.
    CHECK(d.target_space.point(d.point_image[0]) == 0);
  }
}

TEST_CASE("lying over") {
  FpLattice chain = chain_lattice(1);
  CHECK(is_lying_over(identity_morphism(chain)));
  SUBCASE("the envelope embedding lies over") {
    BooleanEnvelope bo = boolean_envelope(chain);
    CHECK(is_lying_over(Morphism(chain, bo.lattice, bo.atom_images)));
  }
  SUBCASE("a proper quotient does not") {
    FpLattice q = quotient(chain, {{Dnf::atom(0), Rel::One}});
    CHECK_FALSE(is_lying_over(atom_identity_morphism(chain, q)));
  }
  SUBCASE("lemma 2 criterion equals dual surjectivity and injectivity") {
    for (const Morphism& f : morphism_corpus()) {
      MorphismTables mt(f);
      bool lo = is_lying_over(f);
      CHECK(lo == dual_surjective(f));
      CHECK(lo == is_injective(mt));
    }
  }
}

TEST_CASE("going up and going down") {
  SUBCASE("identity") {
    MorphismTables mt(identity_morphism(chain_lattice(1)));
    CHECK(is_going_up(mt));
    CHECK(is_going_down(mt));
  }
  SUBCASE("2 into the 3-chain goes up") {
    Morphism f(two_lattice(), chain_lattice(1), {});
    MorphismTables mt(f);
    CHECK(is_going_up(mt));
    CHECK(going_up_oracle(f));
  }
  SUBCASE("criteria match the chain-lifting oracles across the corpus") {
    for (const Morphism& f : morphism_corpus()) {
      MorphismTables mt(f);
      CHECK(is_going_up(mt) == going_up_oracle(f));
      CHECK(is_going_down(mt) == going_down_oracle(f));
    }
  }
}

TEST_CASE("proposition 2: the sequent criterion is going up") {
  for (const Morphism& f : morphism_corpus()) {
    MorphismTables mt(f);
    CHECK(fiber_lying_over_criterion(mt) == is_going_up(mt));
  }
}

TEST_CASE("proposition 2 item 3: quotient reformulation over principal ideals") {
  // Going up iff for each y in the target, T/(f^{-1}(down y) = 0) ->
  // T'/(y = 0) is lying over.
  for (const Morphism& f : morphism_corpus()) {
    if (f.source().atom_count() + f.target().atom_count() > 5) continue;
    MorphismTables mt(f);
    bool item3 = true;
    for (std::size_t y = 0; y < mt.tgt.size() && item3; ++y) {
      // J = preimage ideal of (down y); principal in a finite lattice.
      std::size_t jmax = mt.src.bottom();
      for (std::size_t c = 0; c < mt.src.size(); ++c)
        if (mt.tgt.leq(mt.img[c], y)) jmax = mt.src.join(jmax, c);
      FpLattice src_q = quotient(f.source(), {{mt.src.rep(jmax), Rel::Zero}});
      FpLattice tgt_q = quotient(f.target(), {{mt.tgt.rep(y), Rel::Zero}});
      Morphism fy(src_q, tgt_q, f.atom_images());
      if (!is_lying_over(fy)) item3 = false;
    }
    CHECK(item3 == is_going_up(mt));
  }
}

TEST_CASE("incomparability") {
  CHECK(has_incomparability(identity_morphism(chain_lattice(1))));
  CHECK_FALSE(has_incomparability(Morphism(two_lattice(), chain_lattice(1), {})));
  CHECK(has_incomparability(Morphism(two_lattice(), boolean4(), {})));
}

TEST_CASE("open maps and adjoints") {
  SUBCASE("identity adjoint is the identity") {
    MorphismTables mt(identity_morphism(chain_lattice(1)));
    auto adj = open_adjoint(mt);
    REQUIRE(adj.has_value());
    for (std::size_t b = 0; b < mt.tgt.size(); ++b) CHECK(adj->table[b] == b);
    CHECK(is_open_dual(mt));
  }
  SUBCASE("unique map from 2: adjoint collapses to 0/1") {
    Morphism f(two_lattice(), chain_lattice(1), {});
    MorphismTables mt(f);
    auto adj = open_adjoint(mt);
    REQUIRE(adj.has_value());
    for (std::size_t b = 0; b < mt.tgt.size(); ++b) {
      if (b == mt.tgt.bottom())
        CHECK(adj->table[b] == mt.src.bottom());
      else
        CHECK(adj->table[b] == mt.src.top());
    }
    CHECK(is_open_dual(mt));
  }
  SUBCASE("closed-point inclusion is not open") {
    FpLattice chain = chain_lattice(1);
    FpLattice q = quotient(chain, {{Dnf::atom(0), Rel::Zero}});
    MorphismTables mt(atom_identity_morphism(chain, q));
    CHECK_FALSE(is_open_dual(mt));
    CHECK_FALSE(open_adjoint(mt).has_value());
  }
  SUBCASE("theorem 8 equivalence and the image formula") {
    for (const Morphism& f : morphism_corpus()) {
      MorphismTables mt(f);
      auto adj = open_adjoint(mt);
      CHECK(adj.has_value() == is_open_dual(mt));
      if (!adj) continue;
      DualMap d = dual_map(f);
      for (std::size_t b = 0; b < mt.tgt.size(); ++b) {
        // f*(D(b)) = D(adj(b))
        std::vector<bool> img(d.target_space.size(), false);
        for (std::size_t q = 0; q < d.source_space.size(); ++q)
          if (mt.tgt.rep(b).eval(d.source_space.point(q)))
            img[d.point_image[q]] = true;
        auto expect = d.target_space.basic_open(adj->reps[b]);
        CHECK(img == expect);
      }
      // Adjoint identities 2a, 2c, 2d.
      for (std::size_t a = 0; a < mt.src.size(); ++a)
        for (std::size_t b = 0; b < mt.tgt.size(); ++b) {
          CHECK(mt.tgt.leq(b, mt.img[adj->table[b]]) ==
                mt.src.leq(adj->table[b], adj->table[b]));  // b <= f(adj b)
          std::size_t lhs = adj->table[mt.tgt.meet(mt.img[a], b)];
          CHECK(lhs == mt.src.meet(a, adj->table[b]));  // 2c
          std::size_t ffa = adj->table[mt.img[a]];
          CHECK(ffa == mt.src.meet(adj->table[mt.tgt.top()], a));  // 2d
        }
    }
  }
}

TEST_CASE("theorem 6 dictionary") {
  for (const Morphism& f : morphism_corpus()) {
    MorphismTables mt(f);
    CHECK(is_injective(mt) == dual_surjective(f));
    // Surjective lattice maps dualize to subspectral embeddings.
    if (f.source().atom_count() <= 3 && f.target().atom_count() <= 3)
      CHECK(is_surjective(mt) == is_subspectral_image(f));
  }
}

TEST_CASE("quotient map recognition") {
  FpLattice chain = chain_lattice(1);
  Dnf a = Dnf::atom(0);
  FpLattice q = quotient(chain, {{a, Rel::Zero}});
  MorphismTables mt(atom_identity_morphism(chain, q));
  CHECK(is_quotient_by_ideal(mt, a));
  CHECK_FALSE(is_quotient_by_ideal(mt, Dnf::bottom()));
  FpLattice qf = quotient(chain, {{a, Rel::One}});
  MorphismTables mtf(atom_identity_morphism(chain, qf));
  CHECK(is_quotient_by_filter(mtf, a));
  CHECK_FALSE(is_quotient_by_ideal(mtf, a));
}
