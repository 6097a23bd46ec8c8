#ifndef SPECTRA_TESTS_CORPUS_HPP_
#define SPECTRA_TESTS_CORPUS_HPP_

#include <random>
#include <string>
#include <vector>

#include "spectra/lattice.hpp"

namespace spectra::testing {

// Free bounded distributive lattice on n generators a, b, c, ...
inline Presentation free_presentation(int n) {
  Presentation p;
  for (int i = 0; i < n; ++i) p.add_atom(std::string(1, static_cast<char>('a' + i)));
  return p;
}

inline FpLattice free_lattice(int n) { return FpLattice(free_presentation(n)); }

// Chain 0 < a1 < ... < ak < 1 (k atoms, k + 2 elements).
inline FpLattice chain_lattice(int atoms) {
  Presentation p = free_presentation(atoms);
  for (int i = 0; i + 1 < atoms; ++i)
    p.add_axiom(Sequent{atom_bit(static_cast<AtomId>(i)),
                        atom_bit(static_cast<AtomId>(i + 1))});
  return FpLattice(std::move(p));
}

// {0, u, w, 1} with u /\ w = 0, u \/ w = 1.
inline FpLattice boolean4() {
  Presentation p;
  p.add_atom("u");
  p.add_atom("w");
  p.add_axiom(Sequent{0b11, 0});
  p.add_axiom(Sequent{0, 0b11});
  return FpLattice(std::move(p));
}

// {0, a /\ b, a, b, 1}: free on two generators with a \/ b = 1.
inline FpLattice diamond5() {
  Presentation p = free_presentation(2);
  p.add_axiom(Sequent{0, 0b11});
  return FpLattice(std::move(p));
}

inline FpLattice trivial_lattice() {
  Presentation p;
  p.add_axiom(Sequent{0, 0});
  return FpLattice(std::move(p));
}

// Two-element lattice presented with no generators.
inline FpLattice two_lattice() { return FpLattice(Presentation{}); }

// Seeded random presentation; sequent sides are small random subsets.
inline Presentation random_presentation(std::mt19937& rng, int max_atoms,
                                        int max_axioms) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  int n = natoms(rng);
  Presentation p = free_presentation(n);
  std::uniform_int_distribution<int> naxioms(0, max_axioms);
  std::uniform_int_distribution<int> side_size(0, 3);
  std::uniform_int_distribution<int> pick(0, n - 1);
  int k = naxioms(rng);
  for (int i = 0; i < k; ++i) {
    Sequent s;
    for (int j = side_size(rng); j > 0; --j) s.ante |= atom_bit(pick(rng));
    for (int j = side_size(rng); j > 0; --j) s.succ |= atom_bit(pick(rng));
    p.add_axiom(s);
  }
  return p;
}

inline Sequent random_sequent(std::mt19937& rng, const Presentation& p) {
  std::uniform_int_distribution<int> side_size(0, 3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(p.atom_count()) - 1);
  Sequent s;
  for (int j = side_size(rng); j > 0; --j) s.ante |= atom_bit(pick(rng));
  for (int j = side_size(rng); j > 0; --j) s.succ |= atom_bit(pick(rng));
  return s;
}

// Small named corpus shared by the element-level tests.
inline std::vector<FpLattice> small_corpus() {
  std::vector<FpLattice> out;
  out.push_back(two_lattice());
  out.push_back(trivial_lattice());
  out.push_back(free_lattice(1));
  out.push_back(free_lattice(2));
  out.push_back(free_lattice(3));
  out.push_back(chain_lattice(2));
  out.push_back(chain_lattice(3));
  out.push_back(boolean4());
  out.push_back(diamond5());
  return out;
}

}  // namespace spectra::testing

#endif  // SPECTRA_TESTS_CORPUS_HPP_
