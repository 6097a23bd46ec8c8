#ifndef SPECTRA_ENTAILMENT_HPP_
#define SPECTRA_ENTAILMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/base.hpp"

namespace spectra {

using AtomId = std::uint32_t;

// A finite atom set, one bit per atom of the owning presentation.
using AtomSet = std::uint64_t;

inline AtomSet atom_bit(AtomId a) { return AtomSet{1} << a; }

// ante |- succ over atom sets. An empty ante reads "1 <= \/succ", an empty
// succ reads "/\ante <= 0".
struct Sequent {
  AtomSet ante = 0;
  AtomSet succ = 0;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend auto operator<=>(const Sequent&, const Sequent&) = default;

  bool subsumes(const Sequent& o) const {
    return (ante & ~o.ante) == 0 && (succ & ~o.succ) == 0;
  }
  // a |- a instances are never stored; they subsume via this check.
  bool tautological() const { return (ante & succ) != 0; }
};

class Presentation {
 public:
  AtomId add_atom(std::string name);
  AtomId intern(std::string_view name);  // add if missing
  std::optional<AtomId> find_atom(std::string_view name) const;
  const std::string& atom_name(AtomId a) const { return names_[a]; }
  std::size_t atom_count() const { return names_.size(); }
  AtomSet atom_universe() const {
    std::size_t n = names_.size();
    return n >= 64 ? ~AtomSet{0} : (AtomSet{1} << n) - 1;
  }

  void add_axiom(Sequent s);
  const std::vector<Sequent>& axioms() const { return axioms_; }
  const std::vector<std::string>& atom_names() const { return names_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::string, AtomId, std::less<>> index_;
  std::vector<Sequent> axioms_;
};

// Closure of the axioms (plus implicit reflexivity) under weakening and cut,
// stored by its subsumption-minimal sequents.
struct SaturatedRelation {
  Presentation presentation;
  std::vector<Sequent> minimal;
};

SaturatedRelation saturate(Presentation p);

// Decides whether q lies in the generated entailment relation.
bool entails(const SaturatedRelation& r, const Sequent& q);

// A total two-valued assignment, bit a = value of atom a. Satisfies (A,B)
// unless it maps all of A to 1 and all of B to 0.
using Valuation = std::uint64_t;

inline bool satisfies(Valuation v, const Sequent& s) {
  return (s.ante & ~v) != 0 || (s.succ & v) != 0;
}

// All valuations satisfying every axiom, i.e. the lattice morphisms to 2.
std::vector<Valuation> models(const Presentation& p);

// Independent semantic oracle for `entails`.
bool entails_semantic(const Presentation& p, const Sequent& q);

}  // namespace spectra

#endif  // SPECTRA_ENTAILMENT_HPP_
