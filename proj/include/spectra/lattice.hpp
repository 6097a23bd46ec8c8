#ifndef SPECTRA_LATTICE_HPP_
#define SPECTRA_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spectra/dnf.hpp"
#include "spectra/entailment.hpp"

namespace spectra {

// A finitely presented bounded distributive lattice; the saturation is
// computed once at construction and cached.
class FpLattice {
 public:
  explicit FpLattice(Presentation p);

  const Presentation& presentation() const { return sat_.presentation; }
  const SaturatedRelation& saturation() const { return sat_; }
  std::size_t atom_count() const { return sat_.presentation.atom_count(); }

  // Order decision via the syntactic engine: u <= v iff every term A of u
  // entails every minimal clause of v.
  bool leq(const Dnf& u, const Dnf& v) const;
  bool equal(const Dnf& u, const Dnf& v) const { return leq(u, v) && leq(v, u); }
  bool is_trivial() const { return trivial_; }

 private:
  SaturatedRelation sat_;
  bool trivial_;
};

// Semantic order oracle (independent of the saturation path).
bool leq_semantic(const FpLattice& t, const Dnf& u, const Dnf& v);

// Canonical element enumeration for lattices on at most kMaxElementAtoms
// atoms. Elements are identified by their fingerprint: the bit vector of
// values over all models of the presentation. Meets and joins are bitwise.
class ElementTable {
 public:
  explicit ElementTable(const FpLattice& t);

  std::size_t size() const { return reps_.size(); }
  const Dnf& rep(std::size_t cls) const { return reps_[cls]; }
  std::uint64_t fingerprint(std::size_t cls) const { return fps_[cls]; }
  std::size_t cls(const Dnf& u) const;
  std::size_t cls_of_fingerprint(std::uint64_t fp) const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const {
    return cls_of_fingerprint(fps_[a] & fps_[b]);
  }
  std::size_t join(std::size_t a, std::size_t b) const {
    return cls_of_fingerprint(fps_[a] | fps_[b]);
  }
  bool leq(std::size_t a, std::size_t b) const {
    return (fps_[a] & ~fps_[b]) == 0;
  }

  const std::vector<Valuation>& model_masks() const { return model_masks_; }
  std::uint64_t eval_fingerprint(const Dnf& u) const;

 private:
  std::vector<Valuation> model_masks_;
  std::vector<Dnf> reps_;
  std::vector<std::uint64_t> fps_;
  std::unordered_map<std::uint64_t, std::size_t> by_fp_;
  std::size_t bottom_ = 0, top_ = 0;
};

// Number of distinct elements, including 0 and 1.
std::size_t element_count(const FpLattice& t);

enum class Rel { Zero, One };

// Adds the axioms forcing each element to 0 or 1 and re-saturates; the
// quotient morphism is atom-identity.
FpLattice quotient(const FpLattice& t,
                   const std::vector<std::pair<Dnf, Rel>>& rels);

// Membership in the Jacobson radical of the principal ideal J: true iff for
// every x, a \/ x = 1 implies gen \/ x = 1.
bool jacobson_radical_member(const FpLattice& t, const Dnf& a,
                             const PrincipalIdeal& J);

// Quotient by the preorder a <= b iff a lies in the radical of (b); the
// canonical map is atom-identity.
FpLattice heitmann_lattice(const FpLattice& t);

// Largest y with y /\ b <= a.
Dnf residual(const FpLattice& t, const Dnf& a, const Dnf& b);

struct BooleanEnvelope {
  FpLattice lattice;
  std::vector<Dnf> atom_images;  // one per atom of the source
};

// Boolean algebra generated by the images of t in the powerset of its
// spectrum, presented over one fresh atom per prime.
BooleanEnvelope boolean_envelope(const FpLattice& t);

// An explicitly tabulated finite poset/lattice, used to re-present concrete
// lattices (Zariski lattices of finite rings, inverse limits) as FpLattices.
struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;  // leq[i][j] iff i <= j

  std::size_t size() const { return labels.size(); }
};

// The lattice of down-sets of a poset, presented with one generator per
// poset element (the principal down-sets).
FpLattice downset_lattice(const FinitePoset& poset);

struct FiniteLatticePresentation {
  FpLattice lattice;
  std::vector<Dnf> element_images;  // poset element -> Dnf over the result
};

// Re-presents a tabulated finite lattice via its join-irreducibles.
// `poset.leq` must be a lattice order. Element i maps to the join of the
// irreducibles below it.
FiniteLatticePresentation present_finite_lattice(const FinitePoset& poset);

}  // namespace spectra

#endif  // SPECTRA_LATTICE_HPP_
