#ifndef SPECTRA_MORPHISM_HPP_
#define SPECTRA_MORPHISM_HPP_

#include <optional>
#include <vector>

#include "spectra/lattice.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

// A bounded-lattice morphism given by its values on the source generators.
// Construction verifies that every source axiom is preserved.
class Morphism {
 public:
  Morphism(FpLattice source, FpLattice target, std::vector<Dnf> atom_images);

  const FpLattice& source() const { return source_; }
  const FpLattice& target() const { return target_; }
  const std::vector<Dnf>& atom_images() const { return images_; }

  Dnf apply(const Dnf& u) const;

 private:
  FpLattice source_, target_;
  std::vector<Dnf> images_;
};

Morphism identity_morphism(const FpLattice& t);
// Generator-wise identity into a lattice presented over the same atoms.
Morphism atom_identity_morphism(const FpLattice& src, const FpLattice& dst);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f

// Shared element tables; most predicates below take this to avoid
// re-enumerating elements.
struct MorphismTables {
  explicit MorphismTables(const Morphism& f);
  const Morphism& f;
  ElementTable src, tgt;
  std::vector<std::size_t> img;  // source class -> target class
};

// Spec(f): maps each target prime to its preimage prime.
struct DualMap {
  FiniteSpectralSpace source_space;  // Spec(target of f)
  FiniteSpectralSpace target_space;  // Spec(source of f)
  std::vector<std::size_t> point_image;  // per prime of f's target
};
DualMap dual_map(const Morphism& f);

// Lemma 2 generator criterion; equals surjectivity of the dual map.
bool is_lying_over(const Morphism& f);

// Theorem 7 element criteria and their chain-lifting oracles.
bool is_going_up(const MorphismTables& mt);
bool is_going_down(const MorphismTables& mt);
bool going_up_oracle(const Morphism& f);
bool going_down_oracle(const Morphism& f);

// The going-up criterion in its sequent reading (Proposition 2, item 4).
bool fiber_lying_over_criterion(const MorphismTables& mt);

// No two distinct comparable primes of the target share an image.
bool has_incomparability(const Morphism& f);

struct Adjoint {
  std::vector<std::size_t> table;  // target class -> source class
  std::vector<Dnf> reps;           // same, as source elements
};

// Lower adjoint witnessing openness of Spec(f) (Theorem 8); empty when
// condition 2b fails.
std::optional<Adjoint> open_adjoint(const MorphismTables& mt);

// Oracle: the dual image of every basic open is open.
bool is_open_dual(const MorphismTables& mt);

// Theorem 6 ingredients.
bool is_injective(const MorphismTables& mt);
bool is_surjective(const MorphismTables& mt);
bool dual_surjective(const Morphism& f);
bool dual_injective(const Morphism& f);

// Theorem 1(1)-(2): the dual of f embeds Spec(target) as a subspectral
// space (dual injective and the opens of the image are restrictions).
bool is_subspectral_image(const Morphism& f);

// Checks that f is the quotient map by the principal ideal generated by s:
// f surjective and f(x) <= f(y) iff x <= y \/ s.
bool is_quotient_by_ideal(const MorphismTables& mt, const Dnf& s);
// Dual form: quotient by the principal filter generated by s.
bool is_quotient_by_filter(const MorphismTables& mt, const Dnf& s);

// f and g compose to the identity both ways.
bool is_isomorphism_pair(const Morphism& f, const Morphism& g);

}  // namespace spectra

#endif  // SPECTRA_MORPHISM_HPP_
