#ifndef SPECTRA_GLUING_HPP_
#define SPECTRA_GLUING_HPP_

#include <map>
#include <vector>

#include "spectra/morphism.hpp"

namespace spectra {

struct PrincipalCover {
  FpLattice lattice;
  std::vector<Dnf> generators;
};

// The principal ideals (resp. filters) on the generators intersect in {0}
// (resp. {1}); checked exhaustively.
bool is_cover_ideals(const PrincipalCover& c);
bool is_cover_filters(const PrincipalCover& c);

// Chinese remainder recombination: an x with x = x_i mod (s_i = 0) for each
// i, given pairwise compatibility. Unique modulo the intersection ideal.
Dnf crt_recover(const PrincipalCover& c, const std::vector<Dnf>& xs);

// Quotient diagram data for the gluing construction. Index set {0..n-1};
// overlaps stored once for i < j; projections for ordered pairs i != j map
// lattice[i] onto overlap[{min,max}]. Triple data appears when n >= 3.
struct QuotientDiagram {
  std::vector<FpLattice> lattice;
  std::map<std::pair<int, int>, FpLattice> overlap;       // key i < j
  std::map<std::tuple<int, int, int>, FpLattice> triple;  // key i < j < k
  std::map<std::pair<int, int>, Morphism> proj;           // pi_ij, any i != j
  // pi_ijk : overlap(i,j) -> triple(sorted i,j,k), keyed (i, j, k), i < j.
  std::map<std::tuple<int, int, int>, Morphism> proj3;
  std::map<std::pair<int, int>, Dnf> glue;  // s_ij in lattice[i]
};

struct GluedLattice {
  FpLattice limit;
  std::vector<Morphism> projections;  // limit -> lattice[i]
  std::vector<Dnf> cover_elements;    // s_i with pi_i(s_j) = s_ij
};

// Validates the diagram conditions and computes the inverse limit as the
// sublattice of compatible tuples, re-presented over its join-irreducibles.
GluedLattice limit_of_diagram(const QuotientDiagram& d);

// Fact-1 diagram for a principal cover: T_i = T/(s_i = 0),
// T_ij = T/(s_i \/ s_j = 0), atom-identity projections.
QuotientDiagram cover_diagram(const PrincipalCover& c);

// The canonical map of the covered lattice into the limit of its cover
// diagram; an isomorphism exactly when the generators form a cover.
Morphism canonical_into_limit(const PrincipalCover& c, const GluedLattice& g);

}  // namespace spectra

#endif  // SPECTRA_GLUING_HPP_
