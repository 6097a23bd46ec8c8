#ifndef SPECTRA_SPECTRUM_HPP_
#define SPECTRA_SPECTRUM_HPP_

#include <string>
#include <vector>

#include "spectra/lattice.hpp"

namespace spectra {

// A prime of a finitely presented lattice, given by its valuation; the ideal
// is the set of elements evaluating to 0.
struct PrimePoint {
  Valuation valuation = 0;
};

// Finite spectral space: the primes with the specialization order
// p <= q iff ideal(p) is contained in ideal(q) (q lies in the closure of p).
class FiniteSpectralSpace {
 public:
  FiniteSpectralSpace(std::size_t atom_count, std::vector<Valuation> points)
      : atom_count_(atom_count), points_(std::move(points)) {}

  std::size_t size() const { return points_.size(); }
  std::size_t atom_count() const { return atom_count_; }
  Valuation point(std::size_t i) const { return points_[i]; }
  const std::vector<Valuation>& points() const { return points_; }

  // q in the closure of p: every element outside p's ideal... dually, the
  // one-set of q is contained in the one-set of p.
  bool specializes(std::size_t p, std::size_t q) const {
    return (points_[q] & ~points_[p]) == 0;
  }

  std::string point_name(std::size_t i) const;

  // D(u) as a point membership mask.
  std::vector<bool> basic_open(const Dnf& u) const;
  bool is_open(const std::vector<bool>& s) const;  // down-closed point sets

 private:
  std::size_t atom_count_;
  std::vector<Valuation> points_;
};

FiniteSpectralSpace spec(const FpLattice& t);

// The lattice of quasi-compact opens, presented with one generator per
// principal down-set of the specialization poset.
FpLattice oqc(const FiniteSpectralSpace& x);

struct DualityWitness {
  FpLattice image;              // oqc(spec(t))
  std::vector<Dnf> forward;     // atom of t -> element of image  (u -> D(u))
  std::vector<Dnf> backward;    // atom of image -> element of t
};

// The map u -> D(u) into oqc(spec(t)) together with its inverse data.
DualityWitness duality_witness(const FpLattice& t);

// Quotient presenting the patch closure of the point set Z (Theorem 1(4)).
FpLattice patch_closure_quotient(const FpLattice& t,
                                 const std::vector<std::size_t>& z_points);

struct PointClassification {
  std::vector<std::size_t> max_points;
  std::vector<std::size_t> min_points;
  std::vector<std::size_t> jspec_points;  // primes that equal the meet of the
                                          // maximal ideals above them
  FiniteSpectralSpace jspec_space;        // Spec(He(t))
};

PointClassification classify_points(const FpLattice& t);

// Witness criteria for normality of the spectrum.
bool is_normal(const FpLattice& t);
bool is_completely_normal(const FpLattice& t);

// Graphviz digraph of the specialization poset (one edge per covering pair).
std::string specialization_dot(const FiniteSpectralSpace& x);

}  // namespace spectra

#endif  // SPECTRA_SPECTRUM_HPP_
