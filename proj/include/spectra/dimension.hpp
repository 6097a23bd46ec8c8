#ifndef SPECTRA_DIMENSION_HPP_
#define SPECTRA_DIMENSION_HPP_

#include <vector>

#include "spectra/morphism.hpp"

namespace spectra {

// Checks the complementary-sequence chain:
//   1 <= y_n \/ x_n,  y_i /\ x_i <= y_{i-1} \/ x_{i-1},  y_0 /\ x_0 <= 0.
bool is_complementary(const FpLattice& t, const std::vector<Dnf>& xs,
                      const std::vector<Dnf>& ys);

// Krull dimension <= n via complementary sequences, exhaustively over all
// element sequences. n = -1 asks for an empty spectrum.
bool kdim_leq(const FpLattice& t, int n, const CancelToken* cancel = nullptr);

// Brute-force oracle: edge length of the longest specialization chain; -1
// for the empty spectrum.
int kdim_chains(const FpLattice& t);

// Relative dimension criterion for an inclusion f (Theorem 10(2)); bounded
// search over at most k_max auxiliary elements of the source. Exhausting the
// bound is inconclusive, never a refutation.
Tri relative_kdim_leq(const MorphismTables& mt, int n, int k_max = 3,
                      const CancelToken* cancel = nullptr);

// Fiber oracle: longest specialization chain inside one fiber of Spec(f).
int relative_kdim_oracle(const Morphism& f);

bool is_zero_dimensional(const FpLattice& t);

}  // namespace spectra

#endif  // SPECTRA_DIMENSION_HPP_
