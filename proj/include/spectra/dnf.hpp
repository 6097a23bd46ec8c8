#ifndef SPECTRA_DNF_HPP_
#define SPECTRA_DNF_HPP_

#include <string>
#include <vector>

#include "spectra/entailment.hpp"

namespace spectra {

// Join-of-meets normal form: each term is a nonempty atom set standing for
// its meet, the term list stands for their join. The empty list is 0 and the
// single empty term is 1; absorption keeps the terms an antichain.
class Dnf {
 public:
  Dnf() = default;  // bottom
  static Dnf bottom() { return Dnf(); }
  static Dnf top() { return Dnf(std::vector<AtomSet>{0}); }
  static Dnf atom(AtomId a) { return Dnf(std::vector<AtomSet>{atom_bit(a)}); }
  static Dnf term(AtomSet atoms) { return Dnf(std::vector<AtomSet>{atoms}); }
  static Dnf from_terms(std::vector<AtomSet> terms) {
    return Dnf(std::move(terms));
  }

  const std::vector<AtomSet>& terms() const { return terms_; }
  bool is_bottom() const { return terms_.empty(); }
  bool is_top() const { return terms_.size() == 1 && terms_[0] == 0; }
  AtomSet atoms_used() const;

  bool eval(Valuation v) const {
    for (AtomSet t : terms_)
      if ((t & v) == t) return true;
    return false;
  }

  // Conjunctive form: minimal clauses C with this = /\_C \/C. Bottom yields
  // the single empty clause, top yields no clause.
  std::vector<AtomSet> cnf_clauses() const;

  std::string to_string(const Presentation& p) const;

  friend Dnf meet(const Dnf& u, const Dnf& v);
  friend Dnf join(const Dnf& u, const Dnf& v);
  friend bool operator==(const Dnf&, const Dnf&) = default;
  friend auto operator<=>(const Dnf&, const Dnf&) = default;

 private:
  explicit Dnf(std::vector<AtomSet> terms);
  std::vector<AtomSet> terms_;
};

// Removes duplicates and superset terms, sorts; shared with cnf minimization.
std::vector<AtomSet> minimize_antichain(std::vector<AtomSet> sets);

Dnf meet(const Dnf& u, const Dnf& v);
Dnf join(const Dnf& u, const Dnf& v);

struct PrincipalIdeal {
  Dnf generator;
};
struct PrincipalFilter {
  Dnf generator;
};

}  // namespace spectra

#endif  // SPECTRA_DNF_HPP_
