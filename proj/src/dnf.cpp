#include "spectra/dnf.hpp"

#include <algorithm>

namespace spectra {

std::vector<AtomSet> minimize_antichain(std::vector<AtomSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // A subset is numerically smaller, so only kept predecessors can absorb.
  std::vector<AtomSet> out;
  for (AtomSet s : sets) {
    bool absorbed = false;
    for (AtomSet kept : out)
      if ((kept & ~s) == 0) {
        absorbed = true;
        break;
      }
    if (!absorbed) out.push_back(s);
  }
  return out;
}

Dnf::Dnf(std::vector<AtomSet> terms) : terms_(minimize_antichain(std::move(terms))) {}

AtomSet Dnf::atoms_used() const {
  AtomSet u = 0;
  for (AtomSet t : terms_) u |= t;
  return u;
}

std::vector<AtomSet> Dnf::cnf_clauses() const {
  std::vector<AtomSet> clauses{0};
  for (AtomSet term : terms_) {
    std::vector<AtomSet> next;
    next.reserve(clauses.size() * static_cast<std::size_t>(popcount64(term)));
    for (AtomSet c : clauses) {
      AtomSet rest = term;
      while (rest) {
        AtomSet bit = rest & (~rest + 1);
        rest &= rest - 1;
        next.push_back(c | bit);
      }
    }
    clauses = minimize_antichain(std::move(next));
  }
  return clauses;
}

std::string Dnf::to_string(const Presentation& p) const {
  if (is_bottom()) return "0";
  if (is_top()) return "1";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " | ";
    AtomSet t = terms_[i];
    bool paren = popcount64(t) > 1 && terms_.size() > 1;
    if (paren) out += "(";
    bool first = true;
    while (t) {
      AtomId a = static_cast<AtomId>(__builtin_ctzll(t));
      t &= t - 1;
      if (!first) out += " & ";
      out += p.atom_name(a);
      first = false;
    }
    if (paren) out += ")";
  }
  return out;
}

Dnf meet(const Dnf& u, const Dnf& v) {
  std::vector<AtomSet> terms;
  terms.reserve(u.terms_.size() * v.terms_.size());
  for (AtomSet a : u.terms_)
    for (AtomSet b : v.terms_) terms.push_back(a | b);
  return Dnf(std::move(terms));
}

Dnf join(const Dnf& u, const Dnf& v) {
  std::vector<AtomSet> terms = u.terms_;
  terms.insert(terms.end(), v.terms_.begin(), v.terms_.end());
  return Dnf(std::move(terms));
}

}  // namespace spectra
