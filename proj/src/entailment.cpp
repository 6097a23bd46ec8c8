#include "spectra/entailment.hpp"

#include <algorithm>
#include <deque>

namespace spectra {

AtomId Presentation::add_atom(std::string name) {
  if (index_.count(name)) throw Error("duplicate atom '" + name + "'");
  if (names_.size() >= Limits::kMaxAtoms)
    throw CapacityError("presentations are limited to 64 atoms");
  AtomId id = static_cast<AtomId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

AtomId Presentation::intern(std::string_view name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  return add_atom(std::string(name));
}

std::optional<AtomId> Presentation::find_atom(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Presentation::add_axiom(Sequent s) {
  AtomSet uni = atom_universe();
  if ((s.ante & ~uni) || (s.succ & ~uni))
    throw UnknownAtomError("axiom mentions an undeclared atom");
  axioms_.push_back(s);
}

namespace {

// Insert with forward and backward subsumption; newly inserted sequents are
// appended to the worklist.
struct Saturator {
  std::vector<Sequent> minimal;
  std::deque<Sequent> work;

  bool subsumed(const Sequent& s) const {
    if (s.tautological()) return true;
    for (const Sequent& t : minimal)
      if (t.subsumes(s)) return true;
    return false;
  }

  void insert(const Sequent& s) {
    if (subsumed(s)) return;
    std::erase_if(minimal, [&](const Sequent& t) { return s.subsumes(t); });
    minimal.push_back(s);
    work.push_back(s);
  }
};

}  // namespace

SaturatedRelation saturate(Presentation p) {
  Saturator sat;
  for (const Sequent& ax : p.axioms()) sat.insert(ax);

  while (!sat.work.empty()) {
    Sequent given = sat.work.front();
    sat.work.pop_front();
    // The given sequent may have been pruned since it was queued.
    if (std::find(sat.minimal.begin(), sat.minimal.end(), given) ==
        sat.minimal.end())
      continue;
    std::vector<Sequent> snapshot = sat.minimal;
    for (const Sequent& other : snapshot) {
      // Resolve on each atom shared between one succedent and the other
      // antecedent: from (A1 |- B1, x) and (A2, x |- B2) derive
      // (A1, A2 |- B1, B2).
      for (int dir = 0; dir < 2; ++dir) {
        const Sequent& s1 = dir == 0 ? given : other;
        const Sequent& s2 = dir == 0 ? other : given;
        AtomSet pivots = s1.succ & s2.ante;
        while (pivots) {
          AtomSet x = pivots & (~pivots + 1);
          pivots &= pivots - 1;
          Sequent r{s1.ante | (s2.ante & ~x), (s1.succ & ~x) | s2.succ};
          sat.insert(r);
        }
      }
    }
  }
  std::sort(sat.minimal.begin(), sat.minimal.end());
  return SaturatedRelation{std::move(p), std::move(sat.minimal)};
}

bool entails(const SaturatedRelation& r, const Sequent& q) {
  AtomSet uni = r.presentation.atom_universe();
  if ((q.ante & ~uni) || (q.succ & ~uni))
    throw UnknownAtomError("sequent mentions an undeclared atom");
  if (q.tautological()) return true;
  for (const Sequent& s : r.minimal)
    if (s.subsumes(q)) return true;
  return false;
}

std::vector<Valuation> models(const Presentation& p) {
  std::size_t n = p.atom_count();
  if (n > static_cast<std::size_t>(Limits::max_model_atoms()))
    throw CapacityError("valuation enumeration capped at " +
                        std::to_string(Limits::max_model_atoms()) + " atoms");
  std::vector<Valuation> out;
  const auto& axioms = p.axioms();
  for (Valuation v = 0; v < (Valuation{1} << n); ++v) {
    bool ok = true;
    for (const Sequent& s : axioms)
      if (!satisfies(v, s)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

bool entails_semantic(const Presentation& p, const Sequent& q) {
  AtomSet uni = p.atom_universe();
  if ((q.ante & ~uni) || (q.succ & ~uni))
    throw UnknownAtomError("sequent mentions an undeclared atom");
  for (Valuation v : models(p))
    if (!satisfies(v, q)) return false;
  return true;
}

}  // namespace spectra
