#include "spectra/lattice.hpp"

#include <algorithm>
#include <functional>

namespace spectra {

FpLattice::FpLattice(Presentation p) : sat_(saturate(std::move(p))) {
  trivial_ = entails(sat_, Sequent{0, 0});
}

bool FpLattice::leq(const Dnf& u, const Dnf& v) const {
  AtomSet uni = sat_.presentation.atom_universe();
  if ((u.atoms_used() & ~uni) || (v.atoms_used() & ~uni))
    throw UnknownAtomError("element mentions an undeclared atom");
  std::vector<AtomSet> clauses = v.cnf_clauses();
  for (AtomSet term : u.terms())
    for (AtomSet c : clauses)
      if (!entails(sat_, Sequent{term, c})) return false;
  return true;
}

bool leq_semantic(const FpLattice& t, const Dnf& u, const Dnf& v) {
  for (Valuation m : models(t.presentation()))
    if (u.eval(m) && !v.eval(m)) return false;
  return true;
}

ElementTable::ElementTable(const FpLattice& t) {
  std::size_t n = t.atom_count();
  if (n > Limits::kMaxElementAtoms)
    throw CapacityError("element enumeration capped at " +
                        std::to_string(Limits::kMaxElementAtoms) + " atoms");
  model_masks_ = models(t.presentation());

  auto note = [&](const Dnf& d) {
    std::uint64_t fp = eval_fingerprint(d);
    if (by_fp_.emplace(fp, reps_.size()).second) {
      reps_.push_back(d);
      fps_.push_back(fp);
    }
  };

  // All antichains of nonempty atom subsets, in lexicographic order, plus 1.
  std::vector<AtomSet> cur;
  AtomSet full = t.presentation().atom_universe();
  std::function<void(AtomSet)> rec = [&](AtomSet start) {
    note(Dnf::from_terms(cur));
    for (AtomSet s = start; s <= full; ++s) {
      bool incomparable = true;
      for (AtomSet chosen : cur)
        if ((chosen & ~s) == 0 || (s & ~chosen) == 0) {
          incomparable = false;
          break;
        }
      if (incomparable) {
        cur.push_back(s);
        rec(s + 1);
        cur.pop_back();
      }
    }
  };
  rec(1);
  note(Dnf::top());

  bottom_ = cls(Dnf::bottom());
  top_ = cls(Dnf::top());
}

std::uint64_t ElementTable::eval_fingerprint(const Dnf& u) const {
  std::uint64_t fp = 0;
  for (std::size_t i = 0; i < model_masks_.size(); ++i)
    if (u.eval(model_masks_[i])) fp |= std::uint64_t{1} << i;
  return fp;
}

std::size_t ElementTable::cls(const Dnf& u) const {
  return cls_of_fingerprint(eval_fingerprint(u));
}

std::size_t ElementTable::cls_of_fingerprint(std::uint64_t fp) const {
  auto it = by_fp_.find(fp);
  if (it == by_fp_.end()) throw Error("fingerprint outside the lattice");
  return it->second;
}

std::size_t element_count(const FpLattice& t) {
  return ElementTable(t).size();
}

FpLattice quotient(const FpLattice& t,
                   const std::vector<std::pair<Dnf, Rel>>& rels) {
  Presentation p = t.presentation();
  for (const auto& [x, rel] : rels) {
    if (rel == Rel::Zero) {
      for (AtomSet term : x.terms()) p.add_axiom(Sequent{term, 0});
    } else {
      for (AtomSet clause : x.cnf_clauses()) p.add_axiom(Sequent{0, clause});
    }
  }
  return FpLattice(std::move(p));
}

bool jacobson_radical_member(const FpLattice& t, const Dnf& a,
                             const PrincipalIdeal& J) {
  ElementTable et(t);
  std::size_t ca = et.cls(a), cg = et.cls(J.generator);
  for (std::size_t x = 0; x < et.size(); ++x) {
    if (et.join(ca, x) == et.top() && et.join(cg, x) != et.top()) return false;
  }
  return true;
}

FpLattice heitmann_lattice(const FpLattice& t) {
  ElementTable et(t);
  std::size_t n = et.size();
  // he_leq[u][v]: u lies in the Jacobson radical of (v).
  std::vector<std::vector<bool>> he_leq(n, std::vector<bool>(n, true));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t x = 0; x < n; ++x)
        if (et.join(u, x) == et.top() && et.join(v, x) != et.top()) {
          he_leq[u][v] = false;
          break;
        }

  Presentation p = t.presentation();
  AtomSet full = t.presentation().atom_universe();
  for (AtomSet A = 0; A <= full; ++A) {
    AtomSet rest = full & ~A;
    // Enumerate subsets B of the complement of A.
    AtomSet B = rest;
    while (true) {
      std::vector<AtomSet> join_terms;
      for (AtomSet b = B; b;) {
        AtomSet bit = b & (~b + 1);
        b &= b - 1;
        join_terms.push_back(bit);
      }
      std::size_t cu = et.cls(Dnf::term(A));
      std::size_t cv = et.cls(Dnf::from_terms(join_terms));
      if (he_leq[cu][cv]) p.add_axiom(Sequent{A, B});
      if (B == 0) break;
      B = (B - 1) & rest;
    }
  }
  return FpLattice(std::move(p));
}

Dnf residual(const FpLattice& t, const Dnf& a, const Dnf& b) {
  ElementTable et(t);
  std::size_t ca = et.cls(a), cb = et.cls(b);
  std::size_t acc = et.bottom();
  for (std::size_t y = 0; y < et.size(); ++y)
    if (et.leq(et.meet(y, cb), ca)) acc = et.join(acc, y);
  return et.rep(acc);
}

namespace {

std::string valuation_bits(Valuation v, std::size_t atom_count) {
  std::string s;
  for (std::size_t i = 0; i < atom_count; ++i)
    s += (v >> i) & 1 ? '1' : '0';
  return s;
}

}  // namespace

BooleanEnvelope boolean_envelope(const FpLattice& t) {
  if (t.atom_count() > Limits::kMaxElementAtoms)
    throw CapacityError("boolean envelope capped at " +
                        std::to_string(Limits::kMaxElementAtoms) + " atoms");
  std::vector<Valuation> points = models(t.presentation());
  Presentation p;
  for (Valuation v : points) p.add_atom("p" + valuation_bits(v, t.atom_count()));
  std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      p.add_axiom(Sequent{atom_bit(static_cast<AtomId>(i)) |
                              atom_bit(static_cast<AtomId>(j)),
                          0});
  AtomSet all = n == 0 ? 0 : (AtomSet{1} << n) - 1;
  p.add_axiom(Sequent{0, all});

  std::vector<Dnf> images;
  for (std::size_t a = 0; a < t.atom_count(); ++a) {
    std::vector<AtomSet> terms;
    for (std::size_t i = 0; i < n; ++i)
      if ((points[i] >> a) & 1) terms.push_back(atom_bit(static_cast<AtomId>(i)));
    images.push_back(Dnf::from_terms(std::move(terms)));
  }
  return BooleanEnvelope{FpLattice(std::move(p)), std::move(images)};
}

FpLattice downset_lattice(const FinitePoset& poset) {
  std::size_t n = poset.size();
  Presentation p;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = poset.labels[i];
    if (p.find_atom(name)) name += "#" + std::to_string(i);
    p.add_atom(std::move(name));
  }
  if (n == 0) {
    p.add_axiom(Sequent{0, 0});
    return FpLattice(std::move(p));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && poset.leq[i][j])
        p.add_axiom(Sequent{atom_bit(static_cast<AtomId>(i)),
                            atom_bit(static_cast<AtomId>(j))});
  // 1 is the join of the maximal elements.
  AtomSet maximal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && poset.leq[i][j] && !poset.leq[j][i]) {
        is_max = false;
        break;
      }
    if (is_max) maximal |= atom_bit(static_cast<AtomId>(i));
  }
  p.add_axiom(Sequent{0, maximal});
  // Pairwise meets decompose into maximal common lower bounds.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (poset.leq[i][j] || poset.leq[j][i]) continue;
      std::vector<std::size_t> lbs;
      for (std::size_t r = 0; r < n; ++r)
        if (poset.leq[r][i] && poset.leq[r][j]) lbs.push_back(r);
      AtomSet heads = 0;
      for (std::size_t r : lbs) {
        bool maximal_lb = true;
        for (std::size_t r2 : lbs)
          if (r2 != r && poset.leq[r][r2] && !poset.leq[r2][r]) {
            maximal_lb = false;
            break;
          }
        if (maximal_lb) heads |= atom_bit(static_cast<AtomId>(r));
      }
      p.add_axiom(Sequent{atom_bit(static_cast<AtomId>(i)) |
                              atom_bit(static_cast<AtomId>(j)),
                          heads});
    }
  return FpLattice(std::move(p));
}

FiniteLatticePresentation present_finite_lattice(const FinitePoset& poset) {
  std::size_t n = poset.size();
  auto strictly_below = [&](std::size_t a, std::size_t b) {
    return poset.leq[a][b] && !poset.leq[b][a];
  };
  // Join-irreducible: nonzero with a unique lower cover.
  std::vector<std::size_t> irr;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::size_t> covers;
    for (std::size_t c = 0; c < n; ++c) {
      if (!strictly_below(c, e)) continue;
      bool is_cover = true;
      for (std::size_t m = 0; m < n; ++m)
        if (strictly_below(c, m) && strictly_below(m, e)) {
          is_cover = false;
          break;
        }
      if (is_cover) covers.push_back(c);
    }
    if (covers.size() == 1) irr.push_back(e);
  }
  FinitePoset sub;
  for (std::size_t j : irr) sub.labels.push_back(poset.labels[j]);
  sub.leq.assign(irr.size(), std::vector<bool>(irr.size(), false));
  for (std::size_t a = 0; a < irr.size(); ++a)
    for (std::size_t b = 0; b < irr.size(); ++b)
      sub.leq[a][b] = poset.leq[irr[a]][irr[b]];

  FpLattice fp = downset_lattice(sub);
  std::vector<Dnf> images;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<AtomSet> terms;
    for (std::size_t a = 0; a < irr.size(); ++a)
      if (poset.leq[irr[a]][e]) terms.push_back(atom_bit(static_cast<AtomId>(a)));
    images.push_back(Dnf::from_terms(std::move(terms)));
  }
  return FiniteLatticePresentation{std::move(fp), std::move(images)};
}

}  // namespace spectra
