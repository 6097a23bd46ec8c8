#include "spectra/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spectra {

Morphism::Morphism(FpLattice source, FpLattice target,
                   std::vector<Dnf> atom_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(atom_images)) {
  if (images_.size() != source_.atom_count())
    throw MorphismError("one image per source atom required");
  AtomSet tgt_uni = target_.presentation().atom_universe();
  for (const Dnf& img : images_)
    if (img.atoms_used() & ~tgt_uni)
      throw MorphismError("image mentions an atom outside the target");
  for (const Sequent& ax : source_.presentation().axioms()) {
    Dnf lhs = Dnf::top();
    for (AtomSet a = ax.ante; a;) {
      AtomId i = static_cast<AtomId>(__builtin_ctzll(a));
      a &= a - 1;
      lhs = meet(lhs, images_[i]);
    }
    Dnf rhs = Dnf::bottom();
    for (AtomSet b = ax.succ; b;) {
      AtomId i = static_cast<AtomId>(__builtin_ctzll(b));
      b &= b - 1;
      rhs = join(rhs, images_[i]);
    }
    if (!target_.leq(lhs, rhs))
      throw MorphismError("map does not preserve a source axiom");
  }
}

Dnf Morphism::apply(const Dnf& u) const {
  Dnf out = Dnf::bottom();
  for (AtomSet term : u.terms()) {
    Dnf m = Dnf::top();
    for (AtomSet t = term; t;) {
      AtomId i = static_cast<AtomId>(__builtin_ctzll(t));
      t &= t - 1;
      m = meet(m, images_[i]);
    }
    out = join(out, m);
  }
  return out;
}

Morphism identity_morphism(const FpLattice& t) {
  return atom_identity_morphism(t, t);
}

Morphism atom_identity_morphism(const FpLattice& src, const FpLattice& dst) {
  if (src.atom_count() != dst.atom_count())
    throw MorphismError("atom-identity map needs equal atom sets");
  std::vector<Dnf> images;
  for (std::size_t a = 0; a < src.atom_count(); ++a)
    images.push_back(Dnf::atom(static_cast<AtomId>(a)));
  return Morphism(src, dst, std::move(images));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  std::vector<Dnf> images;
  for (const Dnf& u : f.atom_images()) images.push_back(g.apply(u));
  return Morphism(f.source(), g.target(), std::move(images));
}

MorphismTables::MorphismTables(const Morphism& f_)
    : f(f_), src(f_.source()), tgt(f_.target()) {
  img.reserve(src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    img.push_back(tgt.cls(f.apply(src.rep(c))));
}

DualMap dual_map(const Morphism& f) {
  FiniteSpectralSpace xq = spec(f.target());
  FiniteSpectralSpace xp = spec(f.source());
  std::map<Valuation, std::size_t> index;
  for (std::size_t i = 0; i < xp.size(); ++i) index[xp.point(i)] = i;
  std::vector<std::size_t> image;
  image.reserve(xq.size());
  for (std::size_t q = 0; q < xq.size(); ++q) {
    Valuation w = 0;
    for (std::size_t a = 0; a < f.source().atom_count(); ++a)
      if (f.atom_images()[a].eval(xq.point(q))) w |= Valuation{1} << a;
    auto it = index.find(w);
    if (it == index.end())
      throw Error("dual image is not a prime of the source");
    image.push_back(it->second);
  }
  return DualMap{std::move(xq), std::move(xp), std::move(image)};
}

bool is_lying_over(const Morphism& f) {
  std::size_t n = f.source().atom_count();
  if (n > 2 * Limits::kMaxElementAtoms)
    throw CapacityError("lying-over criterion enumerates 3^n atom sequents");
  AtomSet full = f.source().presentation().atom_universe();
  for (AtomSet A = 0; A <= full; ++A) {
    AtomSet rest = full & ~A;
    AtomSet B = rest;
    while (true) {
      Dnf lhs = Dnf::top(), rhs = Dnf::bottom();
      for (AtomSet a = A; a;) {
        AtomId i = static_cast<AtomId>(__builtin_ctzll(a));
        a &= a - 1;
        lhs = meet(lhs, f.atom_images()[i]);
      }
      for (AtomSet b = B; b;) {
        AtomId i = static_cast<AtomId>(__builtin_ctzll(b));
        b &= b - 1;
        rhs = join(rhs, f.atom_images()[i]);
      }
      if (f.target().leq(lhs, rhs) &&
          !entails(f.source().saturation(), Sequent{A, B}))
        return false;
      if (B == 0) break;
      B = (B - 1) & rest;
    }
  }
  return true;
}

bool is_going_up(const MorphismTables& mt) {
  const ElementTable& S = mt.src;
  const ElementTable& T = mt.tgt;
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t c = 0; c < S.size(); ++c)
      for (std::size_t y = 0; y < T.size(); ++y) {
        if (!T.leq(mt.img[a], T.join(mt.img[c], y))) continue;
        bool found = false;
        for (std::size_t x = 0; x < S.size(); ++x)
          if (S.leq(a, S.join(c, x)) && T.leq(mt.img[x], y)) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

bool is_going_down(const MorphismTables& mt) {
  const ElementTable& S = mt.src;
  const ElementTable& T = mt.tgt;
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t c = 0; c < S.size(); ++c)
      for (std::size_t y = 0; y < T.size(); ++y) {
        if (!T.leq(T.meet(mt.img[c], y), mt.img[a])) continue;
        bool found = false;
        for (std::size_t x = 0; x < S.size(); ++x)
          if (S.leq(S.meet(c, x), a) && T.leq(y, mt.img[x])) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

bool fiber_lying_over_criterion(const MorphismTables& mt) {
  return is_going_up(mt);
}

namespace {

bool chain_lifting(const Morphism& f, bool up) {
  DualMap d = dual_map(f);
  const FiniteSpectralSpace& XQ = d.source_space;
  const FiniteSpectralSpace& XP = d.target_space;
  for (std::size_t q = 0; q < XQ.size(); ++q) {
    std::size_t p = d.point_image[q];
    for (std::size_t p2 = 0; p2 < XP.size(); ++p2) {
      bool related = up ? XP.specializes(p, p2) : XP.specializes(p2, p);
      if (!related) continue;
      bool found = false;
      for (std::size_t q2 = 0; q2 < XQ.size(); ++q2) {
        bool q_rel = up ? XQ.specializes(q, q2) : XQ.specializes(q2, q);
        if (q_rel && d.point_image[q2] == p2) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool going_up_oracle(const Morphism& f) { return chain_lifting(f, true); }
bool going_down_oracle(const Morphism& f) { return chain_lifting(f, false); }

bool has_incomparability(const Morphism& f) {
  DualMap d = dual_map(f);
  const FiniteSpectralSpace& XQ = d.source_space;
  for (std::size_t q1 = 0; q1 < XQ.size(); ++q1)
    for (std::size_t q2 = 0; q2 < XQ.size(); ++q2) {
      if (q1 == q2 || !XQ.specializes(q1, q2)) continue;
      if (d.point_image[q1] == d.point_image[q2]) return false;
    }
  return true;
}

std::optional<Adjoint> open_adjoint(const MorphismTables& mt) {
  const ElementTable& S = mt.src;
  const ElementTable& T = mt.tgt;
  std::vector<std::size_t> table(T.size());
  for (std::size_t b = 0; b < T.size(); ++b) {
    std::size_t glb = S.top();
    for (std::size_t c = 0; c < S.size(); ++c)
      if (T.leq(b, mt.img[c])) glb = S.meet(glb, c);
    table[b] = glb;
  }
  // Condition 2b: f(a) /\ b <= f(c) iff a /\ adj(b) <= c.
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t c = 0; c < S.size(); ++c)
      for (std::size_t b = 0; b < T.size(); ++b) {
        bool lhs = T.leq(T.meet(mt.img[a], b), mt.img[c]);
        bool rhs = S.leq(S.meet(a, table[b]), c);
        if (lhs != rhs) return std::nullopt;
      }
  Adjoint out;
  out.table = std::move(table);
  for (std::size_t b = 0; b < T.size(); ++b) out.reps.push_back(S.rep(out.table[b]));
  return out;
}

bool is_open_dual(const MorphismTables& mt) {
  DualMap d = dual_map(mt.f);
  const FiniteSpectralSpace& XQ = d.source_space;
  const FiniteSpectralSpace& XP = d.target_space;
  for (std::size_t b = 0; b < mt.tgt.size(); ++b) {
    Dnf rep = mt.tgt.rep(b);
    std::vector<bool> image(XP.size(), false);
    for (std::size_t q = 0; q < XQ.size(); ++q)
      if (rep.eval(XQ.point(q))) image[d.point_image[q]] = true;
    if (!XP.is_open(image)) return false;
  }
  return true;
}

bool is_injective(const MorphismTables& mt) {
  for (std::size_t a = 0; a < mt.src.size(); ++a)
    for (std::size_t b = a + 1; b < mt.src.size(); ++b)
      if (mt.img[a] == mt.img[b]) return false;
  return true;
}

bool is_surjective(const MorphismTables& mt) {
  std::vector<bool> hit(mt.tgt.size(), false);
  for (std::size_t c : mt.img) hit[c] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool dual_surjective(const Morphism& f) {
  DualMap d = dual_map(f);
  std::vector<bool> hit(d.target_space.size(), false);
  for (std::size_t p : d.point_image) hit[p] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool dual_injective(const Morphism& f) {
  DualMap d = dual_map(f);
  std::set<std::size_t> seen(d.point_image.begin(), d.point_image.end());
  return seen.size() == d.point_image.size();
}

bool is_subspectral_image(const Morphism& f) {
  if (!dual_injective(f)) return false;
  DualMap d = dual_map(f);
  const FiniteSpectralSpace& XQ = d.source_space;
  const FiniteSpectralSpace& XP = d.target_space;
  ElementTable etq(f.target());
  ElementTable etp(f.source());
  std::vector<bool> image_set(XP.size(), false);
  for (std::size_t p : d.point_image) image_set[p] = true;

  // Opens of the embedded space, pushed through the dual injection.
  std::set<std::vector<bool>> opens_of_image;
  for (std::size_t c = 0; c < etq.size(); ++c) {
    Dnf rep = etq.rep(c);
    std::vector<bool> s(XP.size(), false);
    for (std::size_t q = 0; q < XQ.size(); ++q)
      if (rep.eval(XQ.point(q))) s[d.point_image[q]] = true;
    opens_of_image.insert(std::move(s));
  }
  // Restrictions of the opens of the ambient space.
  std::set<std::vector<bool>> restrictions;
  for (std::size_t c = 0; c < etp.size(); ++c) {
    Dnf rep = etp.rep(c);
    std::vector<bool> s(XP.size(), false);
    for (std::size_t p = 0; p < XP.size(); ++p)
      if (image_set[p] && rep.eval(XP.point(p))) s[p] = true;
    restrictions.insert(std::move(s));
  }
  return opens_of_image == restrictions;
}

bool is_quotient_by_ideal(const MorphismTables& mt, const Dnf& s) {
  if (!is_surjective(mt)) return false;
  std::size_t cs = mt.src.cls(s);
  for (std::size_t x = 0; x < mt.src.size(); ++x)
    for (std::size_t y = 0; y < mt.src.size(); ++y) {
      bool quo = mt.tgt.leq(mt.img[x], mt.img[y]);
      bool cond = mt.src.leq(x, mt.src.join(y, cs));
      if (quo != cond) return false;
    }
  return true;
}

bool is_quotient_by_filter(const MorphismTables& mt, const Dnf& s) {
  if (!is_surjective(mt)) return false;
  std::size_t cs = mt.src.cls(s);
  for (std::size_t x = 0; x < mt.src.size(); ++x)
    for (std::size_t y = 0; y < mt.src.size(); ++y) {
      bool quo = mt.tgt.leq(mt.img[x], mt.img[y]);
      bool cond = mt.src.leq(mt.src.meet(x, cs), y);
      if (quo != cond) return false;
    }
  return true;
}

bool is_isomorphism_pair(const Morphism& f, const Morphism& g) {
  for (std::size_t a = 0; a < f.source().atom_count(); ++a) {
    Dnf round = g.apply(f.atom_images()[a]);
    if (!f.source().equal(round, Dnf::atom(static_cast<AtomId>(a)))) return false;
  }
  for (std::size_t a = 0; a < g.source().atom_count(); ++a) {
    Dnf round = f.apply(g.atom_images()[a]);
    if (!g.source().equal(round, Dnf::atom(static_cast<AtomId>(a)))) return false;
  }
  return true;
}

}  // namespace spectra
