#include "spectra/gluing.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace spectra {

bool is_cover_ideals(const PrincipalCover& c) {
  ElementTable et(c.lattice);
  std::vector<std::size_t> gens;
  for (const Dnf& s : c.generators) gens.push_back(et.cls(s));
  for (std::size_t x = 0; x < et.size(); ++x) {
    bool below_all = true;
    for (std::size_t g : gens)
      if (!et.leq(x, g)) {
        below_all = false;
        break;
      }
    if (below_all && x != et.bottom()) return false;
  }
  return true;
}

bool is_cover_filters(const PrincipalCover& c) {
  ElementTable et(c.lattice);
  std::vector<std::size_t> gens;
  for (const Dnf& s : c.generators) gens.push_back(et.cls(s));
  for (std::size_t x = 0; x < et.size(); ++x) {
    bool above_all = true;
    for (std::size_t g : gens)
      if (!et.leq(g, x)) {
        above_all = false;
        break;
      }
    if (above_all && x != et.top()) return false;
  }
  return true;
}

Dnf crt_recover(const PrincipalCover& c, const std::vector<Dnf>& xs) {
  if (xs.size() != c.generators.size())
    throw Error("one residue per cover generator required");
  ElementTable et(c.lattice);
  std::vector<std::size_t> s, x;
  for (const Dnf& g : c.generators) s.push_back(et.cls(g));
  for (const Dnf& u : xs) x.push_back(et.cls(u));
  std::size_t n = s.size();
  // x_i = x_j mod (s_i \/ s_j = 0), i.e. equal joins with s_i \/ s_j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t sij = et.join(s[i], s[j]);
      if (et.join(x[i], sij) != et.join(x[j], sij))
        throw IncompatibleFamilyError(
            "residues disagree modulo the pair ideal", i, j);
    }
  std::size_t acc = et.top();
  for (std::size_t i = 0; i < n; ++i) acc = et.meet(acc, et.join(x[i], s[i]));
  for (std::size_t i = 0; i < n; ++i)
    if (et.join(acc, s[i]) != et.join(x[i], s[i]))
      throw Error("recombination failed a residue check");
  return et.rep(acc);
}

namespace {

std::pair<int, int> sorted_pair(int i, int j) {
  return {std::min(i, j), std::max(i, j)};
}

std::tuple<int, int, int> sorted_triple(int i, int j, int k) {
  std::array<int, 3> a{i, j, k};
  std::sort(a.begin(), a.end());
  return {a[0], a[1], a[2]};
}

}  // namespace

GluedLattice limit_of_diagram(const QuotientDiagram& d) {
  int n = static_cast<int>(d.lattice.size());
  if (n == 0) throw InvalidDiagramError("diagram needs at least one lattice");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!d.proj.count({i, j}))
        throw InvalidDiagramError("missing projection pi_" + std::to_string(i) +
                                  std::to_string(j));
      if (!d.glue.count({i, j}))
        throw InvalidDiagramError("missing gluing element s_" +
                                  std::to_string(i) + std::to_string(j));
      if (!d.overlap.count(sorted_pair(i, j)))
        throw InvalidDiagramError("missing overlap lattice");
    }

  // Element tables and the class maps of the projections.
  std::vector<ElementTable> et;
  et.reserve(d.lattice.size());
  for (const FpLattice& t : d.lattice) et.emplace_back(t);

  std::map<std::pair<int, int>, std::vector<std::size_t>> proj_cls;
  for (const auto& [key, f] : d.proj) {
    MorphismTables mt(f);
    if (!is_quotient_by_ideal(mt, d.glue.at(key)))
      throw InvalidDiagramError(
          "pi_" + std::to_string(key.first) + std::to_string(key.second) +
          " is not the quotient by its gluing ideal");
    std::vector<std::size_t> cls(et[key.first].size());
    for (std::size_t c = 0; c < cls.size(); ++c)
      cls[c] = mt.tgt.cls(f.apply(et[key.first].rep(c)));
    proj_cls[key] = std::move(cls);
  }

  // Triple conditions, required once three indices interact.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Morphism& pij = d.proj.at({i, j});
        const Morphism& pji = d.proj.at({j, i});
        Dnf lhs = pij.apply(d.glue.at({i, k}));
        Dnf rhs = pji.apply(d.glue.at({j, k}));
        if (!pij.target().equal(lhs, rhs))
          throw InvalidDiagramError("pi_ij(s_ik) differs from pi_ji(s_jk)");
        auto key3 = std::make_tuple(sorted_pair(i, j).first,
                                    sorted_pair(i, j).second, k);
        if (!d.proj3.count(key3) || !d.triple.count(sorted_triple(i, j, k)))
          throw InvalidDiagramError("missing triple-overlap data");
        const Morphism& pijk = d.proj3.at(key3);
        MorphismTables mt3(pijk);
        if (!is_quotient_by_ideal(mt3, lhs))
          throw InvalidDiagramError(
              "pi_ijk is not the quotient by its gluing ideal");
        // Commutativity around the triple.
        auto key3b = std::make_tuple(sorted_pair(i, k).first,
                                     sorted_pair(i, k).second, j);
        const Morphism& pikj = d.proj3.at(key3b);
        Morphism left = compose(pijk, pij);
        Morphism right = compose(pikj, d.proj.at({i, k}));
        for (std::size_t a = 0; a < left.source().atom_count(); ++a)
          if (!left.target().equal(left.atom_images()[a],
                                   right.atom_images()[a]))
            throw InvalidDiagramError("diagram does not commute");
      }

  // Compatible tuples of element classes.
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur(d.lattice.size());
  std::function<void(int)> enumerate = [&](int i) {
    if (i == n) {
      tuples.push_back(cur);
      return;
    }
    for (std::size_t c = 0; c < et[i].size(); ++c) {
      cur[i] = c;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = proj_cls[{j, i}][cur[j]] == proj_cls[{i, j}][c];
      if (ok) enumerate(i + 1);
    }
  };
  enumerate(0);

  FinitePoset poset;
  poset.labels.reserve(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t)
    poset.labels.push_back("g" + std::to_string(t));
  poset.leq.assign(tuples.size(), std::vector<bool>(tuples.size(), false));
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      bool le = true;
      for (int i = 0; i < n && le; ++i) le = et[i].leq(tuples[a][i], tuples[b][i]);
      poset.leq[a][b] = le;
    }
  FiniteLatticePresentation lp = present_finite_lattice(poset);

  GluedLattice out{lp.lattice, {}, {}};
  // Projections: join-irreducible tuples map to their components.
  std::map<std::vector<std::size_t>, std::size_t> tuple_index;
  for (std::size_t t = 0; t < tuples.size(); ++t) tuple_index[tuples[t]] = t;
  // Identify which poset elements became atoms of the presentation: the
  // presentation of present_finite_lattice uses the join-irreducibles in
  // poset order; recover them from the atom names ("g<t>").
  std::vector<std::size_t> atom_tuple;
  for (std::size_t a = 0; a < lp.lattice.atom_count(); ++a) {
    const std::string& name = lp.lattice.presentation().atom_name(
        static_cast<AtomId>(a));
    atom_tuple.push_back(std::stoul(name.substr(1)));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Dnf> images;
    for (std::size_t a = 0; a < lp.lattice.atom_count(); ++a)
      images.push_back(et[i].rep(tuples[atom_tuple[a]][i]));
    out.projections.emplace_back(lp.lattice, d.lattice[i], std::move(images));
  }
  // Cover elements: s_j has component s_ij at i != j and 0 at j.
  for (int j = 0; j < n; ++j) {
    std::vector<std::size_t> tup(d.lattice.size());
    for (int i = 0; i < n; ++i)
      tup[i] = i == j ? et[i].bottom() : et[i].cls(d.glue.at({i, j}));
    auto it = tuple_index.find(tup);
    if (it == tuple_index.end())
      throw InvalidDiagramError("gluing elements are not compatible");
    out.cover_elements.push_back(lp.element_images[it->second]);
  }
  // Conclusion checks: pi_i is the quotient by the cover element and the
  // cover elements project onto the gluing data.
  for (int i = 0; i < n; ++i) {
    MorphismTables mt(out.projections[i]);
    if (!is_quotient_by_ideal(mt, out.cover_elements[i]))
      throw InvalidDiagramError("limit projection is not a quotient map");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Dnf proj_sj = out.projections[i].apply(out.cover_elements[j]);
      if (!d.lattice[i].equal(proj_sj, d.glue.at({i, j})))
        throw InvalidDiagramError("limit cover elements do not project onto s_ij");
    }
  }
  return out;
}

Morphism canonical_into_limit(const PrincipalCover& c, const GluedLattice& g) {
  std::size_t n = g.projections.size();
  ElementTable el(g.limit);
  // Class map of each projection, and of the canonical quotients of c.
  std::vector<ElementTable> etq;
  std::vector<std::vector<std::size_t>> proj_cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    etq.emplace_back(g.projections[i].target());
    for (std::size_t l = 0; l < el.size(); ++l)
      proj_cls[i].push_back(etq[i].cls(g.projections[i].apply(el.rep(l))));
  }
  std::vector<Dnf> images;
  for (std::size_t a = 0; a < c.lattice.atom_count(); ++a) {
    Dnf u = Dnf::atom(static_cast<AtomId>(a));
    std::size_t found = el.size();
    for (std::size_t l = 0; l < el.size(); ++l) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i)
        match = proj_cls[i][l] == etq[i].cls(u);
      if (match) {
        found = l;
        break;
      }
    }
    if (found == el.size())
      throw Error("no limit element matches a generator's residues");
    images.push_back(el.rep(found));
  }
  return Morphism(c.lattice, g.limit, std::move(images));
}

QuotientDiagram cover_diagram(const PrincipalCover& c) {
  QuotientDiagram d;
  int n = static_cast<int>(c.generators.size());
  for (int i = 0; i < n; ++i)
    d.lattice.push_back(quotient(c.lattice, {{c.generators[i], Rel::Zero}}));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d.overlap.emplace(
          std::make_pair(i, j),
          quotient(c.lattice,
                   {{join(c.generators[i], c.generators[j]), Rel::Zero}}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      d.proj.emplace(std::make_pair(i, j),
                     atom_identity_morphism(d.lattice[i],
                                            d.overlap.at(sorted_pair(i, j))));
      d.glue.emplace(std::make_pair(i, j), c.generators[j]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        d.triple.emplace(
            std::make_tuple(i, j, k),
            quotient(c.lattice, {{join(join(c.generators[i], c.generators[j]),
                                       c.generators[k]),
                                  Rel::Zero}}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        auto key = std::make_tuple(sorted_pair(i, j).first,
                                   sorted_pair(i, j).second, k);
        if (d.proj3.count(key)) continue;
        d.proj3.emplace(key,
                        atom_identity_morphism(
                            d.overlap.at(sorted_pair(i, j)),
                            d.triple.at(sorted_triple(i, j, k))));
      }
    }
  return d;
}

}  // namespace spectra
