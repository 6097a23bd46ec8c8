#include "spectra/spectrum.hpp"

#include <algorithm>

namespace spectra {

std::string FiniteSpectralSpace::point_name(std::size_t i) const {
  std::string s;
  for (std::size_t a = 0; a < atom_count_; ++a)
    s += (points_[i] >> a) & 1 ? '1' : '0';
  return s.empty() ? "e" : s;
}

std::vector<bool> FiniteSpectralSpace::basic_open(const Dnf& u) const {
  std::vector<bool> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out[i] = u.eval(points_[i]);
  return out;
}

bool FiniteSpectralSpace::is_open(const std::vector<bool>& s) const {
  // Opens are the down-sets: p in s and q <= p force q in s.
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (!s[p]) continue;
    for (std::size_t q = 0; q < points_.size(); ++q)
      if (!s[q] && specializes(q, p)) return false;
  }
  return true;
}

FiniteSpectralSpace spec(const FpLattice& t) {
  return FiniteSpectralSpace(t.atom_count(), models(t.presentation()));
}

namespace {

FinitePoset specialization_poset(const FiniteSpectralSpace& x) {
  FinitePoset poset;
  std::size_t n = x.size();
  poset.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) poset.labels.push_back(x.point_name(i));
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      // i <= j in the down-set order iff the principal down-set of i is
      // contained in that of j, i.e. v_i >= v_j pointwise.
      poset.leq[i][j] = (x.point(j) & ~x.point(i)) == 0;
  return poset;
}

}  // namespace

FpLattice oqc(const FiniteSpectralSpace& x) {
  return downset_lattice(specialization_poset(x));
}

DualityWitness duality_witness(const FpLattice& t) {
  FiniteSpectralSpace x = spec(t);
  FpLattice image = oqc(x);
  std::vector<Dnf> forward;
  for (std::size_t a = 0; a < t.atom_count(); ++a) {
    std::vector<AtomSet> terms;
    for (std::size_t p = 0; p < x.size(); ++p)
      if ((x.point(p) >> a) & 1) terms.push_back(atom_bit(static_cast<AtomId>(p)));
    forward.push_back(Dnf::from_terms(std::move(terms)));
  }
  std::vector<Dnf> backward;
  for (std::size_t p = 0; p < x.size(); ++p)
    backward.push_back(Dnf::term(x.point(p)));
  return DualityWitness{std::move(image), std::move(forward), std::move(backward)};
}

FpLattice patch_closure_quotient(const FpLattice& t,
                                 const std::vector<std::size_t>& z_points) {
  std::vector<Valuation> pts = models(t.presentation());
  std::vector<bool> keep(pts.size(), false);
  for (std::size_t i : z_points) {
    if (i >= pts.size()) throw Error("invalid point index");
    keep[i] = true;
  }
  // On a finite space the patch topology is discrete, so the closure of Z is
  // Z itself: exclude every other prime.
  Presentation p = t.presentation();
  AtomSet uni = p.atom_universe();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!keep[i]) p.add_axiom(Sequent{pts[i], uni & ~pts[i]});
  return FpLattice(std::move(p));
}

PointClassification classify_points(const FpLattice& t) {
  FiniteSpectralSpace x = spec(t);
  PointClassification out{{}, {}, {}, spec(heitmann_lattice(t))};
  std::size_t n = x.size();
  for (std::size_t p = 0; p < n; ++p) {
    bool maximal = true, minimal = true;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p) continue;
      if (x.specializes(p, q)) maximal = false;  // q strictly above p
      if (x.specializes(q, p)) minimal = false;
    }
    if (maximal) out.max_points.push_back(p);
    if (minimal) out.min_points.push_back(p);
  }
  // p belongs to jspec iff its ideal is the intersection of the ideals of
  // the maximal points above it, checked over all element classes.
  ElementTable et(t);
  for (std::size_t p = 0; p < n; ++p) {
    std::uint64_t above_max = 0;
    for (std::size_t m : out.max_points)
      if (x.specializes(p, m)) above_max |= std::uint64_t{1} << m;
    bool in_jspec = true;
    for (std::size_t c = 0; c < et.size() && in_jspec; ++c) {
      std::uint64_t fp = et.fingerprint(c);
      bool in_all_max = (fp & above_max) == 0;
      bool in_p = ((fp >> p) & 1) == 0;
      if (in_all_max && !in_p) in_jspec = false;
    }
    if (in_jspec) out.jspec_points.push_back(p);
  }
  return out;
}

bool is_normal(const FpLattice& t) {
  ElementTable et(t);
  std::size_t n = et.size(), top = et.top(), bot = et.bottom();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (et.join(x, y) != top) continue;
      bool found = false;
      for (std::size_t a = 0; a < n && !found; ++a) {
        if (et.join(a, x) != top) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (et.join(b, y) == top && et.meet(a, b) == bot) {
            found = true;
            break;
          }
      }
      if (!found) return false;
    }
  return true;
}

bool is_completely_normal(const FpLattice& t) {
  ElementTable et(t);
  std::size_t n = et.size(), bot = et.bottom();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = et.join(a, b);
      bool found = false;
      for (std::size_t x = 0; x < n && !found; ++x) {
        if (et.join(x, b) != ab) continue;
        for (std::size_t y = 0; y < n; ++y)
          if (et.join(a, y) == ab && et.meet(x, y) == bot) {
            found = true;
            break;
          }
      }
      if (!found) return false;
    }
  return true;
}

std::string specialization_dot(const FiniteSpectralSpace& x) {
  std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x.point_name(a) < x.point_name(b);
  });
  std::string out = "digraph spec {\n";
  for (std::size_t i : order) out += "  \"" + x.point_name(i) + "\";\n";
  for (std::size_t p : order)
    for (std::size_t q : order) {
      if (p == q || !x.specializes(p, q)) continue;
      bool covering = true;
      for (std::size_t m = 0; m < n; ++m)
        if (m != p && m != q && x.specializes(p, m) && x.specializes(m, q)) {
          covering = false;
          break;
        }
      if (covering)
        out += "  \"" + x.point_name(p) + "\" -> \"" + x.point_name(q) + "\";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace spectra
