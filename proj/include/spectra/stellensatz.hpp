#ifndef SPECTRA_STELLENSATZ_HPP_
#define SPECTRA_STELLENSATZ_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spectra/entailment.hpp"
#include "spectra/rings.hpp"

namespace spectra {

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over a ring's elements; expansion only.
template <typename R>
class MPoly {
 public:
  using Elem = typename R::Elem;

  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(const R& ring, std::size_t nvars, Elem c) {
    MPoly out(nvars);
    out.add_term(ring, std::vector<unsigned>(nvars, 0), std::move(c));
    return out;
  }
  static MPoly var(const R& ring, std::size_t nvars, std::size_t i) {
    MPoly out(nvars);
    std::vector<unsigned> e(nvars, 0);
    e.at(i) = 1;
    out.add_term(ring, std::move(e), ring.one());
    return out;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<unsigned>, Elem>& terms() const { return terms_; }

  void add_term(const R& ring, std::vector<unsigned> exp, Elem c) {
    if (exp.size() != nvars_) throw Error("exponent arity mismatch");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      if (!ring.is_zero(c)) terms_.emplace(std::move(exp), std::move(c));
      return;
    }
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second)) terms_.erase(it);
  }

  MPoly plus(const R& ring, const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(ring, e, c);
    return out;
  }
  MPoly minus(const R& ring, const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(ring, e, ring.neg(c));
    return out;
  }
  MPoly times(const R& ring, const MPoly& o) const {
    MPoly out(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        std::vector<unsigned> e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        out.add_term(ring, std::move(e), ring.mul(c1, c2));
      }
    return out;
  }
  MPoly scaled(const R& ring, const Elem& c) const {
    MPoly out(nvars_);
    for (const auto& [e, t] : terms_) out.add_term(ring, e, ring.mul(c, t));
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<std::vector<unsigned>, Elem> terms_;
};

// ---------------------------------------------------------------------------
// Positivstellensatz certificate: s + p = 0 with s in the monoid generated
// by the hypotheses and p in the cone generated by the hypotheses and the
// negated conclusions (squares as coefficients).
struct GenRef {
  enum Kind { Hyp, NegConc } kind;
  std::size_t index;
};

template <typename R>
struct PosCertificate {
  std::map<std::size_t, unsigned> monoid;  // hypothesis index -> exponent
  struct ConeTerm {
    typename R::Elem base;      // contributes base^2
    std::vector<GenRef> gens;   // product of generators
  };
  std::vector<ConeTerm> cone;
};

template <typename R>
bool verify_pos(const R& ring, const std::vector<typename R::Elem>& hyps,
                const std::vector<typename R::Elem>& concs,
                const PosCertificate<R>& cert) {
  using Elem = typename R::Elem;
  Elem s = ring.one();
  for (const auto& [idx, exp] : cert.monoid) {
    if (idx >= hyps.size())
      throw MalformedCertificateError("monoid index out of range");
    for (unsigned i = 0; i < exp; ++i) s = ring.mul(s, hyps[idx]);
  }
  Elem p = ring.zero();
  for (const auto& term : cert.cone) {
    Elem t = ring.mul(term.base, term.base);
    for (const GenRef& g : term.gens) {
      if (g.kind == GenRef::Hyp) {
        if (g.index >= hyps.size())
          throw MalformedCertificateError("cone hypothesis index out of range");
        t = ring.mul(t, hyps[g.index]);
      } else {
        if (g.index >= concs.size())
          throw MalformedCertificateError("cone conclusion index out of range");
        t = ring.mul(t, ring.neg(concs[g.index]));
      }
    }
    p = ring.add(p, t);
  }
  return ring.is_zero(ring.add(s, p));
}

// ---------------------------------------------------------------------------
// Valuativstellensatz certificate (Theorem 5(2)): with indeterminates x_i
// for the hypothesis pairs and y_j for the conclusion pairs,
//   d (1 + sum_j y_j P_j) = sum_i Q_i (x_i a_i - b_i) + sum_j R_j (y_j d_j - c_j)
// holds identically, d a monomial in the d_j.
template <typename R>
struct ValCertificate {
  std::map<std::size_t, unsigned> monoid;  // conclusion index -> exponent
  std::vector<MPoly<R>> p;                 // one per conclusion
  std::vector<MPoly<R>> q;                 // one per hypothesis
  std::vector<MPoly<R>> r;                 // one per conclusion
};

template <typename R>
bool verify_val(const R& ring,
                const std::vector<std::pair<typename R::Elem,
                                            typename R::Elem>>& hyps,
                const std::vector<std::pair<typename R::Elem,
                                            typename R::Elem>>& concs,
                const ValCertificate<R>& cert) {
  std::size_t n = hyps.size(), m = concs.size(), vars = n + m;
  if (cert.p.size() != m || cert.q.size() != n || cert.r.size() != m)
    throw MalformedCertificateError("cofactor counts do not match the sequent");
  for (const auto& poly : cert.p)
    if (poly.nvars() != vars)
      throw MalformedCertificateError("cofactor arity mismatch");
  for (const auto& poly : cert.q)
    if (poly.nvars() != vars)
      throw MalformedCertificateError("cofactor arity mismatch");
  for (const auto& poly : cert.r)
    if (poly.nvars() != vars)
      throw MalformedCertificateError("cofactor arity mismatch");

  using Elem = typename R::Elem;
  Elem d = ring.one();
  for (const auto& [idx, exp] : cert.monoid) {
    if (idx >= m) throw MalformedCertificateError("monoid index out of range");
    for (unsigned i = 0; i < exp; ++i) d = ring.mul(d, concs[idx].second);
  }
  MPoly<R> lhs = MPoly<R>::constant(ring, vars, ring.one());
  for (std::size_t j = 0; j < m; ++j)
    lhs = lhs.plus(ring, MPoly<R>::var(ring, vars, n + j).times(ring, cert.p[j]));
  lhs = lhs.scaled(ring, d);

  MPoly<R> rhs(vars);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly<R> gen = MPoly<R>::var(ring, vars, i)
                       .scaled(ring, hyps[i].first)
                       .minus(ring, MPoly<R>::constant(ring, vars, hyps[i].second));
    rhs = rhs.plus(ring, cert.q[i].times(ring, gen));
  }
  for (std::size_t j = 0; j < m; ++j) {
    MPoly<R> gen = MPoly<R>::var(ring, vars, n + j)
                       .scaled(ring, concs[j].second)
                       .minus(ring, MPoly<R>::constant(ring, vars, concs[j].first));
    rhs = rhs.plus(ring, cert.r[j].times(ring, gen));
  }
  return lhs.minus(ring, rhs).is_zero();
}

// Corollaire 2.3(3): (prod as)^k + sum c_j p_j = 0, checked directly.
template <typename R>
bool verify_val_pos(const R& ring, const std::vector<typename R::Elem>& as,
                    const std::vector<typename R::Elem>& cs, unsigned k,
                    const std::vector<typename R::Elem>& cofactors) {
  if (k < 1) throw MalformedCertificateError("exponent must be positive");
  if (cofactors.size() != cs.size())
    throw MalformedCertificateError("one cofactor per conclusion required");
  typename R::Elem acc = ring.one();
  for (const auto& a : as) acc = ring.mul(acc, a);
  typename R::Elem power = ring.one();
  for (unsigned i = 0; i < k; ++i) power = ring.mul(power, acc);
  for (std::size_t j = 0; j < cs.size(); ++j)
    power = ring.add(power, ring.mul(cs[j], cofactors[j]));
  return ring.is_zero(power);
}

// ---------------------------------------------------------------------------
// Finite axiom fragments. Instantiation drops (and counts) schema instances
// mentioning atoms outside the listed set; the saturation of a fragment is
// sound for the full lattice but not complete.
struct FragmentResult {
  Presentation presentation;
  std::size_t dropped = 0;
};

template <typename R>
FragmentResult reel_fragment(const R& ring,
                             const std::vector<typename R::Elem>& atoms) {
  FragmentResult out;
  std::map<std::string, AtomId> index;
  std::vector<typename R::Elem> elems;
  for (const auto& e : atoms) {
    std::string key = ring.to_string(e);
    if (index.count(key)) continue;
    index[key] = out.presentation.add_atom(key);
    elems.push_back(e);
  }
  auto find = [&](const typename R::Elem& e) -> std::optional<AtomId> {
    auto it = index.find(ring.to_string(e));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  std::set<Sequent> axioms;
  auto emit = [&](std::vector<std::optional<AtomId>> ante,
                  std::vector<std::optional<AtomId>> succ) {
    Sequent s;
    for (const auto& a : ante) {
      if (!a) {
        ++out.dropped;
        return;
      }
      s.ante |= atom_bit(*a);
    }
    for (const auto& b : succ) {
      if (!b) {
        ++out.dropped;
        return;
      }
      s.succ |= atom_bit(*b);
    }
    axioms.insert(s);
  };

  emit({}, {find(ring.one())});  // |- R(1)
  for (const auto& x : elems) {
    emit({find(ring.neg(ring.mul(x, x)))}, {});  // R(-x^2) |-
    for (const auto& y : elems) {
      emit({find(ring.add(x, y))}, {find(x), find(y)});
      emit({find(ring.mul(x, y))}, {find(x), find(ring.neg(y))});
      emit({find(x), find(y)}, {find(ring.mul(x, y))});
    }
  }
  for (const Sequent& s : axioms) out.presentation.add_axiom(s);
  return out;
}

template <typename R>
FragmentResult val_fragment(
    const R& ring,
    const std::vector<std::pair<typename R::Elem, typename R::Elem>>& pairs) {
  using Elem = typename R::Elem;
  FragmentResult out;
  auto pair_key = [&](const Elem& a, const Elem& b) {
    return "(" + ring.to_string(a) + "," + ring.to_string(b) + ")";
  };
  std::map<std::string, AtomId> index;
  std::vector<std::pair<Elem, Elem>> elems;
  for (const auto& [a, b] : pairs) {
    std::string key = pair_key(a, b);
    if (index.count(key)) continue;
    index[key] = out.presentation.add_atom(key);
    elems.emplace_back(a, b);
  }
  // Components plus the constants the nullary axioms mention.
  std::vector<Elem> comps{ring.zero(), ring.one(), ring.neg(ring.one())};
  auto add_comp = [&](const Elem& e) {
    for (const auto& c : comps)
      if (ring.eq(c, e)) return;
    comps.push_back(e);
  };
  for (const auto& [a, b] : elems) {
    add_comp(a);
    add_comp(b);
  }
  auto find = [&](const Elem& a, const Elem& b) -> std::optional<AtomId> {
    auto it = index.find(pair_key(a, b));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  std::set<Sequent> axioms;
  auto emit = [&](std::vector<std::optional<AtomId>> ante,
                  std::vector<std::optional<AtomId>> succ) {
    Sequent s;
    for (const auto& a : ante) {
      if (!a) {
        ++out.dropped;
        return;
      }
      s.ante |= atom_bit(*a);
    }
    for (const auto& b : succ) {
      if (!b) {
        ++out.dropped;
        return;
      }
      s.succ |= atom_bit(*b);
    }
    axioms.insert(s);
  };

  emit({}, {find(ring.one(), ring.zero())});                      // |- (1,0)
  emit({}, {find(ring.neg(ring.one()), ring.one())});             // |- (-1,1)
  emit({find(ring.zero(), ring.one())}, {});                      // (0,1) |-
  for (const auto& a : comps)
    for (const auto& b : comps)
      emit({}, {find(a, b), find(b, a)});                          // |- (a,b),(b,a)
  for (const auto& [a, b] : elems)
    for (const auto& c : comps)
      emit({find(a, b)}, {find(ring.mul(a, c), ring.mul(b, c))});  // scaling
  for (const auto& [a, b] : elems)
    for (const auto& [b2, c] : elems) {
      if (ring.eq(b, b2))
        emit({find(a, b), find(b2, c)}, {find(a, c)});             // transitivity
      if (ring.eq(a, b2))
        emit({find(a, b), find(b2, c)}, {find(a, ring.add(b, c))});  // additivity
    }
  for (const auto& [p, q] : elems)
    for (const auto& x : comps)
      for (const auto& a : comps) {
        if (!ring.eq(ring.mul(a, x), p)) continue;
        for (const auto& b : comps) {
          if (!ring.eq(ring.mul(b, x), q)) continue;
          emit({find(p, q)}, {find(a, b), find(ring.zero(), x)});  // cancellation
        }
      }
  for (const Sequent& s : axioms) out.presentation.add_axiom(s);
  return out;
}

// Fragment of the linear-lattice relation over Z^d.
FragmentResult liog_fragment(std::size_t dim,
                             const std::vector<std::vector<long long>>& atoms);

}  // namespace spectra

#endif  // SPECTRA_STELLENSATZ_HPP_
