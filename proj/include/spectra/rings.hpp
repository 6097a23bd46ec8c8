#ifndef SPECTRA_RINGS_HPP_
#define SPECTRA_RINGS_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectra/lattice.hpp"

namespace spectra {

// Witness for x^k in <gens>: explicit cofactors with x^k = sum cof_i gen_i.
template <typename Elem>
struct RadicalWitness {
  unsigned k = 1;
  std::vector<Elem> cofactors;
};

// ---------------------------------------------------------------------------
// The integers.
class IntRing {
 public:
  using Elem = long long;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return v; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const { return -a; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const { return a == 1 || a == -1; }
  std::string to_string(Elem a) const { return std::to_string(a); }

  // x in the radical of <gens>, membership via factorization of the gcd.
  std::optional<RadicalWitness<Elem>> radical_member(
      Elem x, const std::vector<Elem>& gens) const;
  // 1 + xy invertible mod <gens> for all y.
  bool jacobson_member(Elem x, const std::vector<Elem>& gens) const;
};

// ---------------------------------------------------------------------------
// Z/N.
class ModRing {
 public:
  using Elem = long long;  // canonical 0..n-1
  explicit ModRing(long long n);
  long long modulus() const { return n_; }
  Elem zero() const { return 0; }
  Elem one() const { return n_ == 1 ? 0 : 1; }
  Elem from_int(long long v) const { return ((v % n_) + n_) % n_; }
  Elem add(Elem a, Elem b) const { return (a + b) % n_; }
  Elem sub(Elem a, Elem b) const { return from_int(a - b); }
  Elem mul(Elem a, Elem b) const { return (a * b) % n_; }
  Elem neg(Elem a) const { return (n_ - a) % n_; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const;
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::vector<Elem> enumerate() const;

  std::optional<RadicalWitness<Elem>> radical_member(
      Elem x, const std::vector<Elem>& gens) const;
  bool jacobson_member(Elem x, const std::vector<Elem>& gens) const;

 private:
  long long n_;
};

// ---------------------------------------------------------------------------
// Q[x]: dense univariate polynomials over exact rationals.
struct Rat {
  long long num = 0, den = 1;
  Rat() = default;
  Rat(long long n);  // NOLINT: implicit integer literals are convenient
  Rat(long long n, long long d);
  friend Rat operator+(Rat a, Rat b);
  friend Rat operator-(Rat a, Rat b);
  friend Rat operator*(Rat a, Rat b);
  friend Rat operator/(Rat a, Rat b);
  friend bool operator==(const Rat&, const Rat&) = default;
  bool is_zero() const { return num == 0; }
  std::string to_string() const;
};

struct Poly {
  std::vector<Rat> c;  // c[i] multiplies x^i; normalized, no trailing zeros
  static Poly constant(Rat r);
  static Poly x();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat lead() const { return c.empty() ? Rat(0) : c.back(); }
  void normalize();
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;
  std::string to_string() const;
};

// quotient/remainder, monic gcd, squarefree part (p / gcd(p, p')).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);
Poly poly_squarefree_part(const Poly& p);

class PolyRing {
 public:
  using Elem = Poly;
  Elem zero() const { return Poly{}; }
  Elem one() const { return Poly::constant(1); }
  Elem from_int(long long v) const { return Poly::constant(Rat(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return Poly{} - a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_unit(const Elem& a) const { return a.degree() == 0; }
  std::string to_string(const Elem& a) const { return a.to_string(); }

  std::optional<RadicalWitness<Elem>> radical_member(
      const Elem& x, const std::vector<Elem>& gens) const;
  bool jacobson_member(const Elem& x, const std::vector<Elem>& gens) const;
};

// ---------------------------------------------------------------------------
// Explicit finite commutative ring given by operation tables.
class TableRing {
 public:
  using Elem = int;
  TableRing(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul,
            int one);
  std::size_t size() const { return add_.size(); }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem from_int(long long v) const;
  Elem add(Elem a, Elem b) const { return add_[a][b]; }
  Elem sub(Elem a, Elem b) const { return add_[a][neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a][b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const;
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::vector<Elem> enumerate() const;

  // Ideal generated by gens, as a membership set, with tracked combinations.
  std::vector<bool> ideal(const std::vector<Elem>& gens) const;
  std::optional<RadicalWitness<Elem>> radical_member(
      Elem x, const std::vector<Elem>& gens) const;
  bool jacobson_member(Elem x, const std::vector<Elem>& gens) const;

 private:
  std::vector<std::vector<int>> add_, mul_;
  std::vector<int> neg_;
  int one_;
};

using RingVariant = std::variant<IntRing, ModRing, PolyRing, TableRing>;

// ---------------------------------------------------------------------------
// Formal Nullstellensatz: (prod as)^k in <cs>, with verifiable witness.
template <typename R>
struct ZarResult {
  bool holds = false;
  std::optional<RadicalWitness<typename R::Elem>> witness;
};

template <typename R>
ZarResult<R> zar_entails(const R& ring, const std::vector<typename R::Elem>& as,
                         const std::vector<typename R::Elem>& cs) {
  typename R::Elem prod = ring.one();
  for (const auto& a : as) prod = ring.mul(prod, a);
  ZarResult<R> out;
  out.witness = ring.radical_member(prod, cs);
  out.holds = out.witness.has_value();
  return out;
}

template <typename R>
bool verify_radical_witness(const R& ring, const typename R::Elem& x,
                            const std::vector<typename R::Elem>& gens,
                            const RadicalWitness<typename R::Elem>& w) {
  if (w.cofactors.size() != gens.size() || w.k < 1) return false;
  typename R::Elem lhs = ring.one();
  for (unsigned i = 0; i < w.k; ++i) lhs = ring.mul(lhs, x);
  typename R::Elem rhs = ring.zero();
  for (std::size_t i = 0; i < gens.size(); ++i)
    rhs = ring.add(rhs, ring.mul(w.cofactors[i], gens[i]));
  return ring.eq(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Concrete finite spectra: the Zariski lattice as the inclusion order of
// radical ideals, and the Heitmann lattice as the order of Jacobson radicals.
struct FiniteRingLattice {
  FinitePoset poset;                              // inclusion order
  std::vector<std::vector<long long>> ideal_sets; // sorted carrier elements
  std::vector<std::vector<long long>> primes;     // prime ideals, sorted

  std::size_t index_of(const std::vector<long long>& ideal_set) const;
};

FiniteRingLattice zar_lattice(const ModRing& r);
FiniteRingLattice zar_lattice(const TableRing& r);
FiniteRingLattice heit_lattice(const ModRing& r);
FiniteRingLattice heit_lattice(const TableRing& r);

// Radical of a finitely generated ideal, as a carrier subset.
std::vector<long long> radical_of(const ModRing& r,
                                  const std::vector<long long>& gens);
std::vector<long long> radical_of(const TableRing& r,
                                  const std::vector<int>& gens);

int jdim(const ModRing& r);
int jdim(const TableRing& r);

// ---------------------------------------------------------------------------
// Kronecker-Heitmann search (Theorem 15(1)): xs with
// D(a, b_1..b_n) = D(b_1 + a x_1, .., b_n + a x_n) for all a in the domain.
std::optional<std::vector<long long>> kronecker_search(
    const ModRing& r, const std::vector<long long>& bs);
std::optional<std::vector<int>> kronecker_search(const TableRing& r,
                                                 const std::vector<int>& bs);

struct KroneckerZ {
  std::vector<long long> xs;
  std::vector<long long> sample;  // the verified values of a
};
// Over Z only a sampled \forall a is possible; the result records the sample.
std::optional<KroneckerZ> kronecker_search(const IntRing& r,
                                           const std::vector<long long>& bs,
                                           long long x_bound,
                                           const std::vector<long long>& sample);

// Bass stable range (Definition 4), exhaustive over unimodular tuples.
bool stable_range_leq(const ModRing& r, int n);
bool stable_range_leq(const TableRing& r, int n);

// ---------------------------------------------------------------------------
// Free Z-modules with decidable submodule membership (integer echelon form).
class ZModule {
 public:
  explicit ZModule(std::size_t rank) : rank_(rank) {}
  std::size_t rank() const { return rank_; }

  struct Submodule {
    std::vector<std::vector<long long>> rows;  // echelon basis
  };
  Submodule span(std::vector<std::vector<long long>> gens) const;
  bool member(const Submodule& m, std::vector<long long> v) const;

 private:
  std::size_t rank_;
};

// Formal Nullstellensatz for linear algebra: some y_j lies in <xs>.
bool module_entails(const ZModule& m,
                    const std::vector<std::vector<long long>>& xs,
                    const std::vector<std::vector<long long>>& ys);

// ---------------------------------------------------------------------------
// l-group Z^d with componentwise order; x^- = (-x) \/ 0.
struct LGroupResult {
  bool holds = false;
  unsigned k = 0;  // witness exponent when holds
};

// Formal Positivstellensatz for Liog: /\ bs^- <= k (\/ as^-).
LGroupResult lgroup_entails(std::size_t dim,
                            const std::vector<std::vector<long long>>& as,
                            const std::vector<std::vector<long long>>& bs);

// ---------------------------------------------------------------------------
// Corollaire 2.3 bridge: zar_entails versus the explicit ring identity
// (prod as)^k + sum c_j p_j = 0, searched within bounds.
struct ValPosIdentity {
  unsigned k = 1;
  std::vector<long long> int_cofactors;  // IntRing / ModRing
  std::vector<Poly> poly_cofactors;      // PolyRing
};

struct ZarValConsistency {
  Tri agree = Tri::Inconclusive;
  bool zar_holds = false;
  std::optional<ValPosIdentity> identity;
};

ZarValConsistency zar_to_val_consistency(const IntRing& r,
                                         const std::vector<long long>& as,
                                         const std::vector<long long>& cs,
                                         unsigned k_max = 6);
ZarValConsistency zar_to_val_consistency(const ModRing& r,
                                         const std::vector<long long>& as,
                                         const std::vector<long long>& cs,
                                         unsigned k_max = 6);
ZarValConsistency zar_to_val_consistency(const PolyRing& r,
                                         const std::vector<Poly>& as,
                                         const std::vector<Poly>& cs,
                                         unsigned k_max = 6);

// Small number-theory helpers shared with tests.
long long gcd_ll(long long a, long long b);
// g = gcd(values), g = sum coeff_i * values_i.
long long ext_gcd_chain(const std::vector<long long>& values,
                        std::vector<long long>& coeffs);
std::vector<std::pair<long long, int>> factorize(long long n);
long long squarefree_kernel(long long n);

}  // namespace spectra

#endif  // SPECTRA_RINGS_HPP_
