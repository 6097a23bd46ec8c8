#include "spectra/rings.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "spectra/dimension.hpp"

namespace spectra {

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

using i128 = __int128;

long long checked_narrow(i128 v, const char* what) {
  if (v > i128(0x3fffffffffffffffLL) || v < -i128(0x3fffffffffffffffLL))
    throw CapacityError(std::string(what) + " exceeds 62-bit integer range");
  return static_cast<long long>(v);
}

// g = gcd(a,b) with u a + v b = g (g >= 0).
void ext_gcd(long long a, long long b, long long& g, long long& u,
             long long& v) {
  if (b == 0) {
    g = a < 0 ? -a : a;
    u = a < 0 ? -1 : (a > 0 ? 1 : 0);
    v = 0;
    return;
  }
  long long g1, u1, v1;
  ext_gcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

}  // namespace

long long ext_gcd_chain(const std::vector<long long>& values,
                        std::vector<long long>& coeffs) {
  coeffs.assign(values.size(), 0);
  long long g = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    long long g2, u, v;
    ext_gcd(g, values[i], g2, u, v);
    for (std::size_t j = 0; j < i; ++j)
      coeffs[j] = checked_narrow(i128(coeffs[j]) * u, "bezout coefficient");
    coeffs[i] = v;
    g = g2;
  }
  return g;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 0) n = -n;
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long squarefree_kernel(long long n) {
  if (n == 0) return 0;
  long long r = 1;
  for (auto [p, e] : factorize(n)) r *= p;
  return r;
}

// ---------------------------------------------------------------------------
// IntRing

IntRing::Elem IntRing::add(Elem a, Elem b) const {
  return checked_narrow(i128(a) + b, "integer sum");
}

IntRing::Elem IntRing::mul(Elem a, Elem b) const {
  return checked_narrow(i128(a) * b, "integer product");
}

std::optional<RadicalWitness<long long>> IntRing::radical_member(
    Elem x, const std::vector<Elem>& gens) const {
  RadicalWitness<Elem> w;
  w.cofactors.assign(gens.size(), 0);
  if (x == 0) return w;  // 0 = empty combination, k = 1
  long long d = 0;
  for (Elem g : gens) d = gcd_ll(d, g);
  if (d == 0) return std::nullopt;
  unsigned k = 1;
  for (auto [p, e] : factorize(d)) {
    if (x % p != 0) return std::nullopt;
    int vx = 0;
    long long t = x;
    while (t % p == 0) {
      t /= p;
      ++vx;
    }
    k = std::max<unsigned>(k, static_cast<unsigned>((e + vx - 1) / vx));
  }
  w.k = k;
  i128 xk = 1;
  for (unsigned i = 0; i < k; ++i) {
    xk *= x;
    checked_narrow(xk, "radical witness power");
  }
  long long q = static_cast<long long>(xk / d);
  std::vector<long long> u;
  ext_gcd_chain(gens, u);
  for (std::size_t i = 0; i < gens.size(); ++i)
    w.cofactors[i] = checked_narrow(i128(q) * u[i], "radical cofactor");
  return w;
}

bool IntRing::jacobson_member(Elem x, const std::vector<Elem>& gens) const {
  long long d = 0;
  for (Elem g : gens) d = gcd_ll(d, g);
  if (d == 0) return x == 0;
  if (d == 1) return true;
  return x % squarefree_kernel(d) == 0;
}

// ---------------------------------------------------------------------------
// ModRing

ModRing::ModRing(long long n) : n_(n) {
  if (n < 1) throw Error("modulus must be positive");
}

bool ModRing::is_unit(Elem a) const { return gcd_ll(a, n_) == 1; }

std::vector<long long> ModRing::enumerate() const {
  std::vector<Elem> out(n_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::optional<RadicalWitness<long long>> ModRing::radical_member(
    Elem x, const std::vector<Elem>& gens) const {
  long long g = n_;
  for (Elem e : gens) g = gcd_ll(g, e);
  // x^k in <gens> mod n iff g divides x^k.
  long long xk = 1 % g;
  for (unsigned k = 1; k <= 64; ++k) {
    xk = (i128(xk) * (x % g)) % g;
    if (xk == 0) {
      RadicalWitness<Elem> w;
      w.k = k;
      // Integer x^k mod n, then t with t g = x^k (mod n).
      long long r = 1;
      for (unsigned i = 0; i < k; ++i) r = (i128(r) * x) % n_;
      long long t = (r / g) % std::max<long long>(n_ / g, 1);
      std::vector<long long> vals = gens;
      vals.push_back(n_);
      std::vector<long long> u;
      long long gg = ext_gcd_chain(vals, u);
      (void)gg;
      for (std::size_t i = 0; i < gens.size(); ++i)
        w.cofactors.push_back(from_int(checked_narrow(i128(t) * u[i] % n_,
                                                      "mod cofactor")));
      return w;
    }
  }
  return std::nullopt;
}

bool ModRing::jacobson_member(Elem x, const std::vector<Elem>& gens) const {
  long long g = n_;
  for (Elem e : gens) g = gcd_ll(g, e);
  if (g == 1) return true;
  for (long long y = 0; y < g; ++y)
    if (gcd_ll(1 + x * y, g) != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Rat / Poly

Rat::Rat(long long n) : num(n), den(1) {}

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat operator+(Rat a, Rat b) {
  return Rat(checked_narrow(i128(a.num) * b.den + i128(b.num) * a.den,
                            "rational sum"),
             checked_narrow(i128(a.den) * b.den, "rational sum"));
}
Rat operator-(Rat a, Rat b) { return a + Rat(-b.num, b.den); }
Rat operator*(Rat a, Rat b) {
  return Rat(checked_narrow(i128(a.num) * b.num, "rational product"),
             checked_narrow(i128(a.den) * b.den, "rational product"));
}
Rat operator/(Rat a, Rat b) {
  if (b.num == 0) throw Error("division by zero");
  return a * Rat(b.den, b.num);
}

std::string Rat::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Poly Poly::constant(Rat r) {
  Poly p;
  if (!r.is_zero()) p.c = {r};
  return p;
}

Poly Poly::x() {
  Poly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

void Poly::normalize() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = out.c[i] + a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] + b.c[i];
  out.normalize();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = out.c[i] + a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] - b.c[i];
  out.normalize();
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
  out.normalize();
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rat r = c[i];
    if (r.is_zero()) continue;
    bool neg = r.num < 0;
    Rat mag = neg ? Rat(-r.num, r.den) : r;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    bool unit_coeff = mag.num == 1 && mag.den == 1;
    if (i == 0 || !unit_coeff) out += mag.to_string();
    if (i > 0) {
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  Poly q, r = a;
  q.c.assign(a.c.size(), Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rat f = r.lead() / b.lead();
    q.c[shift] = q.c[shift] + f;
    Poly sub;
    sub.c.assign(shift + 1, Rat(0));
    sub.c[shift] = f;
    r = r - sub * b;
  }
  q.normalize();
  return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    Rat inv = Rat(1) / a.lead();
    a = a * Poly::constant(inv);
  }
  return a;
}

Poly poly_squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  Poly d;  // derivative
  d.c.assign(p.c.size() > 1 ? p.c.size() - 1 : 0, Rat(0));
  for (std::size_t i = 1; i < p.c.size(); ++i)
    d.c[i - 1] = p.c[i] * Rat(static_cast<long long>(i));
  d.normalize();
  Poly g = poly_gcd(p, d);
  if (g.is_zero()) return p;
  Poly sf = poly_divmod(p, g).first;
  if (!sf.is_zero()) sf = sf * Poly::constant(Rat(1) / sf.lead());
  return sf;
}

namespace {

// g = gcd(values) monic, g = sum coeff_i values_i.
Poly poly_ext_gcd_chain(const std::vector<Poly>& values,
                        std::vector<Poly>& coeffs) {
  coeffs.assign(values.size(), Poly{});
  Poly g;
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Extended Euclid on (g, values[i]).
    Poly a = g, b = values[i];
    Poly ua = Poly::constant(1), ub;          // combination of a
    Poly va, vb = Poly::constant(1);          // combination of values[i]
    while (!b.is_zero()) {
      auto [q, r] = poly_divmod(a, b);
      Poly ur = ua - q * ub, vr = va - q * vb;
      a = b;
      ua = ub;
      va = vb;
      b = r;
      ub = ur;
      vb = vr;
    }
    // a = ua * g_old + va * values[i]
    for (std::size_t j = 0; j < i; ++j) coeffs[j] = coeffs[j] * ua;
    coeffs[i] = va;
    g = a;
    if (!g.is_zero()) {
      Poly inv = Poly::constant(Rat(1) / g.lead());
      g = g * inv;
      for (std::size_t j = 0; j <= i; ++j) coeffs[j] = coeffs[j] * inv;
    }
  }
  return g;
}

}  // namespace

std::optional<RadicalWitness<Poly>> PolyRing::radical_member(
    const Elem& x, const std::vector<Elem>& gens) const {
  RadicalWitness<Poly> w;
  w.cofactors.assign(gens.size(), Poly{});
  if (x.is_zero()) return w;
  std::vector<Poly> coeffs;
  Poly g = poly_ext_gcd_chain(gens, coeffs);
  if (g.is_zero()) return std::nullopt;
  Poly sf = poly_squarefree_part(g);
  if (!poly_divmod(x, sf).second.is_zero()) return std::nullopt;
  Poly xk = Poly::constant(1);
  for (unsigned k = 1; k <= static_cast<unsigned>(g.degree()) + 1; ++k) {
    xk = xk * x;
    auto [q, r] = poly_divmod(xk, g);
    if (r.is_zero()) {
      w.k = k;
      for (std::size_t i = 0; i < gens.size(); ++i)
        w.cofactors[i] = q * coeffs[i];
      return w;
    }
  }
  return std::nullopt;
}

bool PolyRing::jacobson_member(const Elem& x,
                               const std::vector<Elem>& gens) const {
  std::vector<Poly> coeffs;
  Poly g = poly_ext_gcd_chain(gens, coeffs);
  if (g.is_zero()) return x.is_zero();
  if (g.degree() == 0) return true;
  // Q[x] is a Jacobson ring: J(<g>) is the radical of <g>.
  return poly_divmod(x, poly_squarefree_part(g)).second.is_zero();
}

// ---------------------------------------------------------------------------
// TableRing

TableRing::TableRing(std::vector<std::vector<int>> add,
                     std::vector<std::vector<int>> mul, int one)
    : add_(std::move(add)), mul_(std::move(mul)), one_(one) {
  std::size_t n = add_.size();
  if (n == 0 || mul_.size() != n) throw Error("malformed ring tables");
  if (n > 16) throw CapacityError("table rings capped at 16 elements");
  for (const auto& row : add_)
    if (row.size() != n) throw Error("malformed addition table");
  for (const auto& row : mul_)
    if (row.size() != n) throw Error("malformed multiplication table");
  for (const auto& t : {std::cref(add_), std::cref(mul_)})
    for (const auto& row : t.get())
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw Error("table entry out of range");
  if (one_ < 0 || static_cast<std::size_t>(one_) >= n)
    throw Error("unit element out of range");
  neg_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (add_[a][b] == 0) {
        neg_[a] = static_cast<int>(b);
        break;
      }
    if (neg_[a] < 0) throw Error("element without additive inverse");
  }
}

TableRing::Elem TableRing::from_int(long long v) const {
  // The additive order of 1 divides |R|.
  long long r = v % static_cast<long long>(size());
  if (r < 0) r += static_cast<long long>(size());
  Elem acc = 0;
  for (long long i = 0; i < r; ++i) acc = add_[acc][one_];
  return acc;
}

bool TableRing::is_unit(Elem a) const {
  for (std::size_t t = 0; t < size(); ++t)
    if (mul_[a][t] == one_) return true;
  return false;
}

std::vector<int> TableRing::enumerate() const {
  std::vector<Elem> out(size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<bool> TableRing::ideal(const std::vector<Elem>& gens) const {
  std::vector<bool> in(size(), false);
  in[0] = true;
  std::vector<Elem> queue{0};
  auto push = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      queue.push_back(e);
    }
  };
  for (Elem g : gens)
    for (std::size_t r = 0; r < size(); ++r) push(mul_[g][r]);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(add_[queue[i]][queue[j]]);
  // Iterate to closure: sums may enable new sums.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (in[a] && in[b] && !in[add_[a][b]]) {
          in[add_[a][b]] = true;
          changed = true;
        }
  }
  return in;
}

std::optional<RadicalWitness<int>> TableRing::radical_member(
    Elem x, const std::vector<Elem>& gens) const {
  // Track each ideal member as an explicit combination sum r_i * g_i.
  std::size_t n = size();
  std::vector<std::vector<Elem>> rep(n);
  std::vector<bool> in(n, false);
  in[0] = true;
  rep[0].assign(gens.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t r = 0; r < n; ++r) {
        Elem e = mul_[gens[i]][static_cast<Elem>(r)];
        if (in[e]) continue;
        std::vector<Elem> comb(gens.size(), 0);
        comb[i] = static_cast<Elem>(r);
        in[e] = true;
        rep[e] = std::move(comb);
        changed = true;
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!in[a] || !in[b]) continue;
        Elem e = add_[a][b];
        if (in[e]) continue;
        std::vector<Elem> comb(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
          comb[i] = add_[rep[a][i]][rep[b][i]];
        in[e] = true;
        rep[e] = std::move(comb);
        changed = true;
      }
  }
  Elem xk = one_;
  for (unsigned k = 1; k <= n + 1; ++k) {
    xk = mul_[xk][x];
    if (in[xk]) {
      RadicalWitness<Elem> w;
      w.k = k;
      w.cofactors = rep[xk];
      return w;
    }
  }
  return std::nullopt;
}

bool TableRing::jacobson_member(Elem x, const std::vector<Elem>& gens) const {
  std::vector<bool> I = ideal(gens);
  for (std::size_t y = 0; y < size(); ++y) {
    Elem v = add_[one_][mul_[x][static_cast<Elem>(y)]];
    bool invertible = false;
    for (std::size_t t = 0; t < size(); ++t)
      if (I[sub(mul_[v][static_cast<Elem>(t)], one_)]) {
        invertible = true;
        break;
      }
    if (!invertible) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finite ring spectra

std::vector<long long> radical_of(const ModRing& r,
                                  const std::vector<long long>& gens) {
  long long d = r.modulus();
  for (long long g : gens) d = gcd_ll(d, g);
  long long rad = squarefree_kernel(d);
  std::vector<long long> out;
  if (rad == 0) rad = r.modulus() == 1 ? 1 : r.modulus();
  for (long long x = 0; x < r.modulus(); ++x)
    if (x % rad == 0) out.push_back(x);
  return out;
}

namespace {

std::vector<std::vector<long long>> mod_primes(const ModRing& r) {
  std::vector<std::vector<long long>> out;
  for (auto [p, e] : factorize(r.modulus())) {
    std::vector<long long> ideal;
    for (long long x = 0; x < r.modulus(); ++x)
      if (x % p == 0) ideal.push_back(x);
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<std::vector<long long>> table_primes(const TableRing& r) {
  std::size_t n = r.size();
  std::vector<std::vector<long long>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;                       // contains 0
    if (mask >> r.one() & 1u) continue;               // proper
    bool ideal = true;
    for (std::size_t a = 0; a < n && ideal; ++a)
      for (std::size_t b = 0; b < n && ideal; ++b) {
        bool ina = mask >> a & 1u, inb = mask >> b & 1u;
        if (ina && inb && !(mask >> r.add(a, b) & 1u)) ideal = false;
        if (ina && !(mask >> r.mul(a, b) & 1u)) ideal = false;
      }
    if (!ideal) continue;
    bool prime = true;
    for (std::size_t a = 0; a < n && prime; ++a)
      for (std::size_t b = 0; b < n && prime; ++b) {
        bool ina = mask >> a & 1u, inb = mask >> b & 1u;
        if (!ina && !inb && (mask >> r.mul(a, b) & 1u)) prime = false;
      }
    if (!prime) continue;
    std::vector<long long> ideal_set;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) ideal_set.push_back(static_cast<long long>(a));
    out.push_back(std::move(ideal_set));
  }
  return out;
}

FiniteRingLattice radical_ideal_lattice(
    std::size_t carrier, std::vector<std::vector<long long>> primes,
    const std::string& opname) {
  FiniteRingLattice out;
  out.primes = primes;
  std::set<std::vector<long long>> seen;
  // All intersections of prime subsets; the empty intersection is the ring.
  std::size_t np = primes.size();
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    std::vector<long long> inter;
    for (std::size_t x = 0; x < carrier; ++x) {
      bool in_all = true;
      for (std::size_t p = 0; p < np && in_all; ++p)
        if (mask >> p & 1u)
          in_all = std::binary_search(primes[p].begin(), primes[p].end(),
                                      static_cast<long long>(x));
      if (in_all) inter.push_back(static_cast<long long>(x));
    }
    seen.insert(std::move(inter));
  }
  for (const auto& s : seen) out.ideal_sets.push_back(s);
  std::size_t n = out.ideal_sets.size();
  out.poset.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.poset.labels.push_back(opname + std::to_string(i));
  out.poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.poset.leq[i][j] =
          std::includes(out.ideal_sets[j].begin(), out.ideal_sets[j].end(),
                        out.ideal_sets[i].begin(), out.ideal_sets[i].end());
  return out;
}

}  // namespace

std::size_t FiniteRingLattice::index_of(
    const std::vector<long long>& ideal_set) const {
  for (std::size_t i = 0; i < ideal_sets.size(); ++i)
    if (ideal_sets[i] == ideal_set) return i;
  throw Error("ideal is not an element of the lattice");
}

FiniteRingLattice zar_lattice(const ModRing& r) {
  return radical_ideal_lattice(r.modulus(), mod_primes(r), "D");
}

FiniteRingLattice zar_lattice(const TableRing& r) {
  return radical_ideal_lattice(r.size(), table_primes(r), "D");
}

std::vector<long long> radical_of(const TableRing& r,
                                  const std::vector<int>& gens) {
  auto primes = table_primes(r);
  std::vector<long long> out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool in_all = true;
    for (const auto& p : primes) {
      bool contains_gens = true;
      for (int g : gens)
        if (!std::binary_search(p.begin(), p.end(), static_cast<long long>(g)))
          contains_gens = false;
      if (contains_gens &&
          !std::binary_search(p.begin(), p.end(), static_cast<long long>(x))) {
        in_all = false;
        break;
      }
    }
    if (in_all) out.push_back(static_cast<long long>(x));
  }
  return out;
}

namespace {

template <typename R>
FiniteRingLattice heit_lattice_impl(const R& r, const FiniteRingLattice& zar) {
  FiniteRingLattice out;
  out.primes = zar.primes;
  std::set<std::vector<long long>> seen;
  for (const auto& ideal : zar.ideal_sets) {
    std::vector<typename R::Elem> gens;
    for (long long e : ideal) gens.push_back(static_cast<typename R::Elem>(e));
    std::vector<long long> j;
    for (auto x : r.enumerate())
      if (r.jacobson_member(x, gens)) j.push_back(static_cast<long long>(x));
    seen.insert(std::move(j));
  }
  for (const auto& s : seen) out.ideal_sets.push_back(s);
  std::size_t n = out.ideal_sets.size();
  for (std::size_t i = 0; i < n; ++i)
    out.poset.labels.push_back("J" + std::to_string(i));
  out.poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.poset.leq[i][j] =
          std::includes(out.ideal_sets[j].begin(), out.ideal_sets[j].end(),
                        out.ideal_sets[i].begin(), out.ideal_sets[i].end());
  return out;
}

}  // namespace

FiniteRingLattice heit_lattice(const ModRing& r) {
  return heit_lattice_impl(r, zar_lattice(r));
}

FiniteRingLattice heit_lattice(const TableRing& r) {
  return heit_lattice_impl(r, zar_lattice(r));
}

int jdim(const ModRing& r) {
  return kdim_chains(present_finite_lattice(heit_lattice(r).poset).lattice);
}

int jdim(const TableRing& r) {
  return kdim_chains(present_finite_lattice(heit_lattice(r).poset).lattice);
}

// ---------------------------------------------------------------------------
// Kronecker-Heitmann

std::optional<std::vector<long long>> kronecker_search(
    const ModRing& r, const std::vector<long long>& bs) {
  long long n = r.modulus();
  auto rad_gen = [&](const std::vector<long long>& gens) {
    long long d = n;
    for (long long g : gens) d = gcd_ll(d, g);
    return squarefree_kernel(d) % n;
  };
  std::size_t m = bs.size();
  std::vector<long long> xs(m, 0);
  std::function<bool(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == m) {
      for (long long a = 0; a < n; ++a) {
        std::vector<long long> lhs = bs;
        lhs.push_back(a);
        std::vector<long long> rhs;
        for (std::size_t i = 0; i < m; ++i)
          rhs.push_back((bs[i] + a * xs[i]) % n);
        if (rad_gen(lhs) != rad_gen(rhs)) return false;
      }
      return true;
    }
    for (long long x = 0; x < n; ++x) {
      xs[pos] = x;
      if (walk(pos + 1)) return true;
    }
    return false;
  };
  if (walk(0)) return xs;
  return std::nullopt;
}

std::optional<std::vector<int>> kronecker_search(const TableRing& r,
                                                 const std::vector<int>& bs) {
  std::size_t m = bs.size();
  std::vector<int> xs(m, 0);
  std::function<bool(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == m) {
      for (std::size_t a = 0; a < r.size(); ++a) {
        std::vector<int> lhs = bs;
        lhs.push_back(static_cast<int>(a));
        std::vector<int> rhs;
        for (std::size_t i = 0; i < m; ++i)
          rhs.push_back(r.add(bs[i], r.mul(static_cast<int>(a), xs[i])));
        if (radical_of(r, lhs) != radical_of(r, rhs)) return false;
      }
      return true;
    }
    for (std::size_t x = 0; x < r.size(); ++x) {
      xs[pos] = static_cast<int>(x);
      if (walk(pos + 1)) return true;
    }
    return false;
  };
  if (walk(0)) return xs;
  return std::nullopt;
}

std::optional<KroneckerZ> kronecker_search(const IntRing&,
                                           const std::vector<long long>& bs,
                                           long long x_bound,
                                           const std::vector<long long>& sample) {
  auto rad_gen = [](const std::vector<long long>& gens) {
    long long d = 0;
    for (long long g : gens) d = gcd_ll(d, g);
    return squarefree_kernel(d);
  };
  std::size_t m = bs.size();
  // Candidate order 0, 1, -1, 2, -2, ...
  std::vector<long long> candidates{0};
  for (long long v = 1; v <= x_bound; ++v) {
    candidates.push_back(v);
    candidates.push_back(-v);
  }
  std::vector<long long> xs(m, 0);
  std::function<bool(std::size_t)> walk = [&](std::size_t pos) {
    if (pos == m) {
      for (long long a : sample) {
        std::vector<long long> lhs = bs;
        lhs.push_back(a);
        std::vector<long long> rhs;
        for (std::size_t i = 0; i < m; ++i) rhs.push_back(bs[i] + a * xs[i]);
        if (rad_gen(lhs) != rad_gen(rhs)) return false;
      }
      return true;
    }
    for (long long x : candidates) {
      xs[pos] = x;
      if (walk(pos + 1)) return true;
    }
    return false;
  };
  if (walk(0)) return KroneckerZ{xs, sample};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stable range

bool stable_range_leq(const ModRing& r, int n) {
  if (n < 0) return false;
  long long N = r.modulus();
  std::vector<long long> tuple(n + 1, 0);
  std::function<bool(int)> walk = [&](int pos) -> bool {
    if (pos == n + 1) {
      long long g = N;
      for (long long v : tuple) g = gcd_ll(g, v);
      if (g != 1) return true;  // not unimodular: nothing to shorten
      // Search xs with 1 in <a_i + x_i a>.
      std::vector<long long> xs(n, 0);
      std::function<bool(int)> search = [&](int i) -> bool {
        if (i == n) {
          long long g2 = N;
          for (int j = 0; j < n; ++j)
            g2 = gcd_ll(g2, (tuple[j + 1] + xs[j] * tuple[0]) % N);
          return g2 == 1;
        }
        for (long long x = 0; x < N; ++x) {
          xs[i] = x;
          if (search(i + 1)) return true;
        }
        return false;
      };
      return search(0);
    }
    for (long long v = 0; v < N; ++v) {
      tuple[pos] = v;
      if (!walk(pos + 1)) return false;
    }
    return true;
  };
  return walk(0);
}

bool stable_range_leq(const TableRing& r, int n) {
  if (n < 0) return false;
  std::size_t N = r.size();
  auto unit_ideal = [&](const std::vector<int>& gens) {
    return r.ideal(gens)[r.one()];
  };
  std::vector<int> tuple(n + 1, 0);
  std::function<bool(int)> walk = [&](int pos) -> bool {
    if (pos == n + 1) {
      if (!unit_ideal(tuple)) return true;
      std::vector<int> xs(n, 0);
      std::function<bool(int)> search = [&](int i) -> bool {
        if (i == n) {
          std::vector<int> shortened;
          for (int j = 0; j < n; ++j)
            shortened.push_back(r.add(tuple[j + 1], r.mul(xs[j], tuple[0])));
          return unit_ideal(shortened);
        }
        for (std::size_t x = 0; x < N; ++x) {
          xs[i] = static_cast<int>(x);
          if (search(i + 1)) return true;
        }
        return false;
      };
      return search(0);
    }
    for (std::size_t v = 0; v < N; ++v) {
      tuple[pos] = static_cast<int>(v);
      if (!walk(pos + 1)) return false;
    }
    return true;
  };
  return walk(0);
}

// ---------------------------------------------------------------------------
// Z-modules

ZModule::Submodule ZModule::span(
    std::vector<std::vector<long long>> gens) const {
  for (const auto& g : gens)
    if (g.size() != rank_) throw Error("vector rank mismatch");
  std::vector<std::vector<long long>> rows = std::move(gens);
  std::vector<std::vector<long long>> basis;
  std::size_t col = 0, used = 0;
  while (col < rank_) {
    // Gather rows with nonzero entry in this column and gcd-combine them.
    bool progress = true;
    while (progress) {
      progress = false;
      std::size_t best = rows.size();
      for (std::size_t i = used; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            std::llabs(rows[i][col]) < std::llabs(rows[best][col]))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[used], rows[best]);
      for (std::size_t i = used + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[used][col];
        for (std::size_t c = 0; c < rank_; ++c)
          rows[i][c] -= q * rows[used][c];
        if (rows[i][col] != 0) progress = true;
      }
    }
    if (used < rows.size() && rows[used][col] != 0) {
      if (rows[used][col] < 0)
        for (auto& v : rows[used]) v = -v;
      basis.push_back(rows[used]);
      ++used;
    }
    ++col;
  }
  return Submodule{std::move(basis)};
}

bool ZModule::member(const Submodule& m, std::vector<long long> v) const {
  if (v.size() != rank_) throw Error("vector rank mismatch");
  for (const auto& row : m.rows) {
    std::size_t pivot = 0;
    while (pivot < rank_ && row[pivot] == 0) ++pivot;
    if (pivot == rank_) continue;
    if (v[pivot] % row[pivot] != 0) return false;
    long long q = v[pivot] / row[pivot];
    for (std::size_t c = 0; c < rank_; ++c) v[c] -= q * row[c];
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool module_entails(const ZModule& m,
                    const std::vector<std::vector<long long>>& xs,
                    const std::vector<std::vector<long long>>& ys) {
  ZModule::Submodule sub = m.span(xs);
  for (const auto& y : ys)
    if (m.member(sub, y)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// l-groups

LGroupResult lgroup_entails(std::size_t dim,
                            const std::vector<std::vector<long long>>& as,
                            const std::vector<std::vector<long long>>& bs) {
  if (as.empty() || bs.empty())
    throw Error("lgroup entailment requires nonempty sides");
  for (const auto& v : as)
    if (v.size() != dim) throw Error("vector rank mismatch");
  for (const auto& v : bs)
    if (v.size() != dim) throw Error("vector rank mismatch");
  LGroupResult out;
  out.k = 1;
  for (std::size_t c = 0; c < dim; ++c) {
    long long big = 0;  // \/ as^-
    for (const auto& a : as) big = std::max(big, std::max(-a[c], 0LL));
    long long small = std::numeric_limits<long long>::max();  // /\ bs^-
    for (const auto& b : bs) small = std::min(small, std::max(-b[c], 0LL));
    if (big == 0) {
      if (small > 0) return LGroupResult{false, 0};
    } else {
      out.k = std::max<unsigned>(
          out.k, static_cast<unsigned>((small + big - 1) / big));
    }
  }
  out.holds = true;
  return out;
}

// ---------------------------------------------------------------------------
// Corollaire 2.3 identities

ZarValConsistency zar_to_val_consistency(const IntRing& r,
                                         const std::vector<long long>& as,
                                         const std::vector<long long>& cs,
                                         unsigned k_max) {
  ZarValConsistency out;
  out.zar_holds = zar_entails(r, as, cs).holds;
  long long prod = 1;
  for (long long a : as) prod = r.mul(prod, a);
  long long g = 0;
  for (long long c : cs) g = gcd_ll(g, c);
  i128 pk = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    pk *= prod;
    long long pkll = checked_narrow(pk, "identity power");
    bool solvable = g == 0 ? pkll == 0 : pkll % g == 0;
    if (!solvable) continue;
    ValPosIdentity id;
    id.k = k;
    if (g == 0) {
      id.int_cofactors.assign(cs.size(), 0);
    } else {
      std::vector<long long> u;
      ext_gcd_chain(cs, u);
      for (std::size_t i = 0; i < cs.size(); ++i)
        id.int_cofactors.push_back(
            checked_narrow(-(pk / g) * u[i], "identity cofactor"));
    }
    out.identity = std::move(id);
    break;
  }
  bool found = out.identity.has_value();
  if (out.zar_holds == found)
    out.agree = Tri::True;
  else if (out.zar_holds && !found)
    out.agree = Tri::Inconclusive;  // witness exponent beyond the bound
  else
    out.agree = Tri::False;
  return out;
}

ZarValConsistency zar_to_val_consistency(const ModRing& r,
                                         const std::vector<long long>& as,
                                         const std::vector<long long>& cs,
                                         unsigned k_max) {
  ZarValConsistency out;
  out.zar_holds = zar_entails(r, as, cs).holds;
  long long prod = r.one();
  for (long long a : as) prod = r.mul(prod, a);
  long long g = r.modulus();
  for (long long c : cs) g = gcd_ll(g, c);
  long long pk = 1 % r.modulus();
  for (unsigned k = 1; k <= k_max; ++k) {
    pk = r.mul(pk, prod);
    if (pk % g != 0) continue;
    ValPosIdentity id;
    id.k = k;
    long long t = (pk / g) % std::max<long long>(r.modulus() / g, 1);
    std::vector<long long> vals = cs;
    vals.push_back(r.modulus());
    std::vector<long long> u;
    ext_gcd_chain(vals, u);
    for (std::size_t i = 0; i < cs.size(); ++i)
      id.int_cofactors.push_back(
          r.neg(r.from_int(checked_narrow(i128(t) * u[i] % r.modulus(),
                                          "identity cofactor"))));
    out.identity = std::move(id);
    break;
  }
  bool found = out.identity.has_value();
  out.agree = out.zar_holds == found
                  ? Tri::True
                  : (out.zar_holds ? Tri::Inconclusive : Tri::False);
  return out;
}

ZarValConsistency zar_to_val_consistency(const PolyRing& r,
                                         const std::vector<Poly>& as,
                                         const std::vector<Poly>& cs,
                                         unsigned k_max) {
  ZarValConsistency out;
  out.zar_holds = zar_entails(r, as, cs).holds;
  Poly prod = r.one();
  for (const Poly& a : as) prod = prod * a;
  std::vector<Poly> u;
  Poly g = poly_ext_gcd_chain(cs, u);
  Poly pk = r.one();
  for (unsigned k = 1; k <= k_max; ++k) {
    pk = pk * prod;
    if (g.is_zero()) {
      if (!pk.is_zero()) continue;
      ValPosIdentity id;
      id.k = k;
      id.poly_cofactors.assign(cs.size(), Poly{});
      out.identity = std::move(id);
      break;
    }
    auto [q, rem] = poly_divmod(pk, g);
    if (!rem.is_zero()) continue;
    ValPosIdentity id;
    id.k = k;
    for (std::size_t i = 0; i < cs.size(); ++i)
      id.poly_cofactors.push_back(Poly{} - q * u[i]);
    out.identity = std::move(id);
    break;
  }
  bool found = out.identity.has_value();
  out.agree = out.zar_holds == found
                  ? Tri::True
                  : (out.zar_holds ? Tri::Inconclusive : Tri::False);
  return out;
}

}  // namespace spectra
