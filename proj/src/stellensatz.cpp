#include "spectra/stellensatz.hpp"

namespace spectra {

namespace {

std::string vec_name(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

FragmentResult liog_fragment(std::size_t dim,
                             const std::vector<std::vector<long long>>& atoms) {
  FragmentResult out;
  std::map<std::vector<long long>, AtomId> index;
  std::vector<std::vector<long long>> elems;
  for (const auto& v : atoms) {
    if (v.size() != dim) throw Error("vector rank mismatch");
    if (index.count(v)) continue;
    index[v] = out.presentation.add_atom(vec_name(v));
    elems.push_back(v);
  }
  auto find = [&](const std::vector<long long>& v) -> std::optional<AtomId> {
    auto it = index.find(v);
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
  auto nonneg = [](const std::vector<long long>& v) {
    for (long long c : v)
      if (c < 0) return false;
    return true;
  };

  for (const auto& x : elems) {
    std::vector<long long> mx(dim);
    for (std::size_t i = 0; i < dim; ++i) mx[i] = -x[i];
    emit({}, {find(x), find(mx)});  // totality: x >= 0 or -x >= 0
    if (nonneg(x)) emit({}, {find(x)});  // positive diagram
    for (const auto& y : elems) {
      std::vector<long long> sum(dim);
      for (std::size_t i = 0; i < dim; ++i) sum[i] = x[i] + y[i];
      emit({find(x), find(y)}, {find(sum)});  // additivity
      std::vector<long long> diff(dim);
      bool leq = true;
      for (std::size_t i = 0; i < dim; ++i) {
        diff[i] = y[i] - x[i];
        if (diff[i] < 0) leq = false;
      }
      if (leq && x != y) emit({find(x)}, {find(y)});  // order
    }
  }
  for (const Sequent& s : axioms) out.presentation.add_axiom(s);
  return out;
}

}  // namespace spectra
