#include "spectra/cli.hpp"

#include <filesystem>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectra/dimension.hpp"
#include "spectra/parse.hpp"
#include "spectra/stellensatz.hpp"

namespace spectra {

namespace {

using nlohmann::json;

struct Report {
  json query;
  json result;
  json witness;  // null when none
  std::string text;

  void emit(bool json_out, std::ostream& out) const {
    if (json_out) {
      json doc{{"query", query}, {"result", result}, {"witness", witness}};
      out << doc.dump() << "\n";
    } else {
      out << text << "\n";
    }
  }
};

template <typename R>
typename R::Elem parse_elem(const R& ring, const std::string& text) {
  using T = std::decay_t<R>;
  if constexpr (std::is_same_v<T, IntRing>) {
    (void)ring;
    return parse_int(text);
  } else if constexpr (std::is_same_v<T, ModRing>) {
    return ring.from_int(parse_int(text));
  } else if constexpr (std::is_same_v<T, PolyRing>) {
    (void)ring;
    return parse_poly(text);
  } else {
    long long v = parse_int(text);
    if (v < 0 || static_cast<std::size_t>(v) >= ring.size())
      throw Error("element index out of range for the table ring");
    return static_cast<int>(v);
  }
}

template <typename R>
std::pair<typename R::Elem, typename R::Elem> parse_pair(
    const R& ring, const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos || text[a] != '(' || text[b] != ')')
    throw Error("pairs look like (a,b)");
  auto parts = split_list(text.substr(a + 1, b - a - 1), ',');
  if (parts.size() != 2) throw Error("pairs look like (a,b)");
  return {parse_elem(ring, parts[0]), parse_elem(ring, parts[1])};
}

std::pair<std::string, std::string> split_turnstile(const std::string& q) {
  std::size_t at = q.find("|-");
  if (at == std::string::npos) throw Error("query needs a '|-'");
  return {q.substr(0, at), q.substr(at + 2)};
}

FpLattice load_lattice(const std::string& path) {
  return FpLattice(parse_presentation(read_file(path), path).presentation);
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& seq, bool json_out,
              std::ostream& out) {
  FpLattice t = load_lattice(file);
  Sequent q = parse_sequent(seq, t.presentation());
  bool holds = entails(t.saturation(), q);
  Report r;
  r.query = {{"command", "check"}, {"file", file}, {"sequent", seq}};
  r.result = holds;
  r.text = "check: " + seq + " : " + (holds ? "true" : "false");
  r.emit(json_out, out);
  return holds ? 0 : 1;
}

int cmd_spec(const std::string& file, bool dot, bool json_out,
             std::ostream& out) {
  FpLattice t = load_lattice(file);
  FiniteSpectralSpace x = spec(t);
  if (dot) {
    out << specialization_dot(x);
    return 0;
  }
  Report r;
  r.query = {{"command", "spec"}, {"file", file}};
  json points = json::array();
  json edges = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) points.push_back(x.point_name(i));
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q)
      if (p != q && x.specializes(p, q))
        edges.push_back({x.point_name(p), x.point_name(q)});
  r.result = {{"point_count", x.size()}, {"points", points},
              {"specializations", edges}};
  r.text = "spec: " + std::to_string(x.size()) + " prime(s)";
  for (std::size_t i = 0; i < x.size(); ++i) r.text += " " + x.point_name(i);
  r.emit(json_out, out);
  return 0;
}

int cmd_dim(const std::string& file, const std::string& morphfile,
            std::optional<int> n, int kmax, bool json_out, std::ostream& out) {
  FpLattice t = load_lattice(file);
  Report r;
  if (morphfile.empty()) {
    int d = kdim_chains(t);
    r.query = {{"command", "dim"}, {"file", file}};
    r.result = d;
    r.text = "kdim = " + std::to_string(d);
    if (n) {
      bool ok = kdim_leq(t, *n);
      r.witness = {{"criterion_leq", *n}, {"holds", ok}};
      r.text += "; kdim <= " + std::to_string(*n) + " : " +
                (ok ? "true" : "false");
      r.emit(json_out, out);
      return ok ? 0 : 1;
    }
    r.emit(json_out, out);
    return 0;
  }
  MorphismDoc doc = parse_morphism_doc(read_file(morphfile));
  if (!doc.source_path)
    throw Error("relative dimension needs a `source \"...\";` line");
  std::filesystem::path base = std::filesystem::path(morphfile).parent_path();
  FpLattice src = load_lattice((base / *doc.source_path).string());
  Morphism f = build_morphism(doc, src, t);
  int d = relative_kdim_oracle(f);
  r.query = {{"command", "dim"}, {"file", file}, {"relative", morphfile}};
  r.result = d;
  r.text = "relative kdim = " + std::to_string(d);
  if (n) {
    MorphismTables mt(f);
    Tri c = relative_kdim_leq(mt, *n, kmax);
    r.witness = {{"criterion_leq", *n}, {"holds", to_string(c)}};
    r.text += "; relative kdim <= " + std::to_string(*n) + " : " +
              to_string(c);
    r.emit(json_out, out);
    if (c == Tri::Inconclusive) {
      r.witness["reason"] = "bound-exhausted";
      return 2;
    }
    return c == Tri::True ? 0 : 1;
  }
  r.emit(json_out, out);
  return 0;
}

int cmd_heitmann(const std::string& file, bool json_out, std::ostream& out) {
  FpLattice t = load_lattice(file);
  FpLattice he = heitmann_lattice(t);
  std::size_t n_t = element_count(t), n_he = element_count(he);
  std::size_t jspec_points = spec(he).size();
  Report r;
  r.query = {{"command", "heitmann"}, {"file", file}};
  r.result = {{"elements", n_t}, {"heitmann_elements", n_he},
              {"jspec_points", jspec_points}};
  r.text = "He: " + std::to_string(n_t) + " -> " + std::to_string(n_he) +
           " element(s); Jspec has " + std::to_string(jspec_points) +
           " point(s)";
  r.emit(json_out, out);
  return 0;
}

int cmd_morphism(const std::string& srcfile, const std::string& dstfile,
                 const std::string& mapfile, bool lying_over, bool going_up,
                 bool going_down, bool open_map, bool json_out,
                 std::ostream& out) {
  FpLattice src = load_lattice(srcfile);
  FpLattice dst = load_lattice(dstfile);
  Morphism f = build_morphism(parse_morphism_doc(read_file(mapfile)), src, dst);
  Report r;
  r.query = {{"command", "morphism"}, {"source", srcfile}, {"target", dstfile},
             {"map", mapfile}};
  json res;
  bool all = true;
  r.text = "morphism: valid";
  auto note = [&](const char* name, bool v) {
    res[name] = v;
    all = all && v;
    r.text += std::string("; ") + name + " : " + (v ? "true" : "false");
  };
  if (lying_over) note("lying_over", is_lying_over(f));
  if (going_up || going_down || open_map) {
    MorphismTables mt(f);
    if (going_up) note("going_up", is_going_up(mt));
    if (going_down) note("going_down", is_going_down(mt));
    if (open_map) {
      bool open_dual = is_open_dual(mt);
      note("open", open_dual);
      auto adj = open_adjoint(mt);
      res["adjoint_exists"] = adj.has_value();
      if (adj) {
        json table = json::array();
        for (std::size_t b = 0; b < adj->reps.size(); ++b)
          table.push_back(adj->reps[b].to_string(src.presentation()));
        r.witness = {{"adjoint", table}};
      }
    }
  }
  r.result = res.is_null() ? json(true) : res;
  r.emit(json_out, out);
  return all ? 0 : 1;
}

int cmd_glue(const std::string& file, bool json_out, std::ostream& out) {
  QuotientDiagram d = parse_diagram_file(file);
  GluedLattice g = limit_of_diagram(d);
  Report r;
  r.query = {{"command", "glue"}, {"file", file}};
  json covers = json::array();
  for (const Dnf& s : g.cover_elements)
    covers.push_back(s.to_string(g.limit.presentation()));
  r.result = {{"limit_elements", element_count(g.limit)},
              {"limit_atoms", g.limit.atom_count()}};
  r.witness = {{"cover_elements", covers}};
  r.text = "glue: limit has " + std::to_string(element_count(g.limit)) +
           " element(s) over " + std::to_string(g.limit.atom_count()) +
           " generator(s)";
  r.emit(json_out, out);
  return 0;
}

// ---------------------------------------------------------------------------

struct RingArgs {
  std::string op;
  std::string ring = "z";
  std::string query;
  std::string x, gens, bs;
  int n = 1;
  std::size_t rank = 1;
  long long xbound = 50;
  unsigned kmax = 6;
  unsigned seed = 0;
};

template <typename R>
json elems_to_json(const R& ring, const std::vector<typename R::Elem>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(ring.to_string(e));
  return out;
}

int cmd_ring(const RingArgs& a, bool json_out, std::ostream& out) {
  RingVariant rv = parse_ring(a.ring);
  Report r;
  r.query = {{"command", "ring"}, {"op", a.op}, {"ring", a.ring}};
  if (!a.query.empty()) r.query["query"] = a.query;

  if (a.op == "zar") {
    auto [lhs, rhs] = split_turnstile(a.query);
    return std::visit(
        [&](const auto& ring) {
          std::vector<std::decay_t<decltype(ring.zero())>> as, cs;
          for (const auto& s : split_list(lhs, ',')) as.push_back(parse_elem(ring, s));
          for (const auto& s : split_list(rhs, ',')) cs.push_back(parse_elem(ring, s));
          auto res = zar_entails(ring, as, cs);
          r.result = res.holds;
          r.text = "zar: " + a.query + " : " + (res.holds ? "true" : "false");
          if (res.witness) {
            r.witness = {{"k", res.witness->k},
                         {"cofactors", elems_to_json(ring, res.witness->cofactors)}};
            r.text += " (k=" + std::to_string(res.witness->k) + ")";
          }
          r.emit(json_out, out);
          return res.holds ? 0 : 1;
        },
        rv);
  }
  if (a.op == "jacobson") {
    return std::visit(
        [&](const auto& ring) {
          auto x = parse_elem(ring, a.x);
          std::vector<std::decay_t<decltype(ring.zero())>> gens;
          for (const auto& s : split_list(a.gens, ',')) gens.push_back(parse_elem(ring, s));
          bool member = ring.jacobson_member(x, gens);
          r.result = member;
          r.text = std::string("jacobson: ") + (member ? "true" : "false");
          r.emit(json_out, out);
          return member ? 0 : 1;
        },
        rv);
  }
  if (a.op == "kronecker") {
    if (std::holds_alternative<ModRing>(rv)) {
      const auto& ring = std::get<ModRing>(rv);
      std::vector<long long> bs;
      for (const auto& s : split_list(a.bs, ',')) bs.push_back(ring.from_int(parse_int(s)));
      auto xs = kronecker_search(ring, bs);
      r.result = xs.has_value();
      if (xs) {
        r.witness = {{"xs", *xs}, {"exact", true}};
        r.text = "kronecker: found xs";
        for (long long v : *xs) r.text += " " + std::to_string(v);
        r.emit(json_out, out);
        return 0;
      }
      r.witness = {{"reason", "bound-exhausted"}};
      r.text = "kronecker: inconclusive (search space exhausted)";
      r.emit(json_out, out);
      return 2;
    }
    if (std::holds_alternative<IntRing>(rv)) {
      std::vector<long long> bs;
      for (const auto& s : split_list(a.bs, ',')) bs.push_back(parse_int(s));
      std::vector<long long> sample;
      for (long long v = -10; v <= 10; ++v) sample.push_back(v);
      std::mt19937 rng(a.seed);
      std::uniform_int_distribution<long long> dist(-1000, 1000);
      for (int i = 0; i < 5; ++i) sample.push_back(dist(rng));
      auto res = kronecker_search(IntRing{}, bs, a.xbound, sample);
      r.result = res.has_value();
      if (res) {
        r.witness = {{"xs", res->xs}, {"sampled", res->sample}, {"exact", false}};
        r.text = "kronecker: found xs (sampled verification)";
        r.emit(json_out, out);
        return 0;
      }
      r.witness = {{"reason", "bound-exhausted"}};
      r.text = "kronecker: inconclusive within |x| <= " + std::to_string(a.xbound);
      r.emit(json_out, out);
      return 2;
    }
    throw Error("kronecker expects --ring z or z/N");
  }
  if (a.op == "stable-range") {
    bool ok;
    if (std::holds_alternative<ModRing>(rv))
      ok = stable_range_leq(std::get<ModRing>(rv), a.n);
    else if (std::holds_alternative<TableRing>(rv))
      ok = stable_range_leq(std::get<TableRing>(rv), a.n);
    else
      throw Error("stable-range needs a finite ring");
    r.result = ok;
    r.text = "stable range <= " + std::to_string(a.n) + " : " +
             (ok ? "true" : "false");
    r.emit(json_out, out);
    return ok ? 0 : 1;
  }
  if (a.op == "lgroup") {
    auto [lhs, rhs] = split_turnstile(a.query);
    std::vector<std::vector<long long>> as, bs;
    for (const auto& s : split_list(lhs, ';')) as.push_back(parse_int_vector(s));
    for (const auto& s : split_list(rhs, ';')) bs.push_back(parse_int_vector(s));
    LGroupResult res = lgroup_entails(a.rank, as, bs);
    r.result = res.holds;
    r.text = "lgroup: " + a.query + " : " + (res.holds ? "true" : "false");
    if (res.holds) {
      r.witness = {{"k", res.k}};
      r.text += " (k=" + std::to_string(res.k) + ")";
    }
    r.emit(json_out, out);
    return res.holds ? 0 : 1;
  }
  if (a.op == "module") {
    auto [lhs, rhs] = split_turnstile(a.query);
    std::vector<std::vector<long long>> xs, ys;
    for (const auto& s : split_list(lhs, ';')) xs.push_back(parse_int_vector(s));
    for (const auto& s : split_list(rhs, ';')) ys.push_back(parse_int_vector(s));
    ZModule m(a.rank);
    bool holds = module_entails(m, xs, ys);
    r.result = holds;
    r.text = "module: " + a.query + " : " + (holds ? "true" : "false");
    r.emit(json_out, out);
    return holds ? 0 : 1;
  }
  if (a.op == "heit") {
    FiniteRingLattice h;
    int d;
    if (std::holds_alternative<ModRing>(rv)) {
      h = heit_lattice(std::get<ModRing>(rv));
      d = jdim(std::get<ModRing>(rv));
    } else if (std::holds_alternative<TableRing>(rv)) {
      h = heit_lattice(std::get<TableRing>(rv));
      d = jdim(std::get<TableRing>(rv));
    } else {
      throw Error("heit needs a finite ring");
    }
    r.result = {{"heit_elements", h.poset.size()}, {"jdim", d}};
    r.text = "heit: " + std::to_string(h.poset.size()) +
             " element(s), jdim = " + std::to_string(d);
    r.emit(json_out, out);
    return 0;
  }
  if (a.op == "zarval") {
    auto [lhs, rhs] = split_turnstile(a.query);
    ZarValConsistency res;
    if (std::holds_alternative<IntRing>(rv)) {
      std::vector<long long> as, cs;
      for (const auto& s : split_list(lhs, ',')) as.push_back(parse_int(s));
      for (const auto& s : split_list(rhs, ',')) cs.push_back(parse_int(s));
      res = zar_to_val_consistency(IntRing{}, as, cs, a.kmax);
    } else if (std::holds_alternative<ModRing>(rv)) {
      const auto& ring = std::get<ModRing>(rv);
      std::vector<long long> as, cs;
      for (const auto& s : split_list(lhs, ',')) as.push_back(ring.from_int(parse_int(s)));
      for (const auto& s : split_list(rhs, ',')) cs.push_back(ring.from_int(parse_int(s)));
      res = zar_to_val_consistency(ring, as, cs, a.kmax);
    } else if (std::holds_alternative<PolyRing>(rv)) {
      std::vector<Poly> as, cs;
      for (const auto& s : split_list(lhs, ',')) as.push_back(parse_poly(s));
      for (const auto& s : split_list(rhs, ',')) cs.push_back(parse_poly(s));
      res = zar_to_val_consistency(PolyRing{}, as, cs, a.kmax);
    } else {
      throw Error("zarval supports z, z/N and q[x]");
    }
    r.result = {{"agree", to_string(res.agree)}, {"zar", res.zar_holds},
                {"identity", res.identity.has_value()}};
    if (res.identity) r.witness = {{"k", res.identity->k}};
    r.text = std::string("zarval: agreement ") + to_string(res.agree);
    if (res.agree == Tri::Inconclusive) {
      r.witness = {{"reason", "bound-exhausted"}};
      r.emit(json_out, out);
      return 2;
    }
    r.emit(json_out, out);
    return res.agree == Tri::True ? 0 : 1;
  }
  throw Error("unknown ring op '" + a.op +
              "' (zar, jacobson, kronecker, stable-range, lgroup, module, "
              "heit, zarval)");
}

// ---------------------------------------------------------------------------

template <typename R>
int verify_cert_with_ring(const R& ring, const CertDoc& doc, Report& r,
                          bool json_out, std::ostream& out) {
  bool accepted = false;
  if (doc.kind == "pos") {
    std::vector<typename R::Elem> hyps, concs;
    for (const auto& s : doc.hyps) hyps.push_back(parse_elem(ring, s));
    for (const auto& s : doc.concs) concs.push_back(parse_elem(ring, s));
    PosCertificate<R> cert;
    cert.monoid = doc.monoid;
    for (const auto& line : doc.cone) {
      typename PosCertificate<R>::ConeTerm term;
      term.base = parse_elem(ring, line.base);
      for (const std::string& g : line.gens) {
        if (g.size() >= 2 && g[0] == 'x')
          term.gens.push_back(GenRef{GenRef::Hyp,
                                     static_cast<std::size_t>(parse_int(g.substr(1)))});
        else if (g.size() >= 3 && g[0] == '-' && g[1] == 'a')
          term.gens.push_back(GenRef{GenRef::NegConc,
                                     static_cast<std::size_t>(parse_int(g.substr(2)))});
        else
          throw MalformedCertificateError("cone generators are x<i> or -a<j>");
      }
      cert.cone.push_back(std::move(term));
    }
    accepted = verify_pos(ring, hyps, concs, cert);
  } else if (doc.kind == "val") {
    std::vector<std::pair<typename R::Elem, typename R::Elem>> hyps, concs;
    for (const auto& s : doc.hyps) hyps.push_back(parse_pair(ring, s));
    for (const auto& s : doc.concs) concs.push_back(parse_pair(ring, s));
    std::size_t n = hyps.size(), m = concs.size();
    ValCertificate<R> cert;
    cert.monoid = doc.monoid;
    auto fetch = [&](char letter, std::size_t idx) {
      auto it = doc.polys.find(std::string(1, letter) + std::to_string(idx));
      IntMPoly im;
      if (it != doc.polys.end() && !it->second.empty())
        im = parse_int_mpoly(it->second, n, m);
      MPoly<R> poly(n + m);
      for (const auto& [e, c] : im.terms) {
        std::vector<unsigned> exp(e.begin(), e.end());
        poly.add_term(ring, std::move(exp), ring.from_int(c));
      }
      return poly;
    };
    for (std::size_t j = 0; j < m; ++j) cert.p.push_back(fetch('P', j));
    for (std::size_t i = 0; i < n; ++i) cert.q.push_back(fetch('Q', i));
    for (std::size_t j = 0; j < m; ++j) cert.r.push_back(fetch('R', j));
    accepted = verify_val(ring, hyps, concs, cert);
  } else if (doc.kind == "valpos") {
    std::vector<typename R::Elem> as, cs, cof;
    for (const auto& s : doc.as) as.push_back(parse_elem(ring, s));
    for (const auto& s : doc.cs) cs.push_back(parse_elem(ring, s));
    for (const auto& s : doc.cofactors) cof.push_back(parse_elem(ring, s));
    accepted = verify_val_pos(ring, as, cs, doc.k, cof);
  } else {
    throw Error("unknown certificate kind '" + doc.kind + "'");
  }
  r.result = accepted;
  r.text = "cert " + doc.kind + ": " + (accepted ? "accepted" : "rejected");
  r.emit(json_out, out);
  return accepted ? 0 : 1;
}

int cmd_cert(const std::string& kind, const std::string& file, bool json_out,
             std::ostream& out) {
  CertDoc doc = parse_cert_doc(read_file(file));
  if (doc.kind != kind)
    throw Error("certificate file has kind '" + doc.kind + "', expected '" +
                kind + "'");
  std::string base = std::filesystem::path(file).parent_path().string();
  if (base.empty()) base = ".";
  RingVariant rv = parse_ring(doc.ring.empty() ? "z" : doc.ring, base);
  Report r;
  r.query = {{"command", "cert"}, {"kind", kind}, {"file", file}};
  return std::visit(
      [&](const auto& ring) {
        return verify_cert_with_ring(ring, doc, r, json_out, out);
      },
      rv);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finitely presented distributive lattices, spectra and "
               "formal Nullstellensaetze"};
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output");
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized searches");

  int exit_code = 0;

  // check
  std::string check_file, check_seq;
  auto* c_check = app.add_subcommand("check", "decide an entailment");
  c_check->add_option("file", check_file)->required();
  c_check->add_option("sequent", check_seq)->required();
  c_check->callback([&] { exit_code = cmd_check(check_file, check_seq, json_out, out); });

  // spec
  std::string spec_file;
  bool spec_dot = false;
  auto* c_spec = app.add_subcommand("spec", "compute the prime spectrum");
  c_spec->add_option("file", spec_file)->required();
  c_spec->add_flag("--dot", spec_dot, "emit the specialization poset as DOT");
  c_spec->callback([&] { exit_code = cmd_spec(spec_file, spec_dot, json_out, out); });

  // dim
  std::string dim_file, dim_morph;
  int dim_kmax = 3;
  std::optional<int> dim_n;
  int dim_n_raw = 0;
  bool dim_has_n = false;
  auto* c_dim = app.add_subcommand("dim", "Krull dimension");
  c_dim->add_option("file", dim_file)->required();
  c_dim->add_option("--relative", dim_morph, "morphism description file");
  auto* dim_n_opt = c_dim->add_option("--n", dim_n_raw, "check dimension <= n");
  c_dim->add_option("--kmax", dim_kmax, "relative-criterion element bound");
  c_dim->callback([&] {
    dim_has_n = dim_n_opt->count() > 0;
    dim_n = dim_has_n ? std::optional<int>(dim_n_raw) : std::nullopt;
    exit_code = cmd_dim(dim_file, dim_morph, dim_n, dim_kmax, json_out, out);
  });

  // heitmann
  std::string he_file;
  auto* c_he = app.add_subcommand("heitmann", "Heitmann lattice and Jspec");
  c_he->add_option("file", he_file)->required();
  c_he->callback([&] { exit_code = cmd_heitmann(he_file, json_out, out); });

  // morphism
  std::string m_src, m_dst, m_map;
  bool m_lo = false, m_gu = false, m_gd = false, m_open = false;
  auto* c_mor = app.add_subcommand("morphism", "morphism predicates");
  c_mor->add_option("source", m_src)->required();
  c_mor->add_option("target", m_dst)->required();
  c_mor->add_option("map", m_map)->required();
  c_mor->add_flag("--lying-over", m_lo);
  c_mor->add_flag("--going-up", m_gu);
  c_mor->add_flag("--going-down", m_gd);
  c_mor->add_flag("--open", m_open);
  c_mor->callback([&] {
    exit_code = cmd_morphism(m_src, m_dst, m_map, m_lo, m_gu, m_gd, m_open,
                             json_out, out);
  });

  // glue
  std::string glue_file;
  auto* c_glue = app.add_subcommand("glue", "inverse limit of a quotient diagram");
  c_glue->add_option("file", glue_file)->required();
  c_glue->callback([&] { exit_code = cmd_glue(glue_file, json_out, out); });

  // ring
  RingArgs ra;
  auto* c_ring = app.add_subcommand("ring", "ring-level operations");
  c_ring->add_option("op", ra.op)->required();
  c_ring->add_option("query", ra.query);
  c_ring->add_option("--ring", ra.ring);
  c_ring->add_option("--x", ra.x);
  c_ring->add_option("--gens", ra.gens);
  c_ring->add_option("--bs", ra.bs);
  c_ring->add_option("--n", ra.n);
  c_ring->add_option("--rank", ra.rank);
  c_ring->add_option("--xbound", ra.xbound);
  c_ring->add_option("--kmax", ra.kmax);
  c_ring->callback([&] {
    ra.seed = seed;
    exit_code = cmd_ring(ra, json_out, out);
  });

  // cert
  std::string cert_kind, cert_file;
  auto* c_cert = app.add_subcommand("cert", "verify a certificate");
  auto* c_verify = c_cert->add_subcommand("verify", "verify a certificate file");
  c_verify->add_option("kind", cert_kind, "pos|val|valpos")->required();
  c_verify->add_option("file", cert_file)->required();
  c_verify->callback([&] { exit_code = cmd_cert(cert_kind, cert_file, json_out, out); });
  c_cert->require_subcommand(1);

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("spectra");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace spectra
