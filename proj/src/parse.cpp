#include "spectra/parse.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace spectra {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, String, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  bool accept(std::string_view punct) {
    if (tok_.kind == Token::Punct && tok_.text == punct) {
      advance();
      return true;
    }
    return false;
  }
  Token expect(Token::Kind kind, std::string_view what) {
    if (tok_.kind != kind)
      throw ParseError("expected " + std::string(what) + ", found '" +
                           tok_.text + "'",
                       tok_.line, tok_.col);
    return next();
  }
  void expect_punct(std::string_view punct) {
    if (!accept(punct))
      throw ParseError("expected '" + std::string(punct) + "', found '" +
                           tok_.text + "'",
                       tok_.line, tok_.col);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = Token{Token::End, "<eof>", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\''))
        take();
      tok_ = Token{Token::Ident, std::string(text_.substr(start, pos_ - start)),
                   tok_.line, tok_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        take();
      tok_ = Token{Token::Number, std::string(text_.substr(start, pos_ - start)),
                   tok_.line, tok_.col};
      return;
    }
    if (c == '"') {
      take();
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') take();
      if (pos_ >= text_.size())
        throw ParseError("unterminated string", tok_.line, tok_.col);
      std::string s(text_.substr(start, pos_ - start));
      take();
      tok_ = Token{Token::String, std::move(s), tok_.line, tok_.col};
      return;
    }
    if (c == '|' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      take();
      take();
      tok_ = Token{Token::Punct, "|-", tok_.line, tok_.col};
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      take();
      take();
      tok_ = Token{Token::Punct, "->", tok_.line, tok_.col};
      return;
    }
    take();
    tok_ = Token{Token::Punct, std::string(1, c), tok_.line, tok_.col};
  }

  void take() {
    ++pos_;
    ++col_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

AtomId resolve_atom(Lexer& lex, const Token& t, const Presentation& p) {
  auto id = p.find_atom(t.text);
  if (!id)
    throw ParseError("undeclared atom '" + t.text + "'", t.line, t.col);
  (void)lex;
  return *id;
}

// expr := term ('|' term)* ; term := factor ('&' factor)* ;
// factor := 0 | 1 | atom | '(' expr ')'
Dnf parse_dnf_expr(Lexer& lex, const Presentation& p);

Dnf parse_dnf_factor(Lexer& lex, const Presentation& p) {
  if (lex.accept("(")) {
    Dnf inner = parse_dnf_expr(lex, p);
    lex.expect_punct(")");
    return inner;
  }
  if (lex.peek().kind == Token::Number) {
    Token t = lex.next();
    if (t.text == "0") return Dnf::bottom();
    if (t.text == "1") return Dnf::top();
    throw ParseError("only 0 and 1 are element constants", t.line, t.col);
  }
  Token t = lex.expect(Token::Ident, "atom");
  return Dnf::atom(resolve_atom(lex, t, p));
}

Dnf parse_dnf_term(Lexer& lex, const Presentation& p) {
  Dnf out = parse_dnf_factor(lex, p);
  while (lex.accept("&")) out = meet(out, parse_dnf_factor(lex, p));
  return out;
}

Dnf parse_dnf_expr(Lexer& lex, const Presentation& p) {
  Dnf out = parse_dnf_term(lex, p);
  while (lex.accept("|")) out = join(out, parse_dnf_term(lex, p));
  return out;
}

}  // namespace

PresentationDoc parse_presentation(std::string_view text,
                                   std::string source_name) {
  Lexer lex(text);
  Token kw = lex.expect(Token::Ident, "'lattice'");
  if (kw.text != "lattice")
    throw ParseError("presentation files start with 'lattice'", kw.line, kw.col);
  lex.expect_punct("{");
  Presentation p;
  while (!lex.accept("}")) {
    Token section = lex.expect(Token::Ident, "'atoms' or 'axiom'");
    if (section.text == "atoms") {
      while (lex.peek().kind == Token::Ident) {
        Token name = lex.next();
        try {
          p.add_atom(name.text);
        } catch (const Error& e) {
          throw ParseError(e.what(), name.line, name.col);
        }
      }
      lex.expect_punct(";");
    } else if (section.text == "axiom") {
      Sequent s;
      while (lex.peek().kind == Token::Ident) {
        s.ante |= atom_bit(resolve_atom(lex, lex.next(), p));
        lex.accept(",");
      }
      lex.expect_punct("|-");
      while (lex.peek().kind == Token::Ident) {
        s.succ |= atom_bit(resolve_atom(lex, lex.next(), p));
        lex.accept(",");
      }
      lex.expect_punct(";");
      p.add_axiom(s);
    } else {
      throw ParseError("unknown section '" + section.text + "'", section.line,
                       section.col);
    }
  }
  return PresentationDoc{std::move(p), std::move(source_name)};
}

std::string print_presentation(const Presentation& p) {
  std::string out = "lattice {\n  atoms";
  for (const std::string& n : p.atom_names()) out += " " + n;
  out += " ;\n";
  for (const Sequent& s : p.axioms()) {
    out += "  axiom";
    for (AtomSet a = s.ante; a;) {
      AtomId i = static_cast<AtomId>(__builtin_ctzll(a));
      a &= a - 1;
      out += " " + p.atom_name(i);
    }
    out += " |-";
    for (AtomSet b = s.succ; b;) {
      AtomId i = static_cast<AtomId>(__builtin_ctzll(b));
      b &= b - 1;
      out += " " + p.atom_name(i);
    }
    out += " ;\n";
  }
  out += "}\n";
  return out;
}

Dnf parse_dnf(std::string_view text, const Presentation& p) {
  Lexer lex(text);
  Dnf out = parse_dnf_expr(lex, p);
  if (lex.peek().kind != Token::End) lex.fail("trailing input after element");
  return out;
}

Sequent parse_sequent(std::string_view text, const Presentation& p) {
  Lexer lex(text);
  Sequent s;
  while (lex.peek().kind == Token::Ident) {
    s.ante |= atom_bit(resolve_atom(lex, lex.next(), p));
    lex.accept(",");
  }
  lex.expect_punct("|-");
  while (lex.peek().kind == Token::Ident) {
    s.succ |= atom_bit(resolve_atom(lex, lex.next(), p));
    lex.accept(",");
  }
  if (lex.peek().kind != Token::End) lex.fail("trailing input after sequent");
  return s;
}

MorphismDoc parse_morphism_doc(std::string_view text) {
  Lexer lex(text);
  MorphismDoc doc;
  while (lex.peek().kind != Token::End) {
    Token kw = lex.expect(Token::Ident, "'source' or 'map'");
    if (kw.text == "source") {
      Token path = lex.expect(Token::String, "quoted path");
      doc.source_path = path.text;
      lex.expect_punct(";");
    } else if (kw.text == "map") {
      Token atom = lex.expect(Token::Ident, "atom name");
      lex.expect_punct("->");
      // Capture the expression verbatim up to ';'.
      std::string expr;
      while (lex.peek().kind != Token::End &&
             !(lex.peek().kind == Token::Punct && lex.peek().text == ";")) {
        Token t = lex.next();
        if (!expr.empty()) expr += " ";
        expr += t.text;
      }
      lex.expect_punct(";");
      doc.maps.emplace_back(atom.text, expr);
    } else {
      throw ParseError("unknown directive '" + kw.text + "'", kw.line, kw.col);
    }
  }
  return doc;
}

Morphism build_morphism(const MorphismDoc& doc, const FpLattice& src,
                        const FpLattice& dst) {
  std::vector<Dnf> images(src.atom_count(), Dnf::bottom());
  std::vector<bool> seen(src.atom_count(), false);
  for (const auto& [atom, expr] : doc.maps) {
    auto id = src.presentation().find_atom(atom);
    if (!id) throw UnknownAtomError("map names unknown atom '" + atom + "'");
    if (seen[*id]) throw Error("atom '" + atom + "' mapped twice");
    seen[*id] = true;
    images[*id] = parse_dnf(expr, dst.presentation());
  }
  for (std::size_t a = 0; a < src.atom_count(); ++a)
    if (!seen[a])
      throw Error("atom '" + src.presentation().atom_name(
                      static_cast<AtomId>(a)) + "' has no image");
  return Morphism(src, dst, std::move(images));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuotientDiagram parse_diagram_file(const std::string& path) {
  std::string text = read_file(path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  auto load = [&](const std::string& rel) {
    std::filesystem::path p = base / rel;
    return FpLattice(parse_presentation(read_file(p.string()), rel).presentation);
  };

  Lexer lex(text);
  Token kw = lex.expect(Token::Ident, "'diagram'");
  if (kw.text != "diagram")
    throw ParseError("diagram files start with 'diagram'", kw.line, kw.col);
  lex.expect_punct("{");

  std::map<int, FpLattice> lattices;
  QuotientDiagram d;
  struct PendingProj {
    int i, j, k = -1;  // k >= 0 marks proj3
    MorphismDoc doc;
  };
  std::vector<PendingProj> pending;

  auto expect_index = [&]() {
    Token t = lex.expect(Token::Number, "index");
    return std::stoi(t.text);
  };
  auto parse_map_block = [&]() {
    lex.expect_punct("{");
    MorphismDoc doc;
    while (!lex.accept("}")) {
      Token mk = lex.expect(Token::Ident, "'map'");
      if (mk.text != "map")
        throw ParseError("expected 'map'", mk.line, mk.col);
      Token atom = lex.expect(Token::Ident, "atom name");
      lex.expect_punct("->");
      std::string expr;
      while (!(lex.peek().kind == Token::Punct && lex.peek().text == ";")) {
        if (lex.peek().kind == Token::End) lex.fail("unterminated map");
        Token t = lex.next();
        if (!expr.empty()) expr += " ";
        expr += t.text;
      }
      lex.expect_punct(";");
      doc.maps.emplace_back(atom.text, expr);
    }
    return doc;
  };

  std::map<std::pair<int, int>, std::string> glue_exprs;
  while (!lex.accept("}")) {
    Token section = lex.expect(Token::Ident, "diagram directive");
    if (section.text == "lattice") {
      int i = expect_index();
      Token file = lex.expect(Token::String, "quoted path");
      lex.expect_punct(";");
      lattices.emplace(i, load(file.text));
    } else if (section.text == "overlap") {
      int i = expect_index(), j = expect_index();
      Token file = lex.expect(Token::String, "quoted path");
      lex.expect_punct(";");
      d.overlap.emplace(std::make_pair(std::min(i, j), std::max(i, j)),
                        load(file.text));
    } else if (section.text == "triple") {
      int i = expect_index(), j = expect_index(), k = expect_index();
      Token file = lex.expect(Token::String, "quoted path");
      lex.expect_punct(";");
      d.triple.emplace(std::make_tuple(i, j, k), load(file.text));
    } else if (section.text == "glue") {
      int i = expect_index(), j = expect_index();
      lex.expect_punct("=");
      std::string expr;
      while (!(lex.peek().kind == Token::Punct && lex.peek().text == ";")) {
        if (lex.peek().kind == Token::End) lex.fail("unterminated glue");
        Token t = lex.next();
        if (!expr.empty()) expr += " ";
        expr += t.text;
      }
      lex.expect_punct(";");
      glue_exprs[{i, j}] = expr;
    } else if (section.text == "proj") {
      int i = expect_index(), j = expect_index();
      pending.push_back(PendingProj{i, j, -1, parse_map_block()});
    } else if (section.text == "proj3") {
      int i = expect_index(), j = expect_index(), k = expect_index();
      pending.push_back(PendingProj{i, j, k, parse_map_block()});
    } else {
      throw ParseError("unknown directive '" + section.text + "'",
                       section.line, section.col);
    }
  }

  int n = static_cast<int>(lattices.size());
  for (int i = 0; i < n; ++i) {
    auto it = lattices.find(i);
    if (it == lattices.end())
      throw InvalidDiagramError("lattice indices must be 0..n-1");
    d.lattice.push_back(it->second);
  }
  for (const auto& [key, expr] : glue_exprs) {
    if (key.first < 0 || key.first >= n)
      throw InvalidDiagramError("glue index out of range");
    d.glue.emplace(key, parse_dnf(expr, d.lattice[key.first].presentation()));
  }
  for (const PendingProj& pp : pending) {
    if (pp.k < 0) {
      const FpLattice& src = d.lattice.at(pp.i);
      const FpLattice& dst =
          d.overlap.at({std::min(pp.i, pp.j), std::max(pp.i, pp.j)});
      d.proj.emplace(std::make_pair(pp.i, pp.j),
                     build_morphism(pp.doc, src, dst));
    } else {
      if (pp.i >= pp.j)
        throw InvalidDiagramError("proj3 expects its first two indices sorted");
      auto key = std::make_tuple(pp.i, pp.j, pp.k);
      const FpLattice& src = d.overlap.at({pp.i, pp.j});
      std::array<int, 3> s{pp.i, pp.j, pp.k};
      std::sort(s.begin(), s.end());
      const FpLattice& dst = d.triple.at({s[0], s[1], s[2]});
      d.proj3.emplace(key, build_morphism(pp.doc, src, dst));
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Rings and element literals

long long parse_int(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  text = text.substr(i, end - i);
  if (text.empty()) throw Error("empty integer literal");
  try {
    std::size_t used = 0;
    long long v = std::stoll(std::string(text), &used);
    if (used != text.size()) throw Error("bad integer literal");
    return v;
  } catch (const std::exception&) {
    throw Error("bad integer literal '" + std::string(text) + "'");
  }
}

namespace {

// coefficient ['x' | 'x<i>' | 'y<j>' ['^' exp]]* terms joined by + and -.
struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  long long number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw Error("expected digits in polynomial literal");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

Poly parse_poly(std::string_view text) {
  PolyParser p{text};
  Poly out;
  bool first = true;
  while (!p.done()) {
    long long sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      throw Error("expected + or - between polynomial terms");
    }
    first = false;
    long long num = 1, den = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      num = p.number();
      saw_coeff = true;
      if (p.peek() == '/') {
        ++p.pos;
        den = p.number();
      }
    }
    unsigned exp = 0;
    if (p.peek() == '*') ++p.pos;
    if (p.peek() == 'x') {
      ++p.pos;
      exp = 1;
      if (p.peek() == '^') {
        ++p.pos;
        exp = static_cast<unsigned>(p.number());
      }
    } else if (!saw_coeff) {
      throw Error("expected coefficient or x in polynomial literal");
    }
    Poly term;
    term.c.assign(exp + 1, Rat(0));
    term.c[exp] = Rat(sign * num, den);
    term.normalize();
    out = out + term;
  }
  return out;
}

IntMPoly parse_int_mpoly(std::string_view text, std::size_t nx,
                         std::size_t ny) {
  PolyParser p{text};
  IntMPoly out;
  bool first = true;
  while (!p.done()) {
    long long sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      throw Error("expected + or - between polynomial terms");
    }
    first = false;
    long long coeff = 1;
    bool saw = false;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      coeff = p.number();
      saw = true;
    }
    std::vector<unsigned> exps(nx + ny, 0);
    while (true) {
      if (p.peek() == '*') ++p.pos;
      char v = p.peek();
      if (v != 'x' && v != 'y') break;
      ++p.pos;
      saw = true;
      std::size_t idx = 0;
      if (std::isdigit(static_cast<unsigned char>(p.peek())))
        idx = static_cast<std::size_t>(p.number());
      std::size_t slot = v == 'x' ? idx : nx + idx;
      if ((v == 'x' && idx >= nx) || (v == 'y' && idx >= ny))
        throw Error("variable index out of range in polynomial literal");
      unsigned e = 1;
      if (p.peek() == '^') {
        ++p.pos;
        e = static_cast<unsigned>(p.number());
      }
      exps[slot] += e;
    }
    if (!saw) throw Error("expected coefficient or variable");
    out.terms[exps] += sign * coeff;
    if (out.terms[exps] == 0) out.terms.erase(exps);
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  // Trim and drop empties.
  std::vector<std::string> trimmed;
  for (std::string& s : out) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    std::size_t b = s.find_last_not_of(" \t\r\n");
    trimmed.push_back(s.substr(a, b - a + 1));
  }
  return trimmed;
}

std::vector<long long> parse_int_vector(std::string_view text) {
  std::vector<long long> out;
  std::string_view body = text;
  // Allow surrounding parentheses.
  std::size_t a = body.find_first_not_of(" \t");
  std::size_t b = body.find_last_not_of(" \t");
  if (a != std::string_view::npos && body[a] == '(' && body[b] == ')')
    body = body.substr(a + 1, b - a - 1);
  for (const std::string& part : split_list(body, ','))
    out.push_back(parse_int(part));
  return out;
}

TableRing parse_table_ring(std::string_view text) {
  Lexer lex(text);
  Token kw = lex.expect(Token::Ident, "'finite'");
  if (kw.text != "finite")
    throw ParseError("table ring files start with 'finite'", kw.line, kw.col);
  lex.expect_punct("{");
  std::size_t size = 0;
  int one = -1;
  std::vector<std::vector<int>> add, mul;
  auto read_table = [&](std::vector<std::vector<int>>& t) {
    if (size == 0) lex.fail("'size' must come before tables");
    t.assign(size, std::vector<int>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        Token v = lex.expect(Token::Number, "table entry");
        t[i][j] = std::stoi(v.text);
      }
    lex.expect_punct(";");
  };
  while (!lex.accept("}")) {
    Token section = lex.expect(Token::Ident, "table section");
    if (section.text == "size") {
      Token v = lex.expect(Token::Number, "size");
      size = static_cast<std::size_t>(std::stoul(v.text));
      lex.expect_punct(";");
    } else if (section.text == "one") {
      Token v = lex.expect(Token::Number, "unit element");
      one = std::stoi(v.text);
      lex.expect_punct(";");
    } else if (section.text == "add") {
      read_table(add);
    } else if (section.text == "mul") {
      read_table(mul);
    } else {
      throw ParseError("unknown section '" + section.text + "'", section.line,
                       section.col);
    }
  }
  if (one < 0) throw Error("table ring requires 'one'");
  return TableRing(std::move(add), std::move(mul), one);
}

RingVariant parse_ring(const std::string& designator,
                       const std::string& base_dir) {
  if (designator == "z") return IntRing{};
  if (designator == "q[x]") return PolyRing{};
  if (designator.rfind("z/", 0) == 0)
    return ModRing(parse_int(designator.substr(2)));
  if (designator.rfind("finite:", 0) == 0) {
    std::filesystem::path p =
        std::filesystem::path(base_dir) / designator.substr(7);
    return parse_table_ring(read_file(p.string()));
  }
  throw Error("unknown ring designator '" + designator +
              "' (use z, z/N, q[x], finite:<file>)");
}

std::string ring_name(const RingVariant& r) {
  return std::visit(
      [](const auto& ring) -> std::string {
        using T = std::decay_t<decltype(ring)>;
        if constexpr (std::is_same_v<T, IntRing>) return "z";
        if constexpr (std::is_same_v<T, ModRing>)
          return "z/" + std::to_string(ring.modulus());
        if constexpr (std::is_same_v<T, PolyRing>) return "q[x]";
        if constexpr (std::is_same_v<T, TableRing>)
          return "finite(" + std::to_string(ring.size()) + ")";
      },
      r);
}

CertDoc parse_cert_doc(std::string_view text) {
  CertDoc doc;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (std::size_t h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (line.find_first_not_of(" \t\r") != std::string_view::npos)
        throw ParseError("expected 'key: value'", line_no, 1);
      continue;
    }
    std::string key(line.substr(0, colon));
    std::size_t ka = key.find_first_not_of(" \t");
    std::size_t kb = key.find_last_not_of(" \t");
    if (ka == std::string::npos) throw ParseError("empty key", line_no, 1);
    key = key.substr(ka, kb - ka + 1);
    std::string value(line.substr(colon + 1));
    std::size_t va = value.find_first_not_of(" \t\r");
    value = va == std::string::npos
                ? ""
                : value.substr(va, value.find_last_not_of(" \t\r") - va + 1);

    if (key == "kind") {
      doc.kind = value;
    } else if (key == "ring") {
      doc.ring = value;
    } else if (key == "hyps") {
      doc.hyps = split_list(value, ';');
    } else if (key == "concs") {
      doc.concs = split_list(value, ';');
    } else if (key == "as") {
      doc.as = split_list(value, ';');
    } else if (key == "cs") {
      doc.cs = split_list(value, ';');
    } else if (key == "cofactors") {
      doc.cofactors = split_list(value, ';');
    } else if (key == "k") {
      doc.k = static_cast<unsigned>(parse_int(value));
    } else if (key == "monoid") {
      for (const std::string& entry : split_list(value, ' ')) {
        std::size_t caret = entry.find('^');
        if (caret == std::string::npos)
          throw ParseError("monoid entries look like i^e", line_no, 1);
        doc.monoid[static_cast<std::size_t>(
            parse_int(entry.substr(0, caret)))] +=
            static_cast<unsigned>(parse_int(entry.substr(caret + 1)));
      }
    } else if (key == "cone") {
      std::size_t bar = value.find('|');
      if (bar == std::string::npos)
        throw ParseError("cone lines look like 'base | gens'", line_no, 1);
      CertDoc::ConeLine cl;
      cl.base = value.substr(0, bar);
      for (const std::string& g : split_list(value.substr(bar + 1), ' '))
        cl.gens.push_back(g);
      doc.cone.push_back(std::move(cl));
    } else if (!key.empty() && (key[0] == 'P' || key[0] == 'Q' || key[0] == 'R')) {
      doc.polys[key] = value;
    } else {
      throw ParseError("unknown certificate key '" + key + "'", line_no, 1);
    }
  }
  if (doc.kind.empty()) throw Error("certificate is missing 'kind:'");
  return doc;
}

}  // namespace spectra
