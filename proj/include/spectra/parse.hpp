#ifndef SPECTRA_PARSE_HPP_
#define SPECTRA_PARSE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/gluing.hpp"
#include "spectra/rings.hpp"

namespace spectra {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line), col(col) {}
  int line, col;
};

// ---------------------------------------------------------------------------
// Presentation files:
//   lattice { atoms a b c ; axiom a b |- c ; axiom |- a b ; axiom c |- ; }
// '#' starts a comment. Duplicate or undeclared atoms are errors.
struct PresentationDoc {
  Presentation presentation;
  std::string source_name;
};

PresentationDoc parse_presentation(std::string_view text,
                                   std::string source_name = "<input>");
std::string print_presentation(const Presentation& p);

// Element expressions over declared atoms: 0, 1, atoms, &, |, parentheses.
Dnf parse_dnf(std::string_view text, const Presentation& p);

// "a, b |- c" (either side may be empty).
Sequent parse_sequent(std::string_view text, const Presentation& p);

// ---------------------------------------------------------------------------
// Morphism description files: optional `source "path" ;` header, then one
// `map atom -> expr ;` line per source atom.
struct MorphismDoc {
  std::optional<std::string> source_path;
  std::vector<std::pair<std::string, std::string>> maps;
};

MorphismDoc parse_morphism_doc(std::string_view text);
Morphism build_morphism(const MorphismDoc& doc, const FpLattice& src,
                        const FpLattice& dst);

// ---------------------------------------------------------------------------
// Gluing diagram files; lattice presentations are read from referenced
// files, resolved relative to the diagram file's directory.
QuotientDiagram parse_diagram_file(const std::string& path);

// ---------------------------------------------------------------------------
// Ring designators: z, z/N, q[x], finite:<table-file>.
RingVariant parse_ring(const std::string& designator,
                       const std::string& base_dir = ".");
std::string ring_name(const RingVariant& r);

TableRing parse_table_ring(std::string_view text);

// Element literals. Integers for z and z/N; polynomial literals like
// "3x^2-1" for q[x]; carrier indices for table rings.
long long parse_int(std::string_view text);
Poly parse_poly(std::string_view text);

// Integer-coefficient multivariate polynomials in x0..x{nx-1}, y0..y{ny-1}
// (plain x/y accepted when there is a single variable of that letter).
struct IntMPoly {
  std::map<std::vector<unsigned>, long long> terms;  // exponents x..y
};
IntMPoly parse_int_mpoly(std::string_view text, std::size_t nx, std::size_t ny);

// Comma/semicolon-separated helpers.
std::vector<std::string> split_list(std::string_view text, char sep);
std::vector<long long> parse_int_vector(std::string_view text);

// ---------------------------------------------------------------------------
// Certificate files: `key: value` lines. Kinds pos, val, valpos.
struct CertDoc {
  std::string kind;
  std::string ring;
  std::vector<std::string> hyps, concs;      // pos: elements; val: pairs
  std::vector<std::string> as, cs, cofactors;  // valpos
  unsigned k = 1;
  std::map<std::size_t, unsigned> monoid;
  struct ConeLine {
    std::string base;
    std::vector<std::string> gens;  // x<i> or -a<j>
  };
  std::vector<ConeLine> cone;
  std::map<std::string, std::string> polys;  // P<j>, Q<i>, R<j>
};

CertDoc parse_cert_doc(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace spectra

#endif  // SPECTRA_PARSE_HPP_
