#pragma once

#include <string>
#include <vector>

#include "word.hpp"

namespace qgt {

// Finitely presented group on generators g1..gN. Relators are kept freely
// and cyclically reduced, canonicalized up to rotation/inversion, sorted
// and deduplicated.
struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
  std::vector<std::string> labels;  // optional; empty or size ngens

  Presentation() = default;
  Presentation(int n, std::vector<Word> rels, std::vector<std::string> labs = {});

  void normalize();
  std::string label(int gen_1based) const;
  std::string to_text() const;  // <g,h|g^2,h^3>
  std::string to_gap() const;   // GAP-compatible export
  static Presentation parse(const std::string& text);

  bool operator==(const Presentation& o) const {
    return ngens == o.ngens && relators == o.relators;
  }
};

struct SimplifyResult {
  Presentation pres;
  // image of each original generator as a word in the simplified generators
  std::vector<Word> gen_images;
};

// Tietze simplification: eliminates generators forced trivial or equal to a
// word in the others (shortest defining relator first, lowest generator
// index first), rewrites relators against shorter ones, reduces power
// relators by gcd. Terminates: every accepted move reduces the generator
// count or the total relator length.
SimplifyResult simplify_presentation(const Presentation& p);

// Exponent-sum matrix of the relators (rows = relators, cols = generators).
std::vector<std::vector<long>> relator_exponent_matrix(const Presentation& p);

}  // namespace qgt
