#pragma once

#include <optional>
#include <vector>

#include "presentation.hpp"

namespace qgt {

// Closed coset table of the trivial subgroup: one row per group element.
// Column layout: 2*(g-1) for g, 2*(g-1)+1 for g^{-1}.
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> next;   // [coset][column] -> coset
  std::vector<Word> rep;                // BFS-minimal representative words

  size_t order() const { return next.size(); }
  int apply_letter(int coset, int letter) const {
    return next[static_cast<size_t>(coset)][static_cast<size_t>(2 * (std::abs(letter) - 1) + (letter < 0))];
  }
  int trace(const Word& w, int from = 0) const;
};

struct ToddCoxeterResult {
  bool finite = false;
  size_t order = 0;           // valid when finite
  size_t cosets_used = 0;     // diagnostic
  std::optional<CosetTable> table;  // present when finite
};

// HLT coset enumeration of the trivial subgroup. Closes => exact group
// order. Hitting max_cosets => honest Inconclusive (finite == false);
// never claims infiniteness.
ToddCoxeterResult todd_coxeter(const Presentation& p, size_t max_cosets);

}  // namespace qgt
