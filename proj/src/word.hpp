#pragma once

#include <string>
#include <vector>

namespace qgt {

// Word in a free group: letters are +g / -g for generator g in 1..N.
struct Word {
  std::vector<int> ls;

  Word() = default;
  explicit Word(std::vector<int> letters) : ls(std::move(letters)) {}

  bool empty() const { return ls.empty(); }
  size_t size() const { return ls.size(); }
  bool operator==(const Word& o) const { return ls == o.ls; }
  bool operator<(const Word& o) const { return ls < o.ls; }

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenate + free reduce

  // JSON/report syntax: "g1 g2^-1 g3"; parse accepts that and "g1*g2^-1".
  std::string to_string(const std::vector<std::string>* labels = nullptr,
                        const std::string& sep = " ") const;
  static Word parse(const std::string& text);
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

// Total order on words: shorter first, then letterwise with positive
// letters preferred (g1 < g1^-1 < g2 < ...). Used for canonical forms and
// deterministic relator sorting.
bool word_less(const Word& a, const Word& b);

// Canonical representative of a relator up to cyclic rotation and
// inversion: the word_less-least of all rotations of w and of w^{-1}.
Word canonical_relator(const Word& w);

std::string default_label(int gen_index_1based, int total);

// Render with ^k exponents collapsed: "g^2*h^-1".
std::string compress_word_string(const Word& w, const std::vector<std::string>& labels);

}  // namespace qgt
