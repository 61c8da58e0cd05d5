#include "word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cyclo.hpp"

namespace qgt {

Word free_reduce(const Word& w) {
  std::vector<int> out;
  out.reserve(w.ls.size());
  for (int x : w.ls) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  size_t a = 0, b = r.ls.size();
  while (b > a + 1 && r.ls[a] == -r.ls[b - 1]) {
    ++a;
    --b;
  }
  return Word(std::vector<int>(r.ls.begin() + a, r.ls.begin() + b));
}

Word Word::inverse() const {
  std::vector<int> out(ls.rbegin(), ls.rend());
  for (int& x : out) x = -x;
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<int> cat = ls;
  cat.insert(cat.end(), o.ls.begin(), o.ls.end());
  return free_reduce(Word(std::move(cat)));
}

namespace {
inline int letter_key(int x) { return std::abs(x) * 2 + (x < 0 ? 1 : 0); }
}  // namespace

bool word_less(const Word& a, const Word& b) {
  if (a.ls.size() != b.ls.size()) return a.ls.size() < b.ls.size();
  for (size_t i = 0; i < a.ls.size(); ++i)
    if (a.ls[i] != b.ls[i]) return letter_key(a.ls[i]) < letter_key(b.ls[i]);
  return false;
}

Word canonical_relator(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.ls.empty()) return r;
  Word best = r;
  for (const Word& cand : {r, r.inverse()}) {
    for (size_t s = 0; s < cand.ls.size(); ++s) {
      std::vector<int> rot(cand.ls.begin() + static_cast<long>(s), cand.ls.end());
      rot.insert(rot.end(), cand.ls.begin(), cand.ls.begin() + static_cast<long>(s));
      Word rw(std::move(rot));
      if (word_less(rw, best)) best = rw;
    }
  }
  return best;
}

std::string compress_word_string(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.ls.size()) {
    size_t j = i;
    while (j < w.ls.size() && w.ls[j] == w.ls[i]) ++j;
    long exp = static_cast<long>(j - i) * (w.ls[i] < 0 ? -1 : 1);
    if (!first) os << "*";
    first = false;
    os << labels[static_cast<size_t>(std::abs(w.ls[i])) - 1];
    if (exp != 1) os << "^" << exp;
    i = j;
  }
  return os.str();
}

std::string default_label(int gen_index_1based, int total) {
  // Small presentations read better with letters; the paper/report
  // convention starts at g, h.
  static const char* names[] = {"g", "h", "k", "m", "p", "q", "r", "s", "t", "v", "w", "x"};
  if (total <= 12) return names[gen_index_1based - 1];
  return "g" + std::to_string(gen_index_1based);
}

std::string Word::to_string(const std::vector<std::string>* labels, const std::string& sep) const {
  if (ls.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) os << sep;
    int g = std::abs(ls[i]);
    if (labels && g - 1 < static_cast<int>(labels->size()))
      os << (*labels)[g - 1];
    else
      os << "g" << g;
    if (ls[i] < 0) os << "^-1";
  }
  return os.str();
}

Word Word::parse(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
      ++pos;
  };
  skip();
  if (text.compare(pos, 1, "1") == 0 && pos + 1 >= text.size()) return Word();
  while (pos < text.size()) {
    if (text[pos] != 'g') throw input_error("word parse: expected generator 'g<k>'");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw input_error("word parse: expected generator index");
    int g = std::stoi(text.substr(start, pos - start));
    if (g < 1) throw input_error("word parse: generator index must be >= 1");
    long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      size_t es = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (es == pos) throw input_error("word parse: expected exponent");
      exp = std::stol(text.substr(es, pos - es));
      if (neg) exp = -exp;
    }
    for (long i = 0; i < std::labs(exp); ++i) out.push_back(exp < 0 ? -g : g);
    skip();
  }
  return free_reduce(Word(std::move(out)));
}

}  // namespace qgt
