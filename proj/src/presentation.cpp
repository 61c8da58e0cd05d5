#include "presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclo.hpp"

namespace qgt {

namespace {
inline Word canonical(const Word& w) { return canonical_relator(w); }
}  // namespace

Presentation::Presentation(int n, std::vector<Word> rels, std::vector<std::string> labs)
    : ngens(n), relators(std::move(rels)), labels(std::move(labs)) {
  if (n < 0) throw input_error("negative generator count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw input_error("label count != generator count");
  normalize();
}

void Presentation::normalize() {
  for (auto& r : relators) {
    for (int x : r.ls)
      if (x == 0 || std::abs(x) > ngens) throw input_error("relator letter out of range");
    r = canonical(r);
  }
  std::sort(relators.begin(), relators.end(), word_less);
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
  relators.erase(std::remove_if(relators.begin(), relators.end(),
                                [](const Word& w) { return w.empty(); }),
                 relators.end());
}

std::string Presentation::label(int g) const {
  if (!labels.empty()) return labels[g - 1];
  return "g" + std::to_string(g);
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "<";
  for (int g = 1; g <= ngens; ++g) {
    if (g > 1) os << ",";
    os << label(g);
  }
  os << "|";
  std::vector<std::string> labs;
  for (int g = 1; g <= ngens; ++g) labs.push_back(label(g));
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) os << ",";
    os << compress_word_string(relators[i], labs);
  }
  os << ">";
  return os.str();
}

std::string Presentation::to_gap() const {
  std::ostringstream os;
  os << "F := FreeGroup(" << ngens << ");;\n";
  for (int g = 1; g <= ngens; ++g) os << "g" << g << " := F." << g << ";;\n";
  os << "G := F / [ ";
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) os << ", ";
    os << relators[i].to_string(nullptr, "*");
  }
  os << " ];\n";
  return os.str();
}

Presentation Presentation::parse(const std::string& text) {
  // accepts <a,b|a^2,b^3> as well as the unicode angle brackets
  std::string t = text;
  auto replace_all = [&](const std::string& from, const std::string& to) {
    size_t p = 0;
    while ((p = t.find(from, p)) != std::string::npos) {
      t.replace(p, from.size(), to);
      p += to.size();
    }
  };
  replace_all("⟨", "<");
  replace_all("⟩", ">");
  size_t lt = t.find('<'), bar = t.find('|'), gt = t.rfind('>');
  if (lt == std::string::npos || bar == std::string::npos || gt == std::string::npos || !(lt < bar && bar < gt))
    throw input_error("presentation parse: expected <gens|relators>");
  std::string gens = t.substr(lt + 1, bar - lt - 1);
  std::string rels = t.substr(bar + 1, gt - bar - 1);
  std::vector<std::string> names;
  {
    std::istringstream is(gens);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (!tok.empty()) names.push_back(tok);
    }
  }
  if (names.empty()) throw input_error("presentation parse: no generators");
  auto gen_index = [&](const std::string& s) -> int {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i) + 1;
    throw input_error("presentation parse: unknown generator " + s);
  };
  std::vector<Word> relators;
  std::istringstream is(rels);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::string s = tok;
    s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
    size_t pos = 0;
    std::vector<int> letters;
    auto skip_ws = [&] {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    while (pos < s.size()) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_') )
        ++pos;
      // longest-match generator name
      std::string nm;
      size_t best = start;
      for (size_t e = pos; e > start; --e) {
        std::string cand = s.substr(start, e - start);
        bool found = std::find(names.begin(), names.end(), cand) != names.end();
        if (found) {
          nm = cand;
          best = e;
          break;
        }
      }
      if (nm.empty()) throw input_error("presentation parse: cannot read relator " + tok);
      pos = best;
      long exp = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip_ws();
        bool neg = pos < s.size() && s[pos] == '-';
        if (neg || (pos < s.size() && s[pos] == '+')) ++pos;
        size_t es = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (es == pos) throw input_error("presentation parse: expected exponent");
        exp = std::stol(s.substr(es, pos - es));
        if (neg) exp = -exp;
      }
      int g = gen_index(nm);
      for (long i = 0; i < std::labs(exp); ++i) letters.push_back(exp < 0 ? -g : g);
      skip_ws();
    }
    if (!letters.empty()) relators.push_back(Word(std::move(letters)));
  }
  return Presentation(static_cast<int>(names.size()), std::move(relators), std::move(names));
}

std::vector<std::vector<long>> relator_exponent_matrix(const Presentation& p) {
  std::vector<std::vector<long>> m;
  for (const auto& r : p.relators) {
    std::vector<long> row(p.ngens, 0);
    for (int x : r.ls) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

struct Simplifier {
  int norig;
  std::vector<Word> relators;           // over original indices, alive gens only
  std::vector<bool> alive;              // 1-based
  std::vector<Word> images;             // original gen -> word over original alive gens
  size_t total_length_cap = 200000;

  explicit Simplifier(const Presentation& p) : norig(p.ngens), alive(p.ngens + 1, true) {
    relators = p.relators;
    images.resize(p.ngens + 1);
    for (int g = 1; g <= p.ngens; ++g) images[g] = Word({g});
  }

  static Word substitute(const Word& w, int gen, const Word& repl) {
    std::vector<int> out;
    for (int x : w.ls) {
      if (std::abs(x) == gen) {
        const Word r = x > 0 ? repl : repl.inverse();
        out.insert(out.end(), r.ls.begin(), r.ls.end());
      } else {
        out.push_back(x);
      }
    }
    return free_reduce(Word(std::move(out)));
  }

  void renormalize() {
    for (auto& r : relators) r = canonical(r);
    std::sort(relators.begin(), relators.end(), word_less);
    relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   relators.end());
  }

  size_t total_length() const {
    size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }

  // Eliminate generator gen using gen = repl (a word in the other gens).
  void eliminate(int gen, const Word& repl) {
    for (auto& r : relators) r = substitute(r, gen, repl);
    for (int g = 1; g <= norig; ++g) images[g] = substitute(images[g], gen, repl);
    alive[gen] = false;
    renormalize();
  }

  // One elimination round. Candidates ordered by (defining relator length,
  // eliminated generator index, relator). Returns true if something fired.
  bool eliminate_pass() {
    int best_gen = 0;
    Word best_repl;
    size_t best_len = SIZE_MAX;
    Word best_rel;
    for (const auto& r : relators) {
      std::vector<int> count(norig + 1, 0);
      for (int x : r.ls) ++count[std::abs(x)];
      for (int g = 1; g <= norig; ++g) {
        if (count[g] != 1) continue;
        if (r.size() > 12 && best_gen) continue;  // keep substitutions short when possible
        // rotate so the unique occurrence of g is first
        size_t at = 0;
        while (std::abs(r.ls[at]) != g) ++at;
        std::vector<int> rot(r.ls.begin() + static_cast<long>(at), r.ls.end());
        rot.insert(rot.end(), r.ls.begin(), r.ls.begin() + static_cast<long>(at));
        // rot = g^{eps} w  =>  g = (w^{-1})^{eps}
        Word w(std::vector<int>(rot.begin() + 1, rot.end()));
        Word repl = rot[0] > 0 ? w.inverse() : w;
        bool better = false;
        if (r.size() < best_len)
          better = true;
        else if (r.size() == best_len && best_gen && g < best_gen)
          better = true;
        else if (r.size() == best_len && g == best_gen && word_less(r, best_rel))
          better = true;
        if (!best_gen || better) {
          best_gen = g;
          best_repl = repl;
          best_len = r.size();
          best_rel = r;
        }
      }
    }
    if (!best_gen) return false;
    if (total_length() > total_length_cap) return false;
    eliminate(best_gen, best_repl);
    return true;
  }

  // Reduce single-generator power relators to the gcd exponent.
  bool gcd_pass() {
    std::map<int, long> power;  // gen -> gcd of |exponents|
    bool changed = false;
    for (const auto& r : relators) {
      bool single = !r.ls.empty();
      int g = single ? std::abs(r.ls[0]) : 0;
      for (int x : r.ls)
        if (std::abs(x) != g) single = false;
      if (!single) continue;
      long e = 0;
      for (int x : r.ls) e += (x > 0 ? 1 : -1);
      e = std::labs(e);
      if (e == 0) e = static_cast<long>(r.size());  // cannot happen after reduction
      auto it = power.find(g);
      if (it == power.end())
        power[g] = e;
      else {
        long ng = std::gcd(it->second, e);
        if (ng != it->second) changed = true;
        it->second = ng;
      }
    }
    if (power.empty()) return false;
    std::vector<Word> out;
    std::set<int> done;
    for (const auto& r : relators) {
      bool single = !r.ls.empty();
      int g = single ? std::abs(r.ls[0]) : 0;
      for (int x : r.ls)
        if (std::abs(x) != g) single = false;
      if (!single) {
        out.push_back(r);
        continue;
      }
      if (done.count(g)) {
        changed = true;  // duplicate power relator collapses
        continue;
      }
      done.insert(g);
      long e = power[g];
      if (e != static_cast<long>(r.size())) changed = true;
      out.push_back(Word(std::vector<int>(static_cast<size_t>(e), g)));
    }
    relators = std::move(out);
    renormalize();
    return changed;
  }

  // Rewrite relators against shorter relators (Dehn-style): an occurrence of
  // more than half of a cyclic rotation of another relator (or its inverse)
  // is replaced by the shorter complement. Full occurrences vanish.
  bool rewrite_pass() {
    bool changed = false;
    renormalize();
    for (size_t i = relators.size(); i-- > 0;) {
      Word cur = relators[i];
      bool cur_changed = false;
      for (size_t j = 0; j < relators.size(); ++j) {
        if (i == j) continue;
        const Word& v = relators[j];
        if (v.size() > cur.size() || v.empty()) continue;
        // try all rotations of v and v^{-1}, replacing a prefix piece p
        // (|p| > |v|/2) inside cur by the inverse of the complement.
        for (const Word& base : {v, v.inverse()}) {
          for (size_t rot = 0; rot < base.size(); ++rot) {
            std::vector<int> u(base.ls.begin() + static_cast<long>(rot), base.ls.end());
            u.insert(u.end(), base.ls.begin(), base.ls.begin() + static_cast<long>(rot));
            for (size_t plen = base.size(); plen * 2 > base.size(); --plen) {
              if (plen > cur.size()) continue;
              std::vector<int> p(u.begin(), u.begin() + static_cast<long>(plen));
              std::vector<int> rest(u.begin() + static_cast<long>(plen), u.end());
              // complement: p = rest^{-1} modulo the relator, so p -> rest^{-1}
              Word repl = Word(rest).inverse();
              // search in cur doubled (cyclic occurrences)
              std::vector<int> dbl = cur.ls;
              dbl.insert(dbl.end(), cur.ls.begin(), cur.ls.end());
              for (size_t s = 0; s + plen <= dbl.size() && s < cur.size(); ++s) {
                if (!std::equal(p.begin(), p.end(), dbl.begin() + static_cast<long>(s))) continue;
                std::vector<int> next(repl.ls);
                next.insert(next.end(), dbl.begin() + static_cast<long>(s + plen),
                            dbl.begin() + static_cast<long>(s + cur.size()));
                Word cand = canonical(Word(std::move(next)));
                if (cand.size() < cur.size()) {
                  cur = cand;
                  cur_changed = true;
                  break;
                }
              }
              if (cur_changed) break;
            }
            if (cur_changed) break;
          }
          if (cur_changed) break;
        }
        if (cur_changed) break;
      }
      if (cur_changed) {
        relators[i] = cur;
        changed = true;
        renormalize();
        i = relators.size();  // restart scan after a successful rewrite
      }
    }
    return changed;
  }

  SimplifyResult finish(const Presentation& orig) {
    // renumber alive generators ascending
    std::vector<int> newindex(norig + 1, 0);
    int next = 0;
    for (int g = 1; g <= norig; ++g)
      if (alive[g]) newindex[g] = ++next;
    auto renum = [&](const Word& w) {
      std::vector<int> out;
      out.reserve(w.ls.size());
      for (int x : w.ls) {
        int g = newindex[std::abs(x)];
        out.push_back(x > 0 ? g : -g);
      }
      return Word(std::move(out));
    };
    std::vector<Word> rel;
    for (const auto& r : relators) rel.push_back(renum(r));
    std::vector<Word> images_out(static_cast<size_t>(norig));
    for (int g = 1; g <= norig; ++g) images_out[static_cast<size_t>(g) - 1] = renum(images[g]);

    // canonical relabeling: among generator permutations (and inversions for
    // small sizes) pick the one minimizing the relator set, so presentations
    // equal up to relabeling compare equal
    int k = next;
    if (k >= 2 && k <= 6 && !rel.empty()) {
      std::vector<int> perm(static_cast<size_t>(k));
      std::iota(perm.begin(), perm.end(), 1);
      std::vector<Word> best_rel = rel;
      std::vector<int> best_perm = perm;
      long best_signs = 0;
      bool first = true;
      long sign_limit = (k <= 4) ? (1L << k) : 1;
      do {
        for (long signs = 0; signs < sign_limit; ++signs) {
          std::vector<Word> cand;
          for (const auto& r : rel) {
            std::vector<int> out;
            for (int x : r.ls) {
              int g = perm[static_cast<size_t>(std::abs(x)) - 1];
              int y = x > 0 ? g : -g;
              if (signs & (1L << (g - 1))) y = -y;
              out.push_back(y);
            }
            cand.push_back(canonical(Word(std::move(out))));
          }
          std::sort(cand.begin(), cand.end(), word_less);
          if (first || std::lexicographical_compare(
                           cand.begin(), cand.end(), best_rel.begin(), best_rel.end(), word_less)) {
            best_rel = cand;
            best_perm = perm;
            best_signs = signs;
            first = false;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      rel = best_rel;
      for (auto& img : images_out) {
        std::vector<int> out;
        for (int x : img.ls) {
          int g = best_perm[static_cast<size_t>(std::abs(x)) - 1];
          int y = x > 0 ? g : -g;
          if (best_signs & (1L << (g - 1))) y = -y;
          out.push_back(y);
        }
        img = free_reduce(Word(std::move(out)));
      }
    }

    std::vector<std::string> labs;
    for (int g = 1; g <= k; ++g) labs.push_back(default_label(g, k));
    SimplifyResult out{Presentation(k, std::move(rel), std::move(labs)), std::move(images_out)};
    (void)orig;
    return out;
  }
};

}  // namespace

SimplifyResult simplify_presentation(const Presentation& p) {
  Simplifier s(p);
  s.renormalize();
  for (;;) {
    bool any = false;
    while (s.eliminate_pass()) any = true;
    if (s.gcd_pass()) any = true;
    if (s.rewrite_pass()) any = true;
    if (!any) break;
  }
  return s.finish(p);
}

}  // namespace qgt
