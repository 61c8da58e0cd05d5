#include "todd_coxeter.hpp"

#include <deque>
#include <numeric>

#include "cyclo.hpp"

namespace qgt {

int CosetTable::trace(const Word& w, int from) const {
  int c = from;
  for (int x : w.ls) c = apply_letter(c, x);
  return c;
}

namespace {

struct Enumerator {
  int ngens;
  size_t cap;
  std::vector<std::vector<int>> tau;  // [coset][2*ngens], -1 undefined
  std::vector<size_t> parent;         // union-find, min-representative
  std::deque<size_t> queue;

  Enumerator(int g, size_t cap_) : ngens(g), cap(cap_) { new_coset(); }

  static size_t col(int letter) {
    return static_cast<size_t>(2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0));
  }
  static int inv(int letter) { return -letter; }

  size_t new_coset() {
    tau.emplace_back(static_cast<size_t>(2 * ngens), -1);
    parent.push_back(parent.size());
    return tau.size() - 1;
  }

  size_t rep(size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  }
  bool alive(size_t k) { return rep(k) == k; }

  int get(size_t c, int letter) { return tau[c][col(letter)]; }
  void set(size_t c, int letter, size_t d) { tau[c][col(letter)] = static_cast<int>(d); }

  void merge(size_t a, size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    size_t mu = std::min(a, b), nu = std::max(a, b);
    parent[nu] = mu;
    queue.push_back(nu);
  }

  void coincidence(size_t a, size_t b) {
    merge(a, b);
    while (!queue.empty()) {
      size_t gamma = queue.front();
      queue.pop_front();
      for (int g = 1; g <= ngens; ++g) {
        for (int letter : {g, -g}) {
          int d = get(gamma, letter);
          if (d < 0) continue;
          size_t delta = static_cast<size_t>(d);
          if (tau[delta][col(inv(letter))] == static_cast<int>(gamma))
            tau[delta][col(inv(letter))] = -1;
          size_t mu = rep(gamma), nu = rep(delta);
          int ex = get(mu, letter);
          if (ex >= 0) {
            merge(nu, static_cast<size_t>(ex));
          } else {
            int ex2 = get(nu, inv(letter));
            if (ex2 >= 0) {
              merge(mu, static_cast<size_t>(ex2));
            } else {
              set(mu, letter, nu);
              set(nu, inv(letter), mu);
            }
          }
        }
      }
    }
  }

  size_t define(size_t c, int letter) {
    size_t d = new_coset();
    set(c, letter, d);
    set(d, inv(letter), c);
    return d;
  }

  // Scan relator w at coset alpha, defining cosets as needed (HLT).
  void scan_and_fill(size_t alpha, const Word& w) {
    long i = 0, j = static_cast<long>(w.ls.size()) - 1;
    size_t f = alpha, b = alpha;
    for (;;) {
      while (i <= j && get(f, w.ls[static_cast<size_t>(i)]) >= 0) {
        f = static_cast<size_t>(get(f, w.ls[static_cast<size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inv(w.ls[static_cast<size_t>(j)])) >= 0) {
        b = static_cast<size_t>(get(b, inv(w.ls[static_cast<size_t>(j)])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set(f, w.ls[static_cast<size_t>(i)], b);
        set(b, inv(w.ls[static_cast<size_t>(i)]), f);
        return;
      }
      f = define(f, w.ls[static_cast<size_t>(i)]);
      ++i;
    }
  }
};

}  // namespace

ToddCoxeterResult todd_coxeter(const Presentation& p, size_t max_cosets) {
  if (max_cosets < 1) throw input_error("todd_coxeter needs max_cosets >= 1");
  ToddCoxeterResult out;
  if (p.ngens == 0) {
    CosetTable t;
    t.ngens = 0;
    t.next.emplace_back();
    t.rep.push_back(Word());
    out.finite = true;
    out.order = 1;
    out.cosets_used = 1;
    out.table = std::move(t);
    return out;
  }
  Enumerator e(p.ngens, max_cosets);
  for (size_t alpha = 0; alpha < e.tau.size(); ++alpha) {
    if (!e.alive(alpha)) continue;
    for (const auto& r : p.relators) {
      if (!e.alive(alpha)) break;
      e.scan_and_fill(alpha, r);
      if (e.tau.size() > max_cosets) {
        out.cosets_used = e.tau.size();
        return out;
      }
    }
    if (!e.alive(alpha)) continue;
    for (int g = 1; g <= p.ngens; ++g) {
      for (int letter : {g, -g}) {
        if (!e.alive(alpha)) break;
        if (e.get(alpha, letter) < 0) e.define(alpha, letter);
        if (e.tau.size() > max_cosets) {
          out.cosets_used = e.tau.size();
          return out;
        }
      }
    }
  }
  // compact to live cosets
  std::vector<int> index(e.tau.size(), -1);
  std::vector<size_t> live;
  for (size_t c = 0; c < e.tau.size(); ++c)
    if (e.alive(c)) {
      index[c] = static_cast<int>(live.size());
      live.push_back(c);
    }
  CosetTable t;
  t.ngens = p.ngens;
  t.next.resize(live.size(), std::vector<int>(static_cast<size_t>(2 * p.ngens), -1));
  for (size_t li = 0; li < live.size(); ++li) {
    for (size_t x = 0; x < static_cast<size_t>(2 * p.ngens); ++x) {
      int d = e.tau[live[li]][x];
      if (d < 0) throw input_error("todd_coxeter: closed table has a hole");
      t.next[li][x] = index[e.rep(static_cast<size_t>(d))];
    }
  }
  // verification: every relator fixes every coset
  for (size_t c = 0; c < t.next.size(); ++c)
    for (const auto& r : p.relators)
      if (t.trace(r, static_cast<int>(c)) != static_cast<int>(c))
        throw input_error("todd_coxeter: verification failed");
  // BFS representatives (shortest, earliest generator first)
  t.rep.assign(t.next.size(), Word());
  std::vector<bool> seen(t.next.size(), false);
  std::deque<int> bfs{0};
  seen[0] = true;
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (int g = 1; g <= p.ngens; ++g) {
      for (int letter : {g, -g}) {
        int d = t.apply_letter(c, letter);
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = true;
          Word w = t.rep[static_cast<size_t>(c)];
          w.ls.push_back(letter);
          t.rep[static_cast<size_t>(d)] = std::move(w);
          bfs.push_back(d);
        }
      }
    }
  }
  for (bool s : seen)
    if (!s) throw input_error("todd_coxeter: table not connected");
  out.finite = true;
  out.order = t.next.size();
  out.cosets_used = e.tau.size();
  out.table = std::move(t);
  return out;
}

}  // namespace qgt
