#include "partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace qgt {

ColoredPartition::ColoredPartition(int up, int down, std::vector<std::vector<int>> bl,
                                   std::vector<Color> col)
    : k(up), l(down), blocks(std::move(bl)), colors(std::move(col)) {
  if (k < 0 || l < 0) throw input_error("negative leg count");
  if (static_cast<int>(colors.size()) != k + l) throw input_error("color count != leg count");
  std::vector<int> seen(k + l, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw input_error("empty block");
    for (int leg : b) {
      if (leg < 0 || leg >= k + l) throw input_error("leg out of range");
      if (seen[leg]++) throw input_error("leg referenced twice");
    }
  }
  for (int c : seen)
    if (!c) throw input_error("leg missing from blocks");
  canonicalize_();
}

void ColoredPartition::canonicalize_() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

bool ColoredPartition::operator<(const ColoredPartition& o) const {
  if (k != o.k) return k < o.k;
  if (l != o.l) return l < o.l;
  if (blocks != o.blocks) return blocks < o.blocks;
  return colors < o.colors;
}

std::string ColoredPartition::format() const {
  std::ostringstream os;
  os << "P(" << k << "," << l << ")";
  for (const auto& b : blocks) {
    os << "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) os << " ";
      if (b[i] < k)
        os << "u" << (b[i] + 1);
      else
        os << "d" << (b[i] - k + 1);
    }
    os << "}";
  }
  os << " colors ";
  for (int i = 0; i < k; ++i) os << (colors[i] == Color::White ? 'w' : 'b');
  os << "|";
  for (int i = 0; i < l; ++i) os << (colors[k + i] == Color::White ? 'w' : 'b');
  return os.str();
}

ColoredPartition ColoredPartition::empty_diagram() { return ColoredPartition(0, 0, {}, {}); }

ColoredPartition ColoredPartition::identity(int n, Color c) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return ColoredPartition(n, n, std::move(blocks), std::vector<Color>(2 * n, c));
}

ColoredPartition ColoredPartition::cup(Color c1, Color c2) {
  return ColoredPartition(0, 2, {{0, 1}}, {c1, c2});
}

ColoredPartition ColoredPartition::cap(Color c1, Color c2) {
  return ColoredPartition(2, 0, {{0, 1}}, {c1, c2});
}

ColoredPartition ColoredPartition::singleton_lower(Color c) {
  return ColoredPartition(0, 1, {{0}}, {c});
}

ColoredPartition ColoredPartition::fork() {
  return ColoredPartition(1, 2, {{0, 1, 2}}, std::vector<Color>(3, Color::White));
}

ColoredPartition ColoredPartition::one_block(int up, int down) {
  std::vector<int> all(up + down);
  std::iota(all.begin(), all.end(), 0);
  return ColoredPartition(up, down, {all}, std::vector<Color>(up + down, Color::White));
}

ColoredPartition ColoredPartition::crossing(Color c1, Color c2) {
  return ColoredPartition(2, 2, {{0, 3}, {1, 2}}, {c1, c2, c2, c1});
}

ColoredPartition parse_partition(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw input_error(std::string("partition parse: expected '") + c + "' at offset " +
                        std::to_string(pos));
    ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw input_error("partition parse: expected integer");
    return std::stoi(text.substr(start, pos - start));
  };
  expect('P');
  expect('(');
  int k = read_int();
  expect(',');
  int l = read_int();
  expect(')');
  std::vector<std::vector<int>> blocks;
  skip_ws();
  while (pos < text.size() && text[pos] == '{') {
    ++pos;
    std::vector<int> block;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      if (pos >= text.size()) throw input_error("partition parse: unterminated block");
      char side = text[pos];
      if (side != 'u' && side != 'd') throw input_error("partition parse: leg must start with u or d");
      ++pos;
      int idx = read_int();
      if (side == 'u') {
        if (idx < 1 || idx > k) throw input_error("partition parse: upper leg out of range");
        block.push_back(idx - 1);
      } else {
        if (idx < 1 || idx > l) throw input_error("partition parse: lower leg out of range");
        block.push_back(k + idx - 1);
      }
    }
    if (block.empty()) throw input_error("partition parse: empty block");
    blocks.push_back(std::move(block));
    skip_ws();
  }
  std::vector<Color> colors(k + l, Color::White);
  skip_ws();
  if (pos < text.size()) {
    static const std::string kw = "colors";
    if (text.compare(pos, kw.size(), kw) != 0)
      throw input_error("partition parse: expected 'colors' clause");
    pos += kw.size();
    skip_ws();
    int seen = 0;
    bool bar = false;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '|') {
        if (bar || seen != k) throw input_error("partition parse: '|' misplaced in colors");
        bar = true;
        ++pos;
        continue;
      }
      if (c == 'w' || c == 'b') {
        if (seen >= k + l) throw input_error("partition parse: too many colors");
        colors[seen++] = (c == 'w') ? Color::White : Color::Black;
        ++pos;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        continue;
      }
      throw input_error("partition parse: bad color character");
    }
    if (!bar || seen != k + l) throw input_error("partition parse: colors clause incomplete");
  }
  return ColoredPartition(k, l, std::move(blocks), std::move(colors));
}

ColoredPartition tensor(const ColoredPartition& p, const ColoredPartition& q) {
  int k = p.k + q.k, l = p.l + q.l;
  auto map_p = [&](int leg) { return leg < p.k ? leg : leg + q.k; };
  auto map_q = [&](int leg) { return leg < q.k ? leg + p.k : leg + p.k + p.l; };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int leg : b) nb.push_back(map_p(leg));
    blocks.push_back(std::move(nb));
  }
  for (const auto& b : q.blocks) {
    std::vector<int> nb;
    for (int leg : b) nb.push_back(map_q(leg));
    blocks.push_back(std::move(nb));
  }
  std::vector<Color> colors(k + l);
  for (int i = 0; i < p.k; ++i) colors[i] = p.colors[i];
  for (int i = 0; i < q.k; ++i) colors[p.k + i] = q.colors[i];
  for (int i = 0; i < p.l; ++i) colors[k + i] = p.colors[p.k + i];
  for (int i = 0; i < q.l; ++i) colors[k + p.l + i] = q.colors[q.k + i];
  return ColoredPartition(k, l, std::move(blocks), std::move(colors));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ComposeResult compose(const ColoredPartition& p, const ColoredPartition& q) {
  if (p.k != q.l) throw input_error("compose: middle arities differ");
  for (int t = 0; t < p.k; ++t)
    if (p.colors[t] != q.colors[q.k + t]) throw input_error("compose: middle colors differ");

  // Node layout: q upper (0..q.k-1), middle (q.k..q.k+p.k-1), p lower.
  int n_up = q.k, n_mid = p.k, n_low = p.l;
  UnionFind uf(n_up + n_mid + n_low);
  for (const auto& b : q.blocks)
    for (size_t i = 1; i < b.size(); ++i) {
      auto node = [&](int leg) { return leg < q.k ? leg : n_up + (leg - q.k); };
      uf.unite(node(b[0]), node(b[i]));
    }
  for (const auto& b : p.blocks)
    for (size_t i = 1; i < b.size(); ++i) {
      auto node = [&](int leg) { return leg < p.k ? n_up + leg : n_up + n_mid + (leg - p.k); };
      uf.unite(node(b[0]), node(b[i]));
    }

  std::map<int, std::vector<int>> comp;  // root -> external legs of the result
  for (int i = 0; i < n_up; ++i) comp[uf.find(i)].push_back(i);
  for (int i = 0; i < n_low; ++i) comp[uf.find(n_up + n_mid + i)].push_back(n_up + i);
  int loops = 0;
  for (int i = 0; i < n_mid; ++i) {
    int r = uf.find(n_up + i);
    if (!comp.count(r)) {
      // component made of middle legs only: a closed string
      ++loops;
      comp[r] = {};
    }
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [root, legs] : comp)
    if (!legs.empty()) blocks.push_back(legs);
  std::vector<Color> colors(n_up + n_low);
  for (int i = 0; i < n_up; ++i) colors[i] = q.colors[i];
  for (int i = 0; i < n_low; ++i) colors[n_up + i] = p.colors[p.k + i];
  ColoredPartition out(n_up, n_low, std::move(blocks), std::move(colors));
  return {std::move(out), loops};
}

ColoredPartition involute(const ColoredPartition& p) {
  auto flip = [](Color c) { return c == Color::White ? Color::Black : Color::White; };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int leg : b) nb.push_back(leg < p.k ? p.l + leg : leg - p.k);
    blocks.push_back(std::move(nb));
  }
  std::vector<Color> colors(p.k + p.l);
  for (int i = 0; i < p.l; ++i) colors[i] = flip(p.colors[p.k + i]);
  for (int i = 0; i < p.k; ++i) colors[p.l + i] = flip(p.colors[i]);
  return ColoredPartition(p.l, p.k, std::move(blocks), std::move(colors));
}

bool delta_plain(const ColoredPartition& p, const std::vector<int>& i, const std::vector<int>& j) {
  if (static_cast<int>(i.size()) != p.k || static_cast<int>(j.size()) != p.l)
    throw input_error("delta_plain: index arity mismatch");
  for (const auto& b : p.blocks) {
    int v = -1;
    for (int leg : b) {
      int w = leg < p.k ? i[leg] : j[leg - p.k];
      if (v == -1)
        v = w;
      else if (v != w)
        return false;
    }
  }
  return true;
}

CategorySpec::CategorySpec(std::string nm, std::vector<ColoredPartition> gens, bool col)
    : name(std::move(nm)), generators(std::move(gens)), colored(col) {
  if (generators.empty()) throw input_error("category spec needs at least one generator");
  if (!colored) {
    for (const auto& g : generators)
      for (Color c : g.colors)
        if (c != Color::White) throw input_error("uncolored category with colored generator");
  }
}

CategorySpec builtin_category(const std::string& name) {
  using CP = ColoredPartition;
  const Color W = Color::White, B = Color::Black;
  if (name == "NC2_uncolored") return CategorySpec(name, {CP::cup()}, false);
  if (name == "NC2") return CategorySpec(name, {CP::cup(W, B), CP::cup(B, W)}, true);
  if (name == "NC") return CategorySpec(name, {CP::cup(), CP::singleton_lower(), CP::fork()}, false);
  if (name == "NC_even") return CategorySpec(name, {CP::cup(), CP::one_block(2, 2)}, false);
  if (name == "P") {
    return CategorySpec(name, {CP::cup(), CP::singleton_lower(), CP::fork(), CP::crossing()}, false);
  }
  if (name == "P2") {
    return CategorySpec(name,
                        {CP::cup(W, B), CP::cup(B, W), CP::crossing(W, W), CP::crossing(W, B),
                         CP::crossing(B, W), CP::crossing(B, B)},
                        true);
  }
  throw input_error("unknown builtin category: " + name);
}

namespace {

std::string saturation_key(const CategorySpec& spec, int point_bound, size_t size_cap) {
  std::string key = std::to_string(point_bound) + "/" + std::to_string(size_cap) + "/" +
                    (spec.colored ? "c" : "u");
  for (const auto& g : spec.generators) key += ";" + g.format();
  return key;
}

std::map<std::string, std::vector<ColoredPartition>> g_saturation_cache;
std::mutex g_saturation_mutex;

}  // namespace

std::vector<ColoredPartition> saturate_category(const CategorySpec& spec, int point_bound,
                                                size_t size_cap) {
  if (point_bound < 2) throw input_error("saturate_category needs point_bound >= 2");
  std::string key = saturation_key(spec, point_bound, size_cap);
  {
    std::lock_guard<std::mutex> lock(g_saturation_mutex);
    auto it = g_saturation_cache.find(key);
    if (it != g_saturation_cache.end()) return it->second;
  }
  std::set<ColoredPartition> all;
  std::vector<ColoredPartition> fresh;
  auto add = [&](ColoredPartition p) {
    if (p.total_legs() > point_bound) return;
    // uncolored categories live entirely on white legs; the involution's
    // color reversal is a no-op for them
    if (!spec.colored) std::fill(p.colors.begin(), p.colors.end(), Color::White);
    if (all.insert(p).second) {
      fresh.push_back(std::move(p));
      if (all.size() > size_cap) throw resource_error("category saturation exceeds size cap");
    }
  };
  add(ColoredPartition::identity(1, Color::White));
  if (spec.colored) add(ColoredPartition::identity(1, Color::Black));
  for (const auto& g : spec.generators) add(g);

  // Worklist closure: each round combines the newly added diagrams with
  // everything seen so far.
  while (!fresh.empty()) {
    std::vector<ColoredPartition> batch;
    batch.swap(fresh);
    std::vector<ColoredPartition> known(all.begin(), all.end());
    for (const auto& p : batch) add(involute(p));
    for (const auto& p : batch) {
      for (const auto& q : known) {
        if (p.total_legs() + q.total_legs() <= point_bound) {
          add(tensor(p, q));
          add(tensor(q, p));
        }
        if (p.k == q.l && std::equal(p.colors.begin(), p.colors.begin() + p.k,
                                     q.colors.begin() + q.k))
          add(compose(p, q).diagram);
        if (q.k == p.l && std::equal(q.colors.begin(), q.colors.begin() + q.k,
                                     p.colors.begin() + p.k))
          add(compose(q, p).diagram);
      }
    }
  }
  std::vector<ColoredPartition> out(all.begin(), all.end());
  {
    std::lock_guard<std::mutex> lock(g_saturation_mutex);
    g_saturation_cache.emplace(key, out);
  }
  return out;
}

}  // namespace qgt
