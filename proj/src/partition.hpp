#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo.hpp"

namespace qgt {

enum class Color : uint8_t { White = 0, Black = 1 };

// A set partition of k upper and l lower legs, each leg colored white or
// black. Legs are numbered 0..k-1 (upper, printed u1..uk) and k..k+l-1
// (lower, printed d1..dl). Canonical form: every block sorted, blocks sorted
// by least leg, so structural equality is diagram equality.
//
// Uncolored diagrams are the all-white ones.
struct ColoredPartition {
  int k = 0, l = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<Color> colors;  // size k+l, upper legs then lower legs

  ColoredPartition() = default;
  ColoredPartition(int up, int down, std::vector<std::vector<int>> bl, std::vector<Color> col);

  int upper_count() const { return k; }
  int lower_count() const { return l; }
  int total_legs() const { return k + l; }

  bool operator==(const ColoredPartition& o) const {
    return k == o.k && l == o.l && blocks == o.blocks && colors == o.colors;
  }
  bool operator<(const ColoredPartition& o) const;

  std::string format() const;

  // Building blocks
  static ColoredPartition empty_diagram();
  static ColoredPartition identity(int n, Color c = Color::White);
  // cup in P(0,2) / cap in P(2,0) with given leg colors
  static ColoredPartition cup(Color c1 = Color::White, Color c2 = Color::White);
  static ColoredPartition cap(Color c1 = Color::White, Color c2 = Color::White);
  static ColoredPartition singleton_lower(Color c = Color::White);  // P(0,1)
  static ColoredPartition fork();            // P(1,2), one block, white
  static ColoredPartition one_block(int up, int down);  // white single block
  static ColoredPartition crossing(Color c1 = Color::White, Color c2 = Color::White);  // P(2,2)

 private:
  void canonicalize_();
};

ColoredPartition parse_partition(const std::string& text);

ColoredPartition tensor(const ColoredPartition& p, const ColoredPartition& q);

// Vertical concatenation pured after q ("q first, then p"): requires
// upper_count(p) == lower_count(q) and exact agreement of the middle colors.
// loop_count is the number of closed strings removed; it feeds the scalar
// factor N^loops in T_p T_q = N^loops T_{p o q}.
struct ComposeResult {
  ColoredPartition diagram;
  int loop_count = 0;
};
ComposeResult compose(const ColoredPartition& p, const ColoredPartition& q);

// Upside-down turn: rows swapped, every leg color reversed.
ColoredPartition involute(const ColoredPartition& p);

// 1 iff every block of p carries a constant index value across its legs.
// Index entries are 1-based; |i| = k, |j| = l.
bool delta_plain(const ColoredPartition& p, const std::vector<int>& i, const std::vector<int>& j);

struct CategorySpec {
  std::string name;
  std::vector<ColoredPartition> generators;
  bool colored = false;

  CategorySpec() = default;
  CategorySpec(std::string nm, std::vector<ColoredPartition> gens, bool col);
};

// Known categories: P2, NC2, NC2_uncolored, NC, NC_even, P.
// Generator choices (saturation reproduces the category up to the point
// bound; checked against brute-force enumerators in the tests):
//   NC2_uncolored : { cup }
//   NC2           : { cup(w,b), cup(b,w) }
//   NC            : { cup, singleton, fork }
//   NC_even       : { cup, 4-leg one-block in P(2,2) }
//   P             : NC generators + crossing
//   P2            : NC2 generators + the four colored crossings
CategorySpec builtin_category(const std::string& name);

// Least set containing the generators and the identity, stable under
// tensor, compose and involute, restricted to diagrams with at most
// point_bound legs. Deterministic fixpoint; result sorted canonically.
std::vector<ColoredPartition> saturate_category(const CategorySpec& spec, int point_bound,
                                                size_t size_cap = 2000000);

}  // namespace qgt
