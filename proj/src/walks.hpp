#pragma once

#include <string>
#include <vector>

#include "group_algebra.hpp"

namespace qgt {

struct WalkSpec {
  NormalForms nf;            // ambient with normal forms
  std::vector<Word> steps;   // symmetrized step multiset (words in ambient gens)
  int horizon = 16;
  size_t state_cap = 1000000;
};

// Symmetrized standard generator steps: every g_i^{+-1}, normalized,
// deduplicated (an involution contributes a single step).
std::vector<Word> standard_steps(const NormalForms& nf);

// r_n = number of length-n words over the step multiset equal to the
// identity. Exact dynamic programming over normal forms within radius
// horizon/2 (a returning walk never leaves that ball).
std::vector<Int> return_counts(const WalkSpec& spec);

struct SpectralBound {
  Rat lower_bound;   // best certified lower bound for the spectral radius
  Rat root_bound;    // max_n (r_{2n})^{1/2n} / |steps|
  Rat ratio_bound;   // max_n sqrt(r_{2n+2} / (r_{2n} |steps|^2))
  Rat lanczos_bound; // largest eigenvalue of the moment Jacobi truncation
  std::vector<std::pair<int, Rat>> root_sequence;  // (2n, outward-rounded bound)
  std::string trend;
};

// Certified rational lower bounds for the walk spectral radius, all
// obtained from the exact return counts and outward-rounded to the stated
// precision. Never asserts amenability; evidence only.
SpectralBound spectral_radius_estimate(const std::vector<Int>& counts, size_t step_count,
                                       long precision_denominator = 10000);

struct BallGrowth {
  std::vector<Int> sizes;   // |B_0| .. |B_radius|
  std::string fit;          // polynomial | exponential | finite | inconclusive
  std::string diagnostics;
};

// Exact ball cardinalities by breadth-first enumeration of normal forms,
// with the growth-fit rule: exponential when |B_{n+1}|/|B_n| >= 1 + 1/20
// over the last five radii, polynomial when successive differences
// stabilize, finite when the ball stops growing.
BallGrowth ball_sizes(const NormalForms& nf, const std::vector<Word>& gens, int radius,
                      size_t state_cap = 1000000);

}  // namespace qgt
