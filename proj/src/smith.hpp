#pragma once

#include <vector>

#include "cyclo.hpp"
#include "presentation.hpp"

namespace qgt {

// Invariant factors d_1 | d_2 | ... of an integer matrix by exact Smith
// normal form; 1s are kept (callers drop them as needed).
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m);

// Abelianization invariants of the presented group: nontrivial finite
// factors in divisibility order, then one 0 per free Z summand.
// <g,h | g^2, h^2> -> [2,2]; F_3 -> [0,0,0]; <g,h | g^2, h^3> -> [6].
std::vector<Int> abelianization(const Presentation& p);

}  // namespace qgt
