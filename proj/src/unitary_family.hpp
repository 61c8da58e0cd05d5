#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmatrix.hpp"

namespace qgt {

// All compositions of n (ordered parts), sorted.
std::vector<std::vector<int>> compositions_of(int n);

// Deterministic cross-platform generator (splitmix64).
struct SeededRng {
  uint64_t state;
  explicit SeededRng(uint64_t seed) : state(seed) {}
  uint64_t next();
  uint64_t below(uint64_t n);
};

UnitaryMatrix fourier_blocks(const std::vector<int>& comp);
std::string composition_spec(const std::vector<int>& comp);

struct SampledUnitary {
  UnitaryMatrix q;
  std::string spec;  // reparseable matrix spec
};

// Exact structured unitary: left root-of-unity diagonal x permutation x
// block-diagonal Fourier. Every entry stays in a cyclotomic field, so all
// vanishing decisions downstream remain exact.
SampledUnitary sample_structured_unitary(int n, SeededRng& rng);

}  // namespace qgt
