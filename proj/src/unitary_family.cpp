#include "unitary_family.hpp"

#include <numeric>

namespace qgt {

std::vector<std::vector<int>> compositions_of(int n) {
  // binary choice between "extend last part" and "start new part"
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<int> comp{1};
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1ul << i))
        comp.push_back(1);
      else
        ++comp.back();
    }
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t SeededRng::next() {
  // splitmix64: deterministic across platforms
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t SeededRng::below(uint64_t n) {
  if (n == 0) throw input_error("below(0)");
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

UnitaryMatrix fourier_blocks(const std::vector<int>& comp) {
  std::vector<UnitaryMatrix> blocks;
  for (int b : comp) blocks.push_back(fourier_matrix(b));
  return block_diag_unitary(blocks);
}

std::string composition_spec(const std::vector<int>& comp) {
  std::string s = "fourier:";
  for (size_t i = 0; i < comp.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(comp[i]);
  }
  return s;
}

SampledUnitary sample_structured_unitary(int n, SeededRng& rng) {
  // composition
  auto comps = compositions_of(n);
  const auto& comp = comps[rng.below(comps.size())];
  // permutation (Fisher-Yates, seeded)
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(sigma[static_cast<size_t>(i)], sigma[rng.below(static_cast<uint64_t>(i + 1))]);
  // left diagonal of roots of unity with small order
  std::vector<Cyclo> phases;
  std::string diag_desc;
  for (int i = 0; i < n; ++i) {
    long ord = static_cast<long>(rng.below(4)) + 1;  // 1,2,3,4
    long k = ord == 1 ? 0 : static_cast<long>(rng.below(static_cast<uint64_t>(ord)));
    phases.push_back(Cyclo::root_of_unity(static_cast<unsigned long>(ord), k));
    if (!diag_desc.empty()) diag_desc += ",";
    diag_desc += "z(" + std::to_string(ord) + "," + std::to_string(k) + ")";
  }
  UnitaryMatrix q =
      diagonal_unitary(phases) * permutation_unitary(sigma) * fourier_blocks(comp);
  std::string perm_desc = "perm:[";
  for (int i = 0; i < n; ++i) {
    if (i) perm_desc += ",";
    perm_desc += std::to_string(sigma[static_cast<size_t>(i)] + 1);
  }
  perm_desc += "]";
  return {q, "diag:" + diag_desc + "*" + perm_desc + "*" + composition_spec(comp)};
}

}  // namespace qgt
