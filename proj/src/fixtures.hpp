#pragma once

#include <string>
#include <vector>

#include "extractor.hpp"

namespace qgt {

struct FixtureResult {
  std::string name;
  std::string status;  // PASS | FAIL | FLAGGED
  std::string detail;
};

struct FixtureReport {
  std::vector<FixtureResult> results;
  size_t failed = 0;
  size_t flagged = 0;
};

// The worked-example suite: the Gamma_1 table for o+/u+/s+/h+, the
// block-Fourier tori of s+, the infinite-dihedral character images, the
// Z2 * Z3 subgroup of s5+ and the group-dual identification rule. Known
// discrepancies are reported FLAGGED with both values printed, not failed.
FixtureReport run_paper_fixtures();

std::string fixtures_to_text(const FixtureReport& r);
std::string fixtures_to_json(const FixtureReport& r);

}  // namespace qgt
