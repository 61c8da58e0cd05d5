#include "smith.hpp"

#include <algorithm>

namespace qgt {

std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  size_t top = 0;
  while (top < rows && top < cols) {
    // locate a nonzero entry of minimal absolute value in the submatrix
    size_t pi = top, pj = top;
    bool found = false;
    Int best;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[top], m[pi]);
    for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][pj]);

    // clear row and column by division; restart if a remainder shrinks the pivot
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = top + 1; i < rows; ++i) {
        if (m[i][top] == 0) continue;
        Int q = m[i][top] / m[top][top];
        for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) {
          std::swap(m[top], m[i]);
          clean = false;
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        if (m[top][j] == 0) continue;
        Int q = m[top][j] / m[top][top];
        for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) {
          for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix
      for (size_t i = top + 1; i < rows && clean; ++i)
        for (size_t j = top + 1; j < cols && clean; ++j) {
          if (m[i][j] % m[top][top] != 0) {
            for (size_t jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
            clean = false;
          }
        }
    }
    diag.push_back(abs(m[top][top]));
    ++top;
  }
  // enforce divisibility chain (defensive; the pivoting above maintains it)
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        Int g = gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<Int> abelianization(const Presentation& p) {
  auto rows = relator_exponent_matrix(p);
  std::vector<std::vector<Int>> m;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (long v : r) row.push_back(Int(v));
    m.push_back(std::move(row));
  }
  if (m.empty()) m.push_back(std::vector<Int>(static_cast<size_t>(p.ngens), Int(0)));
  auto diag = smith_invariant_factors(std::move(m));
  std::vector<Int> out;
  size_t rank_used = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank_used;
    if (d != 1) out.push_back(d);
  }
  for (int i = 0; i < p.ngens - static_cast<int>(rank_used); ++i) out.push_back(Int(0));
  return out;
}

}  // namespace qgt
