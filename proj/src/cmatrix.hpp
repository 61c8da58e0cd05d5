#pragma once

#include <string>
#include <vector>

#include "cyclo.hpp"

namespace qgt {

struct ColoredPartition;

// Dense matrix over a cyclotomic field.
struct CycloMatrix {
  int rows = 0, cols = 0;
  std::vector<Cyclo> a;  // row-major

  CycloMatrix() = default;
  CycloMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
    if (r <= 0 || c <= 0) throw input_error("matrix dimensions must be positive");
  }

  Cyclo& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Cyclo& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static CycloMatrix identity(int n);
  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix operator+(const CycloMatrix& o) const;
  CycloMatrix scaled(const Cyclo& s) const;
  CycloMatrix adjoint() const;    // conjugate transpose
  CycloMatrix transpose() const;
  CycloMatrix kron(const CycloMatrix& o) const;
  CycloMatrix kron_power(int p) const;
  bool operator==(const CycloMatrix& o) const;
  bool is_identity() const;

  std::string to_string() const;  // rows ';', entries ','
};

// Exactly unitary matrix; unitarity Q Q* = 1 is checked at construction.
struct UnitaryMatrix {
  CycloMatrix m;

  explicit UnitaryMatrix(CycloMatrix mat);
  int size() const { return m.rows; }
  const Cyclo& at(int i, int j) const { return m.at(i, j); }
  UnitaryMatrix adjoint() const { return UnitaryMatrix(m.adjoint()); }
  UnitaryMatrix operator*(const UnitaryMatrix& o) const { return UnitaryMatrix(m * o.m); }
};

// F_N = (1/sqrt(N)) (zeta_N^{ij}) with 0-based indices, so row 0 and
// column 0 are constant. Row sums then vanish except in row 0, which the
// torus computations for S_N^+ rely on.
UnitaryMatrix fourier_matrix(int n);
UnitaryMatrix block_diag_unitary(const std::vector<UnitaryMatrix>& blocks);
// sigma maps position i to sigma[i] (0-based): entries P_{sigma[i], i} = 1.
UnitaryMatrix permutation_unitary(const std::vector<int>& sigma);
UnitaryMatrix diagonal_unitary(const std::vector<Cyclo>& phases);

// Matrix spec grammar: builders "fourier:N1,N2,...", "id:N", "perm:[2,1,3]",
// or a literal "e,e;e,e" with entries in the scalar grammar. Builders may be
// chained with '*' (left to right product).
UnitaryMatrix parse_matrix_spec(const std::string& spec);

// T_pi realization on (C^N)^{tensor k} -> (C^N)^{tensor l}: the 0/1 matrix
// with entry (j, i) = [every block of pi is constant on the indices].
// Index tuples are mixed-radix with the leftmost factor most significant.
CycloMatrix t_pi_matrix(const ColoredPartition& p, int n, size_t entry_cap = 10000000);

// T^Q = (Q*)^{tensor l} T Q^{tensor k}.
CycloMatrix conjugate_intertwiner(const CycloMatrix& t, int k, int l, const UnitaryMatrix& q);

}  // namespace qgt
