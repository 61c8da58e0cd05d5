#include "cmatrix.hpp"

#include <sstream>

#include "partition.hpp"

namespace qgt {

CycloMatrix CycloMatrix::identity(int n) {
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo(1L);
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols != o.rows) throw input_error("matrix product dimension mismatch");
  CycloMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Cyclo& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw input_error("matrix sum dimension mismatch");
  CycloMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

CycloMatrix CycloMatrix::scaled(const Cyclo& s) const {
  CycloMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
  return r;
}

CycloMatrix CycloMatrix::adjoint() const {
  CycloMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& o) const {
  CycloMatrix r(rows * o.rows, cols * o.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int p = 0; p < o.rows; ++p)
        for (int q = 0; q < o.cols; ++q) {
          if (o.at(p, q).is_zero()) continue;
          r.at(i * o.rows + p, j * o.cols + q) = at(i, j) * o.at(p, q);
        }
    }
  return r;
}

CycloMatrix CycloMatrix::kron_power(int p) const {
  if (p < 0) throw input_error("negative tensor power");
  CycloMatrix r = CycloMatrix::identity(1);
  for (int i = 0; i < p; ++i) r = r.kron(*this);
  return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

bool CycloMatrix::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i == j ? at(i, j) != Cyclo(1L) : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::string CycloMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
  }
  return os.str();
}

UnitaryMatrix::UnitaryMatrix(CycloMatrix mat) : m(std::move(mat)) {
  if (m.rows != m.cols) throw input_error("unitary matrix must be square");
  if (!(m * m.adjoint()).is_identity()) throw input_error("matrix is not exactly unitary");
}

UnitaryMatrix fourier_matrix(int n) {
  if (n < 1) throw input_error("fourier matrix needs N >= 1");
  Cyclo norm = Cyclo::sqrt_int(static_cast<unsigned long>(n)).inverse();
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Cyclo::root_of_unity(static_cast<unsigned long>(n),
                                        static_cast<long>(i) * j) * norm;
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix block_diag_unitary(const std::vector<UnitaryMatrix>& blocks) {
  if (blocks.empty()) throw input_error("block_diag needs at least one block");
  int n = 0;
  for (const auto& b : blocks) n += b.size();
  CycloMatrix m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.size();
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix permutation_unitary(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) throw input_error("invalid permutation");
    seen[v] = true;
  }
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(sigma[i], i) = Cyclo(1L);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix diagonal_unitary(const std::vector<Cyclo>& phases) {
  int n = static_cast<int>(phases.size());
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = phases[i];
  return UnitaryMatrix(std::move(m));
}

namespace {

UnitaryMatrix parse_one_builder(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon), body = spec.substr(colon + 1);
    if (head == "id") {
      int n = std::stoi(body);
      if (n < 1) throw input_error("id:N needs N >= 1");
      return UnitaryMatrix(CycloMatrix::identity(n));
    }
    if (head == "fourier") {
      std::vector<UnitaryMatrix> blocks;
      std::istringstream is(body);
      std::string tok;
      while (std::getline(is, tok, ',')) blocks.push_back(fourier_matrix(std::stoi(tok)));
      return block_diag_unitary(blocks);
    }
    if (head == "perm") {
      if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw input_error("perm builder expects perm:[...]");
      std::vector<int> sigma;
      std::istringstream is(body.substr(1, body.size() - 2));
      std::string tok;
      while (std::getline(is, tok, ',')) sigma.push_back(std::stoi(tok) - 1);  // 1-based input
      return permutation_unitary(sigma);
    }
    if (head == "diag") {
      std::vector<Cyclo> phases;
      std::istringstream is(body);
      std::string tok;
      while (std::getline(is, tok, ',')) phases.push_back(Cyclo::parse(tok));
      return diagonal_unitary(phases);
    }
    throw input_error("unknown matrix builder: " + head);
  }
  // literal: rows ';', entries ','
  std::vector<std::vector<Cyclo>> rows;
  std::istringstream is(spec);
  std::string rowtext;
  while (std::getline(is, rowtext, ';')) {
    std::vector<Cyclo> row;
    std::istringstream ris(rowtext);
    std::string tok;
    while (std::getline(ris, tok, ',')) row.push_back(Cyclo::parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw input_error("empty matrix literal");
  CycloMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw input_error("ragged matrix literal");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return UnitaryMatrix(std::move(m));
}

}  // namespace

UnitaryMatrix parse_matrix_spec(const std::string& spec) {
  // split on '*' outside brackets/parens
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : spec) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == '*' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  UnitaryMatrix q = parse_one_builder(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) q = q * parse_one_builder(parts[i]);
  return q;
}

CycloMatrix t_pi_matrix(const ColoredPartition& p, int n, size_t entry_cap) {
  if (n < 1) throw input_error("t_pi_matrix needs N >= 1");
  size_t rows = 1, cols = 1;
  for (int i = 0; i < p.lower_count(); ++i) rows *= static_cast<size_t>(n);
  for (int i = 0; i < p.upper_count(); ++i) cols *= static_cast<size_t>(n);
  if (rows * cols > entry_cap) throw resource_error("t_pi_matrix exceeds entry cap");
  CycloMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<int> idx(p.upper_count()), jdx(p.lower_count());
  for (size_t col = 0; col < cols; ++col) {
    size_t c = col;
    for (int t = p.upper_count() - 1; t >= 0; --t) {
      idx[t] = static_cast<int>(c % n) + 1;
      c /= n;
    }
    for (size_t row = 0; row < rows; ++row) {
      size_t r = row;
      for (int t = p.lower_count() - 1; t >= 0; --t) {
        jdx[t] = static_cast<int>(r % n) + 1;
        r /= n;
      }
      if (delta_plain(p, idx, jdx)) m.at(static_cast<int>(row), static_cast<int>(col)) = Cyclo(1L);
    }
  }
  return m;
}

CycloMatrix conjugate_intertwiner(const CycloMatrix& t, int k, int l, const UnitaryMatrix& q) {
  size_t rows = 1, cols = 1;
  for (int i = 0; i < l; ++i) rows *= static_cast<size_t>(q.size());
  for (int i = 0; i < k; ++i) cols *= static_cast<size_t>(q.size());
  if (t.rows != static_cast<int>(rows) || t.cols != static_cast<int>(cols))
    throw input_error("intertwiner dimensions do not match N^l x N^k");
  CycloMatrix qa = q.m.adjoint().kron_power(l);
  CycloMatrix qk = q.m.kron_power(k);
  return qa * t * qk;
}

}  // namespace qgt
