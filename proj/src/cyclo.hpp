#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qgt {

using Rat = mpq_class;
using Int = mpz_class;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact element of a cyclotomic field Q(zeta_n).
//
// Representation: conductor n (never 2 mod 4, since Q(zeta_2m) = Q(zeta_m)
// for odd m) and the coefficient vector of length phi(n) in the power basis
// 1, z, ..., z^{phi(n)-1}, reduced modulo the n-th cyclotomic polynomial.
// The power basis makes equality decidable coefficientwise: is_zero holds
// iff every coefficient vanishes, with no tolerance anywhere.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rat(0)) {}
  Cyclo(const Rat& r) : n_(1), c_(1, r) { canon_(); }
  Cyclo(long v) : n_(1), c_(1, Rat(v)) {}
  Cyclo(long num, long den);

  // zeta_n^k
  static Cyclo root_of_unity(unsigned long n, long k);
  // The positive square root of N, as an element of Q(zeta_{4N}).
  // Built from Gauss sums; the construction self-checks s*s == N.
  static Cyclo sqrt_int(unsigned long N);

  unsigned long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Valid only when is_rational().
  Rat rational_value() const;

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // Complex conjugation, z -> z^{-1}. A ring automorphism.
  Cyclo conj() const;
  // Multiplicative inverse; throws input_error on zero.
  Cyclo inverse() const;

  // Galois action z -> z^a for gcd(a, n) = 1.
  Cyclo galois(unsigned long a) const;

  // Re-express in Q(zeta_m); requires conductor() | m.
  Cyclo promoted(unsigned long m) const;

  // Floating-point shadow. For reports and diagnostics only; no decision
  // in the library depends on it.
  std::complex<double> to_complex() const;

  // Round-trippable literal in the scalar grammar (rationals, z(n,k),
  // sqrt(N), + - * / and parentheses).
  std::string to_string() const;
  static Cyclo parse(const std::string& text);

 private:
  unsigned long n_;
  std::vector<Rat> c_;

  void canon_();
  static Cyclo from_poly_(unsigned long n, std::vector<Rat> poly);

  friend struct CycloOps;
};

unsigned long euler_phi(unsigned long n);
unsigned long lcm_ul(unsigned long a, unsigned long b);

// Coefficients of the n-th cyclotomic polynomial (monic, degree phi(n)).
const std::vector<Int>& cyclotomic_polynomial(unsigned long n);

}  // namespace qgt
