#include <doctest.h>

#include "cyclo.hpp"
#include "unitary_family.hpp"

using namespace qgt;

namespace {
Cyclo z(unsigned long n, long k) { return Cyclo::root_of_unity(n, k); }

// random small cyclotomic with rational coefficients
Cyclo sample(SeededRng& rng) {
  static const unsigned long conductors[] = {1, 3, 4, 5, 8, 12};
  Cyclo x(0L);
  unsigned long n = conductors[rng.below(6)];
  for (int t = 0; t < 3; ++t) {
    long num = static_cast<long>(rng.below(7)) - 3;
    long den = static_cast<long>(rng.below(3)) + 1;
    x += Cyclo(num, den) * z(n, static_cast<long>(rng.below(n)));
  }
  return x;
}
}  // namespace

TEST_CASE("roots of unity collapse") {
  CHECK((z(4, 1) + z(4, 3)).is_zero());
  CHECK((Cyclo(1L) + z(3, 1) + z(3, 2)).is_zero());
  CHECK(z(8, 1).conj() * z(8, 1) == Cyclo(1L));
  Cyclo s5(0L);
  for (long k = 0; k <= 4; ++k) s5 += z(5, k);
  CHECK(s5.is_zero());
  CHECK(!(z(8, 1) + z(8, 7)).is_zero());
  Cyclo r = z(8, 1) + z(8, 7);
  CHECK((r * r - Cyclo(2L)).is_zero());
}

TEST_CASE("conductor normalization avoids 2 mod 4") {
  CHECK(z(6, 1).conductor() == 3);
  CHECK(z(6, 1) == -z(3, 2));
  CHECK(z(2, 1) == Cyclo(-1L));
  CHECK(z(10, 1).conductor() == 5);
  // order is still 6
  Cyclo p = z(6, 1);
  Cyclo acc(1L);
  for (int i = 0; i < 6; ++i) acc *= p;
  CHECK(acc == Cyclo(1L));
}

TEST_CASE("sqrt_int squares back exactly") {
  CHECK(Cyclo::sqrt_int(1) == Cyclo(1L));
  CHECK(Cyclo::sqrt_int(2) == z(8, 1) + z(8, -1));
  for (unsigned long n : {2ul, 3ul, 5ul, 6ul, 8ul, 12ul, 45ul}) {
    Cyclo s = Cyclo::sqrt_int(n);
    CHECK(s * s == Cyclo(static_cast<long>(n)));
    CHECK(s.to_complex().real() > 0);
  }
}

TEST_CASE("field axioms on random samples") {
  SeededRng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Cyclo a = sample(rng), b = sample(rng), c = sample(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    // x conj(x) is self-conjugate (real)
    Cyclo m = a * a.conj();
    CHECK(m == m.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1L));
  }
}

TEST_CASE("promotion is injective and arithmetic-preserving") {
  SeededRng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Cyclo a = sample(rng), b = sample(rng);
    unsigned long m = lcm_ul(lcm_ul(a.conductor(), b.conductor()), 24);
    CHECK(a.promoted(m) == a);
    CHECK(a.promoted(m) + b.promoted(m) == a + b);
    CHECK(a.promoted(m) * b.promoted(m) == a * b);
    if (a.promoted(m).is_zero()) CHECK(a.is_zero());
  }
}

TEST_CASE("scalar literal round trip") {
  SeededRng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Cyclo a = sample(rng);
    CHECK(Cyclo::parse(a.to_string()) == a);
  }
  CHECK(Cyclo::parse("1/2 + z(4,1)") == Cyclo(1, 2) + z(4, 1));
  CHECK(Cyclo::parse("sqrt(2)*sqrt(2)") == Cyclo(2L));
  CHECK(Cyclo::parse("(1+z(3,1))*(1+z(3,2))") == Cyclo(1L));
  CHECK(Cyclo::parse("1/sqrt(4)") == Cyclo(1, 2));
  CHECK_THROWS_AS(Cyclo::parse("z(0,1)"), input_error);
  CHECK_THROWS_AS(Cyclo::parse("1 +"), input_error);
}

TEST_CASE("galois conjugation permutes roots") {
  Cyclo a = z(5, 1);
  CHECK(a.galois(2) == z(5, 2));
  CHECK(a.galois(2).galois(3) == z(5, 1));
  CHECK_THROWS_AS(z(3, 1).galois(0), input_error);
}

TEST_CASE("shadow evaluation is close") {
  auto c = (Cyclo(1, 3) * z(12, 5) + Cyclo(2L)).to_complex();
  double re = 2.0 + std::cos(2 * M_PI * 5 / 12) / 3.0;
  double im = std::sin(2 * M_PI * 5 / 12) / 3.0;
  CHECK(std::abs(c.real() - re) < 1e-12);
  CHECK(std::abs(c.imag() - im) < 1e-12);
}
