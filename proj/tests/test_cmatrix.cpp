#include <doctest.h>

#include "cmatrix.hpp"
#include "partition.hpp"
#include "unitary_family.hpp"

using namespace qgt;

TEST_CASE("fourier matrices") {
  UnitaryMatrix f1 = fourier_matrix(1);
  CHECK(f1.size() == 1);
  CHECK(f1.at(0, 0) == Cyclo(1L));

  UnitaryMatrix f2 = fourier_matrix(2);
  Cyclo inv_sqrt2 = Cyclo::sqrt_int(2).inverse();
  CHECK(f2.at(0, 0) == inv_sqrt2);
  CHECK(f2.at(1, 1) == -inv_sqrt2);

  // unitarity is exact by construction; check an explicit product too
  UnitaryMatrix f3 = fourier_matrix(3);
  CHECK((f3.m * f3.m.adjoint()).is_identity());
  // row 0 and column 0 are constant (0-based convention)
  for (int j = 0; j < 3; ++j) CHECK(f3.at(0, j) == f3.at(0, 0));
}

TEST_CASE("block diagonal and permutation unitaries") {
  UnitaryMatrix b = block_diag_unitary({fourier_matrix(2), fourier_matrix(3)});
  CHECK(b.size() == 5);
  CHECK(b.at(0, 2).is_zero());
  CHECK(b.at(3, 4) == fourier_matrix(3).at(1, 2));
  CHECK_THROWS_AS(block_diag_unitary({}), input_error);

  UnitaryMatrix p = permutation_unitary({1, 2, 0});
  CHECK(p.at(1, 0) == Cyclo(1L));
  CHECK((p.m * p.m * p.m).is_identity());
  CHECK_THROWS_AS(permutation_unitary({0, 0, 1}), input_error);

  // non-unitary literal rejected
  CHECK_THROWS_AS(UnitaryMatrix(CycloMatrix(2, 2)), input_error);
}

TEST_CASE("matrix spec parsing") {
  UnitaryMatrix a = parse_matrix_spec("fourier:2,2");
  CHECK(a.size() == 4);
  UnitaryMatrix b = parse_matrix_spec("id:3");
  CHECK(b.m.is_identity());
  UnitaryMatrix c = parse_matrix_spec("perm:[2,1]");
  CHECK(c.at(1, 0) == Cyclo(1L));
  UnitaryMatrix d = parse_matrix_spec("1/sqrt(2),1/sqrt(2);1/sqrt(2),-1/sqrt(2)");
  CHECK(d.m == fourier_matrix(2).m);
  UnitaryMatrix e = parse_matrix_spec("perm:[2,1]*fourier:2");
  CHECK(e.at(0, 0) == fourier_matrix(2).at(1, 0));
  CHECK_THROWS_AS(parse_matrix_spec("fourier:0"), input_error);
  CHECK_THROWS_AS(parse_matrix_spec("1,0;0,2"), input_error);  // not unitary
}

TEST_CASE("t_pi matrices") {
  UnitaryMatrix id3(CycloMatrix::identity(3));
  CycloMatrix t = t_pi_matrix(ColoredPartition::identity(1), 3);
  CHECK(t.is_identity());

  CycloMatrix cup = t_pi_matrix(ColoredPartition::cup(), 2);
  CHECK(cup.rows == 4);
  CHECK(cup.cols == 1);
  CHECK(cup.at(0, 0) == Cyclo(1L));
  CHECK(cup.at(1, 0).is_zero());
  CHECK(cup.at(2, 0).is_zero());
  CHECK(cup.at(3, 0) == Cyclo(1L));

  CycloMatrix h4 = t_pi_matrix(ColoredPartition::one_block(2, 2), 2);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(h4.at(r, c) == ((r == c && (r == 0 || r == 3)) ? Cyclo(1L) : Cyclo(0L)));

  CHECK_THROWS_AS(t_pi_matrix(ColoredPartition::one_block(4, 4), 10), resource_error);
}

TEST_CASE("conjugate_intertwiner") {
  UnitaryMatrix f2 = fourier_matrix(2);
  // identity intertwiner is fixed by any unitary
  CycloMatrix id = CycloMatrix::identity(2);
  CHECK(conjugate_intertwiner(id, 1, 1, f2) == id);
  // Q = identity leaves T unchanged
  UnitaryMatrix id2(CycloMatrix::identity(2));
  CycloMatrix cup = t_pi_matrix(ColoredPartition::cup(), 2);
  CHECK(conjugate_intertwiner(cup, 0, 2, id2) == cup);
  // dense-multiply oracle: (Q* tensor Q*) cup
  CycloMatrix oracle = f2.m.adjoint().kron(f2.m.adjoint()) * cup;
  CHECK(conjugate_intertwiner(cup, 0, 2, f2) == oracle);
  CHECK_THROWS_AS(conjugate_intertwiner(cup, 2, 0, f2), input_error);
}

TEST_CASE("tensor products and partition functor") {
  // T_{p tensor q} = T_p tensor T_q on sampled diagrams, N <= 3
  SeededRng rng(101);
  std::vector<ColoredPartition> pool = {
      ColoredPartition::cup(),           ColoredPartition::cap(),
      ColoredPartition::identity(1),     ColoredPartition::singleton_lower(),
      ColoredPartition::fork(),          ColoredPartition::one_block(2, 2),
      ColoredPartition::crossing(),      ColoredPartition::identity(2),
  };
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto& p = pool[rng.below(pool.size())];
      const auto& q = pool[rng.below(pool.size())];
      CHECK(t_pi_matrix(tensor(p, q), n) == t_pi_matrix(p, n).kron(t_pi_matrix(q, n)));
    }
  }
}

TEST_CASE("composition carries the loop factor") {
  // T_p T_q = N^loops T_{p o q} for composable samples, N <= 3
  SeededRng rng(102);
  std::vector<ColoredPartition> pool = {
      ColoredPartition::cup(),       ColoredPartition::cap(),
      ColoredPartition::identity(1), ColoredPartition::identity(2),
      ColoredPartition::fork(),      ColoredPartition::one_block(2, 2),
      ColoredPartition::crossing(),  ColoredPartition::singleton_lower(),
      tensor(ColoredPartition::cup(), ColoredPartition::cup()),
      tensor(ColoredPartition::identity(1), ColoredPartition::cap()),
  };
  int checked = 0;
  for (int n = 2; n <= 3 && checked < 120; ++n) {
    for (size_t a = 0; a < pool.size(); ++a)
      for (size_t b = 0; b < pool.size(); ++b) {
        const auto& p = pool[a];
        const auto& q = pool[b];
        if (p.upper_count() != q.lower_count()) continue;
        auto [piq, loops] = compose(p, q);
        CycloMatrix lhs = t_pi_matrix(p, n) * t_pi_matrix(q, n);
        Cyclo factor(1L);
        for (int i = 0; i < loops; ++i) factor *= Cyclo(static_cast<long>(n));
        CHECK(lhs == t_pi_matrix(piq, n).scaled(factor));
        ++checked;
      }
  }
  CHECK(checked >= 50);
}

TEST_CASE("involution is the adjoint on realizations") {
  for (const auto& p : {ColoredPartition::cup(), ColoredPartition::fork(),
                        ColoredPartition::one_block(2, 2), ColoredPartition::crossing()}) {
    for (int n = 2; n <= 3; ++n)
      CHECK(t_pi_matrix(involute(p), n) == t_pi_matrix(p, n).adjoint());
  }
}
