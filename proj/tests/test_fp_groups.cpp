#include <doctest.h>

#include "classify.hpp"
#include "unitary_family.hpp"

using namespace qgt;

namespace {

Word w(std::vector<int> ls) { return Word(std::move(ls)); }

Presentation random_presentation(SeededRng& rng) {
  int n = 2 + static_cast<int>(rng.below(3));
  int nrel = static_cast<int>(rng.below(4));
  std::vector<Word> rels;
  for (int r = 0; r < nrel; ++r) {
    std::vector<int> letters;
    int len = 1 + static_cast<int>(rng.below(5));
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      letters.push_back(rng.below(2) ? g : -g);
    }
    rels.push_back(Word(std::move(letters)));
  }
  return Presentation(n, std::move(rels));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(w({1, -1})).empty());
  CHECK(free_reduce(w({1, 2, -2, 1})) == w({1, 1}));
  CHECK(free_reduce(w({1, 2, 3})) == w({1, 2, 3}));
  // idempotent
  SeededRng rng(17);
  for (int t = 0; t < 40; ++t) {
    std::vector<int> ls;
    for (int i = 0; i < 8; ++i) {
      int g = 1 + static_cast<int>(rng.below(3));
      ls.push_back(rng.below(2) ? g : -g);
    }
    Word r = free_reduce(w(ls));
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("cyclic reduction and canonical relators") {
  CHECK(cyclic_reduce(w({-2, 1, 1, 2})) == w({1, 1}));
  CHECK(canonical_relator(w({2, 1})) == canonical_relator(w({1, 2})));
  CHECK(canonical_relator(w({-1, -2})) == canonical_relator(w({1, 2})));
  CHECK(canonical_relator(w({1, 1, 1})) == w({1, 1, 1}));
  CHECK(canonical_relator(w({-1, -1})) == w({1, 1}));
}

TEST_CASE("word parsing and printing") {
  CHECK(Word::parse("g1 g2^-1 g3") == w({1, -2, 3}));
  CHECK(Word::parse("g1*g2^-1") == w({1, -2}));
  CHECK(Word::parse("g2^3") == w({2, 2, 2}));
  CHECK(w({1, -2}).to_string() == "g1 g2^-1");
  CHECK(Word().to_string() == "1");
  CHECK_THROWS_AS(Word::parse("x1"), input_error);
}

TEST_CASE("presentation parsing and export") {
  Presentation p = Presentation::parse("<a,b|a^2,b^3>");
  CHECK(p.ngens == 2);
  CHECK(p.relators.size() == 2);
  Presentation q = Presentation::parse("⟨a,b|a^2 b^-1⟩");
  CHECK(q.relators.size() == 1);
  CHECK(q.relators[0].size() == 3);
  std::string gap = p.to_gap();
  CHECK(gap.find("F := FreeGroup(2);;") != std::string::npos);
  CHECK(gap.find("G := F / [") != std::string::npos);
  CHECK_THROWS_AS(Presentation::parse("a,b|a^2"), input_error);
  CHECK_THROWS_AS(Presentation::parse("<a,b|c^2>"), input_error);
}

TEST_CASE("simplification eliminates forced generators") {
  // <g1..g4 | g1, g3, g2^2, g4^2> -> <a,b | a^2, b^2>
  Presentation p(4, {w({1}), w({3}), w({2, 2}), w({4, 4})});
  SimplifyResult s = simplify_presentation(p);
  CHECK(s.pres.ngens == 2);
  REQUIRE(s.pres.relators.size() == 2);
  CHECK(s.pres.relators[0] == w({1, 1}));
  CHECK(s.pres.relators[1] == w({2, 2}));
  CHECK(s.gen_images[0].empty());  // g1 -> 1
  CHECK(s.gen_images[2].empty());  // g3 -> 1
  CHECK(s.gen_images[1] == w({1}));
  CHECK(s.gen_images[3] == w({2}));

  // <g1,g2 | g1 g2> -> Z
  SimplifyResult z = simplify_presentation(Presentation(2, {w({1, 2})}));
  CHECK(z.pres.ngens == 1);
  CHECK(z.pres.relators.empty());

  // no short relators: unchanged
  Presentation stay(2, {w({1, 2, 1, 2, 1, 2})});
  SimplifyResult st = simplify_presentation(stay);
  CHECK(st.pres.ngens == 2);
  CHECK(st.pres.relators.size() == 1);
  CHECK(st.pres.relators[0].size() == 6);
}

TEST_CASE("simplification uses substitutions and gcd") {
  // Z_4 presented through a fourier-style relation family
  Presentation p(4, {w({1}), w({2, 4}), w({3, 3}), w({2, 2, 3}), w({4, 4, 3})});
  SimplifyResult s = simplify_presentation(p);
  CHECK(s.pres.ngens == 1);
  REQUIRE(s.pres.relators.size() == 1);
  CHECK(s.pres.relators[0].size() == 4);
  // powers collapse by gcd
  SimplifyResult g = simplify_presentation(Presentation(1, {w({1, 1, 1, 1}), w({1, 1})}));
  REQUIRE(g.pres.relators.size() == 1);
  CHECK(g.pres.relators[0] == w({1, 1}));
  // consequences of short relators are rewritten away
  SimplifyResult r =
      simplify_presentation(Presentation(2, {w({1, 1}), w({2, 2}), w({1, 1, 2, 2}), w({2, 1, 1, 2})}));
  CHECK(r.pres.relators.size() == 2);
}

TEST_CASE("simplification preserves abelianization") {
  SeededRng rng(23);
  for (int t = 0; t < 50; ++t) {
    Presentation p = random_presentation(rng);
    auto before = abelianization(p);
    auto after = abelianization(simplify_presentation(p).pres);
    CHECK(before == after);
  }
}

TEST_CASE("abelianization by Smith normal form") {
  CHECK(abelianization(Presentation(2, {w({1, 1}), w({2, 2})})) == std::vector<Int>{2, 2});
  CHECK(abelianization(Presentation(3, {})) == std::vector<Int>{0, 0, 0});
  CHECK(abelianization(Presentation(2, {w({1, 1}), w({2, 2, 2})})) == std::vector<Int>{6});
  // oracle: SNF of diag(2,3) has invariants 1, 6
  CHECK(smith_invariant_factors({{Int(2), Int(0)}, {Int(0), Int(3)}}) ==
        std::vector<Int>{1, 6});
  CHECK(smith_invariant_factors({{Int(2), Int(4)}, {Int(4), Int(8)}}) ==
        std::vector<Int>{2});
  CHECK(abelianization(Presentation(2, {w({1, 2, -1, -2})})) == std::vector<Int>{0, 0});
}

TEST_CASE("todd-coxeter enumerates small groups") {
  auto r5 = todd_coxeter(Presentation(1, {w({1, 1, 1, 1, 1})}), 1000);
  CHECK(r5.finite);
  CHECK(r5.order == 5);

  // <g,h | g^2, h^2, (gh)^3> is S_3
  auto s3 = todd_coxeter(Presentation(2, {w({1, 1}), w({2, 2}), w({1, 2, 1, 2, 1, 2})}), 1000);
  CHECK(s3.finite);
  CHECK(s3.order == 6);

  // D_infinity does not close
  auto dinf = todd_coxeter(Presentation(2, {w({1, 1}), w({2, 2})}), 10000);
  CHECK(!dinf.finite);

  // quaternion-style check: <a,b | a^4, a^2 b^-2, b^-1 a b a>
  auto q8 = todd_coxeter(
      Presentation(2, {w({1, 1, 1, 1}), w({1, 1, -2, -2}), w({-2, 1, 2, 1})}), 1000);
  CHECK(q8.finite);
  CHECK(q8.order == 8);

  for (int n = 1; n <= 12; ++n) {
    auto r = todd_coxeter(Presentation(1, {Word(std::vector<int>(static_cast<size_t>(n), 1))}), 2000);
    CHECK(r.finite);
    CHECK(r.order == static_cast<size_t>(n));
  }

  // trivial-subgroup table doubles as a normal-form oracle
  REQUIRE(s3.table.has_value());
  const CosetTable& t = *s3.table;
  CHECK(t.trace(w({1, 2, 1, 2, 1, 2})) == 0);
  CHECK(t.trace(w({1, 1})) == 0);
  CHECK(t.trace(w({1})) != t.trace(w({2})));
}

TEST_CASE("recognition of the paper's target classes") {
  auto c1 = recognize(Presentation(2, {w({1, 1}), w({2, 2})}));
  CHECK(c1.kind == Classification::Kind::FreeProductCyclic);
  CHECK(c1.orders == std::vector<long>{2, 2});

  auto c2 = recognize(Presentation(3, {}));
  CHECK(c2.kind == Classification::Kind::Free);
  CHECK(c2.rank == 3);

  auto c3 = recognize(Presentation(1, {w({1, 1, 1, 1})}));
  CHECK(c3.kind == Classification::Kind::FiniteCyclic);
  CHECK(c3.orders == std::vector<long>{4});

  auto c4 = recognize(Presentation(0, {}));
  CHECK(c4.kind == Classification::Kind::Trivial);

  // abelian via commutators: Z^2
  auto c5 = recognize(Presentation(2, {w({1, 2, -1, -2})}));
  CHECK(c5.kind == Classification::Kind::FreeAbelian);
  CHECK(c5.rank == 2);

  // Z_2 x Z_2 via coset enumeration
  auto c6 = recognize(Presentation(2, {w({1, 1}), w({2, 2}), w({1, 2, 1, 2})}));
  CHECK(c6.kind == Classification::Kind::FiniteOrder);
  CHECK(c6.finite_order == 4);
  CHECK(c6.admits_normal_forms());

  // mixed Z_2 * Z
  auto c7 = recognize(Presentation(2, {w({1, 1})}));
  CHECK(c7.kind == Classification::Kind::FreeProductCyclic);
  CHECK(c7.orders == std::vector<long>{2, 0});

  // re-running on the simplified presentation gives the same verdict
  for (auto p : {Presentation(4, {w({1}), w({3}), w({2, 2}), w({4, 4})}),
                 Presentation(2, {w({1, 2})}), Presentation(2, {w({1, 1}), w({2, 2})})}) {
    auto first = recognize(p);
    auto again = recognize(simplify_presentation(p).pres);
    CHECK(first.to_string() == again.to_string());
  }
}

TEST_CASE("verdict rule table") {
  auto v1 = classification_verdicts(recognize(Presentation(2, {w({1, 1}), w({2, 2, 2})})));
  CHECK(v1.growth == "exponential");
  CHECK(v1.amenability == "non_amenable");

  auto v2 = classification_verdicts(recognize(Presentation(2, {w({1, 1}), w({2, 2})})));
  CHECK(v2.growth == "polynomial");
  CHECK(v2.amenability == "amenable");

  auto v3 = classification_verdicts(recognize(Presentation(0, {})));
  CHECK(v3.growth == "finite");
  CHECK(v3.amenability == "amenable");

  auto v4 = classification_verdicts(recognize(Presentation(2, {})));
  CHECK(v4.growth == "exponential");
  CHECK(v4.amenability == "non_amenable");

  auto v5 = classification_verdicts(recognize(Presentation(1, {})));
  CHECK(v5.growth == "polynomial");
  CHECK(v5.amenability == "amenable");

  Classification unknown;
  CHECK(classification_verdicts(unknown).growth == "unknown");
}
