// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values and tolerances are pinned in code.
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "report.hpp"
#include "unitary_family.hpp"
#include "walks.hpp"

using namespace qgt;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
  std::printf("criterion %d: %-4s %s  [%s]\n", idx, ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Word w(std::vector<int> ls) { return Word(std::move(ls)); }

bool classified_as(const TorusReport& r, const std::vector<long>& orders) {
  auto got = r.classification.as_free_product_orders();
  if (!got) return false;
  auto canon = [](std::vector<long> v) {
    std::sort(v.begin(), v.end(), [](long a, long b) {
      if ((a == 0) != (b == 0)) return b == 0;
      return a < b;
    });
    return v;
  };
  return canon(*got) == canon(orders);
}

// --- criterion 1: the Gamma_1 table ---------------------------------------
void criterion_1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string bad;
  Caps caps;
  caps.walk_horizon = 8;  // verdict corroboration only; classification is the gate
  for (int n = 2; n <= 5 && ok; ++n) {
    UnitaryMatrix id(CycloMatrix::identity(n));
    std::vector<long> twos(static_cast<size_t>(n), 2L);
    struct Row {
      const char* model;
      bool (*check)(const TorusReport&, int);
    };
    auto check_fpc2 = [](const TorusReport& r, int nn) {
      return r.classification.kind == Classification::Kind::FreeProductCyclic &&
             r.classification.orders == std::vector<long>(static_cast<size_t>(nn), 2L);
    };
    auto check_free = [](const TorusReport& r, int nn) {
      return r.classification.kind == Classification::Kind::Free && r.classification.rank == nn;
    };
    auto check_trivial = [](const TorusReport& r, int) {
      return r.classification.kind == Classification::Kind::Trivial;
    };
    const std::vector<std::pair<const char*, bool (*)(const TorusReport&, int)>> rows = {
        {"o+", +check_fpc2}, {"u+", +check_free}, {"s+", +check_trivial}, {"h+", +check_fpc2}};
    for (const auto& [model, fn] : rows) {
      auto r = extract_easy(QuantumGroupModel::named_model(model, n), id, caps);
      if (!fn(r, n)) {
        ok = false;
        bad = std::string(model) + " N=" + std::to_string(n) + " -> " +
              r.classification.to_string();
        break;
      }
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 60.0) ok = false;
  std::ostringstream d;
  d << "N=2..5 at depth 6, " << secs << " s" << (bad.empty() ? "" : ("; " + bad));
  report(1, "Gamma_1 table: o+ -> Z_2^{*N}, u+ -> F_N, s+ -> 1, h+ -> Z_2^{*N}", ok, d.str());
}

// --- criterion 2: block-Fourier tori of s+ ---------------------------------
void criterion_2() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string bad;
  for (int n = 2; n <= 6 && ok; ++n) {
    for (const auto& comp : compositions_of(n)) {
      auto r = closed_form(ClosedFormKind::S_plus, fourier_blocks(comp));
      std::vector<long> expect;
      for (int b : comp)
        if (b > 1) expect.push_back(b);
      if (!classified_as(r, expect)) {
        ok = false;
        bad = composition_spec(comp) + " -> " + r.classification.to_string();
        break;
      }
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 30.0) ok = false;
  std::ostringstream d;
  d << "all compositions of N <= 6, " << secs << " s" << (bad.empty() ? "" : ("; " + bad));
  report(2, "s+ with diag(F_{N_1},...,F_{N_k}) classifies as Z_{N_1} * ... * Z_{N_k}", ok,
         d.str());
}

// --- criterion 3: closed forms as cross-oracle -----------------------------
void criterion_3() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string bad;
  Caps caps;
  caps.walk_horizon = 8;
  size_t compared = 0;
  for (const char* model : {"o+", "u+", "s+"}) {
    SeededRng rng(900 + static_cast<uint64_t>(model[0]));
    for (int i = 0; i < 20 && ok; ++i) {
      int n = 2 + static_cast<int>(rng.below(4));  // N in 2..5
      SampledUnitary s = sample_structured_unitary(n, rng);
      TorusReport generic = extract_easy(QuantumGroupModel::named_model(model, n), s.q, caps);
      TorusReport closed =
          model[0] == 'o'
              ? closed_form(ClosedFormKind::O_plus, s.q, nullptr, caps)
              : (model[0] == 'u' ? closed_form(ClosedFormKind::U_plus, s.q, nullptr, caps)
                                 : closed_form(ClosedFormKind::S_plus, s.q, nullptr, caps));
      bool same = generic.presentation.ngens == closed.presentation.ngens &&
                  generic.presentation.relators == closed.presentation.relators;
      if (!same) {
        ok = false;
        bad = std::string(model) + " N=" + std::to_string(n) + " Q=" + s.spec + ": " +
              generic.presentation.to_text() + " vs " + closed.presentation.to_text();
      }
      ++compared;
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 600.0) ok = false;
  std::ostringstream d;
  d << compared << " (model, Q) pairs, identical simplified relator sets, " << secs << " s"
    << (bad.empty() ? "" : ("; " + bad));
  report(3, "generic extraction (depth 6) matches the closed forms", ok, d.str());
}

// --- criterion 4: infinite dihedral characters ------------------------------
void criterion_4() {
  auto t0 = Clock::now();
  Caps caps;
  bool ok = true;
  std::string detail;

  UnitaryMatrix q44 = fourier_blocks({2, 2});
  auto s4 = extract_easy(QuantumGroupModel::named_model("s+", 4), q44, caps);
  auto rho = character_image(s4, q44, 1, caps);
  bool rho_ok = classified_as(s4, {2, 2}) && rho.terms.size() == 3 &&
                rho.terms.count(Word()) && rho.terms.at(Word()) == Cyclo(2L) &&
                rho.terms.count(w({1})) && rho.terms.at(w({1})) == Cyclo(1L) &&
                rho.terms.count(w({2})) && rho.terms.at(w({2})) == Cyclo(1L);
  auto tau = ga_multiply_trace(rho, rho).trace_of_product;
  bool tau_ok = tau == Cyclo(6L);

  UnitaryMatrix f2 = fourier_matrix(2);
  auto h2 = extract_easy(QuantumGroupModel::named_model("h+", 2), f2, caps);
  auto rho_h = character_image(h2, f2, 1, caps);
  bool rho_h_ok = rho_h.terms.size() == 2 && rho_h.terms.count(w({1})) &&
                  rho_h.terms.at(w({1})) == Cyclo(1L) && rho_h.terms.count(w({2})) &&
                  rho_h.terms.at(w({2})) == Cyclo(1L);

  // rho' from the fixture suite: FLAGGED (not failed), reporting the
  // expansion 1 + (gh + hg)/2 against the paper's displayed 1 + g*h
  FixtureReport fixtures = run_paper_fixtures();
  bool flag_ok = false;
  for (const auto& f : fixtures.results)
    if (f.name.find("rho'") != std::string::npos)
      flag_ok = f.status == "FLAGGED" && f.detail.find("1 + 1/2*g*h + 1/2*h*g") != std::string::npos;
  ok = rho_ok && tau_ok && rho_h_ok && flag_ok;
  std::ostringstream d;
  d << "rho(S4+) = " << (rho_ok ? "2+g+h" : "MISMATCH") << ", tau(rho^2) = " << tau.to_string()
    << ", rho(H2+) = " << (rho_h_ok ? "g+h" : "MISMATCH")
    << ", rho' fixture " << (flag_ok ? "FLAGGED" : "NOT FLAGGED") << ", " << seconds_since(t0)
    << " s";
  report(4, "D_infinity character images (rho, tau(rho^2) = 6, rho' flagged)", ok, d.str());
}

// --- criterion 5: amenability probe ----------------------------------------
void criterion_5() {
  auto t0 = Clock::now();
  Caps caps;
  bool ok = true;
  std::ostringstream d;

  UnitaryMatrix q = fourier_blocks({2, 3});
  auto r = extract_easy(QuantumGroupModel::named_model("s+", 5), q, caps);
  bool class_ok = classified_as(r, {2, 3}) && r.verdicts.amenability == "non_amenable";
  if (!class_ok) ok = false;

  // Kesten bounds at horizon 16: Z_2 * Z_3 stays strictly below 1 - 10^-3,
  // Free(2) certifies >= 0.82 against the exact sqrt(3)/2
  NormalForms z23 = NormalForms::free_product_cyclic({2, 3});
  WalkSpec zspec{z23, standard_steps(z23), 16, 1000000};
  auto zcounts = return_counts(zspec);
  auto zbound = spectral_radius_estimate(zcounts, zspec.steps.size());
  Rat threshold(999, 1000);
  bool z_ok = zbound.lower_bound < threshold;
  for (const auto& [n2, b] : zbound.root_sequence)
    if (b >= threshold) z_ok = false;
  if (!z_ok) ok = false;

  NormalForms f2 = NormalForms::free_group(2);
  WalkSpec fspec{f2, standard_steps(f2), 16, 1000000};
  auto fbound = spectral_radius_estimate(return_counts(fspec), 4);
  bool f_ok = fbound.lower_bound >= Rat(82, 100) && fbound.lower_bound < Rat(866026, 1000000);
  if (!f_ok) ok = false;

  double secs = seconds_since(t0);
  if (secs >= 120.0) ok = false;
  d << "S5+ -> " << r.classification.to_string() << " (" << r.verdicts.amenability << "), "
    << "Z2*Z3 bound " << zbound.lower_bound.get_d() << " < 0.999, Free(2) bound "
    << fbound.lower_bound.get_d() << " in [0.82, 0.866), " << secs << " s";
  report(5, "amenability probe: Bichon subgroup Z_2 * Z_3 and Kesten bounds", ok, d.str());
}

// --- criterion 6: walk and growth oracles ----------------------------------
void criterion_6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;

  // exhaustive enumeration oracle for n <= 6
  auto brute = [](const NormalForms& nf, const std::vector<Word>& steps, int horizon) {
    std::vector<Int> out{Int(1)};
    std::map<Word, Int> cur{{nf.normalize(Word()), Int(1)}};
    for (int n = 1; n <= horizon; ++n) {
      std::map<Word, Int> next;
      for (const auto& [word, count] : cur)
        for (const auto& s : steps) next[nf.multiply(word, s)] += count;
      cur = std::move(next);
      auto it = cur.find(nf.normalize(Word()));
      out.push_back(it == cur.end() ? Int(0) : it->second);
    }
    return out;
  };

  std::vector<std::pair<std::string, NormalForms>> groups = {
      {"Free(2)", NormalForms::free_group(2)},
      {"D_inf", NormalForms::free_product_cyclic({2, 2})},
      {"Z2*Z3", NormalForms::free_product_cyclic({2, 3})}};
  for (auto& [name, nf] : groups) {
    WalkSpec spec{nf, standard_steps(nf), 6, 100000};
    if (return_counts(spec) != brute(nf, spec.steps, 6)) {
      ok = false;
      d << name << " return counts mismatch; ";
    }
  }

  auto dgrowth = ball_sizes(NormalForms::free_product_cyclic({2, 2}), {w({1}), w({2})}, 50);
  for (int n = 0; n <= 50; ++n)
    if (dgrowth.sizes[static_cast<size_t>(n)] != Int(2 * n + 1)) ok = false;
  if (dgrowth.fit != "polynomial") ok = false;
  auto fgrowth = ball_sizes(NormalForms::free_group(2), {w({1}), w({2})}, 8);
  if (fgrowth.fit != "exponential") ok = false;

  d << "counts = enumeration for n <= 6 on Free(2), D_inf, Z2*Z3; |B_n(D_inf)| = 2n+1 (n <= 50); "
    << "fits: D_inf " << dgrowth.fit << ", Free(2) " << fgrowth.fit << ", " << seconds_since(t0)
    << " s";
  report(6, "walk/growth oracles", ok, d.str());
}

// --- criterion 7: property suites -------------------------------------------
ColoredPartition random_partition(SeededRng& rng, bool colored) {
  int k = static_cast<int>(rng.below(3));
  int l = static_cast<int>(rng.below(3));
  if (k + l == 0) l = 2;
  std::vector<int> label(static_cast<size_t>(k + l));
  for (auto& v : label) v = static_cast<int>(rng.below(static_cast<uint64_t>(k + l)));
  std::vector<std::vector<int>> blocks;
  for (int b = 0; b < k + l; ++b) {
    std::vector<int> legs;
    for (int i = 0; i < k + l; ++i)
      if (label[static_cast<size_t>(i)] == b) legs.push_back(i);
    if (!legs.empty()) blocks.push_back(legs);
  }
  std::vector<Color> colors(static_cast<size_t>(k + l), Color::White);
  if (colored)
    for (auto& c : colors) c = rng.below(2) ? Color::Black : Color::White;
  return ColoredPartition(k, l, blocks, colors);
}

void criterion_7() {
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  SeededRng rng(777);

  // category axioms
  for (int t = 0; t < 100 && ok; ++t) {
    ColoredPartition p = random_partition(rng, true), q = random_partition(rng, true),
                     r = random_partition(rng, true);
    if (involute(involute(p)) != p) ok = false;
    if (tensor(tensor(p, q), r) != tensor(p, tensor(q, r))) ok = false;
    if (tensor(p, ColoredPartition::empty_diagram()) != p) ok = false;
    if (tensor(ColoredPartition::empty_diagram(), p) != p) ok = false;
  }
  if (!ok) d << "category axioms failed; ";

  // linear realization: both functor identities on >= 100 composable pairs
  {
    size_t tensor_checked = 0, compose_checked = 0;
    bool fun_ok = true;
    SeededRng frng(778);
    while ((tensor_checked < 100 || compose_checked < 100) && fun_ok) {
      ColoredPartition p = random_partition(frng, false), q = random_partition(frng, false);
      for (int n = 2; n <= 3; ++n) {
        if (t_pi_matrix(tensor(p, q), n) != t_pi_matrix(p, n).kron(t_pi_matrix(q, n)))
          fun_ok = false;
        ++tensor_checked;
        if (p.upper_count() == q.lower_count()) {
          auto [piq, loops] = compose(p, q);
          Cyclo factor(1L);
          for (int i = 0; i < loops; ++i) factor *= Cyclo(static_cast<long>(n));
          if (t_pi_matrix(p, n) * t_pi_matrix(q, n) != t_pi_matrix(piq, n).scaled(factor))
            fun_ok = false;
          ++compose_checked;
        }
      }
    }
    if (!fun_ok) {
      ok = false;
      d << "T_pi functor identities failed; ";
    }
  }

  // identity-only extraction has no relations on 10 sampled unitaries
  {
    CategorySpec idcat("idcat", {ColoredPartition::identity(1)}, false);
    SeededRng qrng(779);
    for (int t = 0; t < 10; ++t) {
      int n = 2 + static_cast<int>(qrng.below(3));
      SampledUnitary s = sample_structured_unitary(n, qrng);
      auto r = extract_easy(QuantumGroupModel::easy(idcat, n), s.q);
      if (!r.raw.empty()) {
        ok = false;
        d << "identity-only extraction produced relations; ";
        break;
      }
    }
  }

  // diagonal-phase invariance (left, per the Def-1.4 convention) and
  // left-permutation covariance on 10 sampled Q
  {
    SeededRng qrng(781);
    Caps caps;
    caps.walk_horizon = 8;
    for (int t = 0; t < 10; ++t) {
      int n = 3;
      auto comps = compositions_of(n);
      UnitaryMatrix base = fourier_blocks(comps[qrng.below(comps.size())]);
      std::vector<Cyclo> phases;
      for (int i = 0; i < n; ++i)
        phases.push_back(Cyclo::root_of_unity(4, static_cast<long>(qrng.below(4))));
      auto a = extract_easy(QuantumGroupModel::named_model("s+", n), base, caps);
      auto b = extract_easy(QuantumGroupModel::named_model("s+", n),
                            diagonal_unitary(phases) * base, caps);
      if (!(a.presentation.ngens == b.presentation.ngens &&
            a.presentation.relators == b.presentation.relators)) {
        ok = false;
        d << "diagonal-phase invariance failed; ";
        break;
      }
      std::vector<int> sigma(static_cast<size_t>(n));
      std::iota(sigma.begin(), sigma.end(), 0);
      for (int i = n - 1; i > 0; --i)
        std::swap(sigma[static_cast<size_t>(i)], sigma[qrng.below(static_cast<uint64_t>(i + 1))]);
      auto c = extract_easy(QuantumGroupModel::named_model("s+", n),
                            permutation_unitary(sigma) * base, caps);
      std::set<Word> relabeled, got(c.raw_presentation.relators.begin(),
                                    c.raw_presentation.relators.end());
      for (const auto& rel : a.raw_presentation.relators) {
        std::vector<int> ls;
        for (int x : rel.ls) {
          int g = sigma[static_cast<size_t>(std::abs(x) - 1)] + 1;
          ls.push_back(x > 0 ? g : -g);
        }
        relabeled.insert(canonical_relator(w(ls)));
      }
      if (relabeled != got) {
        ok = false;
        d << "permutation covariance failed; ";
        break;
      }
    }
  }

  // abelianization invariance under simplification on 50 random presentations
  {
    SeededRng prng(783);
    for (int t = 0; t < 50; ++t) {
      int n = 2 + static_cast<int>(prng.below(3));
      std::vector<Word> rels;
      int nrel = static_cast<int>(prng.below(4));
      for (int r = 0; r < nrel; ++r) {
        std::vector<int> letters;
        int len = 1 + static_cast<int>(prng.below(5));
        for (int i = 0; i < len; ++i) {
          int g = 1 + static_cast<int>(prng.below(static_cast<uint64_t>(n)));
          letters.push_back(prng.below(2) ? g : -g);
        }
        rels.push_back(w(letters));
      }
      Presentation p(n, rels);
      if (abelianization(p) != abelianization(simplify_presentation(p).pres)) {
        ok = false;
        d << "abelianization changed under simplification; ";
        break;
      }
    }
  }

  d << seconds_since(t0) << " s";
  report(7, "property suites (category axioms, T_pi functor, invariances, SNF)", ok, d.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (failures == 0)
    std::printf("acceptance: all 7 criteria PASS\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
