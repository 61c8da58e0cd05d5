#include "fixtures.hpp"

#include <sstream>

#include <json.hpp>

#include "unitary_family.hpp"

namespace qgt {

namespace {

using json = nlohmann::ordered_json;

void check(FixtureReport& rep, const std::string& name, bool ok, const std::string& detail) {
  rep.results.push_back({name, ok ? "PASS" : "FAIL", detail});
  if (!ok) ++rep.failed;
}

void flagged(FixtureReport& rep, const std::string& name, const std::string& detail) {
  rep.results.push_back({name, "FLAGGED", detail});
  ++rep.flagged;
}

bool fpc_orders_are(const Classification& c, std::vector<long> expect) {
  auto got = c.as_free_product_orders();
  if (!got) return false;
  auto canon = [](std::vector<long> v) {
    std::sort(v.begin(), v.end(), [](long a, long b) {
      if ((a == 0) != (b == 0)) return b == 0;
      return a < b;
    });
    return v;
  };
  return canon(*got) == canon(std::move(expect));
}

Cyclo coeff_of(const GroupAlgebraElement& e, const Word& w) {
  auto it = e.terms.find(w);
  return it == e.terms.end() ? Cyclo(0L) : it->second;
}

// Character image with a forced ambient (used for the rho' question, where
// the expansion must not assume commutation beyond the stated relations).
GroupAlgebraElement character_in_ambient(const TorusReport& rep, const UnitaryMatrix& q,
                                         int power, std::shared_ptr<NormalForms> nf) {
  GroupAlgebraElement chi = GroupAlgebraElement::zero(nf);
  int n = q.size();
  for (int i = 1; i <= n; ++i) {
    GroupAlgebraElement uii = GroupAlgebraElement::zero(nf);
    for (int s = 1; s <= n; ++s) {
      Cyclo w = q.at(s - 1, i - 1).conj() * q.at(s - 1, i - 1);
      if (!w.is_zero()) uii.add_term(rep.gen_images[static_cast<size_t>(s) - 1], w);
    }
    chi = chi + uii.pow(power);
  }
  return chi;
}

}  // namespace

FixtureReport run_paper_fixtures() {
  FixtureReport rep;
  Caps caps;

  // spinning matrices
  {
    UnitaryMatrix f2 = fourier_matrix(2);
    Cyclo inv_sqrt2 = Cyclo::sqrt_int(2).inverse();
    bool ok = f2.at(0, 0) == inv_sqrt2 && f2.at(0, 1) == inv_sqrt2 && f2.at(1, 0) == inv_sqrt2 &&
              f2.at(1, 1) == -inv_sqrt2;
    check(rep, "F_2 spinning matrix", ok, "entries (1/sqrt 2)[[1,1],[1,-1]]");
    UnitaryMatrix f4 = block_diag_unitary({fourier_matrix(2), fourier_matrix(2)});
    check(rep, "diag(F_2,F_2) block unitary", f4.size() == 4 && f4.at(2, 0).is_zero(),
          "4x4 block-diagonal, exactly unitary");
  }

  // Gamma_1 table at Q = 1
  for (int n = 2; n <= 5; ++n) {
    UnitaryMatrix id(CycloMatrix::identity(n));
    std::vector<long> invs(static_cast<size_t>(n), 2L);
    {
      auto r = extract_easy(QuantumGroupModel::named_model("o+", n), id, caps);
      check(rep, "Gamma_1(o+, N=" + std::to_string(n) + ") = Z_2^{*N}",
            fpc_orders_are(r.classification, invs), r.classification.to_string());
    }
    {
      auto r = extract_easy(QuantumGroupModel::named_model("u+", n), id, caps);
      check(rep, "Gamma_1(u+, N=" + std::to_string(n) + ") = F_N",
            r.classification.kind == Classification::Kind::Free && r.classification.rank == n,
            r.classification.to_string());
    }
    {
      auto r = extract_easy(QuantumGroupModel::named_model("s+", n), id, caps);
      check(rep, "Gamma_1(s+, N=" + std::to_string(n) + ") trivial",
            r.classification.kind == Classification::Kind::Trivial,
            r.classification.to_string());
    }
    {
      auto r = extract_easy(QuantumGroupModel::named_model("h+", n), id, caps);
      check(rep, "Gamma_1(h+, N=" + std::to_string(n) + ") = Z_2^{*N}",
            fpc_orders_are(r.classification, invs), r.classification.to_string());
    }
  }

  // block-Fourier tori for s+ (all compositions, N <= 6)
  for (int n = 2; n <= 6; ++n) {
    bool all_ok = true;
    std::string bad;
    for (const auto& comp : compositions_of(n)) {
      auto r = closed_form(ClosedFormKind::S_plus, fourier_blocks(comp), nullptr, caps);
      std::vector<long> expect;
      for (int b : comp)
        if (b > 1) expect.push_back(b);
      if (!fpc_orders_are(r.classification, expect)) {
        all_ok = false;
        bad = composition_spec(comp) + " -> " + r.classification.to_string();
      }
    }
    check(rep, "s+ torus = Z_{N_1} * ... * Z_{N_k} for all compositions of " + std::to_string(n),
          all_ok, all_ok ? "every composition matches" : bad);
  }

  // S_4^+ with diag(F_2,F_2): infinite dihedral and rho = 2 + g + h
  {
    UnitaryMatrix q = fourier_blocks({2, 2});
    auto r = extract_easy(QuantumGroupModel::named_model("s+", 4), q, caps);
    check(rep, "S_4^+ with diag(F_2,F_2) gives Z_2 * Z_2", fpc_orders_are(r.classification, {2, 2}),
          r.classification.to_string());
    auto rho = character_image(r, q, 1, caps);
    bool ok = coeff_of(rho, Word()) == Cyclo(2L) && coeff_of(rho, Word({1})) == Cyclo(1L) &&
              coeff_of(rho, Word({2})) == Cyclo(1L) && rho.terms.size() == 3;
    check(rep, "S_4^+ character: rho = 2 + g + h", ok, rho.to_string());
    auto sq = ga_multiply_trace(rho, rho);
    check(rep, "S_4^+ character: tau(rho^2) = 6", sq.trace_of_product == Cyclo(6L),
          "tau(rho^2) = " + sq.trace_of_product.to_string());
  }

  // H_2^+ with F_2: rho = g + h; the rho' value is the flagged question
  {
    UnitaryMatrix q = fourier_matrix(2);
    auto r = extract_easy(QuantumGroupModel::named_model("h+", 2), q, caps);
    auto rho = character_image(r, q, 1, caps);
    bool ok = coeff_of(rho, Word()).is_zero() && coeff_of(rho, Word({1})) == Cyclo(1L) &&
              coeff_of(rho, Word({2})) == Cyclo(1L) && rho.terms.size() == 2;
    check(rep, "H_2^+ character: rho = g + h", ok, rho.to_string());

    // rho' computed without assuming gh = hg: expand in <g,h | g^2, h^2>
    auto dinf = std::make_shared<NormalForms>(NormalForms::free_product_cyclic({2, 2}));
    auto rho_prime = character_in_ambient(r, q, 2, dinf);
    Cyclo half(1, 2);
    bool expansion_ok = coeff_of(rho_prime, Word()) == Cyclo(1L) &&
                        coeff_of(rho_prime, Word({1, 2})) == half &&
                        coeff_of(rho_prime, Word({2, 1})) == half && rho_prime.terms.size() == 3;
    std::vector<std::string> gh{"g", "h"};
    auto in_torus = character_image(r, q, 2, caps);
    std::ostringstream detail;
    detail << "noncommutative expansion: " << rho_prime.to_string(&gh)
           << "; displayed value 1 + g*h assumes gh = hg; in the computed torus ("
           << r.classification.to_string() << "): " << in_torus.to_string(&gh);
    if (expansion_ok) {
      flagged(rep, "H_2^+ character: rho' = 1 + (gh + hg)/2 vs displayed 1 + g*h", detail.str());
    } else {
      check(rep, "H_2^+ character: rho' expansion", false, detail.str());
    }
  }

  // S_5^+ with diag(F_2,F_3): the Z_2 * Z_3 group dual subgroup
  {
    UnitaryMatrix q = fourier_blocks({2, 3});
    auto r = extract_easy(QuantumGroupModel::named_model("s+", 5), q, caps);
    bool ok = fpc_orders_are(r.classification, {2, 3}) &&
              r.verdicts.amenability == "non_amenable" && r.verdicts.growth == "exponential";
    check(rep, "S_5^+ with diag(F_2,F_3) gives Z_2 * Z_3, non-amenable", ok,
          r.classification.to_string() + ", " + r.verdicts.amenability);
  }

  // u+ is free for every Q (sampled)
  {
    bool all_ok = true;
    std::string bad;
    SeededRng rng(20160906);
    for (int n = 2; n <= 3; ++n) {
      for (int rep_i = 0; rep_i < 3; ++rep_i) {
        SampledUnitary s = sample_structured_unitary(n, rng);
        auto r = extract_easy(QuantumGroupModel::named_model("u+", n), s.q, caps);
        if (r.classification.kind != Classification::Kind::Free || r.classification.rank != n ||
            !r.raw.empty()) {
          all_ok = false;
          bad = s.spec + " -> " + r.classification.to_string();
        }
      }
    }
    check(rep, "u+ torus is F_N for sampled Q (no raw relations)", all_ok,
          all_ok ? "6 sampled unitaries" : bad);
  }

  // o+ with F_3: R = QQ^t pairs i+j = 0 mod 3
  {
    auto r = closed_form(ClosedFormKind::O_plus, fourier_matrix(3), nullptr, caps);
    check(rep, "O_3^+ with F_3 gives Z_2 * Z", fpc_orders_are(r.classification, {2, 0}),
          r.classification.to_string());
  }

  // group dual rule: F_2 dual with fully supported Q identifies everything
  {
    Presentation f2(2, {});
    auto r = closed_form(ClosedFormKind::GroupDual, fourier_matrix(2), &f2, caps);
    bool ok = r.classification.kind == Classification::Kind::Free && r.classification.rank == 1;
    check(rep, "dual(F_2) with F_2 collapses to Z", ok, r.classification.to_string());
  }

  return rep;
}

std::string fixtures_to_text(const FixtureReport& r) {
  std::ostringstream os;
  for (const auto& f : r.results)
    os << f.status << (f.status.size() == 4 ? "    " : " ") << f.name << "\n"
       << "        " << f.detail << "\n";
  os << r.results.size() << " fixtures, " << r.failed << " failed, " << r.flagged << " flagged\n";
  return os.str();
}

std::string fixtures_to_json(const FixtureReport& r) {
  json out = json::object();
  out["schema_version"] = "1";
  json arr = json::array();
  for (const auto& f : r.results) {
    json e = json::object();
    e["name"] = f.name;
    e["status"] = f.status;
    e["detail"] = f.detail;
    arr.push_back(e);
  }
  out["fixtures"] = arr;
  out["failed"] = r.failed;
  out["flagged"] = r.flagged;
  return out.dump(2) + "\n";
}

}  // namespace qgt
