#include "classify.hpp"

#include <algorithm>
#include <sstream>

namespace qgt {

std::string Classification::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Trivial:
      return "Trivial";
    case Kind::FiniteCyclic:
      os << "FiniteCyclic(" << orders[0] << ")";
      return os.str();
    case Kind::FreeAbelian:
      os << "FreeAbelian(" << rank << ")";
      return os.str();
    case Kind::Free:
      os << "Free(" << rank << ")";
      return os.str();
    case Kind::FreeProductCyclic: {
      os << "FreeProductCyclic([";
      for (size_t i = 0; i < orders.size(); ++i) {
        if (i) os << ",";
        os << orders[i];
      }
      os << "])";
      return os.str();
    }
    case Kind::FiniteOrder:
      os << "FiniteOrder(" << finite_order << ")";
      return os.str();
    case Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

bool Classification::admits_normal_forms() const {
  switch (kind) {
    case Kind::Trivial:
    case Kind::FiniteCyclic:
    case Kind::FreeAbelian:
    case Kind::Free:
    case Kind::FreeProductCyclic:
      return true;
    case Kind::FiniteOrder:
      return table != nullptr;
    case Kind::Unknown:
      return false;
  }
  return false;
}

std::optional<std::vector<long>> Classification::as_free_product_orders() const {
  switch (kind) {
    case Kind::Trivial:
      return std::vector<long>{};
    case Kind::FiniteCyclic:
      return orders;
    case Kind::Free:
      return std::vector<long>(static_cast<size_t>(rank), 0L);
    case Kind::FreeProductCyclic:
      return orders;
    case Kind::FreeAbelian:
      if (rank == 1) return std::vector<long>{0L};
      return std::nullopt;
    case Kind::FiniteOrder:
      if (finite_order == 1) return std::vector<long>{};
      return std::nullopt;
    case Kind::Unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// relator made of one generator only -> (gen, |exponent|); else gen = 0
std::pair<int, long> as_power_relator(const Word& w) {
  if (w.empty()) return {0, 0};
  int g = std::abs(w.ls[0]);
  long e = 0;
  for (int x : w.ls) {
    if (std::abs(x) != g) return {0, 0};
    e += (x > 0 ? 1 : -1);
  }
  return {g, std::labs(e)};
}

bool has_all_commutators(const Presentation& p) {
  if (p.ngens < 2) return true;
  for (int i = 1; i <= p.ngens; ++i)
    for (int j = i + 1; j <= p.ngens; ++j) {
      Word comm(std::vector<int>{i, j, -i, -j});
      Word c = canonical_relator(comm);
      bool found = false;
      for (const auto& r : p.relators)
        if (r == c) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace

Classification recognize(const Presentation& input, const RecognizeCaps& caps) {
  SimplifyResult s = simplify_presentation(input);
  const Presentation& p = s.pres;
  Classification c;
  c.ab_invariants = abelianization(p);

  if (p.ngens == 0) {
    c.kind = Classification::Kind::Trivial;
    return c;
  }
  if (p.relators.empty()) {
    c.kind = p.ngens == 0 ? Classification::Kind::Trivial : Classification::Kind::Free;
    c.rank = p.ngens;
    c.orders_by_gen.assign(static_cast<size_t>(p.ngens), 0L);
    c.orders = c.orders_by_gen;
    return c;
  }

  // pure power relators on distinct generators -> free product of cyclics
  {
    std::vector<long> order_by_gen(static_cast<size_t>(p.ngens), 0L);
    bool pure = true, dup = false;
    for (const auto& r : p.relators) {
      auto [g, e] = as_power_relator(r);
      if (g == 0 || e == 0) {
        pure = false;
        break;
      }
      if (order_by_gen[static_cast<size_t>(g) - 1] != 0) dup = true;
      order_by_gen[static_cast<size_t>(g) - 1] = e;
    }
    if (pure && !dup) {
      c.orders_by_gen = order_by_gen;
      c.orders = order_by_gen;
      std::sort(c.orders.begin(), c.orders.end(), [](long a, long b) {
        if ((a == 0) != (b == 0)) return b == 0;  // finite factors first
        return a < b;
      });
      if (c.orders.size() == 1 && c.orders[0] != 0) {
        c.kind = Classification::Kind::FiniteCyclic;
      } else if (std::all_of(c.orders.begin(), c.orders.end(), [](long o) { return o == 0; })) {
        c.kind = Classification::Kind::Free;
        c.rank = p.ngens;
      } else {
        c.kind = Classification::Kind::FreeProductCyclic;
      }
      return c;
    }
  }

  // fully commutator-saturated -> abelian, delegated to Smith normal form
  if (has_all_commutators(p)) {
    bool all_free = true, all_finite = true;
    for (const auto& d : c.ab_invariants) {
      if (d == 0)
        all_finite = false;
      else
        all_free = false;
    }
    if (all_free) {
      c.kind = Classification::Kind::FreeAbelian;
      c.rank = static_cast<int>(c.ab_invariants.size());
      return c;
    }
    if (all_finite) {
      if (c.ab_invariants.size() == 1) {
        c.kind = Classification::Kind::FiniteCyclic;
        c.orders = {static_cast<long>(c.ab_invariants[0].get_ui())};
        c.orders_by_gen = c.orders;
        return c;
      }
      // finite abelian; fall through to coset enumeration for the table
    } else {
      c.evidence = "abelian with mixed invariants";
    }
  }

  auto tc = todd_coxeter(p, caps.coset_cap);
  if (tc.finite) {
    if (tc.order == 1) {
      c.kind = Classification::Kind::Trivial;
      return c;
    }
    c.kind = Classification::Kind::FiniteOrder;
    c.finite_order = tc.order;
    c.table = std::make_shared<CosetTable>(std::move(*tc.table));
    return c;
  }

  c.kind = Classification::Kind::Unknown;
  std::ostringstream ev;
  ev << "abelianization [";
  for (size_t i = 0; i < c.ab_invariants.size(); ++i) {
    if (i) ev << ",";
    ev << c.ab_invariants[i].get_str();
  }
  ev << "]; coset enumeration inconclusive at " << tc.cosets_used << " cosets";
  c.evidence = ev.str();
  return c;
}

GrowthAmenability classification_verdicts(const Classification& c) {
  using K = Classification::Kind;
  switch (c.kind) {
    case K::Trivial:
      return {"finite", "amenable", "trivial group"};
    case K::FiniteCyclic:
      return {"finite", "amenable", "finite cyclic"};
    case K::FiniteOrder:
      return {"finite", "amenable", "finite group (coset enumeration closed)"};
    case K::FreeAbelian:
      return {c.rank == 0 ? "finite" : "polynomial", "amenable", "free abelian"};
    case K::Free:
      if (c.rank == 0) return {"finite", "amenable", "trivial group"};
      if (c.rank == 1) return {"polynomial", "amenable", "infinite cyclic"};
      return {"exponential", "non_amenable", "free group of rank >= 2"};
    case K::FreeProductCyclic: {
      // sum of (1 - 1/n_i), with 1 for infinite factors: > 1 forces a free
      // subgroup; the only infinite amenable cases are Z and Z2 * Z2.
      const auto& o = c.orders;
      if (o.empty()) return {"finite", "amenable", "trivial free product"};
      if (o.size() == 1) {
        if (o[0] == 0) return {"polynomial", "amenable", "infinite cyclic"};
        return {"finite", "amenable", "finite cyclic"};
      }
      if (o.size() == 2 && o[0] == 2 && o[1] == 2)
        return {"polynomial", "amenable", "infinite dihedral is virtually Z"};
      return {"exponential", "non_amenable",
              "free product with sum(1 - 1/n_i) > 1 contains a free subgroup"};
    }
    case K::Unknown:
      return {"unknown", "unknown", "classification unknown"};
  }
  return {"unknown", "unknown", "classification unknown"};
}

}  // namespace qgt
