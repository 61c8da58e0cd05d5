#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smith.hpp"
#include "todd_coxeter.hpp"

namespace qgt {

// Recognized group classes. Orders use 0 for an infinite cyclic factor.
struct Classification {
  enum class Kind {
    Trivial,
    FiniteCyclic,
    FreeAbelian,
    Free,
    FreeProductCyclic,
    FiniteOrder,
    Unknown
  };
  Kind kind = Kind::Unknown;
  std::vector<long> orders;        // FreeProductCyclic factors / FiniteCyclic {n}
  std::vector<long> orders_by_gen; // per-generator factor orders (FPC family), aligned to gens
  int rank = 0;                    // Free / FreeAbelian
  unsigned long finite_order = 0;  // FiniteOrder
  std::vector<Int> ab_invariants;  // always computed (evidence)
  std::string evidence;
  std::shared_ptr<CosetTable> table;  // FiniteOrder normal forms

  std::string to_string() const;
  bool admits_normal_forms() const;
  // Orders list when the group is a free product of cyclic groups
  // ([2,2] = infinite dihedral, [0] = Z, [] = trivial, [n] = Z_n,
  // [0 x r] = free of rank r); nullopt otherwise.
  std::optional<std::vector<long>> as_free_product_orders() const;
};

struct GrowthAmenability {
  std::string growth;       // finite | polynomial | exponential | unknown
  std::string amenability;  // amenable | non_amenable | unknown
  std::string rule;         // which table row fired
};

struct RecognizeCaps {
  size_t coset_cap = 40000;
};

// Pattern recognition over the simplified presentation: free groups, free
// products of cyclics, fully commutator-saturated (abelian) presentations
// via Smith normal form, Todd-Coxeter closure, else Unknown with evidence.
Classification recognize(const Presentation& p, const RecognizeCaps& caps = {});

// Classical rule table behind the conjecture probes.
GrowthAmenability classification_verdicts(const Classification& c);

}  // namespace qgt
