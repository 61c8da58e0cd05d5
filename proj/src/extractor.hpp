#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "classify.hpp"
#include "cmatrix.hpp"
#include "group_algebra.hpp"
#include "partition.hpp"
#include "walks.hpp"

namespace qgt {

struct Caps {
  int depth = 6;
  size_t index_cap = 10000000;   // per-diagram index-tuple budget
  size_t coset_cap = 40000;
  size_t walk_state_cap = 1000000;
  int walk_horizon = 16;
  int character_power_bound = 8;
};

struct QuantumGroupModel {
  enum class Type { Named, Easy, GroupDual, Intertwiners };
  struct TKL {
    CycloMatrix t;
    int k = 0, l = 0;
  };

  Type type = Type::Named;
  std::string named;  // o+ | u+ | s+ | h+
  int n = 0;
  CategorySpec category;
  Presentation dual_gamma;
  std::vector<TKL> intertwiners;

  static QuantumGroupModel named_model(const std::string& name, int n);
  static QuantumGroupModel easy(CategorySpec spec, int n);
  static QuantumGroupModel group_dual(Presentation gamma);
  static QuantumGroupModel explicit_intertwiners(std::vector<TKL> items, int n);

  // Named variants expand to the matching builtin category:
  // o+ -> NC2_uncolored, u+ -> NC2, s+ -> NC, h+ -> NC_even.
  CategorySpec easy_category() const;
  std::string describe() const;
};

struct RawRelation {
  Word relator;                      // canonical, over g1..gN
  std::string equation;              // "g1 g2 = g3 g4"
  std::string provenance;            // partition literal / rule name
  std::vector<int> upper_idx, lower_idx;
  std::string symbol;                // the nonvanishing value, scalar literal
};

struct CharacterProbe {
  int power = 0;
  bool nonzero = false;
  std::string rendered;
};

struct Verdicts {
  std::string growth = "unknown";
  std::string amenability = "unknown";
  std::string rule;
  bool kesten_ran = false;
  std::string kesten_lower_bound;  // decimal rendering of the exact rational
  int kesten_horizon = 0;
  std::string kesten_trend;
  std::string growth_fit;
  std::string walk_steps_note;
  std::vector<CharacterProbe> characters;
};

struct TorusReport {
  std::string schema_version = "1";
  std::string model_desc;
  std::string q_spec;
  int n = 0;
  int depth = 0;
  uint64_t seed = 0;
  std::vector<RawRelation> raw;       // deduplicated nontrivial relations
  Presentation raw_presentation;      // on g1..gN
  Presentation presentation;          // simplified
  std::vector<Word> gen_images;       // g_s -> word in simplified generators
  Classification classification;
  Verdicts verdicts;
  std::vector<std::string> flags;
  size_t diagrams_processed = 0;
  size_t tuples_emitted = 0;          // nonvanishing index tuples seen
  bool partial = false;               // some diagram hit the index cap
};

// Generalized Kronecker symbol of Thm-6.5 shape: the product over blocks of
// one-block sums over the first index of Q,
//   sum_s prod_{upper legs} Q(s,i) prod_{lower legs} conj(Q(s,j)),
// with black legs swapping the conjugations. Reduces to delta_plain at
// Q = identity. NOTE the extraction pipeline evaluates this at Q* (see
// extract_easy).
Cyclo kronecker_delta_Q(const ColoredPartition& p, const UnitaryMatrix& q,
                        const std::vector<int>& i, const std::vector<int>& j);

// Extraction for easy models: saturate the category to `depth` legs, emit
// the word relation g_{i_1}^{e_1}...g_{i_k}^{e_k} = g_{j_1}...g_{j_l}
// (white legs exponent +1, black -1) for every diagram and every index pair
// whose Kronecker symbol is nonzero, then simplify and classify.
//
// Convention (frozen by the diag(F_2,F_2) fixture for S_4^+): the quotient
// kills the off-diagonal entries of QuQ*, so the diagonal model is
// u = Q* w Q and the symbols are evaluated at Q*. Equivalently the
// one-block sums run over the second index of Q.
TorusReport extract_easy(const QuantumGroupModel& model, const UnitaryMatrix& q,
                         const Caps& caps = {});

TorusReport extract_intertwiners(const QuantumGroupModel& model, const UnitaryMatrix& q,
                                 const Caps& caps = {});

enum class ClosedFormKind { O_plus, U_plus, S_plus, GroupDual };

// The paper's closed relation families: O+ via R = QQ^t, U+ empty, S+ the
// row-sum singleton/pair/triple rules, group duals via the joint column
// support rule.
TorusReport closed_form(ClosedFormKind kind, const UnitaryMatrix& q,
                        const Presentation* gamma = nullptr, const Caps& caps = {});

// Dispatch over model type.
TorusReport extract(const QuantumGroupModel& model, const UnitaryMatrix& q,
                    const Caps& caps = {});

// Image of the character polynomial chi^{(p)} = sum_i (u_ii)^p in the group
// algebra of the simplified torus, with u_ii = sum_s |Q_si|^2 g_s. When the
// classification admits no normal forms the element is returned over free
// reduction with the unreduced flag set.
GroupAlgebraElement character_image(const TorusReport& report, const UnitaryMatrix& q,
                                    int power, const Caps& caps = {});

// Conjecture-side probes: growth/amenability verdicts from the recognized
// class, Kesten walk corroboration, and nonzeroness of low-degree character
// images.
void probe_conjectures(TorusReport& report, const UnitaryMatrix& q, const Caps& caps = {});

// Re-evaluate a raw relation's provenance symbol (used by the
// spot-check invariant).
Cyclo reverify_raw_relation(const RawRelation& r, const UnitaryMatrix& q);

}  // namespace qgt
