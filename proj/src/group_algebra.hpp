#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "classify.hpp"
#include "cyclo.hpp"
#include "word.hpp"

namespace qgt {

// Normal-form engine for the ambient groups group-algebra work happens in:
// free products of cyclic groups (alternating syllables, exponents in
// (-n/2, n/2]), free groups (orders all 0), free abelian groups (sorted
// exponent vectors) and finite groups via a closed coset table.
class NormalForms {
 public:
  enum class Kind { FreeProduct, FreeAbelian, CosetTable, None };

  NormalForms() = default;
  static NormalForms free_group(int rank);
  static NormalForms free_product_cyclic(std::vector<long> orders_by_gen);
  static NormalForms free_abelian(int rank);
  static NormalForms coset_table(std::shared_ptr<CosetTable> t);
  // From a recognized classification over a simplified presentation.
  static NormalForms from_classification(const Classification& c, int ngens);

  bool valid() const { return kind_ != Kind::None; }
  Kind kind() const { return kind_; }
  int ngens() const { return ngens_; }

  Word normalize(const Word& w) const;
  Word multiply(const Word& a, const Word& b) const { return normalize(a * b); }
  Word invert(const Word& a) const { return normalize(a.inverse()); }

 private:
  Kind kind_ = Kind::None;
  int ngens_ = 0;
  std::vector<long> orders_;  // FreeProduct: per-generator order (0 = Z)
  std::shared_ptr<CosetTable> table_;
};

// Element of the rational-cyclotomic group algebra of the ambient group,
// stored on normal-form words. Zero coefficients are dropped.
struct GroupAlgebraElement {
  std::shared_ptr<const NormalForms> nf;
  std::map<Word, Cyclo> terms;
  bool unreduced = false;  // set when no ambient normal forms were available

  static GroupAlgebraElement zero(std::shared_ptr<const NormalForms> nf);
  static GroupAlgebraElement monomial(std::shared_ptr<const NormalForms> nf, const Word& w,
                                      const Cyclo& c);

  void add_term(const Word& w, const Cyclo& c);
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement pow(int p) const;
  GroupAlgebraElement star() const;  // conjugate coefficients, invert words
  Cyclo trace() const;               // coefficient of the identity
  bool is_zero() const { return terms.empty(); }
  bool operator==(const GroupAlgebraElement& o) const { return terms == o.terms; }

  std::string to_string(const std::vector<std::string>* labels = nullptr) const;
};

struct GaProductTrace {
  GroupAlgebraElement product;
  Cyclo trace_of_product;
};
GaProductTrace ga_multiply_trace(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

}  // namespace qgt
