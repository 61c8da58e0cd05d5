#include "group_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qgt {

NormalForms NormalForms::free_group(int rank) {
  return free_product_cyclic(std::vector<long>(static_cast<size_t>(rank), 0L));
}

NormalForms NormalForms::free_product_cyclic(std::vector<long> orders_by_gen) {
  NormalForms nf;
  nf.kind_ = Kind::FreeProduct;
  nf.ngens_ = static_cast<int>(orders_by_gen.size());
  nf.orders_ = std::move(orders_by_gen);
  return nf;
}

NormalForms NormalForms::free_abelian(int rank) {
  NormalForms nf;
  nf.kind_ = Kind::FreeAbelian;
  nf.ngens_ = rank;
  return nf;
}

NormalForms NormalForms::coset_table(std::shared_ptr<CosetTable> t) {
  NormalForms nf;
  nf.kind_ = Kind::CosetTable;
  nf.ngens_ = t->ngens;
  nf.table_ = std::move(t);
  return nf;
}

NormalForms NormalForms::from_classification(const Classification& c, int ngens) {
  using K = Classification::Kind;
  switch (c.kind) {
    case K::Trivial:
      return free_product_cyclic(std::vector<long>(static_cast<size_t>(ngens), 1L));
    case K::Free:
      return free_group(ngens);
    case K::FiniteCyclic:
    case K::FreeProductCyclic: {
      std::vector<long> by_gen = c.orders_by_gen;
      if (static_cast<int>(by_gen.size()) != ngens) by_gen.assign(static_cast<size_t>(ngens), 0L);
      return free_product_cyclic(std::move(by_gen));
    }
    case K::FreeAbelian:
      return free_abelian(ngens);
    case K::FiniteOrder:
      if (c.table) return coset_table(c.table);
      return NormalForms();
    case K::Unknown:
      return NormalForms();
  }
  return NormalForms();
}

namespace {

// syllable view: (generator, exponent)
std::vector<std::pair<int, long>> to_syllables(const Word& w) {
  std::vector<std::pair<int, long>> out;
  for (int x : w.ls) {
    int g = std::abs(x);
    long e = x > 0 ? 1 : -1;
    if (!out.empty() && out.back().first == g)
      out.back().second += e;
    else
      out.emplace_back(g, e);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  return out;
}

long reduce_exponent(long e, long order) {
  if (order == 0) return e;
  e %= order;
  if (e < 0) e += order;
  // representative in (-n/2, n/2]
  if (2 * e > order) e -= order;
  return e;
}

}  // namespace

Word NormalForms::normalize(const Word& w) const {
  switch (kind_) {
    case Kind::None:
      return free_reduce(w);
    case Kind::FreeAbelian: {
      std::vector<long> exp(static_cast<size_t>(ngens_), 0);
      for (int x : w.ls) exp[static_cast<size_t>(std::abs(x)) - 1] += (x > 0 ? 1 : -1);
      std::vector<int> out;
      for (int g = 1; g <= ngens_; ++g) {
        long e = exp[static_cast<size_t>(g) - 1];
        for (long i = 0; i < std::labs(e); ++i) out.push_back(e > 0 ? g : -g);
      }
      return Word(std::move(out));
    }
    case Kind::CosetTable: {
      int c = table_->trace(free_reduce(w));
      return table_->rep[static_cast<size_t>(c)];
    }
    case Kind::FreeProduct: {
      // Stack of syllables; invariant: adjacent stack entries carry distinct
      // generators and nonzero reduced exponents. A merge that cancels to
      // zero exposes the previous top, which the next pushed syllable may
      // merge with in turn.
      std::vector<std::pair<int, long>> stack;
      auto push = [&](int g, long e) {
        if (!stack.empty() && stack.back().first == g) {
          e += stack.back().second;
          stack.pop_back();
        }
        e = reduce_exponent(e, orders_[static_cast<size_t>(g) - 1]);
        if (e != 0) stack.emplace_back(g, e);
      };
      for (const auto& [g, e] : to_syllables(free_reduce(w))) {
        if (g > ngens_) throw input_error("normalize: generator out of range");
        push(g, e);
      }
      std::vector<int> out;
      for (const auto& [g, e] : stack)
        for (long i = 0; i < std::labs(e); ++i) out.push_back(e > 0 ? g : -g);
      return Word(std::move(out));
    }
  }
  return free_reduce(w);
}

GroupAlgebraElement GroupAlgebraElement::zero(std::shared_ptr<const NormalForms> nf) {
  GroupAlgebraElement e;
  e.nf = std::move(nf);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::monomial(std::shared_ptr<const NormalForms> nf,
                                                  const Word& w, const Cyclo& c) {
  GroupAlgebraElement e = zero(std::move(nf));
  e.add_term(w, c);
  return e;
}

void GroupAlgebraElement::add_term(const Word& w, const Cyclo& c) {
  if (c.is_zero()) return;
  Word n = nf && nf->valid() ? nf->normalize(w) : free_reduce(w);
  auto it = terms.find(n);
  if (it == terms.end()) {
    terms.emplace(n, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  r.unreduced = unreduced || o.unreduced;
  for (const auto& [w, c] : o.terms) r.add_term(w, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = zero(nf);
  r.unreduced = unreduced || o.unreduced;
  for (const auto& [w1, c1] : terms)
    for (const auto& [w2, c2] : o.terms) r.add_term(w1 * w2, c1 * c2);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::pow(int p) const {
  if (p < 0) throw input_error("group algebra power must be nonnegative");
  GroupAlgebraElement r = monomial(nf, Word(), Cyclo(1L));
  for (int i = 0; i < p; ++i) r = r * *this;
  r.unreduced = unreduced;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::star() const {
  GroupAlgebraElement r = zero(nf);
  r.unreduced = unreduced;
  for (const auto& [w, c] : terms) r.add_term(w.inverse(), c.conj());
  return r;
}

Cyclo GroupAlgebraElement::trace() const {
  auto it = terms.find(Word());
  return it == terms.end() ? Cyclo(0L) : it->second;
}

std::string GroupAlgebraElement::to_string(const std::vector<std::string>* labels) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (!first)
      os << (neg ? " - " : " + ");
    else if (neg)
      os << "-";
    if (neg) cs = cs.substr(1);
    first = false;
    bool needs_parens = cs.find('+') != std::string::npos || cs.find(" - ") != std::string::npos;
    if (w.empty()) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
      std::vector<std::string> labs;
      if (labels)
        labs = *labels;
      else
        for (int g = 1; g <= (nf ? nf->ngens() : 0); ++g) labs.push_back(default_label(g, nf->ngens()));
      os << compress_word_string(w, labs);
    }
  }
  return os.str();
}

GaProductTrace ga_multiply_trace(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (!x.nf || !x.nf->valid() || !y.nf || !y.nf->valid())
    throw input_error("group algebra product needs an ambient with normal forms");
  GroupAlgebraElement p = x * y;
  return {p, p.trace()};
}

}  // namespace qgt
