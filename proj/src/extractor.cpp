#include "extractor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qgt {

QuantumGroupModel QuantumGroupModel::named_model(const std::string& name, int n) {
  if (n < 1) throw input_error("named model needs N >= 1");
  QuantumGroupModel m;
  m.type = Type::Named;
  m.named = name;
  m.n = n;
  m.category = m.easy_category();
  return m;
}

QuantumGroupModel QuantumGroupModel::easy(CategorySpec spec, int n) {
  QuantumGroupModel m;
  m.type = Type::Easy;
  m.n = n;
  m.category = std::move(spec);
  return m;
}

QuantumGroupModel QuantumGroupModel::group_dual(Presentation gamma) {
  QuantumGroupModel m;
  m.type = Type::GroupDual;
  m.n = gamma.ngens;
  m.dual_gamma = std::move(gamma);
  return m;
}

QuantumGroupModel QuantumGroupModel::explicit_intertwiners(std::vector<TKL> items, int n) {
  QuantumGroupModel m;
  m.type = Type::Intertwiners;
  m.n = n;
  m.intertwiners = std::move(items);
  return m;
}

CategorySpec QuantumGroupModel::easy_category() const {
  if (type == Type::Easy) return category;
  if (type != Type::Named) throw input_error("model has no category of partitions");
  if (named == "o+") return builtin_category("NC2_uncolored");
  if (named == "u+") return builtin_category("NC2");
  if (named == "s+") return builtin_category("NC");
  if (named == "h+") return builtin_category("NC_even");
  throw input_error("unknown named model: " + named);
}

std::string QuantumGroupModel::describe() const {
  std::ostringstream os;
  switch (type) {
    case Type::Named:
      os << named << " (N=" << n << ")";
      return os.str();
    case Type::Easy:
      os << "easy:" << category.name << " (N=" << n << ")";
      return os.str();
    case Type::GroupDual:
      os << "dual:" << dual_gamma.to_text();
      return os.str();
    case Type::Intertwiners:
      os << "intertwiners[" << intertwiners.size() << "] (N=" << n << ")";
      return os.str();
  }
  return "?";
}

namespace {

struct LegRef {
  bool lower = false;
  Color color = Color::White;
  int position = 0;  // index into i (upper) or j (lower)
};

// factor of the literal one-block sum for summation row s and value v
inline Cyclo block_factor(const UnitaryMatrix& q, const LegRef& leg, int s, int v) {
  const Cyclo& e = q.at(s, v);
  bool conjugate = leg.lower != (leg.color == Color::Black);
  return conjugate ? e.conj() : e;
}

}  // namespace

Cyclo kronecker_delta_Q(const ColoredPartition& p, const UnitaryMatrix& q,
                        const std::vector<int>& i, const std::vector<int>& j) {
  if (static_cast<int>(i.size()) != p.k || static_cast<int>(j.size()) != p.l)
    throw input_error("kronecker_delta_Q: index arity mismatch");
  int n = q.size();
  for (int v : i)
    if (v < 1 || v > n) throw input_error("kronecker_delta_Q: index out of range");
  for (int v : j)
    if (v < 1 || v > n) throw input_error("kronecker_delta_Q: index out of range");
  Cyclo total(1L);
  for (const auto& block : p.blocks) {
    Cyclo sum(0L);
    for (int s = 0; s < n; ++s) {
      Cyclo term(1L);
      for (int leg : block) {
        LegRef ref;
        ref.lower = leg >= p.k;
        ref.color = p.colors[static_cast<size_t>(leg)];
        int v = ref.lower ? j[static_cast<size_t>(leg - p.k)] : i[static_cast<size_t>(leg)];
        term *= block_factor(q, ref, s, v - 1);
        if (term.is_zero()) break;
      }
      sum += term;
    }
    if (sum.is_zero()) return Cyclo(0L);
    total *= sum;
  }
  return total;
}

namespace {

struct BlockSupportEntry {
  std::vector<int> values;  // 1-based index value per block leg
  Cyclo symbol;
};

// Enumerate assignments with nonzero one-block sum, pruning on dead partial
// products across all summation rows.
std::vector<BlockSupportEntry> block_support(const UnitaryMatrix& q,
                                             const std::vector<LegRef>& legs) {
  int n = q.size();
  std::vector<BlockSupportEntry> out;
  std::vector<int> values(legs.size());
  std::vector<std::vector<Cyclo>> partial(legs.size() + 1, std::vector<Cyclo>(n));
  for (int s = 0; s < n; ++s) partial[0][s] = Cyclo(1L);

  std::function<void(size_t)> rec = [&](size_t depth) {
    if (depth == legs.size()) {
      Cyclo sum(0L);
      for (int s = 0; s < n; ++s) sum += partial[depth][s];
      if (!sum.is_zero()) out.push_back({values, sum});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      bool alive = false;
      for (int s = 0; s < n; ++s) {
        if (partial[depth][s].is_zero()) {
          partial[depth + 1][s] = Cyclo(0L);
          continue;
        }
        partial[depth + 1][s] = partial[depth][s] * block_factor(q, legs[depth], s, v - 1);
        if (!partial[depth + 1][s].is_zero()) alive = true;
      }
      if (!alive) continue;
      values[depth] = v;
      rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

std::string leg_signature(const std::vector<LegRef>& legs) {
  std::string s;
  for (const auto& leg : legs)
    s += static_cast<char>('0' + (leg.lower ? 2 : 0) + (leg.color == Color::Black ? 1 : 0));
  return s;
}

struct RelationCollector {
  int ngens;
  std::map<Word, RawRelation> dedup;
  size_t tuples = 0;

  explicit RelationCollector(int n) : ngens(n) {}

  void add(const Word& upper, const Word& lower, const std::string& provenance,
           const std::vector<int>& iv, const std::vector<int>& jv, const Cyclo& symbol) {
    ++tuples;
    Word relator = canonical_relator(upper * lower.inverse());
    if (relator.empty()) return;
    if (dedup.count(relator)) return;
    RawRelation r;
    r.relator = relator;
    r.equation = (upper.empty() ? "1" : upper.to_string()) + " = " +
                 (lower.empty() ? "1" : lower.to_string());
    r.provenance = provenance;
    r.upper_idx = iv;
    r.lower_idx = jv;
    r.symbol = symbol.to_string();
    dedup.emplace(relator, std::move(r));
  }

  std::vector<RawRelation> sorted() const {
    std::vector<RawRelation> out;
    for (const auto& [w, r] : dedup) out.push_back(r);
    std::sort(out.begin(), out.end(), [](const RawRelation& a, const RawRelation& b) {
      return word_less(a.relator, b.relator);
    });
    return out;
  }

  std::vector<Word> relators() const {
    std::vector<Word> out;
    for (const auto& [w, r] : dedup) out.push_back(w);
    return out;
  }
};

TorusReport finish_report(TorusReport rep, RelationCollector& coll, const UnitaryMatrix& q,
                          const Caps& caps, std::vector<Word> extra_relators = {}) {
  rep.raw = coll.sorted();
  rep.tuples_emitted = coll.tuples;
  std::vector<Word> rels = coll.relators();
  rels.insert(rels.end(), extra_relators.begin(), extra_relators.end());
  rep.raw_presentation = Presentation(rep.n, std::move(rels));
  SimplifyResult s = simplify_presentation(rep.raw_presentation);
  rep.presentation = s.pres;
  rep.gen_images = s.gen_images;
  rep.classification = recognize(rep.presentation, RecognizeCaps{caps.coset_cap});
  probe_conjectures(rep, q, caps);
  return rep;
}

}  // namespace

TorusReport extract_easy(const QuantumGroupModel& model, const UnitaryMatrix& q,
                         const Caps& caps) {
  CategorySpec spec = model.easy_category();
  int n = q.size();
  if (model.n && model.n != n) throw input_error("model size differs from Q size");
  int maxgen = 0;
  for (const auto& g : spec.generators) maxgen = std::max(maxgen, g.total_legs());
  if (caps.depth < maxgen) throw input_error("depth is below the largest generator");

  TorusReport rep;
  rep.model_desc = model.describe();
  rep.n = n;
  rep.depth = caps.depth;

  UnitaryMatrix q_eff = q.adjoint();  // Def-1.4 spinning convention
  std::vector<ColoredPartition> diagrams = saturate_category(spec, caps.depth);
  RelationCollector coll(n);
  std::map<std::string, std::vector<BlockSupportEntry>> support_cache;

  for (const auto& p : diagrams) {
    ++rep.diagrams_processed;
    // per-block supports
    std::vector<const std::vector<BlockSupportEntry>*> supports;
    bool dead = false;
    size_t product = 1;
    for (const auto& block : p.blocks) {
      std::vector<LegRef> legs;
      for (int leg : block) {
        LegRef ref;
        ref.lower = leg >= p.k;
        ref.position = ref.lower ? leg - p.k : leg;
        ref.color = p.colors[static_cast<size_t>(leg)];
        legs.push_back(ref);
      }
      std::string key = leg_signature(legs);
      auto it = support_cache.find(key);
      if (it == support_cache.end())
        it = support_cache.emplace(key, block_support(q_eff, legs)).first;
      if (it->second.empty()) {
        dead = true;
        break;
      }
      product *= it->second.size();
      supports.push_back(&it->second);
    }
    if (dead) continue;
    if (product > caps.index_cap) {
      rep.partial = true;
      rep.flags.push_back("index cap exceeded on " + p.format() + "; diagram skipped");
      continue;
    }
    // odometer over per-block support entries
    std::vector<size_t> pick(supports.size(), 0);
    std::vector<int> iv(static_cast<size_t>(p.k)), jv(static_cast<size_t>(p.l));
    for (;;) {
      Cyclo symbol(1L);
      for (size_t b = 0; b < supports.size(); ++b) {
        const BlockSupportEntry& e = (*supports[b])[pick[b]];
        const auto& block = p.blocks[b];
        for (size_t t = 0; t < block.size(); ++t) {
          int leg = block[t];
          if (leg < p.k)
            iv[static_cast<size_t>(leg)] = e.values[t];
          else
            jv[static_cast<size_t>(leg - p.k)] = e.values[t];
        }
        symbol *= e.symbol;
      }
      std::vector<int> up, low;
      for (int t = 0; t < p.k; ++t)
        up.push_back(p.colors[static_cast<size_t>(t)] == Color::White ? iv[static_cast<size_t>(t)]
                                                                      : -iv[static_cast<size_t>(t)]);
      for (int t = 0; t < p.l; ++t)
        low.push_back(p.colors[static_cast<size_t>(p.k + t)] == Color::White
                          ? jv[static_cast<size_t>(t)]
                          : -jv[static_cast<size_t>(t)]);
      coll.add(Word(std::move(up)), Word(std::move(low)), p.format(), iv, jv, symbol);
      // advance odometer
      size_t b = 0;
      while (b < pick.size()) {
        if (++pick[b] < supports[b]->size()) break;
        pick[b] = 0;
        ++b;
      }
      if (b == pick.size()) break;
      if (pick.empty()) break;
    }
    if (supports.empty()) {
      // diagram with no blocks: the empty diagram, nothing to emit
      continue;
    }
  }
  return finish_report(std::move(rep), coll, q, caps);
}

TorusReport extract_intertwiners(const QuantumGroupModel& model, const UnitaryMatrix& q,
                                 const Caps& caps) {
  int n = q.size();
  if (model.n && model.n != n) throw input_error("model size differs from Q size");
  TorusReport rep;
  rep.model_desc = model.describe();
  rep.n = n;
  rep.depth = 0;
  RelationCollector coll(n);
  UnitaryMatrix q_star = q.adjoint();
  int item = 0;
  for (const auto& [t, k, l] : model.intertwiners) {
    size_t need = 1;
    for (int e = 0; e < k + l; ++e) need *= static_cast<size_t>(n);
    if (need > caps.index_cap) {
      rep.partial = true;
      rep.flags.push_back("index cap exceeded on intertwiner " + std::to_string(item));
      ++item;
      continue;
    }
    // Def-1.4 conjugation: Q^{ox l} T (Q*)^{ox k}
    CycloMatrix m = conjugate_intertwiner(t, k, l, q_star);
    std::vector<int> iv(static_cast<size_t>(k)), jv(static_cast<size_t>(l));
    for (int row = 0; row < m.rows; ++row) {
      int r = row;
      for (int e = l - 1; e >= 0; --e) {
        jv[static_cast<size_t>(e)] = r % n + 1;
        r /= n;
      }
      for (int col = 0; col < m.cols; ++col) {
        if (m.at(row, col).is_zero()) continue;
        int c = col;
        for (int e = k - 1; e >= 0; --e) {
          iv[static_cast<size_t>(e)] = c % n + 1;
          c /= n;
        }
        std::vector<int> up(iv.begin(), iv.end()), low(jv.begin(), jv.end());
        coll.add(Word(std::move(up)), Word(std::move(low)),
                 "intertwiner:" + std::to_string(item), iv, jv, m.at(row, col));
      }
    }
    ++item;
  }
  return finish_report(std::move(rep), coll, q, caps);
}

TorusReport closed_form(ClosedFormKind kind, const UnitaryMatrix& q, const Presentation* gamma,
                        const Caps& caps) {
  int n = q.size();
  TorusReport rep;
  rep.n = n;
  rep.depth = 0;
  RelationCollector coll(n);
  std::vector<Word> extra;

  auto row_sum_product = [&](const std::vector<int>& rows) {
    // sum_l prod_r Q_{rl}
    Cyclo sum(0L);
    for (int l = 0; l < n; ++l) {
      Cyclo term(1L);
      for (int r : rows) {
        term *= q.at(r - 1, l);
        if (term.is_zero()) break;
      }
      sum += term;
    }
    return sum;
  };

  switch (kind) {
    case ClosedFormKind::U_plus:
      rep.model_desc = "closed-form u+ (N=" + std::to_string(n) + ")";
      break;  // no relations for any Q
    case ClosedFormKind::O_plus: {
      rep.model_desc = "closed-form o+ (N=" + std::to_string(n) + ")";
      CycloMatrix r = q.m * q.m.transpose();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (r.at(i - 1, j - 1).is_zero()) continue;
          coll.add(Word({i, j}), Word(), "R=QQ^t nonzero", {i, j}, {}, r.at(i - 1, j - 1));
        }
      break;
    }
    case ClosedFormKind::S_plus: {
      rep.model_desc = "closed-form s+ (N=" + std::to_string(n) + ")";
      for (int i = 1; i <= n; ++i) {
        Cyclo s = row_sum_product({i});
        if (!s.is_zero()) coll.add(Word({i}), Word(), "row-sum nonzero", {i}, {}, s);
      }
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          Cyclo s = row_sum_product({i, j});
          if (!s.is_zero()) coll.add(Word({i, j}), Word(), "pair-sum nonzero", {i, j}, {}, s);
        }
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k) {
            Cyclo s = row_sum_product({i, j, k});
            if (!s.is_zero())
              coll.add(Word({i, j, k}), Word(), "triple-sum nonzero", {i, j, k}, {}, s);
          }
      break;
    }
    case ClosedFormKind::GroupDual: {
      if (!gamma) throw input_error("group dual closed form needs a presentation");
      if (gamma->ngens != n) throw input_error("group dual rank differs from Q size");
      rep.model_desc = "closed-form dual:" + gamma->to_text();
      extra = gamma->relators;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            if (q.at(k - 1, i - 1).is_zero() || q.at(k - 1, j - 1).is_zero()) continue;
            Cyclo witness = q.at(k - 1, i - 1) * q.at(k - 1, j - 1);
            coll.add(Word({i}), Word({j}),
                     "joint column support at k=" + std::to_string(k), {i}, {j}, witness);
            break;
          }
        }
      break;
    }
  }
  return finish_report(std::move(rep), coll, q, caps, std::move(extra));
}

TorusReport extract(const QuantumGroupModel& model, const UnitaryMatrix& q, const Caps& caps) {
  switch (model.type) {
    case QuantumGroupModel::Type::Named:
    case QuantumGroupModel::Type::Easy:
      return extract_easy(model, q, caps);
    case QuantumGroupModel::Type::GroupDual:
      return closed_form(ClosedFormKind::GroupDual, q, &model.dual_gamma, caps);
    case QuantumGroupModel::Type::Intertwiners:
      return extract_intertwiners(model, q, caps);
  }
  throw input_error("unknown model type");
}

GroupAlgebraElement character_image(const TorusReport& report, const UnitaryMatrix& q,
                                    int power, const Caps& caps) {
  if (power < 1) throw input_error("character power must be >= 1");
  if (power > caps.character_power_bound) throw input_error("character power above bound");
  int n = q.size();
  if (n != report.n) throw input_error("character_image: Q size differs from report");
  auto nf = std::make_shared<NormalForms>(
      NormalForms::from_classification(report.classification, report.presentation.ngens));
  bool unreduced = !nf->valid();
  if (unreduced) *nf = NormalForms::free_group(report.presentation.ngens);
  GroupAlgebraElement chi = GroupAlgebraElement::zero(nf);
  chi.unreduced = unreduced;
  for (int i = 1; i <= n; ++i) {
    GroupAlgebraElement uii = GroupAlgebraElement::zero(nf);
    uii.unreduced = unreduced;
    for (int s = 1; s <= n; ++s) {
      Cyclo weight = q.at(s - 1, i - 1).conj() * q.at(s - 1, i - 1);
      if (weight.is_zero()) continue;
      uii.add_term(report.gen_images[static_cast<size_t>(s) - 1], weight);
    }
    chi = chi + uii.pow(power);
  }
  chi.unreduced = unreduced;
  return chi;
}

void probe_conjectures(TorusReport& report, const UnitaryMatrix& q, const Caps& caps) {
  GrowthAmenability ga = classification_verdicts(report.classification);
  report.verdicts.growth = ga.growth;
  report.verdicts.amenability = ga.amenability;
  report.verdicts.rule = ga.rule;

  // character-side evidence: images of chi^{(p)} for small p
  for (int p = 1; p <= std::min(3, caps.character_power_bound); ++p) {
    CharacterProbe probe;
    probe.power = p;
    GroupAlgebraElement img = character_image(report, q, p, caps);
    probe.nonzero = !img.is_zero();
    std::vector<std::string> labels;
    for (int g = 1; g <= report.presentation.ngens; ++g)
      labels.push_back(report.presentation.label(g));
    probe.rendered = img.to_string(&labels) + (img.unreduced ? "  [unreduced]" : "");
    report.verdicts.characters.push_back(std::move(probe));
  }

  // Kesten corroboration on the simplified group
  NormalForms nf =
      NormalForms::from_classification(report.classification, report.presentation.ngens);
  if (!nf.valid() || report.presentation.ngens == 0) return;
  WalkSpec spec;
  spec.nf = nf;
  spec.steps = standard_steps(nf);
  spec.horizon = caps.walk_horizon;
  spec.state_cap = caps.walk_state_cap;
  if (spec.steps.empty()) return;
  try {
    auto counts = return_counts(spec);
    auto bound = spectral_radius_estimate(counts, spec.steps.size());
    report.verdicts.kesten_ran = true;
    std::ostringstream os;
    os << bound.lower_bound.get_num().get_str() << "/" << bound.lower_bound.get_den().get_str();
    report.verdicts.kesten_lower_bound = os.str();
    report.verdicts.kesten_horizon = spec.horizon;
    report.verdicts.kesten_trend = bound.trend;
    report.verdicts.walk_steps_note =
        "uniform steps on the symmetrized standard generators (" +
        std::to_string(spec.steps.size()) + " steps)";
  } catch (const resource_error& e) {
    report.verdicts.kesten_trend = std::string("walk skipped: ") + e.what();
  }
  // growth fit wants enough radius to separate linear growth from the 1.05
  // ratio threshold; fall back to smaller balls when the state cap bites
  std::vector<Word> gens;
  for (int g = 1; g <= report.presentation.ngens; ++g) gens.push_back(Word({g}));
  for (int radius : {24, 12, 8, 5}) {
    try {
      auto growth = ball_sizes(nf, gens, radius, caps.walk_state_cap);
      report.verdicts.growth_fit = growth.fit + " (" + growth.diagnostics + ", radius " +
                                   std::to_string(radius) + ")";
      break;
    } catch (const resource_error&) {
      continue;
    }
  }
}

Cyclo reverify_raw_relation(const RawRelation& r, const UnitaryMatrix& q) {
  if (r.provenance.rfind("P(", 0) == 0) {
    ColoredPartition p = parse_partition(r.provenance);
    return kronecker_delta_Q(p, q.adjoint(), r.upper_idx, r.lower_idx);
  }
  throw input_error("raw relation has no partition provenance");
}

}  // namespace qgt
