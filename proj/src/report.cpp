#include "report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "unitary_family.hpp"

namespace qgt {

using json = nlohmann::ordered_json;

namespace {

QuantumGroupModel model_from_json(const json& j) {
  std::string kind = j.value("kind", "named");
  if (kind == "named") {
    return QuantumGroupModel::named_model(j.at("name").get<std::string>(), j.at("N").get<int>());
  }
  if (kind == "easy") {
    std::vector<ColoredPartition> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_partition(g.get<std::string>()));
    bool colored = false;
    for (const auto& g : gens)
      for (Color c : g.colors)
        if (c == Color::Black) colored = true;
    if (j.contains("colored")) colored = j.at("colored").get<bool>();
    CategorySpec spec(j.value("name", "custom"), std::move(gens), colored);
    return QuantumGroupModel::easy(std::move(spec), j.at("N").get<int>());
  }
  if (kind == "dual") {
    return QuantumGroupModel::group_dual(Presentation::parse(j.at("presentation").get<std::string>()));
  }
  if (kind == "intertwiners") {
    std::vector<QuantumGroupModel::TKL> items;
    int n = j.at("N").get<int>();
    for (const auto& it : j.at("items")) {
      QuantumGroupModel::TKL tkl;
      tkl.k = it.at("k").get<int>();
      tkl.l = it.at("l").get<int>();
      // matrix literal: rows ';', entries ','; intertwiners need not be
      // unitary, so this does not go through parse_matrix_spec
      std::string lit = it.at("matrix").get<std::string>();
      std::vector<std::vector<Cyclo>> rows;
      std::istringstream is(lit);
      std::string rowtext;
      while (std::getline(is, rowtext, ';')) {
        std::vector<Cyclo> row;
        std::istringstream ris(rowtext);
        std::string tok;
        while (std::getline(ris, tok, ',')) row.push_back(Cyclo::parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
      }
      if (rows.empty()) throw input_error("empty intertwiner matrix");
      CycloMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
      for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw input_error("ragged intertwiner matrix");
        for (size_t c = 0; c < rows[r].size(); ++c)
          m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
      }
      tkl.t = std::move(m);
      items.push_back(std::move(tkl));
    }
    return QuantumGroupModel::explicit_intertwiners(std::move(items), n);
  }
  throw input_error("unknown model kind: " + kind);
}

void caps_from_json(const json& j, Caps& caps) {
  if (j.contains("depth")) caps.depth = j.at("depth").get<int>();
  if (j.contains("index_cap")) caps.index_cap = j.at("index_cap").get<size_t>();
  if (j.contains("coset_cap")) caps.coset_cap = j.at("coset_cap").get<size_t>();
  if (j.contains("walk_state_cap")) caps.walk_state_cap = j.at("walk_state_cap").get<size_t>();
  if (j.contains("horizon")) caps.walk_horizon = j.at("horizon").get<int>();
  if (j.contains("character_power_bound"))
    caps.character_power_bound = j.at("character_power_bound").get<int>();
  if (caps.depth < 2) throw input_error("depth must be >= 2");
  if (caps.index_cap == 0 || caps.coset_cap == 0 || caps.walk_state_cap == 0)
    throw input_error("caps must be positive");
}

}  // namespace

JobConfig parse_job_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("config JSON parse error: ") + e.what());
  }
  JobConfig cfg;
  try {
    cfg.model = model_from_json(j.at("model"));
    cfg.q_spec = j.value("Q", "");
    if (cfg.q_spec.empty()) cfg.q_spec = "id:" + std::to_string(cfg.model.n);
    caps_from_json(j, cfg.caps);
    if (j.contains("caps")) caps_from_json(j.at("caps"), cfg.caps);
    cfg.format = j.value("format", "json");
    cfg.seed = j.value("seed", 0ull);
    cfg.family = j.value("family", "compositions");
  } catch (const json::exception& e) {
    throw input_error(std::string("config error: ") + e.what());
  }
  if (cfg.format != "json" && cfg.format != "text" && cfg.format != "gap")
    throw input_error("format must be json, text or gap");
  return cfg;
}

JobConfig parse_job_config_file(const std::string& text) {
  // flat key-value lines mirroring the CLI flags
  json j = json::object();
  std::istringstream is(text);
  std::string line;
  json model = json::object();
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "model") {
      model["kind"] = "named";
      model["name"] = value;
    } else if (key == "N") {
      model["N"] = std::stoi(value);
    } else if (key == "Q") {
      j["Q"] = value;
    } else if (key == "depth" || key == "horizon") {
      j[key] = std::stoi(value);
    } else if (key == "index_cap" || key == "coset_cap" || key == "walk_state_cap") {
      j[key] = static_cast<size_t>(std::stoull(value));
    } else if (key == "format" || key == "family") {
      j[key] = value;
    } else if (key == "seed") {
      j[key] = static_cast<uint64_t>(std::stoull(value));
    } else {
      throw input_error("unknown config key: " + key);
    }
  }
  j["model"] = model;
  return parse_job_config_json(j.dump());
}

namespace {

json presentation_to_json(const Presentation& p) {
  json out = json::object();
  json gens = json::array();
  for (int g = 1; g <= p.ngens; ++g) gens.push_back(p.label(g));
  out["generators"] = gens;
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(r.to_string());
  out["relators"] = rels;
  out["text"] = p.to_text();
  return out;
}

json classification_to_json(const Classification& c) {
  json out = json::object();
  out["kind"] = c.to_string();
  if (auto fpc = c.as_free_product_orders()) {
    json orders = json::array();
    for (long o : *fpc) orders.push_back(o);
    out["free_product_orders"] = orders;
  }
  json ab = json::array();
  for (const auto& d : c.ab_invariants) ab.push_back(d.get_str());
  out["abelianization"] = ab;
  if (!c.evidence.empty()) out["evidence"] = c.evidence;
  return out;
}

json verdicts_to_json(const Verdicts& v) {
  json out = json::object();
  out["growth"] = v.growth;
  out["amenability"] = v.amenability;
  out["rule"] = v.rule;
  if (v.kesten_ran) {
    json k = json::object();
    k["lower_bound"] = v.kesten_lower_bound;
    k["horizon"] = v.kesten_horizon;
    k["trend"] = v.kesten_trend;
    k["steps"] = v.walk_steps_note;
    out["kesten"] = k;
    out["growth_fit"] = v.growth_fit;
  }
  json chars = json::array();
  for (const auto& c : v.characters) {
    json e = json::object();
    e["power"] = c.power;
    e["nonzero"] = c.nonzero;
    e["image"] = c.rendered;
    chars.push_back(e);
  }
  out["character_images"] = chars;
  return out;
}

json report_to_json_obj(const TorusReport& r) {
  json out = json::object();
  out["schema_version"] = r.schema_version;
  out["model"] = r.model_desc;
  out["Q"] = r.q_spec;
  out["N"] = r.n;
  out["depth"] = r.depth;
  out["seed"] = r.seed;
  json raw = json::array();
  for (const auto& rel : r.raw) {
    json e = json::object();
    e["relator"] = rel.relator.to_string();
    e["equation"] = rel.equation;
    e["provenance"] = rel.provenance;
    e["upper"] = rel.upper_idx;
    e["lower"] = rel.lower_idx;
    e["symbol"] = rel.symbol;
    raw.push_back(e);
  }
  out["raw_relations"] = raw;
  out["presentation"] = presentation_to_json(r.presentation);
  out["gap"] = r.presentation.to_gap();
  out["classification"] = classification_to_json(r.classification);
  out["verdicts"] = verdicts_to_json(r.verdicts);
  out["flags"] = r.flags;
  json stats = json::object();
  stats["diagrams_processed"] = r.diagrams_processed;
  stats["tuples_emitted"] = r.tuples_emitted;
  stats["raw_relation_count"] = r.raw.size();
  stats["partial"] = r.partial;
  out["stats"] = stats;
  return out;
}

}  // namespace

std::string report_to_json(const TorusReport& r) { return report_to_json_obj(r).dump(2) + "\n"; }

std::string report_to_text(const TorusReport& r) {
  std::ostringstream os;
  os << "model:           " << r.model_desc << "\n";
  os << "Q:               " << r.q_spec << "\n";
  os << "depth:           " << r.depth << "\n";
  os << "raw relations:   " << r.raw.size() << " (from " << r.tuples_emitted
     << " nonvanishing tuples over " << r.diagrams_processed << " diagrams)\n";
  os << "presentation:    " << r.presentation.to_text() << "\n";
  os << "classification:  " << r.classification.to_string() << "\n";
  os << "growth:          " << r.verdicts.growth << "\n";
  os << "amenability:     " << r.verdicts.amenability << "  [" << r.verdicts.rule << "]\n";
  if (r.verdicts.kesten_ran) {
    os << "kesten bound:    " << r.verdicts.kesten_lower_bound << " at horizon "
       << r.verdicts.kesten_horizon << " (" << r.verdicts.kesten_trend << ")\n";
    os << "growth fit:      " << r.verdicts.growth_fit << "\n";
  }
  for (const auto& c : r.verdicts.characters)
    os << "chi^(" << c.power << "):         " << c.rendered << (c.nonzero ? "" : "  [zero]")
       << "\n";
  for (const auto& f : r.flags) os << "flag:            " << f << "\n";
  if (r.partial) os << "partial:         true (resource cap hit)\n";
  return os.str();
}

std::string report_to_gap(const TorusReport& r) {
  std::ostringstream os;
  os << "# " << r.model_desc << "  Q = " << r.q_spec << "\n";
  os << "# classification: " << r.classification.to_string() << "\n";
  os << r.presentation.to_gap();
  return os.str();
}

std::string render_report(const TorusReport& r, const std::string& format) {
  if (format == "json") return report_to_json(r);
  if (format == "text") return report_to_text(r);
  if (format == "gap") return report_to_gap(r);
  throw input_error("unknown format: " + format);
}

TorusReport run_extract(const JobConfig& config) {
  UnitaryMatrix q = parse_matrix_spec(config.q_spec);
  TorusReport rep = extract(config.model, q, config.caps);
  rep.q_spec = config.q_spec;
  rep.seed = config.seed;
  return rep;
}

AnalysisReport run_analyze(const std::string& text, const Caps& caps) {
  AnalysisReport rep;
  rep.input = text;
  Presentation p = Presentation::parse(text);
  SimplifyResult s = simplify_presentation(p);
  rep.presentation = s.pres;
  rep.ab_invariants = abelianization(s.pres);
  rep.classification = recognize(s.pres, RecognizeCaps{caps.coset_cap});
  GrowthAmenability ga = classification_verdicts(rep.classification);
  rep.verdicts.growth = ga.growth;
  rep.verdicts.amenability = ga.amenability;
  rep.verdicts.rule = ga.rule;
  NormalForms nf = NormalForms::from_classification(rep.classification, rep.presentation.ngens);
  if (nf.valid() && rep.presentation.ngens >= 1) {
    WalkSpec spec;
    spec.nf = nf;
    spec.steps = standard_steps(nf);
    spec.horizon = caps.walk_horizon;
    spec.state_cap = caps.walk_state_cap;
    if (!spec.steps.empty()) {
      try {
        auto counts = return_counts(spec);
        auto bound = spectral_radius_estimate(counts, spec.steps.size());
        rep.verdicts.kesten_ran = true;
        rep.verdicts.kesten_lower_bound =
            bound.lower_bound.get_num().get_str() + "/" + bound.lower_bound.get_den().get_str();
        rep.verdicts.kesten_horizon = spec.horizon;
        rep.verdicts.kesten_trend = bound.trend;
        std::vector<Word> gens;
        for (int g = 1; g <= rep.presentation.ngens; ++g) gens.push_back(Word({g}));
        auto growth = ball_sizes(nf, gens, 12, caps.walk_state_cap);
        rep.verdicts.growth_fit = growth.fit + " (" + growth.diagnostics + ")";
      } catch (const resource_error&) {
      }
    }
  }
  return rep;
}

std::string analysis_to_json(const AnalysisReport& r) {
  json out = json::object();
  out["schema_version"] = r.schema_version;
  out["input"] = r.input;
  out["presentation"] = presentation_to_json(r.presentation);
  out["gap"] = r.presentation.to_gap();
  json ab = json::array();
  for (const auto& d : r.ab_invariants) ab.push_back(d.get_str());
  out["abelianization"] = ab;
  out["classification"] = classification_to_json(r.classification);
  out["verdicts"] = verdicts_to_json(r.verdicts);
  return out.dump(2) + "\n";
}

std::string analysis_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input:           " << r.input << "\n";
  os << "simplified:      " << r.presentation.to_text() << "\n";
  os << "abelianization:  [";
  for (size_t i = 0; i < r.ab_invariants.size(); ++i) {
    if (i) os << ",";
    os << r.ab_invariants[i].get_str();
  }
  os << "]\n";
  os << "classification:  " << r.classification.to_string() << "\n";
  os << "growth:          " << r.verdicts.growth << "\n";
  os << "amenability:     " << r.verdicts.amenability << "  [" << r.verdicts.rule << "]\n";
  if (r.verdicts.kesten_ran)
    os << "kesten bound:    " << r.verdicts.kesten_lower_bound << " at horizon "
       << r.verdicts.kesten_horizon << "\n";
  if (!r.verdicts.growth_fit.empty()) os << "growth fit:      " << r.verdicts.growth_fit << "\n";
  return os.str();
}

std::string render_analysis(const AnalysisReport& r, const std::string& format) {
  if (format == "json") return analysis_to_json(r);
  if (format == "gap") return r.presentation.to_gap();
  return analysis_to_text(r);
}

ProbeReport run_probe(const JobConfig& config) {
  ProbeReport rep;
  rep.model_desc = config.model.describe();
  rep.family = config.family;
  rep.seed = config.seed;
  int n = config.model.n;
  if (n < 1) throw input_error("probe needs a model size");

  std::vector<std::pair<std::string, UnitaryMatrix>> qs;
  if (config.family == "compositions") {
    for (const auto& comp : compositions_of(n))
      qs.emplace_back(composition_spec(comp), fourier_blocks(comp));
  } else if (config.family.rfind("sample:", 0) == 0) {
    size_t count = std::stoul(config.family.substr(7));
    SeededRng rng(config.seed);
    for (size_t i = 0; i < count; ++i) {
      SampledUnitary s = sample_structured_unitary(n, rng);
      qs.emplace_back(s.spec, s.q);
    }
  } else {
    throw input_error("unknown probe family: " + config.family);
  }

  for (const auto& [spec, q] : qs) {
    TorusReport r = extract(config.model, q, config.caps);
    ProbeEntry e;
    e.q_spec = spec;
    e.classification = r.classification.to_string();
    e.growth = r.verdicts.growth;
    e.amenability = r.verdicts.amenability;
    if (e.amenability == "non_amenable") ++rep.non_amenable;
    if (e.amenability == "unknown") ++rep.unknown;
    rep.entries.push_back(std::move(e));
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const ProbeEntry& a, const ProbeEntry& b) { return a.q_spec < b.q_spec; });
  return rep;
}

std::string probe_to_json(const ProbeReport& r) {
  json out = json::object();
  out["schema_version"] = r.schema_version;
  out["model"] = r.model_desc;
  out["family"] = r.family;
  out["seed"] = r.seed;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je = json::object();
    je["Q"] = e.q_spec;
    je["classification"] = e.classification;
    je["growth"] = e.growth;
    je["amenability"] = e.amenability;
    entries.push_back(je);
  }
  out["entries"] = entries;
  json summary = json::object();
  summary["count"] = r.entries.size();
  summary["non_amenable"] = r.non_amenable;
  summary["unknown"] = r.unknown;
  out["summary"] = summary;
  return out.dump(2) + "\n";
}

std::string probe_to_text(const ProbeReport& r) {
  std::ostringstream os;
  os << "model:  " << r.model_desc << "   family: " << r.family << "   seed: " << r.seed << "\n";
  for (const auto& e : r.entries)
    os << "  " << e.q_spec << "  ->  " << e.classification << "  (" << e.growth << ", "
       << e.amenability << ")\n";
  os << "summary: " << r.entries.size() << " unitaries, " << r.non_amenable << " non-amenable, "
     << r.unknown << " unknown\n";
  return os.str();
}

std::string render_probe(const ProbeReport& r, const std::string& format) {
  if (format == "json") return probe_to_json(r);
  return probe_to_text(r);
}

}  // namespace qgt
