#pragma once

#include <string>

#include "extractor.hpp"

namespace qgt {

struct JobConfig {
  QuantumGroupModel model;
  std::string q_spec;
  Caps caps;
  std::string format = "json";  // json | text | gap
  uint64_t seed = 0;
  std::string family = "compositions";  // probe families: compositions | sample:<count>
};

// Parse a job configuration from JSON (see README for the schema) or from a
// flat key=value config file.
JobConfig parse_job_config_json(const std::string& json_text);
JobConfig parse_job_config_file(const std::string& file_text);

std::string report_to_json(const TorusReport& r);
std::string report_to_text(const TorusReport& r);
std::string report_to_gap(const TorusReport& r);
std::string render_report(const TorusReport& r, const std::string& format);

// extract pipeline: build Q, run the model, attach config echoes.
TorusReport run_extract(const JobConfig& config);

// analyze pipeline: parse a presentation and run the fp-group toolkit.
struct AnalysisReport {
  std::string schema_version = "1";
  std::string input;
  Presentation presentation;   // simplified
  std::vector<Int> ab_invariants;
  Classification classification;
  Verdicts verdicts;
};
AnalysisReport run_analyze(const std::string& presentation_text, const Caps& caps = {});
std::string analysis_to_json(const AnalysisReport& r);
std::string analysis_to_text(const AnalysisReport& r);
std::string render_analysis(const AnalysisReport& r, const std::string& format);

// probe pipeline: sweep a family of exact unitaries, one extraction each.
struct ProbeEntry {
  std::string q_spec;
  std::string classification;
  std::string growth;
  std::string amenability;
};
struct ProbeReport {
  std::string schema_version = "1";
  std::string model_desc;
  std::string family;
  uint64_t seed = 0;
  std::vector<ProbeEntry> entries;
  size_t non_amenable = 0;
  size_t unknown = 0;
};
ProbeReport run_probe(const JobConfig& config);
std::string probe_to_json(const ProbeReport& r);
std::string probe_to_text(const ProbeReport& r);
std::string render_probe(const ProbeReport& r, const std::string& format);

}  // namespace qgt
