#include "qgtorus.h"

#include <cstring>
#include <string>

#include "fixtures.hpp"
#include "report.hpp"

namespace {

thread_local std::string g_last_error;

struct Rendered {
  std::string json, text, gap;
  bool partial = false;
};

}  // namespace

struct qgt_result {
  Rendered r;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qgt_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return QGT_OK;
  } catch (const qgt::input_error& e) {
    g_last_error = e.what();
    return QGT_ERR_INPUT;
  } catch (const qgt::resource_error& e) {
    g_last_error = e.what();
    return QGT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QGT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* qgt_version(void) { return "qgtorus 1.0.0"; }

const char* qgt_last_error(void) { return g_last_error.c_str(); }

qgt_status qgt_extract(const char* config_json, qgt_result** out) {
  if (!config_json || !out) {
    g_last_error = "null argument";
    return QGT_ERR_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    qgt::JobConfig cfg = qgt::parse_job_config_json(config_json);
    qgt::TorusReport rep = qgt::run_extract(cfg);
    auto* res = new qgt_result();
    res->r.json = qgt::report_to_json(rep);
    res->r.text = qgt::report_to_text(rep);
    res->r.gap = qgt::report_to_gap(rep);
    res->r.partial = rep.partial;
    *out = res;
  });
}

qgt_status qgt_analyze(const char* presentation_text, qgt_result** out) {
  if (!presentation_text || !out) {
    g_last_error = "null argument";
    return QGT_ERR_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    qgt::AnalysisReport rep = qgt::run_analyze(presentation_text);
    auto* res = new qgt_result();
    res->r.json = qgt::analysis_to_json(rep);
    res->r.text = qgt::analysis_to_text(rep);
    res->r.gap = rep.presentation.to_gap();
    *out = res;
  });
}

qgt_status qgt_verify_paper(qgt_result** out) {
  if (!out) {
    g_last_error = "null argument";
    return QGT_ERR_INPUT;
  }
  *out = nullptr;
  bool failed = false;
  qgt_status st = guarded([&] {
    qgt::FixtureReport rep = qgt::run_paper_fixtures();
    auto* res = new qgt_result();
    res->r.json = qgt::fixtures_to_json(rep);
    res->r.text = qgt::fixtures_to_text(rep);
    res->r.gap = res->r.text;
    failed = rep.failed > 0;
    *out = res;
  });
  if (st != QGT_OK) return st;
  if (failed) {
    g_last_error = "paper fixture suite has failures";
    return QGT_ERR_FIXTURE;
  }
  return QGT_OK;
}

qgt_status qgt_probe(const char* config_json, qgt_result** out) {
  if (!config_json || !out) {
    g_last_error = "null argument";
    return QGT_ERR_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    qgt::JobConfig cfg = qgt::parse_job_config_json(config_json);
    qgt::ProbeReport rep = qgt::run_probe(cfg);
    auto* res = new qgt_result();
    res->r.json = qgt::probe_to_json(rep);
    res->r.text = qgt::probe_to_text(rep);
    res->r.gap = res->r.text;
    *out = res;
  });
}

qgt_status qgt_result_render(const qgt_result* result, const char* format, char** out_text) {
  if (!result || !format || !out_text) {
    g_last_error = "null argument";
    return QGT_ERR_INPUT;
  }
  std::string f = format;
  if (f == "json")
    *out_text = dup_string(result->r.json);
  else if (f == "text")
    *out_text = dup_string(result->r.text);
  else if (f == "gap")
    *out_text = dup_string(result->r.gap);
  else {
    g_last_error = "unknown format: " + f;
    return QGT_ERR_INPUT;
  }
  return QGT_OK;
}

int qgt_result_partial(const qgt_result* result) { return result && result->r.partial ? 1 : 0; }

void qgt_result_free(qgt_result* result) { delete result; }

void qgt_string_free(char* text) { std::free(text); }

}  // extern "C"
