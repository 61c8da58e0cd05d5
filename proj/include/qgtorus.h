/* qgtorus — exact maximal-torus computations for compact quantum group
 * models: C API of the shared library.
 *
 * All functions return a qgt_status; results come back as opaque handles
 * that render to JSON/text/GAP strings. Strings returned through out
 * parameters are heap-allocated and must be released with
 * qgt_string_free. Handles must be released with qgt_result_free.
 * On any non-OK status, qgt_last_error() describes the failure
 * (thread-local).
 */
#ifndef QGTORUS_H
#define QGTORUS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgt_status {
  QGT_OK = 0,
  QGT_ERR_INPUT = 2,    /* malformed config, matrix, or presentation */
  QGT_ERR_RESOURCE = 3, /* a configured cap was exceeded */
  QGT_ERR_FIXTURE = 4,  /* verify-paper found failing fixtures */
  QGT_ERR_INTERNAL = 5
} qgt_status;

typedef struct qgt_result qgt_result; /* opaque */

const char* qgt_version(void);
const char* qgt_last_error(void);

/* Torus extraction. config_json schema (see README):
 *   { "model": {"kind":"named","name":"s+","N":4}, "Q": "fourier:2,2",
 *     "depth": 6, "format": "json", "seed": 0, "caps": {...} } */
qgt_status qgt_extract(const char* config_json, qgt_result** out);

/* Finitely presented group analysis of "<a,b|a^2,b^3>". */
qgt_status qgt_analyze(const char* presentation_text, qgt_result** out);

/* The paper-example fixture suite. Returns QGT_ERR_FIXTURE when a fixture
 * fails; FLAGGED fixtures do not fail. The result renders either way. */
qgt_status qgt_verify_paper(qgt_result** out);

/* Sweep a family of exact unitaries; config as for qgt_extract plus
 * "family": "compositions" | "sample:<count>". */
qgt_status qgt_probe(const char* config_json, qgt_result** out);

/* Render a result. format: "json" | "text" | "gap" (gap applies to
 * extraction/analysis results). */
qgt_status qgt_result_render(const qgt_result* result, const char* format, char** out_text);

/* 1 when the underlying extraction was truncated by a resource cap. */
int qgt_result_partial(const qgt_result* result);

void qgt_result_free(qgt_result* result);
void qgt_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QGTORUS_H */
