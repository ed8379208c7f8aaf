/* C interface to the quantum dilogarithm identity engine.
 *
 * All functions are reentrant as long as each qdl_engine is used from one
 * thread at a time; create one engine per worker for parallel verification.
 * Strings returned through char** are heap-allocated and must be released
 * with qdl_string_free.
 */
#ifndef QDILOG_C_H
#define QDILOG_C_H

#ifndef QDL_EXPORT
#if defined(_WIN32)
#define QDL_EXPORT
#elif defined(__GNUC__)
#define QDL_EXPORT __attribute__((visibility("default")))
#else
#define QDL_EXPORT
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdl_status {
  QDL_OK = 0,
  QDL_ERR_NULL_ARGUMENT = 1,
  QDL_ERR_INVALID_ARGUMENT = 2,
  QDL_ERR_VERIFICATION_FAILED = 3,
  QDL_ERR_INTERNAL = 4
} qdl_status;

typedef struct qdl_engine qdl_engine;
typedef struct qdl_report qdl_report;

QDL_EXPORT const char* qdl_status_message(qdl_status status);

QDL_EXPORT qdl_status qdl_engine_create(qdl_engine** out);
QDL_EXPORT void qdl_engine_destroy(qdl_engine* engine);
/* Message of the last failing call on this engine; owned by the engine. */
QDL_EXPORT const char* qdl_last_error(const qdl_engine* engine);

/* Newline-separated identity ids ("A1-y" .. "D4-dgs"). */
QDL_EXPORT qdl_status qdl_list_identities(qdl_engine* engine, char** out);
/* Newline-separated closed-form family names for one case. */
QDL_EXPORT qdl_status qdl_list_families(qdl_engine* engine, const char* case_id, char** out);

/* Expands both sides of one identity at the given truncation degree.
 * Inequality is reported through the report, not as an error status. */
QDL_EXPORT qdl_status qdl_verify(qdl_engine* engine, const char* identity_id, int degree, qdl_report** out);
QDL_EXPORT void qdl_report_destroy(qdl_report* report);
QDL_EXPORT qdl_status qdl_report_equal(const qdl_report* report, int* equal);
/* Strings owned by the report. */
QDL_EXPORT const char* qdl_report_json(const qdl_report* report);
QDL_EXPORT const char* qdl_report_text(const qdl_report* report);

/* Convex-order prefix of one row ("forward"/"reversed" side). */
QDL_EXPORT qdl_status qdl_order_dump(qdl_engine* engine, const char* case_id, const char* side, int row,
                          int count, char** out);

/* Closed-form root-vector tree in nested-bracket notation. */
QDL_EXPORT qdl_status qdl_root_vector_dump(qdl_engine* engine, const char* case_id, const char* family,
                                int level, char** out);

/* Projected product of one side as a sorted (exponent, scalar) listing;
 * JSON when as_json is nonzero. */
QDL_EXPORT qdl_status qdl_expand_dump(qdl_engine* engine, const char* case_id, const char* side, int degree,
                           int as_json, char** out);

/* Property suites; *passed is 1 when every suite held. */
QDL_EXPORT qdl_status qdl_selftest(qdl_engine* engine, char** out_log, int* passed);

QDL_EXPORT void qdl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QDILOG_C_H */
