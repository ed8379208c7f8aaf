#include "qdilog/qdilog_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "qdilog/identities.hpp"

using namespace qdilog;

struct qdl_engine {
  std::string last_error;
};

struct qdl_report {
  VerificationReport report;
  std::string json;
  std::string text;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qdl_status fail(qdl_engine* engine, qdl_status status, const std::string& message) {
  if (engine) engine->last_error = message;
  return status;
}

template <typename Fn>
qdl_status guarded(qdl_engine* engine, Fn&& fn) {
  if (!engine) return QDL_ERR_NULL_ARGUMENT;
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(engine, QDL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(engine, QDL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(engine, QDL_ERR_INTERNAL, "unknown error");
  }
}

Side parse_side(const char* side) {
  std::string s = side ? side : "";
  if (s == "forward") return Side::forward;
  if (s == "reversed") return Side::reversed;
  throw std::invalid_argument("side must be 'forward' or 'reversed'");
}

}  // namespace

extern "C" {

const char* qdl_status_message(qdl_status status) {
  switch (status) {
    case QDL_OK: return "ok";
    case QDL_ERR_NULL_ARGUMENT: return "null argument";
    case QDL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QDL_ERR_VERIFICATION_FAILED: return "verification failed";
    case QDL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

qdl_status qdl_engine_create(qdl_engine** out) {
  if (!out) return QDL_ERR_NULL_ARGUMENT;
  *out = new (std::nothrow) qdl_engine();
  return *out ? QDL_OK : QDL_ERR_INTERNAL;
}

void qdl_engine_destroy(qdl_engine* engine) { delete engine; }

const char* qdl_last_error(const qdl_engine* engine) {
  return engine ? engine->last_error.c_str() : "";
}

qdl_status qdl_list_identities(qdl_engine* engine, char** out) {
  return guarded(engine, [&]() {
    if (!out) return QDL_ERR_NULL_ARGUMENT;
    std::ostringstream s;
    for (const auto& id : identity_ids()) s << id << "\n";
    *out = dup_string(s.str());
    return QDL_OK;
  });
}

qdl_status qdl_list_families(qdl_engine* engine, const char* case_id, char** out) {
  return guarded(engine, [&]() {
    if (!out || !case_id) return QDL_ERR_NULL_ARGUMENT;
    auto families = closed_form_families(case_id);
    if (families.empty()) throw std::invalid_argument("unknown case id");
    std::ostringstream s;
    for (const auto& f : families) s << f << "\n";
    *out = dup_string(s.str());
    return QDL_OK;
  });
}

qdl_status qdl_verify(qdl_engine* engine, const char* identity_id, int degree, qdl_report** out) {
  return guarded(engine, [&]() {
    if (!out || !identity_id) return QDL_ERR_NULL_ARGUMENT;
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    auto rep = std::make_unique<qdl_report>();
    rep->report = verify(identity_id, degree);
    rep->json = rep->report.to_json();
    rep->text = rep->report.to_text();
    *out = rep.release();
    return QDL_OK;
  });
}

void qdl_report_destroy(qdl_report* report) { delete report; }

qdl_status qdl_report_equal(const qdl_report* report, int* equal) {
  if (!report || !equal) return QDL_ERR_NULL_ARGUMENT;
  *equal = report->report.equal ? 1 : 0;
  return QDL_OK;
}

const char* qdl_report_json(const qdl_report* report) {
  return report ? report->json.c_str() : "";
}

const char* qdl_report_text(const qdl_report* report) {
  return report ? report->text.c_str() : "";
}

qdl_status qdl_order_dump(qdl_engine* engine, const char* case_id, const char* side, int row,
                          int count, char** out) {
  return guarded(engine, [&]() {
    if (!out || !case_id) return QDL_ERR_NULL_ARGUMENT;
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    const OrderCase& cs = OrderCase::get(case_id);
    const SidePart& part =
        parse_side(side) == Side::forward ? cs.minus_part() : cs.plus_part();
    if (row < 0 || row >= static_cast<int>(part.rows.size()))
      throw std::invalid_argument("row out of range");
    std::ostringstream s;
    bool first = true;
    for (const auto& entry : row_prefix(cs, part, row, count)) {
      if (!first) s << ", ";
      first = false;
      s << render_root(cs.cartan(), entry.root);
    }
    *out = dup_string(s.str());
    return QDL_OK;
  });
}

qdl_status qdl_root_vector_dump(qdl_engine* engine, const char* case_id, const char* family,
                                int level, char** out) {
  return guarded(engine, [&]() {
    if (!out || !case_id || !family) return QDL_ERR_NULL_ARGUMENT;
    CommTree t = closed_form_tree(case_id, family, level);
    *out = dup_string(t.to_string());
    return QDL_OK;
  });
}

qdl_status qdl_expand_dump(qdl_engine* engine, const char* case_id, const char* side, int degree,
                           int as_json, char** out) {
  return guarded(engine, [&]() {
    if (!out || !case_id) return QDL_ERR_NULL_ARGUMENT;
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    ThetaContext ctx(OrderCase::get(case_id));
    SkewSeries s = theta_image(ctx, parse_side(side), degree);
    *out = dup_string(as_json ? series_dump_json(s) : series_dump_text(s));
    return QDL_OK;
  });
}

qdl_status qdl_selftest(qdl_engine* engine, char** out_log, int* passed) {
  return guarded(engine, [&]() {
    if (!out_log || !passed) return QDL_ERR_NULL_ARGUMENT;
    SelfTestResult res = run_selftest();
    *out_log = dup_string(res.log);
    *passed = res.passed ? 1 : 0;
    return QDL_OK;
  });
}

void qdl_string_free(char* s) { std::free(s); }

}  // extern "C"
