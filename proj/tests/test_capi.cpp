// Exercises the shared-library C interface end to end.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "qdilog/qdilog_c.h"

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

}  // namespace

int main() {
  qdl_engine* engine = nullptr;
  expect(qdl_engine_create(&engine) == QDL_OK && engine, "engine_create");

  expect(qdl_engine_create(nullptr) == QDL_ERR_NULL_ARGUMENT, "null out pointer");
  expect(std::strlen(qdl_status_message(QDL_OK)) > 0, "status message");

  char* ids = nullptr;
  expect(qdl_list_identities(engine, &ids) == QDL_OK, "list identities");
  expect(ids && std::strstr(ids, "A1-y") && std::strstr(ids, "D4-dgs"), "identity listing");
  qdl_string_free(ids);

  char* families = nullptr;
  expect(qdl_list_families(engine, "A2", &families) == QDL_OK, "list families");
  expect(families && std::strstr(families, "d-a1-a2"), "family listing");
  qdl_string_free(families);
  expect(qdl_list_families(engine, "Z9", &families) == QDL_ERR_INVALID_ARGUMENT,
         "unknown case rejected");
  expect(std::strlen(qdl_last_error(engine)) > 0, "last error populated");

  qdl_report* report = nullptr;
  expect(qdl_verify(engine, "A1-y", 6, &report) == QDL_OK, "verify A1-y");
  int equal = 0;
  expect(qdl_report_equal(report, &equal) == QDL_OK && equal == 1, "A1-y equal at degree 6");
  expect(std::strstr(qdl_report_json(report), "\"equal\":true") != nullptr, "report json");
  expect(std::strstr(qdl_report_text(report), "A1-y") != nullptr, "report text");
  qdl_report_destroy(report);

  expect(qdl_verify(engine, "bogus", 6, &report) == QDL_ERR_INVALID_ARGUMENT, "bogus identity");
  expect(qdl_verify(engine, "A1-y", -1, &report) == QDL_ERR_INVALID_ARGUMENT, "negative degree");

  char* order = nullptr;
  expect(qdl_order_dump(engine, "A1", "forward", 0, 3, &order) == QDL_OK, "order dump");
  expect(order && std::string(order) == "d-a1, 2d-a1, 3d-a1", "order dump content");
  qdl_string_free(order);
  expect(qdl_order_dump(engine, "A1", "sideways", 0, 3, &order) == QDL_ERR_INVALID_ARGUMENT,
         "bad side rejected");

  char* tree = nullptr;
  expect(qdl_root_vector_dump(engine, "A2", "d-a1-a2", 2, &tree) == QDL_OK, "root vector dump");
  expect(tree && std::string(tree) == "[[0,1],[0,2]]", "root vector content");
  qdl_string_free(tree);

  char* expansion = nullptr;
  expect(qdl_expand_dump(engine, "A1", "forward", 3, 1, &expansion) == QDL_OK, "expand dump");
  expect(expansion && expansion[0] == '[', "expand json shape");
  qdl_string_free(expansion);

  char* log = nullptr;
  int passed = 0;
  expect(qdl_selftest(engine, &log, &passed) == QDL_OK && passed == 1, "selftest");
  qdl_string_free(log);

  qdl_engine_destroy(engine);
  if (failures == 0) std::printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
