// Command-line front end. Links only the C API of the engine library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "qdilog/qdilog_c.h"

namespace {

struct EngineHandle {
  qdl_engine* engine = nullptr;
  EngineHandle() { qdl_engine_create(&engine); }
  ~EngineHandle() { qdl_engine_destroy(engine); }
};

struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { qdl_string_free(data); }
  std::string str() const { return data ? data : ""; }
};

[[noreturn]] void die(qdl_engine* engine, qdl_status status) {
  std::cerr << "error: " << qdl_status_message(status);
  if (engine && qdl_last_error(engine)[0]) std::cerr << ": " << qdl_last_error(engine);
  std::cerr << std::endl;
  std::exit(2);
}

int thread_budget(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("QDILOG_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<int>(std::min<std::size_t>(n, jobs));
}

int run_verify(const std::vector<std::string>& cases, int degree, const std::string& format,
               const std::string& out_path) {
  std::vector<std::string> ids = cases;
  if (ids.empty()) {
    EngineHandle eng;
    OwnedString listing;
    qdl_status st = qdl_list_identities(eng.engine, &listing.data);
    if (st != QDL_OK) die(eng.engine, st);
    std::string all = listing.str();
    std::size_t pos = 0;
    while (pos < all.size()) {
      std::size_t nl = all.find('\n', pos);
      if (nl == std::string::npos) break;
      if (nl > pos) ids.push_back(all.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }

  struct Slot {
    std::string json, text;
    int equal = 0;
    bool failed = false;
    std::string error;
  };
  std::vector<Slot> slots(ids.size());
  std::mutex next_mutex;
  std::size_t next = 0;
  auto worker = [&]() {
    EngineHandle eng;
    for (;;) {
      std::size_t k;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= ids.size()) return;
        k = next++;
      }
      qdl_report* rep = nullptr;
      qdl_status st = qdl_verify(eng.engine, ids[k].c_str(), degree, &rep);
      if (st != QDL_OK) {
        slots[k].failed = true;
        slots[k].error = qdl_last_error(eng.engine);
        continue;
      }
      qdl_report_equal(rep, &slots[k].equal);
      slots[k].json = qdl_report_json(rep);
      slots[k].text = qdl_report_text(rep);
      qdl_report_destroy(rep);
    }
  };
  std::vector<std::thread> pool;
  int nthreads = thread_budget(ids.size());
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::ostringstream out;
  if (format == "json") {
    out << "[";
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (k) out << ",";
      out << (slots[k].failed ? std::string("{\"id\":\"") + ids[k] + "\",\"error\":true}"
                              : slots[k].json);
    }
    out << "]\n";
  } else {
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k].failed)
        out << ids[k] << ": error: " << slots[k].error << "\n";
      else
        out << slots[k].text << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << std::endl;
      return 2;
    }
    file << out.str();
  }
  for (const auto& slot : slots) {
    if (slot.failed) return 2;
    if (!slot.equal) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the wall-crossing quantum dilogarithm identities"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "expand and compare both sides of identities");
  std::vector<std::string> verify_cases;
  int verify_degree = 12;
  std::string verify_format = "text", verify_out;
  verify_cmd->add_option("--case", verify_cases, "identity ids (default: all)");
  verify_cmd->add_option("--degree", verify_degree, "truncation degree")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify_out, "write the report to a file");

  auto* order_cmd = app.add_subcommand("order", "dump a convex-order prefix");
  std::string order_case, order_side = "forward";
  int order_count = 10, order_row = 0;
  order_cmd->add_option("--case", order_case, "case id (A1, A2, A3, D4)")->required();
  order_cmd->add_option("--count", order_count, "number of roots")->check(CLI::NonNegativeNumber);
  order_cmd->add_option("--side", order_side, "forward or reversed")
      ->check(CLI::IsMember({"forward", "reversed"}));
  order_cmd->add_option("--row", order_row, "row of the order (default 0)");

  auto* rv_cmd = app.add_subcommand("root-vector", "dump a closed-form root-vector tree");
  std::string rv_case, rv_family;
  int rv_level = 1;
  bool rv_list = false;
  rv_cmd->add_option("--case", rv_case, "case id")->required();
  rv_cmd->add_option("--family", rv_family, "family name (see --list)");
  rv_cmd->add_option("--level", rv_level, "level m within the family");
  rv_cmd->add_flag("--list", rv_list, "list family names for the case");

  auto* expand_cmd = app.add_subcommand("expand", "dump the projected product of one side");
  std::string expand_case, expand_side = "forward", expand_format = "text";
  int expand_degree = 6;
  expand_cmd->add_option("--case", expand_case, "case id")->required();
  expand_cmd->add_option("--side", expand_side, "forward or reversed")
      ->check(CLI::IsMember({"forward", "reversed"}));
  expand_cmd->add_option("--degree", expand_degree, "truncation degree")
      ->check(CLI::NonNegativeNumber);
  expand_cmd->add_option("--format", expand_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify_cmd->parsed())
    return run_verify(verify_cases, verify_degree, verify_format, verify_out);

  EngineHandle eng;
  if (order_cmd->parsed()) {
    OwnedString out;
    qdl_status st = qdl_order_dump(eng.engine, order_case.c_str(), order_side.c_str(), order_row,
                                   order_count, &out.data);
    if (st != QDL_OK) die(eng.engine, st);
    std::cout << out.str() << std::endl;
    return 0;
  }
  if (rv_cmd->parsed()) {
    if (rv_list) {
      OwnedString out;
      qdl_status st = qdl_list_families(eng.engine, rv_case.c_str(), &out.data);
      if (st != QDL_OK) die(eng.engine, st);
      std::cout << out.str();
      return 0;
    }
    if (rv_family.empty()) {
      std::cerr << "error: --family is required (or use --list)" << std::endl;
      return 2;
    }
    OwnedString out;
    qdl_status st =
        qdl_root_vector_dump(eng.engine, rv_case.c_str(), rv_family.c_str(), rv_level, &out.data);
    if (st != QDL_OK) die(eng.engine, st);
    std::cout << out.str() << std::endl;
    return 0;
  }
  if (expand_cmd->parsed()) {
    OwnedString out;
    qdl_status st = qdl_expand_dump(eng.engine, expand_case.c_str(), expand_side.c_str(),
                                    expand_degree, expand_format == "json" ? 1 : 0, &out.data);
    if (st != QDL_OK) die(eng.engine, st);
    std::cout << out.str();
    return 0;
  }
  if (selftest_cmd->parsed()) {
    OwnedString log;
    int passed = 0;
    qdl_status st = qdl_selftest(eng.engine, &log.data, &passed);
    if (st != QDL_OK) die(eng.engine, st);
    std::cout << log.str();
    std::cout << (passed ? "selftest: all suites passed" : "selftest: FAILURES") << std::endl;
    return passed ? 0 : 1;
  }
  return 2;
}
