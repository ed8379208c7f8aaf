#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdilog/theta.hpp"

namespace qdilog {

struct VerificationWitness {
  std::vector<int> exponents;
  std::string lhs, rhs;
  std::string stage;  // which comparison produced the witness
};

struct VerificationReport {
  std::string id;
  int degree = 0;
  bool equal = false;
  std::size_t lhs_terms = 0, rhs_terms = 0;
  std::optional<VerificationWitness> witness;
  long millis = 0;

  std::string to_json() const;
  std::string to_text() const;
};

// Catalog: the four y-ring identities and their wall-crossing images.
std::vector<std::string> identity_ids();
bool known_identity(const std::string& id);
int default_degree(const std::string& id);

// Expands both sides exactly and compares structurally. For the -dgs cases
// the report is equal only when the mapped y-ring sides also agree with the
// independently built factor products.
VerificationReport verify(const std::string& id, int degree);

// U_{m,n} = E(q^{-mn} x_1^m x_2^n), presented on the w-ring; requires the
// monomial to stay in the ring, i.e. n + 2m >= 0.
SkewSeries build_U(int m, int n, int degree);

// Directly built sides of the wall-crossing identities.
SkewSeries dgs_lhs(const std::string& case_id, int degree);
SkewSeries dgs_rhs(const std::string& case_id, int degree);

// Per-case substitution matrix onto the x-ring.
const IntMatrix& dgs_substitution(const std::string& case_id);

// psi_R followed by the w-rewrite.
SkewSeries dgs_image_of_y_side(const std::string& case_id, const SkewSeries& y_side, int degree);

// Property suites behind the CLI selftest: dilogarithm kernel identities,
// series ring laws, normal-order preservation under substitution, and the
// convexity window checks on long order prefixes.
struct SelfTestResult {
  bool passed = false;
  std::string log;
};
SelfTestResult run_selftest(unsigned seed = 20260809);

// Stable text/JSON serialization of a series: (exponent vector, scalar)
// pairs sorted lexicographically.
std::string series_dump_text(const SkewSeries& s);
std::string series_dump_json(const SkewSeries& s);

}  // namespace qdilog
