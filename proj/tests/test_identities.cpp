#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "qdilog/identities.hpp"

using namespace qdilog;

TEST_CASE("catalog") {
  auto ids = identity_ids();
  CHECK(ids.size() == 8);
  for (const auto& id : ids) {
    CHECK(known_identity(id));
    CHECK(default_degree(id) == 12);
  }
  CHECK_FALSE(known_identity("E8-y"));
  CHECK_THROWS_AS(verify("E8-y", 4), std::invalid_argument);
}

TEST_CASE("build_U") {
  auto ring = xw_ring(true);
  // U_{0,1} = E(w_2)
  CHECK(build_U(0, 1, 8) ==
        dilog_E(SkewSeries::monomial(ring, 8, {0, 1}, QScalar(1))));
  // U_{2,-1} argument is q^2 x_1^2 x_2^{-1} = :w_1^2 w_2^3:
  SkewSeries u = build_U(2, -1, 8);
  CHECK(u.coeff({2, 3}) ==
        normal_order_scalar(*ring, {2, 3}) * (-QScalar::q_power(1)) /
            (QScalar(1) - QScalar::q_power(2)));
  // U_{1,-2} is a pure w_1 series
  SkewSeries v = build_U(1, -2, 9);
  for (const auto& [e, c] : v.terms()) CHECK(e[1] == 0);
  CHECK_THROWS_AS(build_U(1, -3, 8), std::invalid_argument);
}

TEST_CASE("y-ring identities at reduced degree") {
  for (const char* id : {"A1-y", "A2-y", "A3-y", "D4-y"}) {
    auto rep = verify(id, 6);
    CHECK(rep.equal);
    CHECK(rep.lhs_terms == rep.rhs_terms);
    CHECK(!rep.witness.has_value());
  }
}

TEST_CASE("wall-crossing identities at reduced degree") {
  for (const char* id : {"A1-dgs", "A2-dgs", "A3-dgs", "D4-dgs"}) {
    auto rep = verify(id, 7);
    CHECK(rep.equal);
  }
}

TEST_CASE("psi functoriality: mapped y-sides equal the direct factor products") {
  for (const char* id : {"A1", "A2"}) {
    ThetaContext ctx(OrderCase::get(id));
    int N = 8;
    SkewSeries y_lhs = theta_image(ctx, Side::forward, N);
    SkewSeries y_rhs = theta_image(ctx, Side::reversed, N);
    CHECK(dgs_image_of_y_side(id, y_lhs, N) == dgs_lhs(id, N));
    CHECK(dgs_image_of_y_side(id, y_rhs, N) == dgs_rhs(id, N));
  }
}

TEST_CASE("mutation control: a dropped factor is detected with a witness") {
  // Rebuild the A1 right side with the E(:y_0^2 y_1:) factor omitted; the
  // comparison must fail and report a witness monomial.
  ThetaContext ctx(OrderCase::get("A1"));
  int N = 6;
  SkewSeries lhs = theta_image(ctx, Side::forward, N);
  SkewSeries mutated = SkewSeries::unit(ctx.y(), N);
  for (int m = 0; 2 * m + 1 <= N; ++m) {
    if (m == 1) continue;  // drop E(:y_0^2 y_1:)
    mutated = mutated *
              dilog_E(normal_ordered_monomial(ctx.y(), N, {m + 1, m}, QScalar(1)));
  }
  mutated = mutated * imaginary_block_closed(ctx, N);
  for (int m = N; m >= 0; --m) {
    if (2 * m + 1 > N) continue;
    mutated = mutated *
              dilog_E(normal_ordered_monomial(ctx.y(), N, {m, m + 1}, QScalar(1)));
  }
  CHECK(mutated != lhs);
  bool found_witness = false;
  for (const auto& [e, c] : lhs.terms())
    if (!(mutated.coeff(e) == c)) found_witness = true;
  CHECK(found_witness);
}

TEST_CASE("q <-> q^-1 with product reversal maps verified identities to verified ones") {
  for (const char* id : {"A1", "A2"}) {
    ThetaContext ctx(OrderCase::get(id));
    int N = 6;
    SkewSeries lhs = theta_image(ctx, Side::forward, N);
    SkewSeries rhs = theta_image(ctx, Side::reversed, N);
    REQUIRE(lhs == rhs);
    // The anti-automorphism transports the equality; each mirrored side is
    // again a product of dilogarithm factors in the reversed order.
    CHECK(anti_bar(lhs) == anti_bar(rhs));
  }
  // Factorwise shape of the mirrored left side, pinned for A1.
  ThetaContext a1(OrderCase::get("A1"));
  int N = 6;
  SkewSeries lhs = theta_image(a1, Side::forward, N);
  SkewSeries e1 = dilog_E(normal_ordered_monomial(a1.y(), N, {0, 1}, QScalar(1)));
  SkewSeries e0 = dilog_E(normal_ordered_monomial(a1.y(), N, {1, 0}, QScalar(1)));
  CHECK(anti_bar(e1 * e0) == anti_bar(e0) * anti_bar(e1));
  CHECK(anti_bar(lhs) == anti_bar(e0) * anti_bar(e1));
}

TEST_CASE("report serialization") {
  auto rep = verify("A1-y", 5);
  CHECK(rep.equal);
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["id"] == "A1-y");
  CHECK(j["degree"] == 5);
  CHECK(j["equal"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j["millis"].is_number());
  CHECK(rep.to_text().find("A1-y") != std::string::npos);

  // failing report carries a witness
  VerificationReport bad;
  bad.id = "A1-y";
  bad.degree = 3;
  bad.equal = false;
  bad.witness = VerificationWitness{{1, 1}, "0", "1", "y-ring"};
  auto jb = nlohmann::json::parse(bad.to_json());
  CHECK(jb["witness"]["monomial"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("series dumps are sorted and stable") {
  ThetaContext ctx(OrderCase::get("A1"));
  SkewSeries s = theta_image(ctx, Side::forward, 3);
  std::string text = series_dump_text(s);
  CHECK(text.find("[0,0] 1") == 0);
  auto j = nlohmann::json::parse(series_dump_json(s));
  CHECK(j.is_array());
  CHECK(j.size() == s.term_count());
  std::vector<std::vector<int>> exps;
  for (const auto& item : j) exps.push_back(item["exp"].get<std::vector<int>>());
  CHECK(std::is_sorted(exps.begin(), exps.end()));
}

TEST_CASE("selftest suites pass") {
  auto res = run_selftest(7);
  CHECK(res.passed);
  CHECK(res.log.find("FAIL") == std::string::npos);
}
