#include "qdilog/identities.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qdilog {

namespace {

struct CaseNames {
  std::string case_id;  // A1..D4
  bool dgs = false;
};

CaseNames split_id(const std::string& id) {
  auto pos = id.find('-');
  if (pos == std::string::npos) throw std::invalid_argument("unknown identity id: " + id);
  CaseNames n;
  n.case_id = id.substr(0, pos);
  std::string kind = id.substr(pos + 1);
  if (kind == "dgs")
    n.dgs = true;
  else if (kind != "y")
    throw std::invalid_argument("unknown identity id: " + id);
  bool ok = false;
  for (const auto& c : OrderCase::ids()) ok = ok || (c == n.case_id);
  if (!ok) throw std::invalid_argument("unknown identity id: " + id);
  return n;
}

int w_arg_degree(int m, int n) { return 3 * m + n; }

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& c : OrderCase::ids()) ids.push_back(c + "-y");
  for (const auto& c : OrderCase::ids()) ids.push_back(c + "-dgs");
  return ids;
}

bool known_identity(const std::string& id) {
  try {
    split_id(id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int default_degree(const std::string& id) {
  split_id(id);
  return 12;
}

SkewSeries build_U(int m, int n, int degree) {
  if (n + 2 * m < 0) throw std::invalid_argument("build_U: monomial leaves the w-ring");
  std::vector<int> w = {m, n + 2 * m};
  return dilog_E(normal_ordered_monomial(xw_ring(true), degree, w, QScalar(1)));
}

const IntMatrix& dgs_substitution(const std::string& case_id) {
  static const IntMatrix a1 = {{0, 2}, {1, 3}};
  static const IntMatrix a2 = {{0, 1, 1}, {1, 2, 1}};
  static const IntMatrix a3 = {{0, 1, 0, 1}, {1, 1, 1, 1}};
  static const IntMatrix d4 = {{0, 0, 1, 0, 0}, {1, 1, 0, 1, 1}};
  if (case_id == "A1") return a1;
  if (case_id == "A2") return a2;
  if (case_id == "A3") return a3;
  if (case_id == "D4") return d4;
  throw std::invalid_argument("dgs_substitution: unknown case " + case_id);
}

SkewSeries dgs_image_of_y_side(const std::string& case_id, const SkewSeries& y_side, int degree) {
  SkewSeries x = psi_R(y_side, dgs_substitution(case_id), xw_ring(false), degree);
  return chi_rewrite(x, degree);
}

namespace {

SkewSeries dgs_middle(const std::string& case_id, int degree) {
  auto ring = xw_ring(true);
  SkewSeries acc = SkewSeries::unit(ring, degree);
  int u10 = case_id == "A1" ? 0 : (case_id == "A2" ? 2 : (case_id == "A3" ? 4 : 6));
  for (int k = 0; k < u10; ++k) acc = acc * build_U(1, 0, degree);
  // E(-q x_1^2)^{-1} E(-q^{-1} x_1^2)^{-1}; x_1^2 is :w_1^2 w_2^4:.
  SkewSeries x1sq = normal_ordered_monomial(ring, degree, {2, 4}, QScalar(1));
  acc = acc * dilog_E_inverse(x1sq.scaled(-QScalar::q_power(1)));
  acc = acc * dilog_E_inverse(x1sq.scaled(-QScalar::q_power(-1)));
  return acc;
}

}  // namespace

SkewSeries dgs_lhs(const std::string& case_id, int degree) {
  auto ring = xw_ring(true);
  SkewSeries acc = SkewSeries::unit(ring, degree);
  auto mul = [&](int m, int n, int count = 1) {
    for (int k = 0; k < count; ++k) acc = acc * build_U(m, n, degree);
  };
  if (case_id == "A1") {
    mul(2, -1);
    mul(0, 1);
  } else if (case_id == "A2") {
    mul(1, -1);
    mul(1, 0);
    mul(0, 1);
  } else if (case_id == "A3") {
    mul(1, -1, 2);
    mul(0, 1, 2);
  } else if (case_id == "D4") {
    mul(1, -2);
    mul(0, 1, 4);
  } else {
    throw std::invalid_argument("dgs_lhs: unknown case " + case_id);
  }
  return acc;
}

SkewSeries dgs_rhs(const std::string& case_id, int degree) {
  auto ring = xw_ring(true);
  SkewSeries acc = SkewSeries::unit(ring, degree);
  auto mul = [&](int m, int n, int count = 1) {
    if (w_arg_degree(m, n) > degree) return;
    for (int k = 0; k < count; ++k) acc = acc * build_U(m, n, degree);
  };
  // Ascending U_{m,n} factor pattern per case; the tail mirrors the head
  // with n -> -n and is multiplied in descending order.
  std::vector<std::array<int, 3>> tail;  // (m, n, count), ascending
  auto tail_push = [&](int m, int n, int count = 1) {
    if (w_arg_degree(m, n) <= degree) tail.push_back({m, n, count});
  };
  if (case_id == "A1") {
    for (int k = 0; 6 * k + 1 <= degree; ++k) mul(2 * k, 1);
    for (int k = 1; 6 * k - 1 <= degree; ++k) tail_push(2 * k, -1);
  } else if (case_id == "A2") {
    for (int k = 0; 3 * k + 1 <= degree; ++k) mul(k, 1);
    for (int k = 1; 3 * k - 1 <= degree; ++k) tail_push(k, -1);
  } else if (case_id == "A3") {
    for (int k = 0; 3 * k + 1 <= degree; ++k) mul(k, 1, 2);
    for (int k = 1; 3 * k - 1 <= degree; ++k) tail_push(k, -1, 2);
  } else if (case_id == "D4") {
    for (int k = 0; 6 * k + 1 <= degree; ++k) {
      mul(2 * k, 1, 4);
      mul(4 * k + 1, 2);
      mul(2 * k + 1, 1, 4);
      mul(4 * k + 3, 2);
    }
    for (int k = 0; 6 * k + 1 <= degree; ++k) {
      tail_push(4 * k + 1, -2);
      tail_push(2 * k + 1, -1, 4);
      tail_push(4 * k + 3, -2);
      tail_push(2 * k + 2, -1, 4);
    }
  } else {
    throw std::invalid_argument("dgs_rhs: unknown case " + case_id);
  }
  acc = acc * dgs_middle(case_id, degree);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it)
    for (int k = 0; k < (*it)[2]; ++k) acc = acc * build_U((*it)[0], (*it)[1], degree);
  return acc;
}

namespace {

std::optional<VerificationWitness> first_difference(const SkewSeries& lhs, const SkewSeries& rhs,
                                                    const std::string& stage) {
  if (lhs == rhs) return std::nullopt;
  std::map<std::vector<int>, int> keys;
  for (const auto& [e, c] : lhs.terms()) keys.emplace(e, 0);
  for (const auto& [e, c] : rhs.terms()) keys.emplace(e, 0);
  for (const auto& [e, unused] : keys) {
    QScalar a = lhs.coeff(e), b = rhs.coeff(e);
    if (!(a == b)) {
      VerificationWitness w;
      w.exponents = e;
      w.lhs = a.to_string();
      w.rhs = b.to_string();
      w.stage = stage;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify(const std::string& id, int degree) {
  CaseNames names = split_id(id);
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = id;
  rep.degree = degree;

  ThetaContext ctx(OrderCase::get(names.case_id));
  SkewSeries y_lhs = theta_image(ctx, Side::forward, degree);
  SkewSeries y_rhs = theta_image(ctx, Side::reversed, degree);

  if (!names.dgs) {
    rep.lhs_terms = y_lhs.term_count();
    rep.rhs_terms = y_rhs.term_count();
    rep.witness = first_difference(y_lhs, y_rhs, "y-ring");
    rep.equal = !rep.witness.has_value();
  } else {
    SkewSeries img_lhs = dgs_image_of_y_side(names.case_id, y_lhs, degree);
    SkewSeries img_rhs = dgs_image_of_y_side(names.case_id, y_rhs, degree);
    SkewSeries direct_lhs = dgs_lhs(names.case_id, degree);
    SkewSeries direct_rhs = dgs_rhs(names.case_id, degree);
    rep.lhs_terms = direct_lhs.term_count();
    rep.rhs_terms = direct_rhs.term_count();
    rep.witness = first_difference(direct_lhs, direct_rhs, "dgs");
    if (!rep.witness) rep.witness = first_difference(img_lhs, direct_lhs, "psi-image lhs");
    if (!rep.witness) rep.witness = first_difference(img_rhs, direct_rhs, "psi-image rhs");
    rep.equal = !rep.witness.has_value();
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

std::string series_dump_text(const SkewSeries& s) {
  std::ostringstream out;
  for (const auto& [e, c] : s.terms()) {
    out << "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ",";
      out << e[i];
    }
    out << "] " << c.to_string() << "\n";
  }
  return out.str();
}

std::string series_dump_json(const SkewSeries& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) j.push_back({{"exp", e}, {"coeff", c.to_string()}});
  return j.dump();
}

namespace {

struct SuiteLog {
  bool passed = true;
  std::ostringstream out;
  void record(const std::string& name, bool ok) {
    passed = passed && ok;
    out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  }
};

SkewSeries random_series(SkewRingPtr ring, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SkewSeries s(ring, degree);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> e(static_cast<std::size_t>(ring->vars));
    for (auto& x : e) x = expd(rng);
    s.add_term(e, QScalar(coeff(rng)) * QScalar::q_power(expd(rng) - 1));
  }
  return s;
}

bool dilog_kernel_suite(SuiteLog& log, int degree) {
  auto ring = xw_ring(false);
  SkewSeries x = SkewSeries::monomial(ring, degree, {1, 0}, QScalar(1));
  SkewSeries unit = SkewSeries::unit(ring, degree);
  QScalar qm1 = QScalar::q_power(1) - QScalar::q_power(-1);
  bool a = exp_q_of(x) == dilog_E(x.scaled(qm1));
  log.record("exp_q(x) = E((q - q^-1) x)", a);
  SkewSeries li(ring, degree);
  SkewSeries pw = unit;
  for (int m = 1; m <= degree; ++m) {
    pw = pw * x;
    li = li + pw.scaled(QScalar::rational(-1, m) / (QScalar(1) - QScalar::q_power(m)));
  }
  bool b = exp_of(li) == pochhammer_inf(x, 1);
  log.record("exp(sum -x^m/(m(1-q^m))) = (x; q)_inf", b);
  bool c = (unit + x.scaled(QScalar::q_power(1))) * dilog_E(x) ==
           dilog_E(x.scaled(QScalar::q_power(2)));
  log.record("(1 + qx) E(x) = E(q^2 x)", c);
  return a && b && c;
}

bool ring_law_suite(SuiteLog& log, std::mt19937_64& rng, int samples) {
  auto ring = y_ring(QuiverOrientation(OrderCase::get("A2").cartan(),
                                       OrderCase::get("A2").b_matrix()));
  bool ok = true;
  for (int t = 0; t < samples; ++t) {
    SkewSeries a = random_series(ring, 6, rng);
    SkewSeries b = random_series(ring, 6, rng);
    SkewSeries c = random_series(ring, 6, rng);
    ok = ok && ((a * b) * c == a * (b * c)) && (a * (b + c) == a * b + a * c);
  }
  log.record("series ring laws on random samples", ok);
  return ok;
}

bool normord_suite(SuiteLog& log, std::mt19937_64& rng, int samples) {
  // Pool of admissible substitutions: the case matrices, optionally composed
  // with powers of T = [[1,0],[2,1]] (an automorphism of the target data).
  struct Sub {
    std::string case_id;
    IntMatrix R;
  };
  std::vector<Sub> pool;
  auto compose_T = [](const IntMatrix& r, int k) {
    IntMatrix out = r;
    for (int rep = 0; rep < k; ++rep) {
      for (std::size_t j = 0; j < out[0].size(); ++j)
        out[1][j] += 2 * out[0][j];
    }
    return out;
  };
  for (const auto& id : OrderCase::ids())
    for (int k = 0; k <= 2; ++k) pool.push_back({id, compose_T(dgs_substitution(id), k)});
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> expd(0, 3);
  auto xr = xw_ring(false);
  bool ok = true;
  for (int t = 0; t < samples; ++t) {
    const Sub& sub = pool[pick(rng)];
    const OrderCase& cs = OrderCase::get(sub.case_id);
    QuiverOrientation quiver(cs.cartan(), cs.b_matrix());
    auto yr = y_ring(quiver);
    std::vector<int> m(static_cast<std::size_t>(cs.cartan().rank()));
    for (auto& v : m) v = expd(rng);
    std::vector<int> img(2, 0);
    for (int i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        img[static_cast<std::size_t>(i)] += sub.R[static_cast<std::size_t>(i)][j] * m[j];
    int src_deg = 0, dst_deg = 0;
    for (int v : m) src_deg += v;
    for (int v : img) dst_deg += v;
    SkewSeries no = normal_ordered_monomial(yr, src_deg, m, QScalar(1));
    ok = ok && psi_R(no, sub.R, xr, dst_deg) ==
                   normal_ordered_monomial(xr, dst_deg, img, QScalar(1));
  }
  log.record("psi_R preserves normal ordering on random admissible samples", ok);
  return ok;
}

bool convexity_suite(SuiteLog& log) {
  bool all = true;
  for (const auto& id : OrderCase::ids()) {
    const OrderCase& cs = OrderCase::get(id);
    for (const SidePart* part : {&cs.minus_part(), &cs.plus_part()}) {
      std::vector<RootVector> seq;
      for (int r = 0; r < static_cast<int>(part->rows.size()); ++r)
        for (const auto& entry : row_prefix(cs, *part, r, r == 0 ? 50 : 25))
          seq.push_back(entry.root);
      std::map<std::vector<int>, std::size_t> pos;
      bool ok = true;
      for (std::size_t k = 0; k < seq.size(); ++k) {
        ok = ok && seq[k].is_positive();
        ok = ok && pos.emplace(seq[k].coords(), k).second;
      }
      for (std::size_t i = 0; i < seq.size() && ok; ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
          auto it = pos.find((seq[i] + seq[j]).coords());
          if (it == pos.end()) continue;
          if (!(i < it->second && it->second < j)) {
            ok = false;
            break;
          }
        }
      all = all && ok;
    }
  }
  log.record("convexity window on 50-root order prefixes", all);
  return all;
}

}  // namespace

SelfTestResult run_selftest(unsigned seed) {
  SuiteLog log;
  std::mt19937_64 rng(seed);
  dilog_kernel_suite(log, 20);
  ring_law_suite(log, rng, 100);
  normord_suite(log, rng, 100);
  convexity_suite(log);
  SelfTestResult res;
  res.passed = log.passed;
  res.log = log.out.str();
  return res;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["degree"] = degree;
  j["equal"] = equal;
  j["lhs_terms"] = lhs_terms;
  j["rhs_terms"] = rhs_terms;
  if (witness) {
    j["witness"] = {{"monomial", witness->exponents},
                    {"lhs", witness->lhs},
                    {"rhs", witness->rhs},
                    {"stage", witness->stage}};
  } else {
    j["witness"] = nullptr;
  }
  j["millis"] = millis;
  return j.dump();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << id << " @ degree " << degree << ": " << (equal ? "equal" : "NOT EQUAL") << " ("
      << lhs_terms << "/" << rhs_terms << " terms, " << millis << " ms)";
  if (witness) {
    out << "\n  first difference at [";
    for (std::size_t i = 0; i < witness->exponents.size(); ++i) {
      if (i) out << ",";
      out << witness->exponents[i];
    }
    out << "] (" << witness->stage << "): lhs = " << witness->lhs
        << ", rhs = " << witness->rhs;
  }
  return out.str();
}

}  // namespace qdilog
