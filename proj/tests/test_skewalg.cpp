#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdilog/cases.hpp"
#include "qdilog/skewalg.hpp"

using namespace qdilog;

namespace {

QuiverOrientation quiver(const std::string& id) {
  const OrderCase& cs = OrderCase::get(id);
  return QuiverOrientation(cs.cartan(), cs.b_matrix());
}

SkewSeries rand_series(SkewRingPtr ring, int degree, std::mt19937_64& rng, bool zero_const) {
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  SkewSeries s(ring, degree);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> e(static_cast<std::size_t>(ring->vars));
    int total = 0;
    for (auto& x : e) {
      x = expd(rng);
      total += x;
    }
    if (zero_const && total == 0) continue;
    long qp = expd(rng) - 1;
    s.add_term(e, QScalar(coeff(rng)) * QScalar::q_power(qp));
  }
  return s;
}

}  // namespace

TEST_CASE("quiver pairing matrices of the four cases") {
  QuiverOrientation a2 = quiver("A2");
  CHECK(a2.pairing(0, 0) == 2);
  CHECK(a2.pairing(0, 1) == 0);
  CHECK(a2.pairing(1, 0) == -2);
  CHECK(a2.pairing(2, 1) == -2);
  QuiverOrientation a1 = quiver("A1");
  CHECK(a1.pairing(0, 1) == 0);
  CHECK(a1.pairing(1, 0) == -4);
  QuiverOrientation a3 = quiver("A3");
  CHECK(a3.pairing(1, 2) == -2);
  CHECK(a3.pairing(2, 1) == 0);
}

TEST_CASE("series ring laws") {
  std::mt19937_64 rng(2);
  auto ring = y_ring(quiver("A2"));
  for (int trial = 0; trial < 25; ++trial) {
    SkewSeries a = rand_series(ring, 6, rng, false);
    SkewSeries b = rand_series(ring, 6, rng, false);
    SkewSeries c = rand_series(ring, 6, rng, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("commutation relations as series identities") {
  // A1 y-ring: y_0 y_1 = q^{-4} y_1 y_0.
  auto ring = y_ring(quiver("A1"));
  SkewSeries y0 = SkewSeries::monomial(ring, 4, {1, 0}, QScalar(1));
  SkewSeries y1 = SkewSeries::monomial(ring, 4, {0, 1}, QScalar(1));
  CHECK(y0 * y1 == (y1 * y0).scaled(QScalar::q_power(-4)));
  // e-ring of A2: e_1 e_0 = q e_0 e_1.
  auto er = e_ring(quiver("A2"));
  SkewSeries e0 = SkewSeries::monomial(er, 4, {1, 0, 0}, QScalar(1));
  SkewSeries e1 = SkewSeries::monomial(er, 4, {0, 1, 0}, QScalar(1));
  CHECK(e1 * e0 == (e0 * e1).scaled(QScalar::q_power(1)));
  // (1 + y0)(1 + y1) = 1 + y0 + y1 + y0 y1
  SkewSeries unit = SkewSeries::unit(ring, 4);
  SkewSeries lhs = (unit + y0) * (unit + y1);
  SkewSeries rhs = unit + y0 + y1 + SkewSeries::monomial(ring, 4, {1, 1}, QScalar(1));
  CHECK(lhs == rhs);
}

TEST_CASE("normal ordering scalars") {
  auto a1 = y_ring(quiver("A1"));
  CHECK(normal_order_scalar(*a1, {1, 0}) == QScalar(1));
  CHECK(normal_order_scalar(*a1, {2, 1}) == QScalar::q_power(4));
  CHECK(normal_order_scalar(*a1, {3, 2}) == QScalar::q_power(12));
  auto a2 = y_ring(quiver("A2"));
  // q^{m0 m1 + m0 m2 + m1 m2}
  CHECK(normal_order_scalar(*a2, {1, 1, 1}) == QScalar::q_power(3));
  CHECK(normal_order_scalar(*a2, {2, 1, 3}) == QScalar::q_power(2 + 6 + 3));
  CHECK_THROWS_AS(normal_order_scalar(SkewRing{}, {0}), std::invalid_argument);
}

TEST_CASE("project_tree on the A2 quiver") {
  QuiverOrientation q = quiver("A2");
  // [E_0, E_1]_q lies in the kernel.
  CHECK(!project_tree(q, CommTree::bracket(CommTree::leaf(0), CommTree::leaf(1))).has_value());
  // leaf(0) -> e_0
  auto img = project_tree(q, CommTree::leaf(0));
  REQUIRE(img.has_value());
  CHECK(img->coeff == QScalar(1));
  CHECK(img->exponents == std::vector<int>({1, 0, 0}));
  // [E_1, E_0]_q -> (1 - q^{-2}) q e_0 e_1 by the direct multiplication rule
  auto img2 = project_tree(q, CommTree::bracket(CommTree::leaf(1), CommTree::leaf(0)));
  REQUIRE(img2.has_value());
  CHECK(img2->exponents == std::vector<int>({1, 1, 0}));
  CHECK(img2->coeff == (QScalar(1) - QScalar::q_power(-2)) * QScalar::q_power(1));
}

namespace {

// Independent oracle for the mirrored image: project Omega(t) into the
// f-ring directly, using Omega([x,y]_q) = -q^{-(a,b)} [Omega(x), Omega(y)]_q
// at every bracket and the f-ring commutation for the reordering.
std::optional<ProjImage> omega_project(const QuiverOrientation& q, const CommTree& t) {
  struct Rec {
    static std::optional<std::pair<QScalar, std::vector<int>>> go(const QuiverOrientation& q,
                                                                  const CommTree::NodePtr& n) {
      if (n->is_leaf()) {
        std::vector<int> e(static_cast<std::size_t>(q.cartan().rank()), 0);
        e[static_cast<std::size_t>(n->leaf)] = 1;
        return std::make_pair(QScalar(1), e);
      }
      auto l = go(q, n->left);
      if (!l) return std::nullopt;
      auto r = go(q, n->right);
      if (!r) return std::nullopt;
      RootVector wl(l->second), wr(r->second);
      long ab = q.cartan().bilinear(wl, wr);
      long pair = q.pairing(l->second, r->second);
      if (pair == 0) return std::nullopt;
      auto ring = f_ring(q);
      QScalar c = l->first * r->first * (QScalar(1) - QScalar::q_power(pair)) *
                  QScalar::q_power(ring->reorder_power(l->second, r->second)) *
                  (-QScalar::q_power(-ab));
      std::vector<int> e = l->second;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += r->second[i];
      return std::make_pair(c, e);
    }
  };
  auto res = Rec::go(q, t.root());
  if (!res) return std::nullopt;
  return ProjImage{t.prefactor().bar() * res->first, res->second};
}

CommTree random_proj_tree(std::mt19937_64& rng, int rank, int depth) {
  std::uniform_int_distribution<int> idx(0, rank - 1);
  std::uniform_int_distribution<int> branch(0, 2);
  if (depth == 0 || branch(rng) == 0) return CommTree::leaf(idx(rng));
  return CommTree::bracket(random_proj_tree(rng, rank, depth - 1),
                           random_proj_tree(rng, rank, depth - 1));
}

}  // namespace

TEST_CASE("mirror_image matches projecting the Omega image directly") {
  std::mt19937_64 rng(7);
  for (const char* id : {"A1", "A2", "A3", "D4"}) {
    QuiverOrientation q = quiver(id);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
      CommTree t = random_proj_tree(rng, q.cartan().rank(), 3).scaled(qint(2));
      auto e = project_tree(q, t);
      auto o = omega_project(q, t);
      CHECK(e.has_value() == o.has_value());
      if (!e) continue;
      ++checked;
      ProjImage f = mirror_image(q, *e);
      CHECK(f.exponents == o->exponents);
      CHECK(f.coeff == o->coeff);
      // bar is an involution on the mirrored coefficient
      CHECK(f.coeff.bar().bar() == f.coeff);
    }
    CHECK(checked > 0);
  }
  // image (1, e_0) -> (1, f_0)
  QuiverOrientation a2 = quiver("A2");
  auto f0 = mirror_image(a2, ProjImage{QScalar(1), {1, 0, 0}});
  CHECK(f0.coeff == QScalar(1));
}

TEST_CASE("dilog kernel expansions") {
  auto ring = xw_ring(false);
  int N = 12;
  SkewSeries x = SkewSeries::monomial(ring, N, {1, 0}, QScalar(1));
  SkewSeries zero(ring, N);
  CHECK(dilog_E(zero) == SkewSeries::unit(ring, N));

  // coefficient of x in E(x) is -q/(1-q^2)
  SkewSeries Ex = dilog_E(x);
  CHECK(Ex.coeff({1, 0}) == -QScalar::q_power(1) * QScalar::inv_one_minus_q(2) * QScalar(-1) *
                                QScalar(-1));
  CHECK(Ex.coeff({1, 0}) == QScalar(0) - QScalar::q_power(1) / (QScalar(1) - QScalar::q_power(2)));

  // exp_q coefficient of x^2 is q^{-1}/[2]
  SkewSeries eq = exp_q_of(x);
  CHECK(eq.coeff({2, 0}) == QScalar::q_power(-1) / qint(2));

  // exp_q(x) = E((q - q^{-1}) x)
  CHECK(eq == dilog_E(x.scaled(QScalar::q_power(1) - QScalar::q_power(-1))));

  // (1 + qx) E(x) = E(q^2 x)
  SkewSeries unit = SkewSeries::unit(ring, N);
  SkewSeries lhs = (unit + x.scaled(QScalar::q_power(1))) * Ex;
  CHECK(lhs == dilog_E(x.scaled(QScalar::q_power(2))));

  // exp(log(1+f)) = 1+f and log(exp(g)) = g
  std::mt19937_64 rng(3);
  auto yr = y_ring(quiver("A2"));
  for (int trial = 0; trial < 8; ++trial) {
    SkewSeries f = rand_series(yr, 5, rng, true);
    CHECK(exp_of(log_one_plus(f)) == SkewSeries::unit(yr, 5) + f);
    CHECK(log_one_plus(exp_of(f) - SkewSeries::unit(yr, 5)) == f);
  }

  // exp(sum -x^m/(m(1-q^m))) = (x; q)_inf
  SkewSeries li(ring, N);
  {
    SkewSeries pw = unit;
    for (int m = 1; m <= N; ++m) {
      pw = pw * x;
      li = li + pw.scaled(QScalar::rational(-1, m) * (QScalar(1) / (QScalar(1) - QScalar::q_power(m))));
    }
  }
  CHECK(exp_of(li) == pochhammer_inf(x, 1));

  // E(x)^{-1} agrees with the generic inverse
  CHECK(dilog_E_inverse(x) == series_inverse(dilog_E(x)));
  CHECK(dilog_E(x) * dilog_E_inverse(x) == unit);

  CHECK_THROWS_AS(dilog_E(unit), std::invalid_argument);
  CHECK_THROWS_AS(series_inverse(SkewSeries(ring, 3)), std::invalid_argument);

  // multi-term arguments run through the composite definition; the inverse
  // pairing still holds
  {
    auto yr2 = y_ring(quiver("A2"));
    SkewSeries arg = SkewSeries::monomial(yr2, 6, {1, 0, 0}, QScalar(1)) +
                     SkewSeries::monomial(yr2, 6, {0, 1, 1}, QScalar::q_power(2));
    CHECK(dilog_E(arg) * dilog_E_inverse(arg) == SkewSeries::unit(yr2, 6));
    CHECK(exp_q_of(arg) ==
          dilog_E(arg.scaled(QScalar::q_power(1) - QScalar::q_power(-1))));
  }

  // the recurrence (1 + q xhat) E(xhat) = E(q^2 xhat) for a skew monomial
  {
    auto yr1 = y_ring(quiver("A1"));
    SkewSeries xh = normal_ordered_monomial(yr1, 10, {2, 1}, QScalar(1));
    SkewSeries u1 = SkewSeries::unit(yr1, 10);
    CHECK((u1 + xh.scaled(QScalar::q_power(1))) * dilog_E(xh) ==
          dilog_E(xh.scaled(QScalar::q_power(2))));
  }
}

TEST_CASE("psi_R admissibility and action") {
  QuiverOrientation a1 = quiver("A1");
  auto yr = y_ring(a1);
  auto xr = xw_ring(false);
  IntMatrix R = {{0, 2}, {1, 3}};
  // \hat{psi}_1(y_1) = q^{-6} x_1^2 x_2^3
  SkewSeries y1 = SkewSeries::monomial(yr, 6, {0, 1}, QScalar(1));
  SkewSeries img = psi_R(y1, R, xr, 6);
  CHECK(img == SkewSeries::monomial(xr, 6, {2, 3}, QScalar::q_power(-6)));
  // continuity failure: zero column
  CHECK_THROWS_AS(psi_R(y1, IntMatrix{{0, 2}, {0, 3}}, xr, 6), std::invalid_argument);
  // condition failure
  CHECK_THROWS_AS(psi_R(y1, IntMatrix{{1, 2}, {1, 3}}, xr, 6), std::invalid_argument);

  // psi_R(:y^m:) = :x^{Rm}: on random admissible m, and multiplicativity.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> expd(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> m = {expd(rng), expd(rng)};
    SkewSeries no = normal_ordered_monomial(yr, 14, m, QScalar(1));
    std::vector<int> rm = {2 * m[1], m[0] + 3 * m[1]};
    SkewSeries want = normal_ordered_monomial(xr, 20, rm, QScalar(1));
    CHECK(psi_R(no, R, xr, 20) == want);
  }
  for (int trial = 0; trial < 10; ++trial) {
    // Source degree 8 keeps the product of two degree-4 samples exact, and
    // the target degree is large enough to keep every image term.
    SkewSeries a = rand_series(yr, 8, rng, false).truncated(4).truncated(8);
    SkewSeries b = rand_series(yr, 8, rng, false).truncated(4).truncated(8);
    CHECK(psi_R(a * b, R, xr, 40) == psi_R(a, R, xr, 40) * psi_R(b, R, xr, 40));
  }
  // The default target degree keeps every image of a full-degree source.
  {
    SkewSeries s = rand_series(yr, 5, rng, false);
    SkewSeries def = psi_R(s, R, xr);
    CHECK(def.degree() == 5 * 5);  // widest column sum of R is 5
    CHECK(def == psi_R(s, R, xr, 25));
  }
}

TEST_CASE("chi rewrite") {
  auto xr = xw_ring(false);
  auto wr = xw_ring(true);
  // :x_2: -> :w_2:
  SkewSeries x2 = SkewSeries::monomial(xr, 6, {0, 1}, QScalar(1));
  CHECK(chi_rewrite(x2, 6) == SkewSeries::monomial(wr, 6, {0, 1}, QScalar(1)));
  // w_1 w_2 = q^2 w_2 w_1
  SkewSeries w1 = SkewSeries::monomial(wr, 6, {1, 0}, QScalar(1));
  SkewSeries w2 = SkewSeries::monomial(wr, 6, {0, 1}, QScalar(1));
  CHECK(w1 * w2 == (w2 * w1).scaled(QScalar::q_power(2)));
  // U_{m,n} argument: q^{-mn} x_1^m x_2^n = :x_1^m x_2^n:
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      SkewSeries lhs = SkewSeries::monomial(xr, 12, {m, n}, QScalar::q_power(-m * n));
      CHECK(lhs == normal_ordered_monomial(xr, 12, {m, n}, QScalar(1)));
    }
  // chi is multiplicative and normal-order preserving
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> expd(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> m = {expd(rng), expd(rng)};
    SkewSeries no = normal_ordered_monomial(xr, 9, m, QScalar(1));
    CHECK(chi_rewrite(no, 30) == normal_ordered_monomial(wr, 30, m, QScalar(1)));
  }
}

TEST_CASE("double monomials multiply componentwise") {
  QuiverOrientation q = quiver("A1");
  // y_0 y_1 as e (x) f pairs: the product picks up both legs' reorderings.
  DoubleMonomial a(q, QScalar(1), {1, 0}, {1, 0});
  DoubleMonomial b(q, QScalar(1), {0, 1}, {0, 1});
  DoubleMonomial ab = a * b;
  CHECK(ab.e_exponents() == std::vector<int>({1, 1}));
  CHECK(ab.coeff() == QScalar(1));
  DoubleMonomial ba = b * a;
  // e_1 e_0 = q^2 e_0 e_1 on both legs
  CHECK(ba.coeff() == QScalar::q_power(4));
  // conversion to the y-ring: e^u (x) f^u = (-1)^{|u|}(q-q^-1)^{-2|u|} y^u
  auto yr = y_ring(q);
  QScalar qm1 = QScalar::q_power(1) - QScalar::q_power(-1);
  CHECK(ab.as_y_series(yr, 4) ==
        SkewSeries::monomial(yr, 4, {1, 1}, QScalar(1) / (qm1 * qm1 * qm1 * qm1)));
  CHECK_THROWS_AS(DoubleMonomial(q, QScalar(1), {1, 0}, {0, 1}).as_y_series(yr, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(DoubleMonomial(q, QScalar(1), {-1, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected") {
  auto xr = xw_ring(false);
  auto wr = xw_ring(true);
  SkewSeries a = SkewSeries::monomial(xr, 4, {1, 0}, QScalar(1));
  SkewSeries b = SkewSeries::monomial(wr, 4, {1, 0}, QScalar(1));
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + SkewSeries::monomial(xr, 5, {1, 0}, QScalar(1)), std::invalid_argument);
}

TEST_CASE("anti_bar is an involutive anti-map") {
  std::mt19937_64 rng(17);
  auto ring = y_ring(quiver("A2"));
  for (int trial = 0; trial < 15; ++trial) {
    SkewSeries a = rand_series(ring, 5, rng, false);
    SkewSeries b = rand_series(ring, 5, rng, false);
    CHECK(anti_bar(anti_bar(a)) == a);
    CHECK(anti_bar(a * b) == anti_bar(b) * anti_bar(a));
  }
}
