#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdilog/qscalar.hpp"

using namespace qdilog;

namespace {

QScalar q_minus_qinv() { return QScalar::q_power(1) - QScalar::q_power(-1); }

// Independent long-division oracle over Q: divides a by b as shifted
// ordinary polynomials with rational coefficients, requiring exactness.
// Used to pin down expected values without going through QScalar division.
bool long_division_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
  return a.try_divide(b, quot);
}

QScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> lowd(-3, 3);
  auto poly = [&]() {
    LaurentPoly p;
    int n = len(rng);
    int lo = lowd(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly(BigInt(coeff(rng)), lo + i);
    return p;
  };
  LaurentPoly den;
  while (den.is_zero()) den = poly();
  return QScalar(poly(), den);
}

}  // namespace

TEST_CASE("laurent basics") {
  LaurentPoly p = LaurentPoly(BigInt(1), 2) - LaurentPoly(BigInt(1), -2);
  CHECK(p.low() == -2);
  CHECK(p.high() == 2);
  CHECK(p.coeff(0) == 0);
  CHECK(p.bar() == -p);
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "q^2 - q^-2");
}

TEST_CASE("sign algebra: (q - q^-1)(q^-1 - q) = -(q - q^-1)^2") {
  QScalar a = q_minus_qinv();
  QScalar b = QScalar::q_power(-1) - QScalar::q_power(1);
  CHECK(a * b == -(a * a));
}

TEST_CASE("x / x = 1 for nonzero x") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    QScalar x = random_scalar(rng);
    if (x.is_zero()) continue;
    CHECK(x / x == QScalar(1));
  }
}

TEST_CASE("division matches the long-division oracle") {
  // (q^2 - q^-2) / (q - q^-1) -> q + q^-1, first by the oracle.
  LaurentPoly num = LaurentPoly(BigInt(1), 2) - LaurentPoly(BigInt(1), -2);
  LaurentPoly den = LaurentPoly(BigInt(1), 1) - LaurentPoly(BigInt(1), -1);
  LaurentPoly quot;
  REQUIRE(long_division_exact(num, den, quot));
  CHECK(quot == LaurentPoly(BigInt(1), 1) + LaurentPoly(BigInt(1), -1));
  CHECK(QScalar(num) / QScalar(den) == QScalar(quot));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(QScalar(1) / QScalar(), std::domain_error);
  CHECK_THROWS_AS(QScalar().inverse(), std::domain_error);
}

TEST_CASE("quantum integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(2) == QScalar::q_power(1) + QScalar::q_power(-1));
  for (long n = 1; n < 8; ++n) CHECK(qint(-n) == -qint(n));
  // [n] = (q^n - q^-n)/(q - q^-1)
  for (long n = 1; n < 8; ++n) {
    QScalar expect = (QScalar::q_power(n) - QScalar::q_power(-n)) / q_minus_qinv();
    CHECK(qint(n) == expect);
  }
}

TEST_CASE("qfact and qbinom") {
  CHECK(qfact(0) == QScalar(1));
  CHECK(qfact(3) == qint(1) * qint(2) * qint(3));
  CHECK_THROWS_AS(qfact(-1), std::invalid_argument);
  CHECK_THROWS_AS(qbinom(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(qbinom(3, -1), std::invalid_argument);

  // qbinom(4, 2) equals [4]! [2]!^{-2} computed through the division oracle.
  QScalar lhs = qbinom(4, 2);
  QScalar rhs = qfact(4) / (qfact(2) * qfact(2));
  CHECK(lhs == rhs);
  CHECK(lhs.is_laurent());

  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      QScalar b = qbinom(n, k);
      CHECK(b.is_laurent());
      CHECK(b == qbinom(n, n - k));
    }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("bar involution") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    QScalar a = random_scalar(rng);
    CHECK(a.bar().bar() == a);
  }
  for (long n = 0; n < 8; ++n) CHECK(qint(n).bar() == qint(n));
  QScalar x = QScalar::inv_one_minus_q(3);
  CHECK(x.bar() == QScalar(1) / (QScalar(1) - QScalar::q_power(-3)));
}

TEST_CASE("factored denominators reduce to canonical form") {
  // (1 - q^4)/(1 - q^2) = 1 + q^2 must come out as a plain polynomial.
  QScalar a = (QScalar(1) - QScalar::q_power(4)) * QScalar::inv_one_minus_q(2);
  CHECK(a == QScalar(1) + QScalar::q_power(2));
  CHECK(a.is_laurent());

  QScalar b = QScalar::inv_one_minus_q(2) * (QScalar(1) - QScalar::q_power(1));
  CHECK(b == QScalar(1) / (QScalar(1) + QScalar::q_power(1)));
}

TEST_CASE("rendering") {
  QScalar x = (QScalar::q_power(2) - QScalar(1) + QScalar::q_power(-2));
  CHECK(x.to_string() == "q^2 - 1 + q^-2");
  QScalar y = QScalar(1) / (QScalar(1) - QScalar::q_power(2));
  CHECK(y.to_string() == "-1/(q^2 - 1)");
}
