#pragma once

#include <map>
#include <string>

#include "qdilog/laurent.hpp"

namespace qdilog {

// Exact element of Q(q), kept reduced at all times so that equal values have
// equal representations.
//
// The denominator is held in factored form: a positive integer, a product of
// cyclotomic polynomials phi_d(q)^e, and a residual polynomial for the rare
// denominators that are not products of cyclotomics (matrix inversion
// pivots). Factored denominators make the reductions that dominate series
// arithmetic (cancelling 1 - q^k factors) cheap exact-division probes instead
// of general polynomial gcds.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long value) : num_(value) {}
  QScalar(const BigInt& value) : num_(value) {}
  explicit QScalar(const LaurentPoly& numerator) : num_(numerator) {}
  QScalar(const LaurentPoly& numerator, const LaurentPoly& denominator);

  static QScalar q_power(long exponent) { return QScalar(LaurentPoly::q_power(exponent)); }
  static QScalar rational(const BigInt& p, const BigInt& q);
  // 1/(1 - q^k), k != 0, built directly in factored form.
  static QScalar inv_one_minus_q(long k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // True when the reduced denominator is 1 (value is a Laurent polynomial).
  bool is_laurent() const;

  const LaurentPoly& numerator() const { return num_; }
  LaurentPoly denominator() const;  // expanded ordinary polynomial

  QScalar operator-() const;
  QScalar operator+(const QScalar& other) const;
  QScalar operator-(const QScalar& other) const;
  QScalar operator*(const QScalar& other) const;
  QScalar operator/(const QScalar& other) const;
  QScalar& operator+=(const QScalar& other) { return *this = *this + other; }
  QScalar& operator-=(const QScalar& other) { return *this = *this - other; }
  QScalar& operator*=(const QScalar& other) { return *this = *this * other; }
  QScalar& operator/=(const QScalar& other) { return *this = *this / other; }
  bool operator==(const QScalar& other) const;
  bool operator!=(const QScalar& other) const { return !(*this == other); }

  QScalar inverse() const;

  // The bar involution q -> q^{-1}.
  QScalar bar() const;

  std::string to_string() const;

 private:
  void normalize();
  void factor_denominator(const LaurentPoly& den);

  LaurentPoly num_;
  BigInt den_int_ = 1;
  std::map<int, int> den_cyc_;  // d -> exponent of phi_d
  LaurentPoly den_gen_ = LaurentPoly(1);
};

// Cyclotomic polynomial phi_d(q) as an ordinary integer polynomial.
const LaurentPoly& cyclotomic(int d);

// Quantum integer [n]_q = (q^n - q^{-n})/(q - q^{-1}); [0] = 0, [-n] = -[n].
QScalar qint(long n);
// [n]_q! for n >= 0.
QScalar qfact(long n);
// Gaussian binomial; requires 0 <= k <= n. Always a Laurent polynomial.
QScalar qbinom(long n, long k);

}  // namespace qdilog
