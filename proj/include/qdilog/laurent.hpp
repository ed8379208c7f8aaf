#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qdilog {

using BigInt = mpz_class;

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// coeff(low() + k) is stored at position k. Canonical form: the first and
// last stored coefficients are nonzero; the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value) : LaurentPoly(BigInt(value), 0) {}
  LaurentPoly(const BigInt& value) : LaurentPoly(value, 0) {}
  LaurentPoly(const BigInt& coeff, long exponent);

  static LaurentPoly q_power(long exponent) { return LaurentPoly(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // True when the polynomial is c*q^k for a single nonzero c.
  bool is_monomial() const { return coeffs_.size() == 1; }

  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& coeff(long exponent) const;
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& trailing() const { return coeffs_.front(); }
  std::size_t term_count() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator+=(const LaurentPoly& other) { return *this = *this + other; }
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }
  bool operator==(const LaurentPoly& other) const;

  LaurentPoly shifted(long delta) const;  // multiply by q^delta

  // The involution q -> q^{-1}.
  LaurentPoly bar() const;

  // gcd of all coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;
  LaurentPoly divided_by_int(const BigInt& d) const;  // exact

  // Exact division; aborts with an exception when the division leaves a
  // remainder. Divisor must be nonzero.
  LaurentPoly divided_exact(const LaurentPoly& divisor) const;
  // Returns false (leaving quotient untouched) when not divisible.
  bool try_divide(const LaurentPoly& divisor, LaurentPoly& quotient) const;

  // gcd over Q up to units, returned as a primitive integer polynomial with
  // positive leading coefficient and q^0 trailing term.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Evaluation at an integer point (useful for quick divisibility tests).
  BigInt eval_at(long x) const;

  std::string to_string() const;

 private:
  void trim();

  long low_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace qdilog
