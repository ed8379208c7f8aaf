#include "qdilog/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qdilog {

namespace {
const BigInt kZero = 0;
}

LaurentPoly::LaurentPoly(const BigInt& coeff, long exponent) {
  if (coeff != 0) {
    low_ = exponent;
    coeffs_.push_back(coeff);
  }
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
  if (front == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t back = coeffs_.size();
  while (back > front && coeffs_[back - 1] == 0) --back;
  if (front > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(front));
    low_ += static_cast<long>(front);
  }
  coeffs_.resize(back - front);
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

const BigInt& LaurentPoly::coeff(long exponent) const {
  if (exponent < low_ || exponent > high() || coeffs_.empty()) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  LaurentPoly r;
  r.low_ = std::min(low_, other.low_);
  long hi = std::max(high(), other.high());
  r.coeffs_.assign(static_cast<std::size_t>(hi - r.low_ + 1), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[static_cast<std::size_t>(low_ - r.low_) + i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    r.coeffs_[static_cast<std::size_t>(other.low_ - r.low_) + i] += other.coeffs_[i];
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.low_ = low_ + other.low_;
  r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const mpz_srcptr a = coeffs_[i].get_mpz_t();
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a, other.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  return low_ == other.low_ && coeffs_ == other.coeffs_;
}

LaurentPoly LaurentPoly::shifted(long delta) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += delta;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -high();
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_by_int(const BigInt& d) const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (rem != 0) throw std::domain_error("LaurentPoly: inexact integer division");
    c = q;
  }
  return r;
}

bool LaurentPoly::try_divide(const LaurentPoly& divisor, LaurentPoly& quotient) const {
  if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) {
    quotient = LaurentPoly();
    return true;
  }
  if (coeffs_.size() < divisor.coeffs_.size()) return false;
  // Long division from the top; exact iff every step divides evenly and the
  // remainder vanishes.
  std::vector<BigInt> rem = coeffs_;
  std::size_t qlen = coeffs_.size() - divisor.coeffs_.size() + 1;
  std::vector<BigInt> quot(qlen, BigInt(0));
  const BigInt& lead = divisor.coeffs_.back();
  for (std::size_t k = qlen; k-- > 0;) {
    BigInt& top = rem[k + divisor.coeffs_.size() - 1];
    if (top == 0) continue;
    BigInt q, r2;
    mpz_tdiv_qr(q.get_mpz_t(), r2.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r2 != 0) return false;
    quot[k] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem[k + j] -= q * divisor.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  LaurentPoly out;
  out.low_ = low_ - divisor.low_;
  out.coeffs_ = std::move(quot);
  out.trim();
  quotient = out;
  return true;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
  LaurentPoly q;
  if (!try_divide(divisor, q)) throw std::domain_error("LaurentPoly: inexact division");
  return q;
}

namespace {

// Primitive part with positive leading coefficient and trailing exponent 0.
LaurentPoly normalize_assoc(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shifted(-p.low());
  BigInt c = r.content();
  if (p.leading() < 0) c = -c;
  return r.divided_by_int(c);
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  LaurentPoly a = normalize_assoc(a0);
  LaurentPoly b = normalize_assoc(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.coeffs_.size() < b.coeffs_.size()) std::swap(a, b);
  // Primitive pseudo-remainder sequence.
  while (!b.is_zero()) {
    if (b.is_monomial()) return LaurentPoly(1);
    long da = a.high() - a.low();
    long db = b.high() - b.low();
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // prem(a, b): multiply a by lead(b)^(da-db+1) then divide.
    BigInt lead = b.leading();
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(da - db + 1));
    LaurentPoly r = a.shifted(-a.low()) * LaurentPoly(scale);
    LaurentPoly bb = b.shifted(-b.low());
    while (!r.is_zero() && r.high() >= bb.high()) {
      BigInt q = r.leading() / bb.leading();
      if (q == 0) break;
      r = r - bb.shifted(r.high() - bb.high()) * LaurentPoly(q);
    }
    a = b;
    b = normalize_assoc(r);
  }
  return normalize_assoc(a);
}

BigInt LaurentPoly::eval_at(long x) const {
  // Evaluates q^{-low} * this at q = x so the result is an integer.
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    long e = low_ + static_cast<long>(i);
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = abs_c == 1;
    if (e == 0) {
      out << abs_c.get_str();
    } else {
      if (!unit) out << abs_c.get_str() << "*";
      if (e == 1)
        out << "q";
      else
        out << "q^" << e;
    }
  }
  return out.str();
}

}  // namespace qdilog
