#include "qdilog/qscalar.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qdilog {

namespace {

std::mutex cyc_mutex;
std::map<int, LaurentPoly> cyc_table;
std::map<int, BigInt> cyc_eval2;  // phi_d(2), pretest for divisibility

LaurentPoly cyclotomic_locked(int d) {
  auto it = cyc_table.find(d);
  if (it != cyc_table.end()) return it->second;
  // phi_d = (q^d - 1) / prod_{d' | d, d' < d} phi_{d'}
  LaurentPoly p = LaurentPoly::q_power(d) - LaurentPoly(1);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    p = p.divided_exact(cyclotomic_locked(e));
  }
  cyc_table.emplace(d, p);
  cyc_eval2.emplace(d, p.eval_at(2));
  return p;
}

}  // namespace

const LaurentPoly& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: index must be positive");
  std::lock_guard<std::mutex> lock(cyc_mutex);
  cyclotomic_locked(d);
  return cyc_table.at(d);
}

namespace {

// Snapshot accessors used on the hot path (values are immutable once built).
LaurentPoly cyclotomic_copy(int d) {
  std::lock_guard<std::mutex> lock(cyc_mutex);
  return cyclotomic_locked(d);
}

BigInt cyclotomic_at2(int d) {
  std::lock_guard<std::mutex> lock(cyc_mutex);
  cyclotomic_locked(d);
  return cyc_eval2.at(d);
}

int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// Phi_d(2) without the polynomial: prod_{e | d} (2^e - 1)^{mu(d/e)}. Used as
// an integer divisibility pretest before any polynomial is materialized.
BigInt phi_at2(int d) {
  static std::mutex memo_mutex;
  static std::map<int, BigInt> memo;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  BigInt num = 1, den = 1;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int m = mobius(d / e);
    if (m == 0) continue;
    BigInt v = (BigInt(1) << e) - 1;
    if (m > 0)
      num *= v;
    else
      den *= v;
  }
  BigInt val = num / den;
  memo.emplace(d, val);
  return val;
}

}  // namespace

QScalar::QScalar(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("QScalar: zero denominator");
  num_ = numerator;
  factor_denominator(denominator);
  normalize();
}

QScalar QScalar::rational(const BigInt& p, const BigInt& q) {
  return QScalar(LaurentPoly(p), LaurentPoly(q));
}

QScalar QScalar::inv_one_minus_q(long k) {
  if (k == 0) throw std::domain_error("QScalar: 1/(1 - q^0) undefined");
  // 1 - q^k = -(q^k - 1) = -prod_{d | k} phi_d for k > 0;
  // 1 - q^{-k} = -q^{-k}(q^k - 1).
  long a = k > 0 ? k : -k;
  QScalar r;
  r.num_ = LaurentPoly(BigInt(-1), k > 0 ? 0 : a);
  for (int d = 1; d <= a; ++d)
    if (a % d == 0) {
      cyclotomic(d);
      r.den_cyc_[d] += 1;
    }
  return r;
}

bool QScalar::is_one() const {
  return num_.is_one() && den_int_ == 1 && den_cyc_.empty() && den_gen_.is_one();
}

bool QScalar::is_laurent() const {
  return den_int_ == 1 && den_cyc_.empty() && den_gen_.is_one();
}

LaurentPoly QScalar::denominator() const {
  LaurentPoly d(den_int_);
  for (const auto& [idx, e] : den_cyc_) {
    LaurentPoly phi = cyclotomic_copy(idx);
    for (int i = 0; i < e; ++i) d *= phi;
  }
  if (!den_gen_.is_one()) d *= den_gen_;
  return d;
}

void QScalar::factor_denominator(const LaurentPoly& den) {
  // Units q^l move to the numerator side.
  LaurentPoly d = den.shifted(-den.low());
  num_ = num_.shifted(-den.low());
  BigInt c = d.content();
  if (d.leading() < 0) c = -c;
  d = d.divided_by_int(c);
  if (c < 0) {
    num_ = -num_;
    c = -c;
  }
  den_int_ *= c;
  if (d.is_one()) return;
  // Integer pretests pick the candidate cyclotomic divisors; only those get
  // their polynomials materialized. Everything built from 1 - q^k factors
  // ends up fully split, keeping the residual path for genuine leftovers.
  BigInt at1 = d.eval_at(1), atm1 = d.eval_at(-1), at2 = d.eval_at(2);
  for (int idx = 1; idx <= d.high() && !d.is_one(); ++idx) {
    if (idx == 1) {
      if (at1 != 0) continue;
    } else if (idx == 2) {
      if (atm1 != 0) continue;
    } else {
      BigInt rem, phi2 = phi_at2(idx);
      mpz_tdiv_r(rem.get_mpz_t(), at2.get_mpz_t(), phi2.get_mpz_t());
      if (rem != 0) continue;
    }
    LaurentPoly phi = cyclotomic_copy(idx);
    if (phi.high() > d.high()) continue;
    LaurentPoly q;
    while (d.try_divide(phi, q)) {
      d = q;
      den_cyc_[idx] += 1;
      at1 = d.eval_at(1);
      atm1 = d.eval_at(-1);
      at2 = d.eval_at(2);
      if (phi.high() > d.high()) break;
    }
  }
  if (!d.is_one()) den_gen_ *= d;
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_int_ = 1;
    den_cyc_.clear();
    den_gen_ = LaurentPoly(1);
    return;
  }
  // Residual factor first: pull out integer content, cyclotomic divisors and
  // the polynomial gcd with the numerator, so the remaining steps see a
  // complete den_cyc_ and a residual that is coprime to everything.
  if (!den_gen_.is_one()) {
    if (den_gen_.leading() < 0) {
      den_gen_ = -den_gen_;
      num_ = -num_;
    }
    BigInt c = den_gen_.content();
    if (c > 1) {
      den_gen_ = den_gen_.divided_by_int(c);
      den_int_ *= c;
    }
    BigInt at1 = den_gen_.eval_at(1), atm1 = den_gen_.eval_at(-1), at2 = den_gen_.eval_at(2);
    for (int idx = 1; idx <= den_gen_.high() && !den_gen_.is_one(); ++idx) {
      if (idx == 1) {
        if (at1 != 0) continue;
      } else if (idx == 2) {
        if (atm1 != 0) continue;
      } else {
        BigInt rem, phi2 = phi_at2(idx);
        mpz_tdiv_r(rem.get_mpz_t(), at2.get_mpz_t(), phi2.get_mpz_t());
        if (rem != 0) continue;
      }
      LaurentPoly phi = cyclotomic_copy(idx);
      if (phi.high() > den_gen_.high()) continue;
      LaurentPoly q;
      while (den_gen_.try_divide(phi, q)) {
        den_gen_ = q;
        den_cyc_[idx] += 1;
        at1 = den_gen_.eval_at(1);
        atm1 = den_gen_.eval_at(-1);
        at2 = den_gen_.eval_at(2);
        if (phi.high() > den_gen_.high()) break;
      }
    }
    if (!den_gen_.is_one()) {
      LaurentPoly g = LaurentPoly::gcd(num_, den_gen_);
      if (!g.is_one() && !g.is_monomial()) {
        num_ = num_.divided_exact(g);
        den_gen_ = den_gen_.divided_exact(g);
        if (den_gen_.leading() < 0) {
          den_gen_ = -den_gen_;
          num_ = -num_;
        }
      }
    }
  }
  // Integer content vs. integer denominator.
  if (den_int_ != 1) {
    BigInt g, c = num_.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_int_.get_mpz_t());
    if (g > 1) {
      num_ = num_.divided_by_int(g);
      den_int_ /= g;
    }
  }
  // Cyclotomic cancellation against the numerator. Monomial numerators
  // divide by nothing; integer evaluations give a cheap necessary test
  // before each trial division, recomputed only when the numerator shrinks.
  if (!den_cyc_.empty() && !num_.is_monomial()) {
    BigInt at1 = num_.eval_at(1);
    BigInt atm1 = num_.eval_at(-1);
    BigInt at2 = num_.eval_at(2);
    for (auto it = den_cyc_.begin(); it != den_cyc_.end();) {
      int d = it->first;
      while (it->second > 0 && !num_.is_monomial()) {
        if (d == 1) {
          if (at1 != 0) break;
        } else if (d == 2) {
          if (atm1 != 0) break;
        } else {
          BigInt rem, phi2 = cyclotomic_at2(d);
          mpz_tdiv_r(rem.get_mpz_t(), at2.get_mpz_t(), phi2.get_mpz_t());
          if (rem != 0) break;
        }
        LaurentPoly q;
        if (!num_.try_divide(cyclotomic_copy(d), q)) break;
        num_ = q;
        it->second -= 1;
        at1 = num_.eval_at(1);
        atm1 = num_.eval_at(-1);
        at2 = num_.eval_at(2);
      }
      if (it->second == 0)
        it = den_cyc_.erase(it);
      else
        ++it;
    }
  }
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar QScalar::operator*(const QScalar& other) const {
  if (is_zero() || other.is_zero()) return QScalar();
  QScalar r;
  r.num_ = num_ * other.num_;
  r.den_int_ = den_int_ * other.den_int_;
  r.den_cyc_ = den_cyc_;
  for (const auto& [d, e] : other.den_cyc_) r.den_cyc_[d] += e;
  r.den_gen_ = den_gen_.is_one() ? other.den_gen_
                                 : (other.den_gen_.is_one() ? den_gen_ : den_gen_ * other.den_gen_);
  r.normalize();
  return r;
}

QScalar QScalar::operator+(const QScalar& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  QScalar r;
  // Shared denominator: lcm of the integer parts, max of cyclotomic
  // exponents, product/gcd of the residual parts.
  BigInt gi;
  mpz_gcd(gi.get_mpz_t(), den_int_.get_mpz_t(), other.den_int_.get_mpz_t());
  r.den_int_ = den_int_ / gi * other.den_int_;
  LaurentPoly ma(other.den_int_ / gi);
  LaurentPoly mb(den_int_ / gi);

  r.den_cyc_ = den_cyc_;
  for (const auto& [d, e] : other.den_cyc_) {
    int& cur = r.den_cyc_[d];
    if (e > cur) cur = e;
  }
  for (const auto& [d, e] : r.den_cyc_) {
    int ea = 0, eb = 0;
    if (auto it = den_cyc_.find(d); it != den_cyc_.end()) ea = it->second;
    if (auto it = other.den_cyc_.find(d); it != other.den_cyc_.end()) eb = it->second;
    LaurentPoly phi = cyclotomic_copy(d);
    for (int i = ea; i < e; ++i) ma *= phi;
    for (int i = eb; i < e; ++i) mb *= phi;
  }

  if (den_gen_.is_one() && other.den_gen_.is_one()) {
    r.den_gen_ = LaurentPoly(1);
  } else if (den_gen_ == other.den_gen_) {
    r.den_gen_ = den_gen_;
  } else {
    LaurentPoly g = LaurentPoly::gcd(den_gen_, other.den_gen_);
    LaurentPoly a_red = den_gen_.divided_exact(g);
    LaurentPoly b_red = other.den_gen_.divided_exact(g);
    r.den_gen_ = den_gen_ * b_red;
    ma *= b_red;
    mb *= a_red;
  }

  r.num_ = num_ * ma + other.num_ * mb;
  r.normalize();
  return r;
}

QScalar QScalar::operator-(const QScalar& other) const { return *this + (-other); }

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: division by zero");
  // 1/num: units q^l invert to q^{-l}; the ordinary part becomes denominator.
  QScalar r;
  long l = num_.low();
  r.num_ = denominator().shifted(-l);
  r.factor_denominator(num_.shifted(-l));
  r.normalize();
  return r;
}

QScalar QScalar::operator/(const QScalar& other) const {
  if (other.is_zero()) throw std::domain_error("QScalar: division by zero");
  if (is_zero()) return QScalar();
  return *this * other.inverse();
}

bool QScalar::operator==(const QScalar& other) const {
  if (num_ == other.num_ && den_int_ == other.den_int_ && den_cyc_ == other.den_cyc_ &&
      den_gen_ == other.den_gen_)
    return true;
  // Canonical forms are unique in practice; fall back to the cross product
  // so equality never depends on the factor bookkeeping.
  return num_ * other.denominator() == other.num_ * denominator();
}

QScalar QScalar::bar() const {
  if (is_zero()) return QScalar();
  return QScalar(num_.bar(), denominator().bar());
}

std::string QScalar::to_string() const {
  if (is_zero()) return "0";
  LaurentPoly den = denominator();
  std::ostringstream out;
  bool den_one = den.is_one();
  if (!den_one && num_.term_count() > 1)
    out << "(" << num_.to_string() << ")";
  else
    out << num_.to_string();
  if (!den_one) {
    out << "/";
    if (den.term_count() > 1)
      out << "(" << den.to_string() << ")";
    else
      out << den.to_string();
  }
  return out.str();
}

QScalar qint(long n) {
  if (n == 0) return QScalar();
  if (n < 0) return -qint(-n);
  // q^{1-n} (1 + q^2 + ... + q^{2(n-1)})
  LaurentPoly p;
  for (long k = 0; k < n; ++k) p += LaurentPoly(BigInt(1), 1 - n + 2 * k);
  return QScalar(p);
}

QScalar qfact(long n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  QScalar r(1);
  for (long k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

QScalar qbinom(long n, long k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("qbinom: requires 0 <= k <= n");
  QScalar r(1);
  for (long j = 1; j <= k; ++j) r = r * qint(n - k + j) / qint(j);
  return r;
}

}  // namespace qdilog
