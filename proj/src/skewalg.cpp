#include "qdilog/skewalg.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qdilog {

namespace {

int vec_degree(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

QuiverOrientation::QuiverOrientation(CartanData cartan, IntMatrix skew)
    : cartan_(std::move(cartan)), b_(std::move(skew)) {
  int n = cartan_.rank();
  if (static_cast<int>(b_.size()) != n)
    throw std::invalid_argument("QuiverOrientation: matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (b(i, j) != -b(j, i)) throw std::invalid_argument("QuiverOrientation: B not skew");
      if (i != j && std::abs(b(i, j)) != std::abs(cartan_.c(i, j)))
        throw std::invalid_argument("QuiverOrientation: |b_ij| must equal |c_ij|");
      if ((cartan_.c(i, j) - b(i, j)) % 2 != 0)
        throw std::invalid_argument("QuiverOrientation: pairing must be even");
    }
}

int QuiverOrientation::pairing(int i, int j) const { return cartan_.c(i, j) - b(i, j); }

long QuiverOrientation::pairing(const std::vector<int>& u, const std::vector<int>& v) const {
  long s = 0;
  for (int i = 0; i < cartan_.rank(); ++i) {
    if (u[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < cartan_.rank(); ++j)
      s += static_cast<long>(u[static_cast<std::size_t>(i)]) * pairing(i, j) *
           v[static_cast<std::size_t>(j)];
  }
  return s;
}

long SkewRing::reorder_power(const std::vector<int>& u, const std::vector<int>& v) const {
  // x^u x^v = q^p x^{u+v}: moving each x_i of v left past each x_j of u with
  // j > i, using x_j x_i = q^{comm[j][i]} x_i x_j.
  long p = 0;
  for (int j = 1; j < vars; ++j) {
    if (u[static_cast<std::size_t>(j)] == 0) continue;
    for (int i = 0; i < j; ++i)
      p += static_cast<long>(comm[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) *
           u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
  }
  return p;
}

long SkewRing::normal_power(const std::vector<int>& m) const {
  if (!base_b) throw std::invalid_argument("SkewRing: no normal ordering on this ring");
  long p = 0;
  for (int i = 1; i < vars; ++i)
    for (int j = 0; j < i; ++j)
      p += static_cast<long>(
               (*base_b)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
           m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)];
  return p;
}

bool SkewRing::same_as(const SkewRing& o) const {
  return name == o.name && vars == o.vars && comm == o.comm && laurent == o.laurent;
}

SkewRingPtr make_series_ring(std::string name, char var, IntMatrix base_b, int comm_multiple) {
  auto r = std::make_shared<SkewRing>();
  r->name = std::move(name);
  r->var = var;
  r->vars = static_cast<int>(base_b.size());
  r->comm.assign(static_cast<std::size_t>(r->vars),
                 std::vector<int>(static_cast<std::size_t>(r->vars), 0));
  for (int i = 0; i < r->vars; ++i)
    for (int j = 0; j < r->vars; ++j)
      r->comm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          comm_multiple * base_b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  r->base_b = std::move(base_b);
  return r;
}

SkewRingPtr e_ring(const QuiverOrientation& q) {
  return make_series_ring("e:" + std::to_string(q.cartan().rank()), 'e', q.b_matrix(), 1);
}

SkewRingPtr f_ring(const QuiverOrientation& q) {
  return make_series_ring("f:" + std::to_string(q.cartan().rank()), 'f', q.b_matrix(), 1);
}

SkewRingPtr y_ring(const QuiverOrientation& q) {
  return make_series_ring("y:" + std::to_string(q.cartan().rank()), 'y', q.b_matrix(), 2);
}

SkewRingPtr xw_ring(bool w) {
  IntMatrix bp = {{0, 1}, {-1, 0}};
  return make_series_ring(w ? "w" : "x", w ? 'w' : 'x', bp, 2);
}

SkewSeries::SkewSeries(SkewRingPtr ring, int degree) : ring_(std::move(ring)), degree_(degree) {
  if (degree_ < 0) throw std::invalid_argument("SkewSeries: negative truncation degree");
}

SkewSeries SkewSeries::unit(SkewRingPtr ring, int degree) {
  SkewSeries s(std::move(ring), degree);
  s.terms_.emplace(std::vector<int>(static_cast<std::size_t>(s.ring_->vars), 0), QScalar(1));
  return s;
}

SkewSeries SkewSeries::monomial(SkewRingPtr ring, int degree, const std::vector<int>& exponents,
                                const QScalar& coeff) {
  SkewSeries s(std::move(ring), degree);
  s.add_term(exponents, coeff);
  return s;
}

bool SkewSeries::is_unit() const {
  return terms_.size() == 1 && vec_degree(terms_.begin()->first) == 0 &&
         terms_.begin()->second.is_one();
}

QScalar SkewSeries::constant_term() const {
  return coeff(std::vector<int>(static_cast<std::size_t>(ring_->vars), 0));
}

QScalar SkewSeries::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? QScalar() : it->second;
}

int SkewSeries::min_degree() const {
  int best = degree_ + 1;
  for (const auto& [e, c] : terms_) best = std::min(best, vec_degree(e));
  return best;
}

void SkewSeries::add_term(const std::vector<int>& exponents, const QScalar& coeff) {
  if (static_cast<int>(exponents.size()) != ring_->vars)
    throw std::invalid_argument("SkewSeries: exponent arity mismatch");
  if (!ring_->laurent)
    for (int e : exponents)
      if (e < 0) throw std::invalid_argument("SkewSeries: negative exponent in a series ring");
  if (vec_degree(exponents) > degree_ || coeff.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void SkewSeries::check_compatible(const SkewSeries& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_) || degree_ != o.degree_)
    throw std::invalid_argument("SkewSeries: ring or truncation mismatch");
}

SkewSeries SkewSeries::operator+(const SkewSeries& o) const {
  check_compatible(o);
  SkewSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SkewSeries SkewSeries::operator-(const SkewSeries& o) const {
  check_compatible(o);
  SkewSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SkewSeries SkewSeries::scaled(const QScalar& c) const {
  SkewSeries r(ring_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

SkewSeries SkewSeries::operator*(const SkewSeries& o) const {
  check_compatible(o);
  SkewSeries r(ring_, degree_);
  std::vector<int> sum(static_cast<std::size_t>(ring_->vars));
  for (const auto& [u, a] : terms_) {
    int du = vec_degree(u);
    for (const auto& [v, b] : o.terms_) {
      if (du + vec_degree(v) > degree_) continue;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u[i] + v[i];
      QScalar c = a * b;
      long p = ring_->reorder_power(u, v);
      if (p != 0) c *= QScalar::q_power(p);
      r.add_term(sum, c);
    }
  }
  return r;
}

bool SkewSeries::operator==(const SkewSeries& o) const {
  if (!ring_ || !o.ring_) return ring_ == o.ring_;
  if (!ring_->same_as(*o.ring_) || degree_ != o.degree_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!(it->second == jt->second)) return false;
  }
  return true;
}

SkewSeries SkewSeries::truncated(int degree) const {
  SkewSeries r(ring_, degree);
  for (const auto& [e, c] : terms_)
    if (vec_degree(e) <= degree) r.terms_.emplace(e, c);
  return r;
}

std::string SkewSeries::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (int i = 0; i < ring_->vars; ++i) {
      int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      out << "*" << ring_->var << i;
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

SkewSeries series_inverse(const SkewSeries& s) {
  QScalar c0 = s.constant_term();
  if (c0.is_zero()) throw std::invalid_argument("series_inverse: constant term is zero");
  SkewSeries unit = SkewSeries::unit(s.ring(), s.degree());
  SkewSeries g = unit - s.scaled(c0.inverse());  // zero constant term
  SkewSeries acc = unit;
  SkewSeries pw = unit;
  int step = std::max(1, g.min_degree());
  for (int k = step; k <= s.degree(); k += step) {
    pw = pw * g;
    if (pw.is_zero()) break;
    acc = acc + pw;
  }
  return acc.scaled(c0.inverse());
}

namespace {

void require_zero_constant(const SkewSeries& arg, const char* what) {
  if (!arg.constant_term().is_zero())
    throw std::invalid_argument(std::string(what) + ": argument must have zero constant term");
}

// sum_{n >= 1} coeff(n) * arg^n, truncated.
SkewSeries power_sum(const SkewSeries& arg, const std::function<QScalar(int)>& coeff,
                     bool with_unit) {
  SkewSeries acc = with_unit ? SkewSeries::unit(arg.ring(), arg.degree())
                             : SkewSeries(arg.ring(), arg.degree());
  SkewSeries pw = SkewSeries::unit(arg.ring(), arg.degree());
  int step = std::max(1, arg.min_degree());
  int n = 0;
  for (int d = step; d <= arg.degree(); d += step) {
    ++n;
    pw = pw * arg;
    if (pw.is_zero()) break;
    acc = acc + pw.scaled(coeff(n));
  }
  return acc;
}

}  // namespace

namespace {

// When every term of the argument sits on an integer multiple of one
// primitive exponent vector and the ring doubles its base skew matrix (the
// y/x/w rings), normal-ordered powers of that direction multiply without
// any q-twist, so exp and log reduce to the classical univariate
// coefficient recurrences. This keeps the intermediate coefficients as
// small as the answer's.
struct DirectionView {
  std::vector<int> primitive;
  long twist = 0;                 // normal_power(primitive)
  std::map<int, QScalar> coeff;   // multiple -> normal-ordered coefficient
  int max_multiple = 0;
};

std::optional<DirectionView> single_direction(const SkewSeries& s) {
  const SkewRing& ring = *s.ring();
  if (!ring.base_b) return std::nullopt;
  for (int i = 0; i < ring.vars; ++i)
    for (int j = 0; j < ring.vars; ++j)
      if (ring.comm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          2 * (*ring.base_b)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        return std::nullopt;
  if (s.is_zero()) return std::nullopt;
  // Primitive direction from the gcd of the first exponent vector.
  std::vector<int> v = s.terms().begin()->first;
  int g = 0;
  for (int x : v) g = std::gcd(g, x);
  if (g == 0) return std::nullopt;
  for (auto& x : v) x /= g;
  int vdeg = vec_degree(v);
  DirectionView view;
  view.primitive = v;
  view.twist = ring.normal_power(v);
  for (const auto& [u, c] : s.terms()) {
    int d = vec_degree(u);
    if (d % vdeg != 0) return std::nullopt;
    int k = d / vdeg;
    bool multiple = true;
    for (std::size_t i = 0; i < u.size(); ++i) multiple = multiple && u[i] == k * v[i];
    if (!multiple || k <= 0) return std::nullopt;
    // c * y^{kv} = c * q^{-k^2 twist} :y^{kv}:
    view.coeff[k] = c * QScalar::q_power(-static_cast<long>(k) * k * view.twist);
    view.max_multiple = std::max(view.max_multiple, k);
  }
  return view;
}

SkewSeries from_direction(const SkewSeries& like, const DirectionView& view,
                          const std::map<int, QScalar>& coeff, bool with_unit) {
  SkewSeries out(like.ring(), like.degree());
  if (with_unit)
    out.add_term(std::vector<int>(static_cast<std::size_t>(like.ring()->vars), 0), QScalar(1));
  for (const auto& [k, c] : coeff) {
    std::vector<int> u(view.primitive.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = k * view.primitive[i];
    out.add_term(u, c * QScalar::q_power(static_cast<long>(k) * k * view.twist));
  }
  return out;
}

}  // namespace

SkewSeries exp_of(const SkewSeries& arg) {
  require_zero_constant(arg, "exp_of");
  if (auto dir = single_direction(arg)) {
    // n f_n = sum_k k g_k f_{n-k} in the untwisted coordinates.
    int vdeg = vec_degree(dir->primitive);
    int top = arg.degree() / vdeg;
    std::map<int, QScalar> f;
    f[0] = QScalar(1);
    for (int n = 1; n <= top; ++n) {
      QScalar acc;
      for (const auto& [k, g] : dir->coeff) {
        if (k > n) break;
        auto it = f.find(n - k);
        if (it == f.end()) continue;
        acc += QScalar(k) * g * it->second;
      }
      if (!acc.is_zero()) f[n] = acc / QScalar(n);
    }
    f.erase(0);
    return from_direction(arg, *dir, f, true);
  }
  return power_sum(arg, [](int n) { return QScalar::rational(1, factorial(n)); }, true);
}

SkewSeries log_one_plus(const SkewSeries& arg) {
  require_zero_constant(arg, "log_one_plus");
  if (auto dir = single_direction(arg)) {
    // n g_n = n f_n - sum_{k<n} k g_k f_{n-k} for g = log(1 + f).
    int vdeg = vec_degree(dir->primitive);
    int top = arg.degree() / vdeg;
    std::map<int, QScalar> g;
    for (int n = 1; n <= top; ++n) {
      auto fn = dir->coeff.find(n);
      QScalar acc = fn == dir->coeff.end() ? QScalar() : QScalar(n) * fn->second;
      for (const auto& [k, gk] : g) {
        if (k >= n) break;
        auto it = dir->coeff.find(n - k);
        if (it == dir->coeff.end()) continue;
        acc -= QScalar(k) * gk * it->second;
      }
      if (!acc.is_zero()) g[n] = acc / QScalar(n);
    }
    return from_direction(arg, *dir, g, false);
  }
  return power_sum(
      arg, [](int n) { return QScalar::rational(n % 2 ? 1 : -1, n); }, false);
}

SkewSeries exp_q_of(const SkewSeries& arg) {
  require_zero_constant(arg, "exp_q_of");
  return power_sum(
      arg,
      [](int n) {
        return QScalar::q_power(-static_cast<long>(n) * (n - 1) / 2) / qfact(n);
      },
      true);
}

SkewSeries dilog_E(const SkewSeries& arg) {
  require_zero_constant(arg, "dilog_E");
  // E(x) = sum_n (-q)^n x^n / ((1-q^2)...(1-q^{2n})) for a single monomial;
  // for general arguments, exp(Li_{2,q^2}(-q x)) by composition.
  if (arg.term_count() <= 1) {
    QScalar den(1);
    return power_sum(
        arg,
        [&den](int n) {
          den *= QScalar(1) - QScalar::q_power(2 * n);
          QScalar c = QScalar::q_power(n) / den;
          return n % 2 ? -c : c;
        },
        true);
  }
  SkewSeries li = power_sum(
      arg.scaled(-QScalar::q_power(1)),
      [](int n) { return QScalar::rational(1, n) * QScalar::inv_one_minus_q(2 * n); }, false);
  return exp_of(li);
}

SkewSeries dilog_E_inverse(const SkewSeries& arg) {
  require_zero_constant(arg, "dilog_E_inverse");
  if (arg.term_count() <= 1) {
    // (-q arg; q^2)_inf = sum_n q^{n^2} arg^n / ((1-q^2)...(1-q^{2n}))
    QScalar den(1);
    return power_sum(
        arg,
        [&den](int n) {
          den *= QScalar(1) - QScalar::q_power(2 * n);
          return QScalar::q_power(static_cast<long>(n) * n) / den;
        },
        true);
  }
  return series_inverse(dilog_E(arg));
}

SkewSeries pochhammer_inf(const SkewSeries& z, int k) {
  require_zero_constant(z, "pochhammer_inf");
  // Euler: (z; Q)_inf = sum_n (-1)^n Q^{n(n-1)/2} z^n / ((1-Q)...(1-Q^n))
  QScalar den(1);
  return power_sum(
      z,
      [&den, k](int n) {
        den *= QScalar(1) - QScalar::q_power(static_cast<long>(k) * n);
        QScalar c = QScalar::q_power(static_cast<long>(k) * n * (n - 1) / 2) / den;
        return n % 2 ? -c : c;
      },
      true);
}

QScalar normal_order_scalar(const SkewRing& ring, const std::vector<int>& m) {
  return QScalar::q_power(ring.normal_power(m));
}

SkewSeries normal_ordered_monomial(SkewRingPtr ring, int degree, const std::vector<int>& m,
                                   const QScalar& coeff) {
  QScalar c = coeff * normal_order_scalar(*ring, m);
  return SkewSeries::monomial(std::move(ring), degree, m, c);
}

namespace {

struct ProjState {
  QScalar coeff;
  std::vector<int> expv;
};

std::optional<ProjState> project_node(const QuiverOrientation& q, const SkewRing& ring,
                                      const CommTree::NodePtr& n) {
  if (n->is_leaf()) {
    ProjState s;
    s.coeff = QScalar(1);
    s.expv.assign(static_cast<std::size_t>(q.cartan().rank()), 0);
    s.expv[static_cast<std::size_t>(n->leaf)] = 1;
    return s;
  }
  auto left = project_node(q, ring, n->left);
  if (!left) return std::nullopt;
  auto right = project_node(q, ring, n->right);
  if (!right) return std::nullopt;
  long pair = q.pairing(left->expv, right->expv);
  if (pair == 0) return std::nullopt;
  ProjState s;
  s.coeff = left->coeff * right->coeff * (QScalar(1) - QScalar::q_power(pair)) *
            QScalar::q_power(ring.reorder_power(left->expv, right->expv));
  s.expv = left->expv;
  for (std::size_t i = 0; i < s.expv.size(); ++i) s.expv[i] += right->expv[i];
  return s;
}

}  // namespace

std::optional<ProjImage> project_tree(const QuiverOrientation& q, const CommTree& t) {
  if (!t.valid()) throw std::invalid_argument("project_tree: empty tree");
  auto ring = e_ring(q);
  auto s = project_node(q, *ring, t.root());
  if (!s) return std::nullopt;
  ProjImage img;
  img.coeff = t.prefactor() * s->coeff;
  img.exponents = std::move(s->expv);
  if (img.coeff.is_zero()) throw std::logic_error("project_tree: vanished without a zero pairing");
  return img;
}

ProjImage mirror_image(const QuiverOrientation& q, const ProjImage& e_image) {
  // f-part = bar(coeff) * reversal reordering of the monomial.
  long p = 0;
  int n = q.cartan().rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      p += static_cast<long>(q.b(j, i)) * e_image.exponents[static_cast<std::size_t>(i)] *
           e_image.exponents[static_cast<std::size_t>(j)];
  ProjImage img;
  img.coeff = e_image.coeff.bar() * QScalar::q_power(p);
  img.exponents = e_image.exponents;
  return img;
}

DoubleMonomial::DoubleMonomial(const QuiverOrientation& q, QScalar coeff,
                               std::vector<int> e_exponents, std::vector<int> f_exponents)
    : quiver_(&q), coeff_(std::move(coeff)), e_(std::move(e_exponents)), f_(std::move(f_exponents)) {
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("DoubleMonomial: negative exponent");
  for (int x : f_)
    if (x < 0) throw std::invalid_argument("DoubleMonomial: negative exponent");
}

DoubleMonomial DoubleMonomial::pair(const QuiverOrientation& q, const ProjImage& e_part,
                                    const ProjImage& f_part) {
  return DoubleMonomial(q, e_part.coeff * f_part.coeff, e_part.exponents, f_part.exponents);
}

DoubleMonomial DoubleMonomial::operator*(const DoubleMonomial& o) const {
  // (a (x) b)(c (x) d) = ac (x) bd; both tensor legs reorder with the same
  // skew matrix.
  auto ring = e_ring(*quiver_);
  QScalar c = coeff_ * o.coeff_ *
              QScalar::q_power(ring->reorder_power(e_, o.e_) + ring->reorder_power(f_, o.f_));
  std::vector<int> e = e_, f = f_;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] += o.e_[i];
    f[i] += o.f_[i];
  }
  return DoubleMonomial(*quiver_, std::move(c), std::move(e), std::move(f));
}

SkewSeries DoubleMonomial::as_y_series(SkewRingPtr yring, int degree) const {
  if (e_ != f_)
    throw std::invalid_argument("DoubleMonomial: not in the image of the y-subring");
  // y^u = (-1)^{|u|} (q - q^{-1})^{2|u|} e^u (x) f^u.
  int ht = vec_degree(e_);
  QScalar qm1 = QScalar::q_power(1) - QScalar::q_power(-1);
  QScalar conv = QScalar(1) / (qm1 * qm1);
  QScalar c = coeff_;
  for (int k = 0; k < ht; ++k) c *= -conv;
  return SkewSeries::monomial(std::move(yring), degree, e_, c);
}

SkewSeries psi_R(const SkewSeries& s, const IntMatrix& R, SkewRingPtr target, int target_degree) {
  const SkewRing& src = *s.ring();
  if (!src.base_b || !target->base_b)
    throw std::invalid_argument("psi_R: both rings must carry a base skew matrix");
  int n = src.vars, np = target->vars;
  if (static_cast<int>(R.size()) != np || static_cast<int>(R[0].size()) != n)
    throw std::invalid_argument("psi_R: substitution matrix shape mismatch");
  // tR B' R = B
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = 0;
      for (int k = 0; k < np; ++k)
        for (int l = 0; l < np; ++l)
          v += static_cast<long>(R[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]) *
               (*target->base_b)[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] *
               R[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      if (v != (*src.base_b)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw std::invalid_argument("psi_R: tR B' R = B fails");
    }
  for (int j = 0; j < n; ++j) {
    int colsum = 0;
    for (int i = 0; i < np; ++i) {
      int v = R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0) throw std::invalid_argument("psi_R: negative entry");
      colsum += v;
    }
    if (colsum == 0) throw std::invalid_argument("psi_R: zero column breaks continuity");
  }
  SkewSeries out(target, target_degree);
  std::vector<int> img(static_cast<std::size_t>(np));
  for (const auto& [m, c] : s.terms()) {
    for (int i = 0; i < np; ++i) {
      long v = 0;
      for (int j = 0; j < n; ++j)
        v += static_cast<long>(R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
             m[static_cast<std::size_t>(j)];
      img[static_cast<std::size_t>(i)] = static_cast<int>(v);
    }
    if (vec_degree(img) > target_degree) continue;
    // y^m = q^{-tmLm} :y^m: and psi(:y^m:) = :y'^{Rm}:
    QScalar coeff = c * QScalar::q_power(-src.normal_power(m) + target->normal_power(img));
    out.add_term(img, coeff);
  }
  return out;
}

SkewSeries psi_R(const SkewSeries& s, const IntMatrix& R, SkewRingPtr target) {
  int widest = 0;
  for (std::size_t j = 0; !R.empty() && j < R[0].size(); ++j) {
    int colsum = 0;
    for (std::size_t i = 0; i < R.size(); ++i) colsum += R[i][j];
    widest = std::max(widest, colsum);
  }
  return psi_R(s, R, std::move(target), s.degree() * std::max(1, widest));
}

SkewSeries chi_rewrite(const SkewSeries& s, int target_degree) {
  // Composite of the variable change x_1 -> :x_1 x_2^{-2}:, x_2 -> x_2 with
  // the reading of the result in the w-coordinates: exponents carry over
  // unchanged, :x_1^a x_2^b: -> :w_1^a w_2^b:.
  if (s.ring()->name != "x") throw std::invalid_argument("chi_rewrite: expects the x-ring");
  return psi_R(s, IntMatrix{{1, 0}, {0, 1}}, xw_ring(true), target_degree);
}

SkewSeries anti_bar(const SkewSeries& s) {
  SkewSeries out(s.ring(), s.degree());
  for (const auto& [e, c] : s.terms()) {
    long p = 0;
    const auto& comm = s.ring()->comm;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        p += static_cast<long>(comm[j][i]) * e[i] * e[j];
    out.add_term(e, c.bar() * QScalar::q_power(p));
  }
  return out;
}

}  // namespace qdilog
