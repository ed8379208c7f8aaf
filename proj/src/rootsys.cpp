#include "qdilog/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qdilog {

RootVector RootVector::simple(int rank, int i) {
  RootVector r = zero(rank);
  r[i] = 1;
  return r;
}

bool RootVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (int x : c_) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

bool RootVector::is_negative() const {
  bool nonzero = false;
  for (int x : c_) {
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  return nonzero;
}

int RootVector::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

RootVector RootVector::operator+(const RootVector& o) const {
  RootVector r = *this;
  for (int i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const {
  RootVector r = *this;
  for (int i = 0; i < size(); ++i) r[i] -= o[i];
  return r;
}

RootVector RootVector::operator*(int k) const {
  RootVector r = *this;
  for (int i = 0; i < size(); ++i) r[i] *= k;
  return r;
}

std::string RootVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out << ",";
    out << c_[static_cast<std::size_t>(i)];
  }
  out << ")";
  return out.str();
}

CartanData::CartanData(std::vector<std::vector<int>> cartan, std::vector<int> symmetrizers,
                       RootVector delta, std::vector<Automorphism> autos)
    : rank_(static_cast<int>(cartan.size())),
      a_(std::move(cartan)),
      d_(std::move(symmetrizers)),
      delta_(std::move(delta)),
      autos_(std::move(autos)) {
  c_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 0));
  for (int i = 0; i < rank_; ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("CartanData: diagonal must be 2");
    for (int j = 0; j < rank_; ++j)
      c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d(i) * a(i, j);
  }
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (c(i, j) != c(j, i)) throw std::invalid_argument("CartanData: symmetrization failed");
  // delta must pair to zero with everything.
  for (int i = 0; i < rank_; ++i)
    if (bilinear(delta_, simple_root(i)) != 0)
      throw std::invalid_argument("CartanData: delta not in the radical");
  for (const auto& au : autos_) {
    if (static_cast<int>(au.perm.size()) != rank_)
      throw std::invalid_argument("CartanData: bad automorphism size");
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (a(au.perm[static_cast<std::size_t>(i)], au.perm[static_cast<std::size_t>(j)]) !=
            a(i, j))
          throw std::invalid_argument("CartanData: permutation is not a diagram automorphism");
  }
}

CartanData CartanData::affine_a(int ell) {
  int n = ell + 1;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  if (ell == 1) {
    a[0][1] = a[1][0] = -2;
  } else {
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    }
  }
  RootVector delta(std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<int> rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<Automorphism> autos{{"rho", rho}};
  return CartanData(std::move(a), std::vector<int>(static_cast<std::size_t>(n), 1),
                    std::move(delta), std::move(autos));
}

CartanData CartanData::affine_d4() {
  // Node 2 is the branch point; 0,1,3,4 are the outer nodes.
  std::vector<std::vector<int>> a(5, std::vector<int>(5, 0));
  for (int i = 0; i < 5; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (int i : {0, 1, 3, 4}) {
    a[static_cast<std::size_t>(i)][2] = -1;
    a[2][static_cast<std::size_t>(i)] = -1;
  }
  RootVector delta(std::vector<int>{1, 1, 2, 1, 1});
  std::vector<Automorphism> autos{
      {"tau", {1, 0, 2, 4, 3}},   // swaps 0<->1 and 3<->4
      {"tau'", {3, 4, 2, 0, 1}},  // swaps 0<->3 and 1<->4
  };
  return CartanData(std::move(a), std::vector<int>(5, 1), std::move(delta), std::move(autos));
}

bool CartanData::simply_laced() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (i != j && a(i, j) < -1) return false;
  return true;
}

const Automorphism& CartanData::automorphism(const std::string& name) const {
  for (const auto& au : autos_)
    if (au.name == name) return au;
  throw std::invalid_argument("CartanData: unknown automorphism " + name);
}

int CartanData::bilinear(const RootVector& u, const RootVector& v) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<long>(u[i]) * c(i, j) * v[j];
  }
  return static_cast<int>(s);
}

RootVector CartanData::reflect(int i, const RootVector& v) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("CartanData: reflection index");
  // s_i(v) = v - <v, alpha_i^vee> alpha_i, with <alpha_j, alpha_i^vee> = a_{ij}.
  int coef = 0;
  for (int j = 0; j < rank_; ++j) coef += v[j] * a(i, j);
  RootVector r = v;
  r[i] -= coef;
  return r;
}

RootVector CartanData::reflect_root(const RootVector& beta, const RootVector& v) const {
  int bb = bilinear(beta, beta);
  if (bb == 0) throw std::invalid_argument("CartanData: reflection in an isotropic vector");
  int num = 2 * bilinear(v, beta);
  if (num % bb != 0) throw std::invalid_argument("CartanData: non-integral reflection");
  return v - beta * (num / bb);
}

RootVector CartanData::apply_perm(const std::vector<int>& perm, const RootVector& v) const {
  RootVector r = RootVector::zero(rank_);
  for (int i = 0; i < rank_; ++i) r[perm[static_cast<std::size_t>(i)]] = v[i];
  return r;
}

bool CartanData::is_imaginary(const RootVector& r) const {
  if (r.is_zero()) return false;
  // r = m * delta for a nonzero integer m; delta's first coordinate is
  // nonzero for the affine data handled here.
  if (delta_[0] == 0 || r[0] % delta_[0] != 0) return false;
  int m = r[0] / delta_[0];
  return m != 0 && r == delta_ * m;
}

std::vector<int> CartanData::finite_indices() const {
  std::vector<int> v;
  for (int i = 1; i < rank_; ++i) v.push_back(i);
  return v;
}

WeylWord WeylWord::refls(std::initializer_list<int> indices) {
  WeylWord w;
  for (int i : indices) w.push_refl(i);
  return w;
}

WeylWord& WeylWord::push_refl(int i) {
  WeylLetter l;
  l.refl = i;
  letters_.push_back(std::move(l));
  return *this;
}

WeylWord& WeylWord::push_auto(const Automorphism& a) { return push_auto(a.perm, a.name); }

WeylWord& WeylWord::push_auto(std::vector<int> perm, std::string name) {
  WeylLetter l;
  l.perm = std::move(perm);
  l.name = std::move(name);
  letters_.push_back(std::move(l));
  return *this;
}

WeylWord& WeylWord::append(const WeylWord& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

WeylWord::Normal WeylWord::normalized(int rank) const {
  // Scan left to right, composing automorphisms; a reflection s_i seen after
  // the composite perm pi emits s_{pi(i)} (rho s_i = s_{rho(i)} rho).
  std::vector<int> pi(static_cast<std::size_t>(rank));
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<int> plain;
  for (const auto& l : letters_) {
    if (l.is_refl()) {
      plain.push_back(pi[static_cast<std::size_t>(l.refl)]);
    } else {
      // pi := pi o perm
      std::vector<int> next(pi.size());
      for (std::size_t i = 0; i < pi.size(); ++i)
        next[i] = pi[static_cast<std::size_t>(l.perm[i])];
      pi = std::move(next);
    }
  }
  return Normal{std::move(pi), std::move(plain)};
}

WeylWord WeylWord::reversed_inverse(int rank) const {
  // this = plain o perm, so the inverse is perm^{-1} o reversed(plain).
  Normal n = normalized(rank);
  WeylWord w;
  bool trivial = true;
  for (std::size_t i = 0; i < n.perm.size(); ++i)
    if (n.perm[i] != static_cast<int>(i)) trivial = false;
  if (!trivial) {
    std::vector<int> inv(n.perm.size());
    for (std::size_t i = 0; i < n.perm.size(); ++i)
      inv[static_cast<std::size_t>(n.perm[i])] = static_cast<int>(i);
    w.push_auto(std::move(inv), "perm^-1");
  }
  for (auto it = n.plain.rbegin(); it != n.plain.rend(); ++it) w.push_refl(*it);
  return w;
}

std::string WeylWord::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) out << " ";
    first = false;
    if (l.is_refl())
      out << "s" << l.refl;
    else
      out << (l.name.empty() ? "perm" : l.name);
  }
  if (first) out << "e";
  return out.str();
}

RootVector apply_word(const CartanData& c, const WeylWord& w, const RootVector& v) {
  RootVector r = v;
  for (std::size_t k = w.size(); k-- > 0;) {
    const WeylLetter& l = w.letter(k);
    if (l.is_refl())
      r = c.reflect(l.refl, r);
    else
      r = c.apply_perm(l.perm, r);
  }
  return r;
}

bool is_reduced(const CartanData& c, const WeylWord& w) {
  auto n = w.normalized(c.rank());
  WeylElt acc = WeylElt::identity(c.rank());
  for (int j : n.plain) {
    if (!acc.apply(c.simple_root(j)).is_positive()) return false;
    // acc := acc o s_j
    WeylElt sj = WeylElt::from_word(c, WeylWord::refls({j}));
    acc = acc.compose(sj);
  }
  return true;
}

int exchange_index(const CartanData& c, const WeylWord& prefix, int p) {
  auto n = prefix.normalized(c.rank());
  WeylElt full = WeylElt::from_word(c, prefix);
  if (!full.apply(c.simple_root(p)).is_negative())
    throw std::invalid_argument("exchange_index: prefix(alpha_p) is not negative");
  RootVector t = c.simple_root(p);
  for (std::size_t l = n.plain.size(); l-- > 0;) {
    int j = n.plain[l];
    if (t == c.simple_root(j)) return static_cast<int>(l) + 1;
    t = c.reflect(j, t);
  }
  throw std::logic_error("exchange_index: no exchange position found");
}

WeylElt WeylElt::identity(int rank) {
  WeylElt e;
  for (int j = 0; j < rank; ++j) e.img_.push_back(RootVector::simple(rank, j));
  return e;
}

WeylElt WeylElt::from_word(const CartanData& c, const WeylWord& w) {
  WeylElt e = identity(c.rank());
  for (int j = 0; j < c.rank(); ++j) e.img_[static_cast<std::size_t>(j)] =
      apply_word(c, w, c.simple_root(j));
  return e;
}

WeylElt WeylElt::from_images(std::vector<RootVector> images) {
  WeylElt e;
  e.img_ = std::move(images);
  return e;
}

RootVector WeylElt::apply(const RootVector& v) const {
  RootVector r = RootVector::zero(rank());
  for (int j = 0; j < rank(); ++j) {
    if (v[j] == 0) continue;
    r = r + img_[static_cast<std::size_t>(j)] * v[j];
  }
  return r;
}

WeylElt WeylElt::compose(const WeylElt& right) const {
  WeylElt e;
  e.img_.reserve(right.img_.size());
  for (const auto& col : right.img_) e.img_.push_back(apply(col));
  return e;
}

WeylWord reduced_word(const CartanData& c, const WeylElt& e) {
  WeylElt cur = e;
  std::vector<int> tail;  // letters collected right-to-left
  const int guard = 4096;
  for (int step = 0; step < guard; ++step) {
    int pick = -1;
    for (int i = 0; i < c.rank(); ++i)
      if (cur.image(i).is_negative()) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    tail.push_back(pick);
    WeylElt si = WeylElt::from_word(c, WeylWord::refls({pick}));
    cur = cur.compose(si);
  }
  // The remainder must permute the simple roots.
  std::vector<int> perm(static_cast<std::size_t>(c.rank()), -1);
  bool trivial = true;
  for (int j = 0; j < c.rank(); ++j) {
    const RootVector& im = cur.image(j);
    int target = -1;
    for (int i = 0; i < c.rank(); ++i)
      if (im == c.simple_root(i)) target = i;
    if (target < 0) throw std::invalid_argument("reduced_word: not an extended Weyl element");
    perm[static_cast<std::size_t>(j)] = target;
    if (target != j) trivial = false;
  }
  WeylWord w;
  if (!trivial) w.push_auto(perm, "perm");
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) w.push_refl(*it);
  return w;
}

int weyl_length(const CartanData& c, const WeylElt& e) {
  return static_cast<int>(reduced_word(c, e).plain_length(c.rank()));
}

WeylElt weyl_inverse(const CartanData& c, const WeylElt& e) {
  WeylWord w = reduced_word(c, e);
  return WeylElt::from_word(c, w.reversed_inverse(c.rank()));
}

WeylWord longest_finite_word(const CartanData& c) {
  WeylElt u = WeylElt::identity(c.rank());
  WeylWord w;
  const int guard = 4096;
  for (int step = 0; step < guard; ++step) {
    int pick = -1;
    for (int i : c.finite_indices())
      if (u.apply(c.simple_root(i)).is_positive()) {
        pick = i;
        break;
      }
    if (pick < 0) return w;
    w.push_refl(pick);
    u = u.compose(WeylElt::from_word(c, WeylWord::refls({pick})));
  }
  throw std::logic_error("longest_finite_word: did not terminate");
}

std::pair<WeylElt, WeylWord> coset_decompose(const CartanData& c, const WeylElt& w,
                                             const std::vector<int>& J) {
  WeylElt u = w;
  std::vector<int> v;  // word of w_J, built by prepending
  const int guard = 4096;
  for (int step = 0; step < guard; ++step) {
    int pick = -1;
    for (int j : J)
      if (u.apply(c.simple_root(j)).is_negative()) {
        pick = j;
        break;
      }
    if (pick < 0) {
      WeylWord wj;
      for (int j : v) wj.push_refl(j);
      return {u, wj};
    }
    u = u.compose(WeylElt::from_word(c, WeylWord::refls({pick})));
    v.insert(v.begin(), pick);
  }
  throw std::logic_error("coset_decompose: did not terminate");
}

std::string render_root(const CartanData& c, const RootVector& r) {
  // Write r = m*delta + finite and print like "2d-a1+a2".
  int m = r[0] / (c.delta()[0] == 0 ? 1 : c.delta()[0]);
  RootVector fin = r - c.delta() * m;
  std::ostringstream out;
  bool wrote = false;
  if (m != 0) {
    if (m == -1)
      out << "-d";
    else if (m == 1)
      out << "d";
    else
      out << m << "d";
    wrote = true;
  }
  for (int i = 1; i < c.rank(); ++i) {
    int k = fin[i];
    if (k == 0) continue;
    if (k > 0 && wrote) out << "+";
    if (k == -1)
      out << "-";
    else if (k != 1)
      out << k << "*";
    out << "a" << i;
    wrote = true;
  }
  if (!wrote) out << "0";
  return out.str();
}

}  // namespace qdilog
