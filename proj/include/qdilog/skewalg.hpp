#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdilog/commtree.hpp"
#include "qdilog/qscalar.hpp"
#include "qdilog/rootsys.hpp"

namespace qdilog {

using IntMatrix = std::vector<std::vector<int>>;

// Orientation data attached to a Cartan matrix: the skew-symmetric matrix B,
// its lower part L, and the even pairing <a_i, a_j>_B = c_ij - b_ij.
class QuiverOrientation {
 public:
  QuiverOrientation(CartanData cartan, IntMatrix b);

  const CartanData& cartan() const { return cartan_; }
  const IntMatrix& b_matrix() const { return b_; }
  int b(int i, int j) const { return b_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int pairing(int i, int j) const;
  long pairing(const std::vector<int>& u, const std::vector<int>& v) const;

 private:
  CartanData cartan_;
  IntMatrix b_;
};

// Presentation of a skew monomial ring: x_i x_j = q^{comm[i][j]} x_j x_i.
// Rings derived from a skew matrix keep it for normal ordering and for the
// admissibility checks of substitution maps.
struct SkewRing {
  std::string name;
  char var = 'x';
  int vars = 0;
  IntMatrix comm;
  bool laurent = false;
  std::optional<IntMatrix> base_b;

  // q-power picked up when x^u x^v is put into canonical ascending order.
  long reorder_power(const std::vector<int>& u, const std::vector<int>& v) const;
  // :x^m: = q^{t(m) L m} x^m with L the lower part of base_b.
  long normal_power(const std::vector<int>& m) const;
  bool same_as(const SkewRing& o) const;
};
using SkewRingPtr = std::shared_ptr<const SkewRing>;

SkewRingPtr make_series_ring(std::string name, char var, IntMatrix base_b, int comm_multiple);
SkewRingPtr e_ring(const QuiverOrientation& q);
SkewRingPtr f_ring(const QuiverOrientation& q);
SkewRingPtr y_ring(const QuiverOrientation& q);
// The rank-two x-ring with x_1 x_2 = q^2 x_2 x_1, and the w-ring carrying
// the same relations after the x -> w change of variables.
SkewRingPtr xw_ring(bool w);

// Degree-truncated formal series over a skew monomial ring. Exponent keys
// are canonical (ascending variable order); commutation powers are folded
// into the coefficients, so equal series have equal term maps.
class SkewSeries {
 public:
  SkewSeries() = default;
  SkewSeries(SkewRingPtr ring, int degree);
  static SkewSeries unit(SkewRingPtr ring, int degree);
  static SkewSeries monomial(SkewRingPtr ring, int degree, const std::vector<int>& exponents,
                             const QScalar& coeff);

  const SkewRingPtr& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  QScalar constant_term() const;
  QScalar coeff(const std::vector<int>& exponents) const;
  int min_degree() const;  // degree_+1 when zero
  std::size_t term_count() const { return terms_.size(); }

  SkewSeries operator+(const SkewSeries& o) const;
  SkewSeries operator-(const SkewSeries& o) const;
  SkewSeries operator*(const SkewSeries& o) const;
  SkewSeries scaled(const QScalar& c) const;
  bool operator==(const SkewSeries& o) const;
  bool operator!=(const SkewSeries& o) const { return !(*this == o); }

  SkewSeries truncated(int degree) const;

  void add_term(const std::vector<int>& exponents, const QScalar& coeff);

  std::string to_string() const;

 private:
  void check_compatible(const SkewSeries& o) const;

  SkewRingPtr ring_;
  int degree_ = 0;
  std::map<std::vector<int>, QScalar> terms_;
};

// Inverse of a series with invertible constant term.
SkewSeries series_inverse(const SkewSeries& s);

// exp(arg) and log(1 + arg) for arguments with zero constant term.
SkewSeries exp_of(const SkewSeries& arg);
SkewSeries log_one_plus(const SkewSeries& arg);

// exp_q(arg) = sum q^{-n(n-1)/2}/[n]! arg^n.
SkewSeries exp_q_of(const SkewSeries& arg);

// The quantum dilogarithm E(arg) = exp(Li_{2,q^2}(-q arg)) and its inverse
// (-q arg; q^2)_infinity, exact at the ring's truncation degree.
SkewSeries dilog_E(const SkewSeries& arg);
SkewSeries dilog_E_inverse(const SkewSeries& arg);

// (z; q^k)_infinity via the Euler expansion.
SkewSeries pochhammer_inf(const SkewSeries& z, int k);

// q^{t(m) L m} as a scalar.
QScalar normal_order_scalar(const SkewRing& ring, const std::vector<int>& m);
// Convenience: the series q^{t(m) L m} x^m.
SkewSeries normal_ordered_monomial(SkewRingPtr ring, int degree, const std::vector<int>& m,
                                   const QScalar& coeff = QScalar(1));

// Image of a q-commutator tree under the quiver projection: either zero or
// a scalar multiple of a canonical monomial in the e-generators.
struct ProjImage {
  QScalar coeff;
  std::vector<int> exponents;
};
std::optional<ProjImage> project_tree(const QuiverOrientation& q, const CommTree& t);

// The mirrored image in the f-generators: coefficient bar-involuted with the
// reversal reordering folded in, exponents unchanged.
ProjImage mirror_image(const QuiverOrientation& q, const ProjImage& e_image);

// A scalar multiple of a canonical monomial e^u (x) f^v in the double of the
// projected algebras; products are componentwise, with all commutation
// bookkeeping folded into the coefficient.
class DoubleMonomial {
 public:
  DoubleMonomial(const QuiverOrientation& q, QScalar coeff, std::vector<int> e_exponents,
                 std::vector<int> f_exponents);
  static DoubleMonomial pair(const QuiverOrientation& q, const ProjImage& e_part,
                             const ProjImage& f_part);

  const QScalar& coeff() const { return coeff_; }
  const std::vector<int>& e_exponents() const { return e_; }
  const std::vector<int>& f_exponents() const { return f_; }

  DoubleMonomial operator*(const DoubleMonomial& o) const;

  // Expression over the y-generators; requires e and f exponents to agree.
  SkewSeries as_y_series(SkewRingPtr yring, int degree) const;

 private:
  const QuiverOrientation* quiver_;
  QScalar coeff_;
  std::vector<int> e_, f_;
};

// Substitution y_i -> :y'^{R v_i}:. Requires tR B' R = B over the rings'
// base matrices, nonnegative entries and no zero column. When the target
// degree is omitted it defaults to source degree times the largest column
// sum of R, so no source term below the source cutoff is lost.
SkewSeries psi_R(const SkewSeries& s, const IntMatrix& R, SkewRingPtr target, int target_degree);
SkewSeries psi_R(const SkewSeries& s, const IntMatrix& R, SkewRingPtr target);

// The normal-order-preserving renaming from the x-ring to the w-ring,
// :x_1^a x_2^b: -> :w_1^a w_2^{2a+b}:.
SkewSeries chi_rewrite(const SkewSeries& s, int target_degree);

// Anti-automorphism sending q to q^{-1} and reversing monomials; used for
// the structural mirror checks on verified identities.
SkewSeries anti_bar(const SkewSeries& s);

}  // namespace qdilog
