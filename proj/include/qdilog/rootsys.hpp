#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdilog {

// Integer coordinate vector over the simple roots alpha_0..alpha_l.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::vector<int> coords) : c_(std::move(coords)) {}
  static RootVector zero(int rank) { return RootVector(std::vector<int>(rank, 0)); }
  static RootVector simple(int rank, int i);

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const;
  // Affine roots have uniform sign: positive iff nonzero with all coords >= 0.
  bool is_positive() const;
  bool is_negative() const;
  int height() const;

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator*(int k) const;
  bool operator==(const RootVector& o) const { return c_ == o.c_; }
  bool operator!=(const RootVector& o) const { return c_ != o.c_; }
  bool operator<(const RootVector& o) const { return c_ < o.c_; }

  std::string to_string() const;  // plain coordinate tuple

 private:
  std::vector<int> c_;
};

struct Automorphism {
  std::string name;
  std::vector<int> perm;  // alpha_i -> alpha_{perm[i]}
};

// Affine Cartan data plus the symmetrized form and the named Dynkin
// automorphisms used by the extended Weyl group.
class CartanData {
 public:
  CartanData(std::vector<std::vector<int>> cartan, std::vector<int> symmetrizers,
             RootVector delta, std::vector<Automorphism> autos);

  static CartanData affine_a(int ell);  // type A_ell^{(1)}; ell = 1 is the rank-2 case
  static CartanData affine_d4();

  int rank() const { return rank_; }
  int a(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int c(int i, int j) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int d(int i) const { return d_[static_cast<std::size_t>(i)]; }
  bool simply_laced() const;
  const RootVector& delta() const { return delta_; }
  const std::vector<Automorphism>& automorphisms() const { return autos_; }
  const Automorphism& automorphism(const std::string& name) const;

  int bilinear(const RootVector& u, const RootVector& v) const;  // (u, v)
  RootVector simple_root(int i) const { return RootVector::simple(rank_, i); }
  RootVector reflect(int i, const RootVector& v) const;  // s_i
  // Reflection in an arbitrary real root beta with (beta, beta) = 2 d.
  RootVector reflect_root(const RootVector& beta, const RootVector& v) const;
  RootVector apply_perm(const std::vector<int>& perm, const RootVector& v) const;

  bool is_imaginary(const RootVector& r) const;  // nonzero multiple of delta
  std::vector<int> finite_indices() const;       // 1..l

 private:
  int rank_;
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  std::vector<std::vector<int>> c_;
  RootVector delta_;
  std::vector<Automorphism> autos_;
};

struct WeylLetter {
  int refl = -1;          // reflection index when >= 0
  std::vector<int> perm;  // automorphism letter when nonempty
  std::string name;
  bool is_refl() const { return refl >= 0; }
};

// Word in the extended Weyl group. Letters act right-to-left on vectors, as
// function composition. The normal form collects all automorphism letters
// into one composite permutation on the right, relabelling the reflections
// they move past (rho s_i = s_{rho(i)} rho), so the element factors as
// s_{plain[0]} ... s_{plain[k-1]} o perm.
class WeylWord {
 public:
  WeylWord() = default;
  static WeylWord refls(std::initializer_list<int> indices);

  WeylWord& push_refl(int i);
  WeylWord& push_auto(const Automorphism& a);
  WeylWord& push_auto(std::vector<int> perm, std::string name);
  WeylWord& append(const WeylWord& w);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const WeylLetter& letter(std::size_t k) const { return letters_[k]; }

  struct Normal {
    std::vector<int> perm;   // identity when no automorphism letters
    std::vector<int> plain;  // reflection indices
  };
  Normal normalized(int rank) const;
  std::size_t plain_length(int rank) const { return normalized(rank).plain.size(); }

  WeylWord reversed_inverse(int rank) const;  // word of the inverse element

  std::string to_string() const;

 private:
  std::vector<WeylLetter> letters_;
};

RootVector apply_word(const CartanData& c, const WeylWord& w, const RootVector& v);

// True iff every partial image s_{i_1}..s_{i_{k-1}}(alpha_{i_k}) of the
// normalized plain part is a positive root; automorphism letters have
// length zero and never spoil reducedness.
bool is_reduced(const CartanData& c, const WeylWord& w);

// Exchange-condition scan. Requires prefix(alpha_p) negative; returns the
// 1-based position l in the normalized plain part of prefix such that
// deleting letter l and appending s_p reproduces prefix as a group element.
int exchange_index(const CartanData& c, const WeylWord& prefix, int p);

// Element of the extended affine Weyl group, represented by its action on
// the root lattice (columns = images of the simple roots).
class WeylElt {
 public:
  static WeylElt identity(int rank);
  static WeylElt from_word(const CartanData& c, const WeylWord& w);
  static WeylElt from_images(std::vector<RootVector> images);

  int rank() const { return static_cast<int>(img_.size()); }
  const RootVector& image(int j) const { return img_[static_cast<std::size_t>(j)]; }
  RootVector apply(const RootVector& v) const;
  WeylElt compose(const WeylElt& right) const;  // (this o right)(v) = this(right(v))
  bool operator==(const WeylElt& o) const { return img_ == o.img_; }

 private:
  std::vector<RootVector> img_;
};

// Extracts the normal-form reduced word (automorphism prefix + plain
// reflections) from the action; throws if the action does not belong to the
// extended Weyl group generated by the named automorphisms.
WeylWord reduced_word(const CartanData& c, const WeylElt& e);
int weyl_length(const CartanData& c, const WeylElt& e);
WeylElt weyl_inverse(const CartanData& c, const WeylElt& e);

// Longest element of the finite Weyl group (indices 1..l), as a reduced word.
WeylWord longest_finite_word(const CartanData& c);

// w = w^J w_J with w_J in the parabolic W_J and w^J(alpha_j) positive for
// every j in J. Returns (w^J, word of w_J).
std::pair<WeylElt, WeylWord> coset_decompose(const CartanData& c, const WeylElt& w,
                                             const std::vector<int>& J);

// Rendering in the CLI's root notation, e.g. "2d-a1" for 2*delta - alpha_1.
std::string render_root(const CartanData& c, const RootVector& r);

}  // namespace qdilog
