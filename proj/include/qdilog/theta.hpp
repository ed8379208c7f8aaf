#pragma once

#include <optional>
#include <vector>

#include "qdilog/cases.hpp"
#include "qdilog/commtree.hpp"
#include "qdilog/skewalg.hpp"

namespace qdilog {

enum class Side { forward, reversed };

// Shared per-case projection state.
class ThetaContext {
 public:
  explicit ThetaContext(const OrderCase& cs);

  const OrderCase& order_case() const { return *cs_; }
  const QuiverOrientation& quiver() const { return quiver_; }
  const SkewRingPtr& y() const { return y_; }

  // The finite Weyl parameter twisting the imaginary root vectors on the
  // given side.
  const WeylWord& side_w(Side side) const;

 private:
  const OrderCase* cs_;
  QuiverOrientation quiver_;
  SkewRingPtr y_;
};

// The q-commutator tree presenting the side-twisted weight-m*delta vector
// attached to the finite index i (the bracket of a braid-shifted vector with
// a generator). Word-driven for the simply-laced cases, closed forms for A1.
CommTree phi_tree(const ThetaContext& ctx, Side side, int i, int m);

// Projected image of phi_tree: zero or a scalar multiple of e^{m delta}.
std::optional<QScalar> phi_image_scalar(const ThetaContext& ctx, Side side, int i, int m);

// Image of one real-root factor: exp_q((q^{-1}-q) E-image (x) F-image) in
// the y-ring; the unit series when the projection vanishes.
SkewSeries real_factor_image(const ThetaContext& ctx, const CommTree& tree, int degree);

// The two routes to the imaginary block.
struct ImaginaryBlock {
  SkewSeries series;
  std::vector<QScalar> sm_scalars;  // coefficient of y^{m delta} in S'_m, m = 1..
};
ImaginaryBlock imaginary_block_from_sm(const ThetaContext& ctx, Side side, int degree,
                                       int levels = -1);
SkewSeries imaginary_block_closed(const ThetaContext& ctx, int degree);

// The b-matrix of the block construction and its exact inverse.
std::vector<std::vector<QScalar>> b_matrix(const ThetaContext& ctx, int m);
std::vector<std::vector<QScalar>> invert_matrix(const std::vector<std::vector<QScalar>>& a);

// Full projected product for one side of the convex order, truncated.
SkewSeries theta_image(const ThetaContext& ctx, Side side, int degree);

// Factors of one row as they enter the product, in multiplication order;
// used by the golden-fixture tests and the CLI expand dump.
struct RealFactor {
  RootVector root;
  CommTree tree;
  SkewSeries image;
};
std::vector<RealFactor> row_factor_images(const ThetaContext& ctx, Side side, bool head, int row,
                                          int degree);

}  // namespace qdilog
