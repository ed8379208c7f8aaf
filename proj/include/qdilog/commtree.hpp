#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qdilog/qscalar.hpp"
#include "qdilog/rootsys.hpp"

namespace qdilog {

// A q-commutator monomial: a scalar prefactor times a binary tree of
// q-brackets whose leaves are generator indices. Trees are immutable and
// share structure freely.
class CommTree {
 public:
  struct Node {
    int leaf = -1;
    std::shared_ptr<const Node> left, right;
    bool is_leaf() const { return leaf >= 0; }
  };
  using NodePtr = std::shared_ptr<const Node>;

  CommTree() = default;

  static CommTree leaf(int index);
  static CommTree bracket(const CommTree& left, const CommTree& right);
  CommTree scaled(const QScalar& factor) const;

  bool valid() const { return root_ != nullptr; }
  const QScalar& prefactor() const { return pre_; }
  const NodePtr& root() const { return root_; }

  RootVector weight(const CartanData& c) const;
  int leaf_count() const;

  std::string to_string() const;  // nested-bracket form, e.g. "[[0,1],0]"

 private:
  QScalar pre_ = QScalar(1);
  NodePtr root_;
};

// The anti-automorphism fixing the generators: swaps every bracket.
CommTree reverse_tree(const CommTree& t);

// Simply-laced root-vector algorithm: returns a prefactor-1 tree presenting
// the braid-twisted generator for the reduced word w and index j with
// w(alpha_j) positive. Errors on non-simply-laced data or negative targets.
CommTree algorithm_root_vector(const CartanData& c, const WeylWord& w, int j);

// Closed-form tree families, stored as fixed rules and fixture data
// independent of the word-driven algorithm. Family names are listed per
// case by closed_form_families; the level m counts delta steps.
CommTree closed_form_tree(const std::string& case_id, const std::string& family, int m);
std::vector<std::string> closed_form_families(const std::string& case_id);

}  // namespace qdilog
