#include "qdilog/commtree.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>


namespace qdilog {

CommTree CommTree::leaf(int index) {
  CommTree t;
  auto n = std::make_shared<Node>();
  n->leaf = index;
  t.root_ = std::move(n);
  return t;
}

CommTree CommTree::bracket(const CommTree& left, const CommTree& right) {
  if (!left.valid() || !right.valid()) throw std::invalid_argument("CommTree: empty operand");
  CommTree t;
  t.pre_ = left.pre_ * right.pre_;
  auto n = std::make_shared<Node>();
  n->left = left.root_;
  n->right = right.root_;
  t.root_ = std::move(n);
  return t;
}

CommTree CommTree::scaled(const QScalar& factor) const {
  CommTree t = *this;
  t.pre_ = t.pre_ * factor;
  return t;
}

namespace {

void accumulate_weight(const CommTree::NodePtr& n, const CartanData& c, RootVector& acc) {
  if (n->is_leaf()) {
    acc[n->leaf] += 1;
    return;
  }
  accumulate_weight(n->left, c, acc);
  accumulate_weight(n->right, c, acc);
}

int count_leaves(const CommTree::NodePtr& n) {
  if (n->is_leaf()) return 1;
  return count_leaves(n->left) + count_leaves(n->right);
}

void render(const CommTree::NodePtr& n, std::ostringstream& out) {
  if (n->is_leaf()) {
    out << n->leaf;
    return;
  }
  out << "[";
  render(n->left, out);
  out << ",";
  render(n->right, out);
  out << "]";
}

CommTree::NodePtr reverse_node(const CommTree::NodePtr& n) {
  if (n->is_leaf()) return n;
  auto m = std::make_shared<CommTree::Node>();
  m->left = reverse_node(n->right);
  m->right = reverse_node(n->left);
  return m;
}

}  // namespace

RootVector CommTree::weight(const CartanData& c) const {
  if (!valid()) throw std::logic_error("CommTree: weight of empty tree");
  RootVector acc = RootVector::zero(c.rank());
  accumulate_weight(root_, c, acc);
  return acc;
}

int CommTree::leaf_count() const { return valid() ? count_leaves(root_) : 0; }

std::string CommTree::to_string() const {
  if (!valid()) return "<empty>";
  std::ostringstream out;
  render(root_, out);
  std::string body = out.str();
  if (pre_.is_one()) return body;
  return pre_.to_string() + "*" + body;
}

CommTree reverse_tree(const CommTree& t) {
  if (!t.valid()) return t;
  struct Builder {
    static CommTree make(const CommTree::NodePtr& n) {
      if (n->is_leaf()) return CommTree::leaf(n->leaf);
      return CommTree::bracket(make(n->right), make(n->left));
    }
  };
  return Builder::make(t.root()).scaled(t.prefactor());
}

namespace {

struct AlgoState {
  const CartanData* c;
};

RootVector partial_image(const CartanData& c, const std::vector<int>& word, std::size_t upto,
                         int p) {
  // s_{j_1} ... s_{j_upto}(alpha_p), letters applied right to left.
  RootVector v = c.simple_root(p);
  for (std::size_t k = upto; k-- > 0;) v = c.reflect(word[k], v);
  return v;
}

CommTree algo_core(const CartanData& c, std::vector<int> word, int p) {
  for (;;) {
    if (word.empty()) return CommTree::leaf(p);
    int jk = word.back();
    int aij = c.a(jk, p);
    if (jk == p) throw std::logic_error("root vector algorithm: repeated index on a reduced word");
    if (aij == 0) {
      word.pop_back();
      continue;
    }
    RootVector img = partial_image(c, word, word.size() - 1, p);
    if (img.is_negative()) {
      // Exchange condition: the prefix absorbs s_p; drop the letter found by
      // the scan and continue with the last letter as the new index.
      RootVector t = c.simple_root(p);
      std::size_t found = word.size();
      for (std::size_t l = word.size() - 1; l-- > 0;) {
        if (t == c.simple_root(word[l])) {
          found = l;
          break;
        }
        t = c.reflect(word[l], t);
      }
      if (found == word.size())
        throw std::logic_error("root vector algorithm: exchange scan failed");
      int new_p = jk;
      word.pop_back();
      word.erase(word.begin() + static_cast<long>(found));
      p = new_p;
      continue;
    }
    // Positive image: a branch [E_{jk}, E_p]_q over the shortened word.
    word.pop_back();
    CommTree left = algo_core(c, word, jk);
    CommTree right = algo_core(c, word, p);
    return CommTree::bracket(left, right);
  }
}

}  // namespace

CommTree algorithm_root_vector(const CartanData& c, const WeylWord& w, int j) {
  if (!c.simply_laced())
    throw std::invalid_argument("algorithm_root_vector: requires simply-laced data");
  auto n = w.normalized(c.rank());
  // w = plain o perm, so T_w(E_j) = T_plain(E_{perm(j)}).
  int p = n.perm[static_cast<std::size_t>(j)];
  RootVector target = WeylElt::from_word(c, w).apply(c.simple_root(j));
  if (!target.is_positive())
    throw std::invalid_argument("algorithm_root_vector: w(alpha_j) is negative");
  CommTree t = algo_core(c, n.plain, p);
  return t;
}

namespace {

// ---- Closed-form families -------------------------------------------------
//
// Each closed-form family is a base tree plus a periodic branch-append
// rule; the builders below encode those rules as fixed data, independent of
// the word-driven algorithm, so the two routes can be cross-checked. The D4
// families have no compact append rule and are frozen as literal fixture
// trees (levels m <= 4), resolved once against the algorithm and kept as
// regression anchors.

CommTree iterate_left(CommTree t, const CommTree& x, int times) {
  for (int k = 0; k < times; ++k) t = CommTree::bracket(x, t);
  return t;
}

CommTree iterate_right(CommTree t, const CommTree& x, int times) {
  for (int k = 0; k < times; ++k) t = CommTree::bracket(t, x);
  return t;
}

CommTree pair_tree(int a, int b) { return CommTree::bracket(CommTree::leaf(a), CommTree::leaf(b)); }

void require_level(bool ok) {
  if (!ok) throw std::invalid_argument("closed_form_tree: level out of range for family");
}

CommTree a1_family(const std::string& family, int m) {
  CommTree x = pair_tree(0, 1);
  QScalar half = QScalar(1) / qint(2);
  if (family == "d-a1") {
    require_level(m >= 1);
    CommTree t = iterate_right(CommTree::leaf(0), x, m - 1);
    QScalar pre(1);
    for (int k = 1; k < m; ++k) pre *= half;
    return t.scaled(pre);
  }
  if (family == "d+a1") {
    require_level(m >= 0);
    CommTree t = iterate_left(CommTree::leaf(1), x, m);
    QScalar pre(1);
    for (int k = 0; k < m; ++k) pre *= half;
    return t.scaled(pre);
  }
  if (family == "phi1") {
    require_level(m >= 1);
    return CommTree::bracket(a1_family("d-a1", m), CommTree::leaf(1));
  }
  if (family == "phi1-rev") {
    require_level(m >= 1);
    return CommTree::bracket(reverse_tree(a1_family("d+a1", m - 1)), CommTree::leaf(0));
  }
  throw std::invalid_argument("closed_form_tree: unknown family " + family);
}

// Fixed braid-word presentations of the A2 imaginary building blocks.
CommTree a2_phi_word_tree(const std::string& family, int m) {
  CartanData c = CartanData::affine_a(2);
  const Automorphism& rho = c.automorphism("rho");
  if (family == "phi1") {
    // [(T_1 T_rho T_2)^{m-1}(E_1), Psi T_2 T_rho^{-1}(E_1)]_q
    WeylWord w;
    for (int k = 1; k < m; ++k) w.push_refl(1).push_auto(rho).push_refl(2);
    return CommTree::bracket(algorithm_root_vector(c, w, 1), pair_tree(0, 2));
  }
  // phi2: [T_{eps_2}^{m-1}(E_0), T_1(E_2)]_q
  WeylWord w;
  for (int k = 1; k < m; ++k) w.push_auto(rho).push_auto(rho).push_refl(1).push_refl(2);
  return CommTree::bracket(algorithm_root_vector(c, w, 0), pair_tree(1, 2));
}

CommTree a2_family(const std::string& family, int m) {
  auto d_a1a2 = [&](int lvl, auto&& self) -> CommTree {
    if (lvl == 1) return CommTree::leaf(0);
    return CommTree::bracket(CommTree::bracket(self(lvl - 1, self), CommTree::leaf(1)),
                             pair_tree(0, 2));
  };
  if (family == "d-a1-a2") {
    require_level(m >= 1);
    return d_a1a2(m, d_a1a2);
  }
  if (family == "d-a2") {
    require_level(m >= 1);
    return CommTree::bracket(d_a1a2(m, d_a1a2), CommTree::leaf(1));
  }
  if (family == "d+a1") {
    require_level(m >= 0);
    CommTree t = CommTree::leaf(1);
    for (int k = 0; k < m; ++k)
      t = CommTree::bracket(CommTree::bracket(t, CommTree::leaf(0)), pair_tree(1, 2));
    return t;
  }
  if (family == "d-a1") {
    require_level(m >= 1);
    CommTree t = pair_tree(2, 0);
    for (int k = 1; k < m; ++k)
      t = CommTree::bracket(CommTree::bracket(t, pair_tree(2, 1)), CommTree::leaf(0));
    return t;
  }
  if (family == "d+a2") {
    require_level(m >= 0);
    CommTree t = CommTree::leaf(2);
    for (int k = 0; k < m; ++k)
      t = CommTree::bracket(CommTree::bracket(t, CommTree::leaf(1)), pair_tree(2, 0));
    return t;
  }
  if (family == "d+a1+a2") {
    require_level(m >= 0);
    return CommTree::bracket(a2_family("d+a2", m), CommTree::leaf(1));
  }
  if (family == "phi1" || family == "phi2") {
    require_level(m >= 1);
    return a2_phi_word_tree(family, m);
  }
  throw std::invalid_argument("closed_form_tree: unknown family " + family);
}

CommTree a3_family(const std::string& family, int m) {
  CommTree x01 = pair_tree(0, 1), x03 = pair_tree(0, 3), x21 = pair_tree(2, 1);
  CommTree x10 = pair_tree(1, 0), x32 = pair_tree(3, 2), x12 = pair_tree(1, 2);
  // Minus-side chain: core(1) = E_2, f4(k) = [core(k), [0,3]],
  // core(k+1) = [f4(k), [2,1]].
  auto minus_chain = [&](int k, bool want_f4) {
    CommTree core = CommTree::leaf(2);
    CommTree f4;
    for (int i = 1; i <= k; ++i) {
      f4 = CommTree::bracket(core, x03);
      if (i < k || !want_f4) core = CommTree::bracket(f4, x21);
    }
    return want_f4 ? f4 : core;
  };
  // Plus-side chain: core(1) = E_3, g4(k) = [core(k), [1,0]],
  // core(k+1) = [g4(k), [3,2]].
  auto plus_chain = [&](int k, bool want_g4) {
    CommTree core = CommTree::leaf(3);
    CommTree g4;
    for (int i = 1; i <= k; ++i) {
      g4 = CommTree::bracket(core, x10);
      if (i < k || !want_g4) core = CommTree::bracket(g4, x32);
    }
    return want_g4 ? g4 : core;
  };
  if (family == "d-a1-a2-a3") {
    require_level(m >= 1);
    if (m == 1) return CommTree::leaf(0);
    return CommTree::bracket(minus_chain(m - 1, true), x01);
  }
  if (family == "d+a2") {
    require_level(m >= 0);
    return minus_chain(m, false);  // core(m + 1)
  }
  if (family == "d-a3") {
    require_level(m >= 1);
    return CommTree::bracket(minus_chain(m - 1, false), x01);
  }
  if (family == "d-a1") {
    require_level(m >= 1);
    return minus_chain(m, true);
  }
  if (family == "d+a1") {
    require_level(m >= 0);
    if (m == 0) return CommTree::leaf(1);
    return CommTree::bracket(plus_chain(m, true), x12);
  }
  if (family == "d+a3") {
    require_level(m >= 0);
    return plus_chain(m, false);  // core'(m + 1)
  }
  if (family == "d+a1+a2+a3") {
    require_level(m >= 0);
    return CommTree::bracket(plus_chain(m, false), x12);
  }
  if (family == "d-a2") {
    require_level(m >= 1);
    return plus_chain(m, true);
  }
  // Reversed-side braid presentations of the imaginary building blocks.
  CartanData c = CartanData::affine_a(3);
  const Automorphism& rho = c.automorphism("rho");
  if (family == "phi1-rev") {
    require_level(m >= 1);
    WeylWord w;
    for (int k = 1; k < m; ++k) w.push_refl(1).push_auto(rho).push_refl(3).push_refl(2);
    w.push_refl(1);
    return CommTree::bracket(algorithm_root_vector(c, w, 0), pair_tree(3, 2));
  }
  if (family == "phi2-rev") {
    require_level(m >= 1);
    WeylWord w;
    for (int k = 1; k < m; ++k)
      w.push_refl(1).push_refl(3).push_refl(2).push_auto(rho).push_auto(rho).push_refl(2);
    w.push_refl(3).push_refl(1);
    return CommTree::bracket(algorithm_root_vector(c, w, 2), CommTree::leaf(0));
  }
  if (family == "phi3-rev") {
    require_level(m >= 1);
    WeylWord w;
    for (int k = 1; k < m; ++k)
      w.push_refl(3).push_auto(rho).push_auto(rho).push_auto(rho).push_refl(1).push_refl(2);
    w.push_refl(3);
    return CommTree::bracket(algorithm_root_vector(c, w, 0), pair_tree(1, 2));
  }
  throw std::invalid_argument("closed_form_tree: unknown family " + family);
}

CommTree parse_tree(const std::string& text, std::size_t& pos) {
  if (pos >= text.size()) throw std::invalid_argument("parse_tree: truncated input");
  if (text[pos] == '[') {
    ++pos;
    CommTree left = parse_tree(text, pos);
    if (text.at(pos) != ',') throw std::invalid_argument("parse_tree: expected comma");
    ++pos;
    CommTree right = parse_tree(text, pos);
    if (text.at(pos) != ']') throw std::invalid_argument("parse_tree: expected bracket");
    ++pos;
    return CommTree::bracket(left, right);
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos) throw std::invalid_argument("parse_tree: expected leaf index");
  return CommTree::leaf(std::stoi(text.substr(start, pos - start)));
}

CommTree parse_tree(const std::string& text) {
  std::size_t pos = 0;
  CommTree t = parse_tree(text, pos);
  if (pos != text.size()) throw std::invalid_argument("parse_tree: trailing characters");
  return t;
}

struct D4Family {
  const char* name;
  int m0;  // level of the first stored tree
  std::vector<const char*> trees;
};

const std::vector<D4Family>& d4_table() {
  static const std::vector<D4Family> table = {
    {"d-a1-2a2-a3-a4", 1, {"0", "[[3,[1,[0,2]]],[4,[0,2]]]", "[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[0,2]]]", "[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[0,2]]]", "[[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[0,2]]]"}},
    {"d+a1", 0, {"1", "[[3,[1,[0,2]]],[4,[1,2]]]", "[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[1,2]]]", "[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[1,2]]]", "[[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[1,2]]]"}},
    {"d+a3", 0, {"3", "[[3,[1,[0,2]]],[4,[3,2]]]", "[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]", "[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]", "[[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]"}},
    {"d+a4", 0, {"4", "[[4,[1,[0,2]]],[4,[3,2]]]", "[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]", "[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]", "[[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]"}},
    {"d-a2", 1, {"[4,[3,[1,[0,2]]]]", "[[3,[1,[0,2]]],[[4,[1,[0,2]]],[4,[3,2]]]]", "[[[4,[1,[0,2]]],[4,[3,2]]],[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]]", "[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]]", "[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]]", "[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]]", "[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]]", "[[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]]]", "[[[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[[[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]]"}},
    {"d+a1+a2+a3+a4", 0, {"[4,[3,[1,2]]]", "[[[4,[1,[0,2]]],[4,[3,2]]],[3,[1,2]]]", "[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[3,[1,2]]]", "[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[3,[1,2]]]"}},
    {"d-a1-a2", 1, {"[4,[3,[0,2]]]", "[[[4,[1,[0,2]]],[4,[3,2]]],[3,[0,2]]]", "[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[3,[0,2]]]", "[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[3,[0,2]]]"}},
    {"d-a2-a3", 1, {"[4,[1,[0,2]]]", "[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]", "[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]", "[[[[[[[4,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]"}},
    {"d-a2-a4", 1, {"[3,[1,[0,2]]]", "[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]", "[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]", "[[[[[[[3,[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]],[4,[3,2]]],[1,[0,2]]]"}},
    {"d+a2", 0, {"2", "[[2,0],[[2,4],[[2,3],1]]]", "[[[2,4],[[2,3],1]],[[[2,0],[[2,3],1]],[[2,0],4]]]", "[[[[2,0],[[2,3],1]],[[2,0],4]],[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]]]", "[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]]", "[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]]]", "[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]]", "[[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]]]", "[[[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]]"}},
    {"d+a1+a2", 0, {"[2,1]", "[[[2,4],[[2,3],1]],[[2,0],1]]", "[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],1]]", "[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],1]]", "[[[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],1]]"}},
    {"d+a2+a3", 0, {"[2,3]", "[[[2,4],[[2,3],1]],[[2,0],3]]", "[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],3]]", "[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],3]]", "[[[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],3]]"}},
    {"d+a2+a4", 0, {"[2,4]", "[[[2,4],[[2,3],1]],[[2,0],4]]", "[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]", "[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]", "[[[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]"}},
    {"d-a1-a2-a3-a4", 1, {"[2,0]", "[[[2,0],[[2,3],1]],[[2,0],4]]", "[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]", "[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]", "[[[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]]"}},
    {"d+a1+2a2+a3+a4", 0, {"[[2,4],[[2,3],1]]", "[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]]", "[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]]", "[[[[[[[[2,4],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]]"}},
    {"d-a1", 1, {"[[2,0],[[2,4],3]]", "[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,4],3]]", "[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,4],3]]", "[[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,4],3]]"}},
    {"d-a3", 1, {"[[2,0],[[2,4],1]]", "[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,4],1]]", "[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,4],1]]", "[[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,4],1]]"}},
    {"d-a4", 1, {"[[2,0],[[2,3],1]]", "[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]]", "[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]]", "[[[[[[[[2,0],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]],[[2,0],4]],[[2,3],1]]"}},
  };
  return table;
}

CommTree d4_family(const std::string& family, int m) {
  for (const auto& fam : d4_table()) {
    if (family != fam.name) continue;
    int idx = m - fam.m0;
    require_level(idx >= 0 && idx < static_cast<int>(fam.trees.size()));
    return parse_tree(fam.trees[static_cast<std::size_t>(idx)]);
  }
  throw std::invalid_argument("closed_form_tree: unknown family " + family);
}

}  // namespace

CommTree closed_form_tree(const std::string& case_id, const std::string& family, int m) {
  if (case_id == "A1") return a1_family(family, m);
  if (case_id == "A2") return a2_family(family, m);
  if (case_id == "A3") return a3_family(family, m);
  if (case_id == "D4") return d4_family(family, m);
  throw std::invalid_argument("closed_form_tree: unknown case " + case_id);
}

std::vector<std::string> closed_form_families(const std::string& case_id) {
  if (case_id == "A1") return {"d-a1", "d+a1", "phi1", "phi1-rev"};
  if (case_id == "A2")
    return {"d-a1-a2", "d-a2", "d+a1", "d-a1", "d+a2", "d+a1+a2", "phi1", "phi2"};
  if (case_id == "A3")
    return {"d-a1-a2-a3", "d+a2", "d-a3", "d-a1", "d+a1", "d+a3", "d+a1+a2+a3", "d-a2",
            "phi1-rev", "phi2-rev", "phi3-rev"};
  if (case_id == "D4") {
    std::vector<std::string> names;
    for (const auto& fam : d4_table()) names.push_back(fam.name);
    return names;
  }
  return {};
}

}  // namespace qdilog
