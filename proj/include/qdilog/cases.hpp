#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdilog/rootsys.hpp"

namespace qdilog {

// One letter of a periodic row word: either the plain reflection s_j or the
// reflection attached to delta - alpha_j.
struct RowLetter {
  int j = 0;
  bool symbol = false;
};

struct RowSpec {
  WeylWord prefix;  // the coset factor applied in front of the whole row
  std::vector<RowLetter> period;
};

// Enumeration data for one of the two halves of a convex order.
struct SidePart {
  WeylWord w;  // finite Weyl parameter of this half
  std::vector<RowSpec> rows;
};

// Everything attached to the letter s_{delta - alpha_j}: its genuine
// reflection target, the braid lift used for root vectors, and the braid
// word presenting the simple root vector E_{delta - alpha_j}.
struct SymbolInfo {
  RootVector beta;
  WeylWord hat;
  WeylWord leaf_word;
  int leaf_index = 0;
};

// Fixed convex-order data for one of the four supported cases. Row prefixes,
// hatted letters and simple-root-vector words are derived from the word
// parameters at construction time.
class OrderCase {
 public:
  static const OrderCase& get(const std::string& id);
  static std::vector<std::string> ids();

  const std::string& id() const { return id_; }
  const CartanData& cartan() const { return cartan_; }
  const SidePart& minus_part() const { return minus_; }
  const SidePart& plus_part() const { return plus_; }
  bool has_symbol(int j) const { return symbols_.count(j) != 0; }
  const SymbolInfo& symbol(int j) const;
  const WeylWord& translation(int i) const;
  std::vector<int> translation_indices() const;
  const std::vector<std::vector<int>>& b_matrix() const { return b_; }
  int delta_height() const { return cartan_.delta().height(); }

  // Word of the element w * longest, used when mirroring sides.
  const WeylWord& longest_word() const { return w_longest_; }

 private:
  OrderCase() : cartan_({{2, -2}, {-2, 2}}, {1, 1}, RootVector({1, 1}), {}) {}
  static OrderCase build(const std::string& id);

  std::string id_;
  CartanData cartan_;
  SidePart minus_;
  SidePart plus_;
  std::map<int, SymbolInfo> symbols_;
  std::map<int, WeylWord> translations_;
  std::vector<std::vector<int>> b_;
  WeylWord w_longest_;
};

// Streams one row of one side: convex-order roots together with the braid
// data for the attached root vectors.
class RowStream {
 public:
  RowStream(const OrderCase& cs, const SidePart& part, int row);

  struct Item {
    RootVector root;
    WeylWord braid_word;  // prefix and hatted letters before position p
    WeylWord leaf_word;
    int leaf_index = 0;
    int position = 0;  // 1-based p
  };
  Item next();

  // Concatenated hatted word after the last next(); row-word prefixes of the
  // convex order data are validated against is_reduced through this.
  const WeylWord& hat_word() const { return hat_acc_; }

 private:
  const OrderCase& cs_;
  const SidePart& part_;
  int row_;
  int pos_ = 0;
  WeylElt act_;
  WeylWord hat_acc_;
};

// Reduced word for the fundamental translation, as asserted in the case
// data; errors on unsupported indices.
const WeylWord& translation_word(const OrderCase& cs, int i);

struct OrderEntry {
  RootVector root;
  int row = 0;
  int position = 0;
};

// First `count` roots of the given side in its convex order (the order has
// type n*omega, so a finite prefix lies in row 0); `row_prefix` exposes the
// deeper rows for the property checks and the CLI.
std::vector<OrderEntry> order_prefix(const OrderCase& cs, const SidePart& part, int count);
std::vector<OrderEntry> row_prefix(const OrderCase& cs, const SidePart& part, int row, int count);

}  // namespace qdilog
