#include "qdilog/cases.hpp"

#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>

namespace qdilog {

namespace {

WeylWord word_of(const CartanData& c, const WeylElt& e) { return reduced_word(c, e); }

// True for positive roots whose finite part is negative, i.e. members of the
// set m*delta - (positive finite root). These are the admissible partial
// images when presenting a simple root vector E_{delta - eps}.
bool in_delta_minus(const CartanData& c, const RootVector& r) {
  if (!r.is_positive()) return false;
  int m = r[0] / c.delta()[0];
  RootVector fin = r - c.delta() * m;
  return fin.is_negative();
}

// Breadth-first search for a reduced word u and index p with all partial
// images in Delta(1,-) and u(alpha_p) = target. Existence is guaranteed for
// target = delta - alpha_j; the found presentation of E_{delta - alpha_j}
// does not matter beyond that (the element is independent of the choice).
std::pair<WeylWord, int> find_simple_vector_word(const CartanData& c, const RootVector& target) {
  struct State {
    WeylElt elt;
    std::vector<int> word;
  };
  int max_depth = target.height();
  std::deque<State> queue;
  queue.push_back({WeylElt::identity(c.rank()), {}});
  std::set<std::vector<RootVector>> seen;
  while (!queue.empty()) {
    State st = queue.front();
    queue.pop_front();
    for (int p = 0; p < c.rank(); ++p) {
      if (st.elt.apply(c.simple_root(p)) == target) {
        WeylWord w;
        for (int i : st.word) w.push_refl(i);
        return {w, p};
      }
    }
    if (static_cast<int>(st.word.size()) >= max_depth) continue;
    for (int i = 0; i < c.rank(); ++i) {
      RootVector img = st.elt.apply(c.simple_root(i));
      if (!in_delta_minus(c, img)) continue;
      if (img.height() > target.height()) continue;
      State nx;
      nx.elt = st.elt.compose(WeylElt::from_word(c, WeylWord::refls({i})));
      nx.word = st.word;
      nx.word.push_back(i);
      std::vector<RootVector> key;
      for (int j = 0; j < c.rank(); ++j) key.push_back(nx.elt.image(j));
      if (!seen.insert(key).second) continue;
      queue.push_back(nx);
    }
  }
  throw std::logic_error("find_simple_vector_word: search failed");
}

std::vector<int> set_of(std::initializer_list<int> v) { return std::vector<int>(v); }

}  // namespace

const SymbolInfo& OrderCase::symbol(int j) const {
  auto it = symbols_.find(j);
  if (it == symbols_.end()) throw std::invalid_argument("OrderCase: no symbol letter for index");
  return it->second;
}

const WeylWord& OrderCase::translation(int i) const {
  auto it = translations_.find(i);
  if (it == translations_.end())
    throw std::invalid_argument("OrderCase: unsupported translation index");
  return it->second;
}

std::vector<int> OrderCase::translation_indices() const {
  std::vector<int> v;
  for (const auto& [i, w] : translations_) v.push_back(i);
  return v;
}

OrderCase OrderCase::build(const std::string& id) {
  OrderCase cs;
  cs.id_ = id;

  auto finish_rows = [&](SidePart& part, const std::vector<std::vector<int>>& filtration,
                         const std::vector<std::vector<RowLetter>>& periods) {
    WeylElt w = WeylElt::from_word(cs.cartan_, part.w);
    for (std::size_t r = 0; r < periods.size(); ++r) {
      RowSpec row;
      if (r == 0) {
        row.prefix = WeylWord();
      } else {
        auto [wj, rest] = coset_decompose(cs.cartan_, w, filtration[r]);
        row.prefix = word_of(cs.cartan_, wj);
      }
      row.period = periods[r];
      part.rows.push_back(std::move(row));
    }
  };

  auto make_symbols = [&](std::initializer_list<int> js) {
    for (int j : js) {
      SymbolInfo info;
      info.beta = cs.cartan_.delta() - cs.cartan_.simple_root(j);
      WeylElt t = WeylElt::from_word(cs.cartan_, cs.translations_.at(j));
      WeylElt hat = t.compose(t).compose(
          WeylElt::from_word(cs.cartan_, WeylWord::refls({j})));
      info.hat = word_of(cs.cartan_, hat);
      auto [lw, lp] = find_simple_vector_word(cs.cartan_, info.beta);
      info.leaf_word = lw;
      info.leaf_index = lp;
      cs.symbols_.emplace(j, std::move(info));
    }
  };

  auto plain_period = [](std::initializer_list<int> js) {
    std::vector<RowLetter> p;
    for (int j : js) p.push_back({j, false});
    return p;
  };
  auto two_period = [](int j, bool symbol_first) {
    std::vector<RowLetter> p;
    if (symbol_first) {
      p.push_back({j, true});
      p.push_back({j, false});
    } else {
      p.push_back({j, false});
      p.push_back({j, true});
    }
    return p;
  };

  if (id == "A1") {
    cs.cartan_ = CartanData::affine_a(1);
    const auto& rho = cs.cartan_.automorphism("rho");
    cs.translations_[1] = WeylWord().push_auto(rho).push_refl(1);
    cs.b_ = {{0, -2}, {2, 0}};
    cs.minus_.w = WeylWord();
    cs.minus_.rows.push_back({WeylWord(), plain_period({0, 1})});
    cs.plus_.w = WeylWord::refls({1});
    cs.plus_.rows.push_back({WeylWord(), plain_period({1, 0})});
  } else if (id == "A2") {
    cs.cartan_ = CartanData::affine_a(2);
    const auto& rho = cs.cartan_.automorphism("rho");
    cs.translations_[1] = WeylWord().push_auto(rho).push_refl(2).push_refl(1);
    cs.translations_[2] = WeylWord().push_auto(rho).push_auto(rho).push_refl(1).push_refl(2);
    make_symbols({1, 2});
    cs.b_ = {{0, -1, -1}, {1, 0, -1}, {1, 1, 0}};
    cs.minus_.w = WeylWord::refls({1});
    finish_rows(cs.minus_, {set_of({1, 2}), set_of({1})},
                {plain_period({0, 1, 2}), two_period(1, false)});
    cs.plus_.w = WeylWord::refls({2, 1});
    finish_rows(cs.plus_, {set_of({1, 2}), set_of({2})},
                {plain_period({2, 1, 0}), two_period(2, true)});
  } else if (id == "A3") {
    cs.cartan_ = CartanData::affine_a(3);
    const auto& rho = cs.cartan_.automorphism("rho");
    std::vector<int> rho_inv(4);
    for (int i = 0; i < 4; ++i) rho_inv[static_cast<std::size_t>(rho.perm[static_cast<std::size_t>(i)])] = i;
    for (int i = 1; i <= 3; ++i) {
      WeylWord t;
      for (int rep = 0; rep < 4 - i; ++rep) {
        t.push_auto(rho_inv, "rho^-1");
        for (int j = 1; j <= i; ++j) t.push_refl(j);
      }
      cs.translations_[i] = t;
    }
    make_symbols({1, 3});
    cs.b_ = {{0, -1, 0, -1}, {1, 0, 1, 0}, {0, -1, 0, -1}, {1, 0, 1, 0}};
    cs.minus_.w = WeylWord::refls({2, 1, 3});
    finish_rows(cs.minus_, {set_of({1, 2, 3}), set_of({1, 3}), set_of({3})},
                {plain_period({0, 2, 1, 3, 2, 0, 3, 1}), two_period(1, false), two_period(3, false)});
    cs.plus_.w = WeylWord::refls({1, 3, 2});
    finish_rows(cs.plus_, {set_of({1, 2, 3}), set_of({1, 3}), set_of({1})},
                {plain_period({1, 3, 2, 0, 3, 1, 0, 2}), two_period(3, true), two_period(1, true)});
  } else if (id == "D4") {
    cs.cartan_ = CartanData::affine_d4();
    const auto& tau = cs.cartan_.automorphism("tau");
    const auto& taup = cs.cartan_.automorphism("tau'");
    cs.translations_[1] =
        WeylWord().push_auto(tau).push_refl(1).push_refl(2).push_refl(3).push_refl(4).push_refl(2).push_refl(1);
    cs.translations_[2] = WeylWord::refls({0, 2, 3, 4, 2, 1, 2, 3, 4, 2});
    cs.translations_[3] =
        WeylWord().push_auto(taup).push_refl(3).push_refl(2).push_refl(1).push_refl(4).push_refl(2).push_refl(3);
    cs.translations_[4] = WeylWord()
                              .push_auto(tau)
                              .push_auto(taup)
                              .push_refl(4)
                              .push_refl(2)
                              .push_refl(1)
                              .push_refl(3)
                              .push_refl(2)
                              .push_refl(4);
    make_symbols({1, 3, 4});
    cs.b_ = {{0, 0, -1, 0, 0}, {0, 0, -1, 0, 0}, {1, 1, 0, 1, 1}, {0, 0, -1, 0, 0}, {0, 0, -1, 0, 0}};
    cs.minus_.w = WeylWord::refls({1, 3, 4, 2, 1, 3, 4});
    finish_rows(cs.minus_,
                {set_of({1, 2, 3, 4}), set_of({1, 3, 4}), set_of({3, 4}), set_of({4})},
                {plain_period({0, 1, 3, 4, 2}), two_period(1, false), two_period(3, false),
                 two_period(4, false)});
    cs.plus_.w = WeylWord::refls({2, 1, 3, 4, 2});
    finish_rows(cs.plus_,
                {set_of({1, 2, 3, 4}), set_of({1, 3, 4}), set_of({3, 4}), set_of({4})},
                {plain_period({2, 1, 3, 4, 0}), two_period(1, true), two_period(3, true),
                 two_period(4, true)});
  } else {
    throw std::invalid_argument("OrderCase: unknown case id " + id);
  }

  // w * longest element of the finite Weyl group; sanity for the plus part.
  WeylElt w = WeylElt::from_word(cs.cartan_, cs.minus_.w);
  WeylElt wo = WeylElt::from_word(cs.cartan_, longest_finite_word(cs.cartan_));
  cs.w_longest_ = word_of(cs.cartan_, w.compose(wo));
  if (!(WeylElt::from_word(cs.cartan_, cs.w_longest_) ==
        WeylElt::from_word(cs.cartan_, cs.plus_.w)))
    throw std::logic_error("OrderCase: plus-part parameter disagrees with w * w_longest");
  // Every stored row word must stay reduced along its periodic prefixes.
  for (const SidePart* part : {&cs.minus_, &cs.plus_}) {
    for (int r = 0; r < static_cast<int>(part->rows.size()); ++r) {
      RowStream stream(cs, *part, r);
      for (std::size_t k = 0; k < 2 * part->rows[static_cast<std::size_t>(r)].period.size(); ++k)
        stream.next();
      if (!is_reduced(cs.cartan_, stream.hat_word()))
        throw std::logic_error("OrderCase: row word prefix is not reduced");
    }
  }
  return cs;
}

const OrderCase& OrderCase::get(const std::string& id) {
  static std::mutex m;
  static std::map<std::string, OrderCase> table;
  std::lock_guard<std::mutex> lock(m);
  auto it = table.find(id);
  if (it == table.end()) it = table.emplace(id, build(id)).first;
  return it->second;
}

std::vector<std::string> OrderCase::ids() { return {"A1", "A2", "A3", "D4"}; }

RowStream::RowStream(const OrderCase& cs, const SidePart& part, int row)
    : cs_(cs), part_(part), row_(row) {
  const RowSpec& spec = part.rows.at(static_cast<std::size_t>(row));
  act_ = WeylElt::from_word(cs.cartan(), spec.prefix);
  hat_acc_ = spec.prefix;
}

RowStream::Item RowStream::next() {
  const RowSpec& spec = part_.rows.at(static_cast<std::size_t>(row_));
  const RowLetter& letter = spec.period[static_cast<std::size_t>(pos_) % spec.period.size()];
  ++pos_;
  Item item;
  item.position = pos_;
  const CartanData& c = cs_.cartan();
  if (letter.symbol) {
    const SymbolInfo& info = cs_.symbol(letter.j);
    item.root = act_.apply(info.beta);
    item.braid_word = hat_acc_;
    item.leaf_word = info.leaf_word;
    item.leaf_index = info.leaf_index;
    // Advance: the genuine reflection s_beta drives the roots, the hatted
    // word drives the braid lift.
    std::vector<RootVector> cols;
    for (int j = 0; j < c.rank(); ++j) cols.push_back(c.reflect_root(info.beta, c.simple_root(j)));
    act_ = act_.compose(WeylElt::from_images(std::move(cols)));
    hat_acc_.append(info.hat);
  } else {
    item.root = act_.apply(c.simple_root(letter.j));
    item.braid_word = hat_acc_;
    item.leaf_word = WeylWord();
    item.leaf_index = letter.j;
    act_ = act_.compose(WeylElt::from_word(c, WeylWord::refls({letter.j})));
    hat_acc_.push_refl(letter.j);
  }
  return item;
}

const WeylWord& translation_word(const OrderCase& cs, int i) { return cs.translation(i); }

std::vector<OrderEntry> row_prefix(const OrderCase& cs, const SidePart& part, int row, int count) {
  std::vector<OrderEntry> out;
  RowStream stream(cs, part, row);
  for (int k = 0; k < count; ++k) {
    auto item = stream.next();
    out.push_back({item.root, row, item.position});
  }
  return out;
}

std::vector<OrderEntry> order_prefix(const OrderCase& cs, const SidePart& part, int count) {
  return row_prefix(cs, part, 0, count);
}

}  // namespace qdilog
