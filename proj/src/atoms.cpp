#include "ordac/atoms.hpp"

#include <functional>

namespace ordac {

namespace {

TreeAutomaton track_validity(int level, int width, int track) {
  TreeAutomaton a = validity_automaton(level);
  for (int t = track + 1; t < width; ++t) a = cylindrify(a, a.alphabet.width);
  for (int t = 0; t < track; ++t) a = cylindrify(a, 0);
  return a;
}

}  // namespace

TreeAutomaton universe_automaton(int level, int width) {
  if (width == 0) {
    TreeAutomaton a;
    a.alphabet = Alphabet{base_chars(level), 0};
    a.num_states = 1;
    a.transitions.push_back(TreeAutomaton::Transition{0, "", 0, 0});
    a.leaf_states = {0};
    a.final_states = {0};
    return a;
  }
  TreeAutomaton u = track_validity(level, width, 0);
  for (int t = 1; t < width; ++t)
    u = product(u, track_validity(level, width, t), Connective::AND);
  return trim(u);
}

// ---------------------------------------------------------------------------
// addition

TreeAutomaton addition_core(int level) {
  const int top = std::max(level, 1);
  TreeAutomaton a;
  a.alphabet = base_alphabet(level, 3);
  const std::string chars = base_chars(level);

  const int q_pad = 0;  // all-# suffix
  const int eq_y = 1;   // y and z tracks coincide from here on
  const int eq_x = 2;   // x and z tracks coincide from here on
  const int q_c0 = 3;   // binary addition, no carry
  const int q_c1 = 4;   // binary addition, carry 1
  auto spine = [&](int j) { return 5 + 3 * (j - 1); };      // r_j
  auto above_y = [&](int j) { return spine(j) + 1; };       // z = x beyond y
  auto above_x = [&](int j) { return spine(j) + 2; };       // z = y beyond x
  a.num_states = 5 + 3 * top;

  auto add = [&](int parent, char x, char y, char z, int left, int right) {
    a.transitions.push_back(
        TreeAutomaton::Transition{parent, std::string({x, y, z}), left, right});
  };

  add(q_pad, '#', '#', '#', q_pad, q_pad);
  for (char cx : chars)
    for (char c : chars) {
      add(eq_y, cx, c, c, eq_y, eq_y);
      add(eq_x, c, cx, c, eq_x, eq_x);
    }

  // binary addition with carries along a coefficient branch
  for (int s = 0; s <= 1; ++s)
    for (int d = 0; d <= 1; ++d) {
      char cs = static_cast<char>('0' + s);
      char cd = static_cast<char>('0' + d);
      add(q_c0, cs, cd, static_cast<char>('0' + (s ^ d)), q_pad,
          (s & d) ? q_c1 : q_c0);
      add(q_c1, cs, cd, static_cast<char>('0' + !(s ^ d)), q_pad,
          (s | d) ? q_c1 : q_c0);
    }
  for (int s = 0; s <= 1; ++s) {
    char cs = static_cast<char>('0' + s);
    char cn = static_cast<char>('0' + !s);
    add(q_c0, cs, '#', cs, q_pad, eq_x);
    add(q_c0, '#', cs, cs, q_pad, eq_y);
    add(q_c1, cs, '#', cn, q_pad, s ? q_c1 : q_c0);
    add(q_c1, '#', cs, cn, q_pad, s ? q_c1 : q_c0);
  }
  add(q_c0, '#', '#', '#', q_pad, q_pad);
  add(q_c1, '#', '#', '1', q_pad, q_pad);

  for (int j = 1; j <= top; ++j) {
    const int r = spine(j);
    const int rx = above_y(j);
    const int ry = above_x(j);
    // payload slots: digit addition at level 1, recursive addition above
    const int add_payload = j == 1 ? q_c0 : spine(j - 1);
    add(r, '#', '#', '#', q_pad, q_pad);
    add(r, 'E', 'E', 'E', q_pad, add_payload);
    add(r, '#', 'E', 'E', q_pad, eq_y);
    add(r, 'E', '#', 'E', q_pad, eq_x);
    if (level >= 1 || j >= 2) {
      char L = j == 1 ? 'A' : 'B';
      add(r, L, L, L, r, eq_y);        // below deg(y): z follows y
      add(r, 'E', L, L, ry, eq_y);     // x ends, absorbed into y
      add(r, '#', L, L, ry, eq_y);     // x is zero
      add(ry, '#', L, L, ry, eq_y);
      add(ry, '#', 'E', 'E', q_pad, eq_y);
      add(r, L, 'E', L, rx, add_payload);  // deg(y) reached: coefficients add
      add(r, L, '#', L, rx, eq_x);         // y is zero
      add(rx, L, '#', L, rx, eq_x);        // above deg(y): z follows x
      add(rx, 'E', '#', 'E', q_pad, eq_x);
    }
  }

  a.leaf_states = {q_pad, eq_y, eq_x, spine(top)};
  a.final_states = {spine(top)};
  return a;
}

TreeAutomaton addition_automaton(int level) {
  TreeAutomaton core = addition_core(level);
  return trim(product(core, universe_automaton(level, 3), Connective::AND));
}

// ---------------------------------------------------------------------------
// comparison

TreeAutomaton comparison_core(int level, const std::vector<Order>& verdicts) {
  const int top = std::max(level, 1);
  TreeAutomaton a;
  a.alphabet = base_alphabet(level, 2);
  const std::string chars = base_chars(level);

  const int any = 0;  // constraint-free subtree
  // per-group order: EQ, LT, GT
  auto digit = [&](Order o) { return 1 + (static_cast<int>(o) + 1); };
  auto spine = [&](int j, Order o) {
    return 4 + 3 * (j - 1) + (static_cast<int>(o) + 1);
  };
  a.num_states = 4 + 3 * top;

  auto add = [&](int parent, char x, char y, int left, int right) {
    a.transitions.push_back(
        TreeAutomaton::Transition{parent, std::string({x, y}), left, right});
  };
  const Order orders[] = {Order::LT, Order::EQ, Order::GT};

  for (char cx : chars)
    for (char cy : chars) add(any, cx, cy, any, any);

  // coefficient branches: deeper digits are more significant
  for (Order deep : orders) {
    for (int s = 0; s <= 1; ++s)
      for (int d = 0; d <= 1; ++d) {
        Order here = s < d ? Order::LT : (s > d ? Order::GT : Order::EQ);
        Order out = deep != Order::EQ ? deep : here;
        add(digit(out), static_cast<char>('0' + s), static_cast<char>('0' + d),
            any, digit(deep));
      }
    add(digit(deep), '#', '#', any, digit(deep));
  }
  for (int d = 0; d <= 1; ++d) {
    add(digit(Order::LT), '#', static_cast<char>('0' + d), any, any);
    add(digit(Order::GT), static_cast<char>('0' + d), '#', any, any);
  }

  for (int j = 1; j <= top; ++j) {
    const bool has_letter = level >= 1 || j >= 2;
    const char L = j == 1 ? 'A' : 'B';
    auto payload = [&](Order o) { return j == 1 ? digit(o) : spine(j - 1, o); };
    for (Order deep : orders) {
      add(spine(j, deep), 'E', 'E', any, payload(deep));
      if (has_letter)
        for (Order coeff : orders) {
          Order out = deep != Order::EQ ? deep : coeff;
          add(spine(j, out), L, L, spine(j, deep), payload(coeff));
        }
    }
    add(spine(j, Order::EQ), '#', '#', any, any);
    add(spine(j, Order::LT), '#', 'E', any, any);
    add(spine(j, Order::GT), 'E', '#', any, any);
    if (has_letter) {
      add(spine(j, Order::LT), 'E', L, any, any);
      add(spine(j, Order::LT), '#', L, any, any);
      add(spine(j, Order::GT), L, 'E', any, any);
      add(spine(j, Order::GT), L, '#', any, any);
    }
  }

  a.leaf_states = {any, digit(Order::EQ)};
  for (int j = 1; j <= top; ++j) a.leaf_states.insert(spine(j, Order::EQ));
  for (Order v : verdicts) a.final_states.insert(spine(top, v));
  return a;
}

TreeAutomaton comparison_core(int level, Order verdict) {
  return comparison_core(level, std::vector<Order>{verdict});
}

namespace {

TreeAutomaton with_validity2(TreeAutomaton core, int level) {
  return trim(product(std::move(core), universe_automaton(level, 2),
                      Connective::AND));
}

}  // namespace

TreeAutomaton less_automaton(int level) {
  return with_validity2(comparison_core(level, Order::LT), level);
}

TreeAutomaton less_equal_automaton(int level) {
  return with_validity2(
      comparison_core(level, std::vector<Order>{Order::LT, Order::EQ}), level);
}

TreeAutomaton equal_automaton(int level) {
  return with_validity2(comparison_core(level, Order::EQ), level);
}

// ---------------------------------------------------------------------------
// E relation

TreeAutomaton erel_core(int level) {
  TreeAutomaton a;
  a.alphabet = base_alphabet(level, 2);
  const std::string chars = base_chars(level);
  const int none = 0;  // no 1 read on the x track yet
  const int one = 1;   // exactly one 1, matched by a 1 on the y track
  const int dead = 2;
  a.num_states = 3;

  for (char cx : chars)
    for (char cy : chars) {
      std::string sym({cx, cy});
      for (int l = 0; l < 3; ++l)
        for (int r = 0; r < 3; ++r) {
          int parent;
          if (l == dead || r == dead) {
            parent = dead;
          } else if (cx == '1') {
            parent = (cy == '1' && l == none && r == none) ? one : dead;
          } else {
            int ones = (l == one) + (r == one);
            parent = ones == 0 ? none : (ones == 1 ? one : dead);
          }
          a.transitions.push_back(
              TreeAutomaton::Transition{parent, sym, l, r});
        }
    }
  a.leaf_states = {none};
  a.final_states = {one};
  a.deterministic = true;
  return a;
}

TreeAutomaton erel_automaton(int level) {
  return with_validity2(erel_core(level), level);
}

// ---------------------------------------------------------------------------
// constants

TreeAutomaton constant_automaton(const Ordinal& c, int level) {
  TreeAutomaton a;
  a.alphabet = base_alphabet(level);
  const int q_pad = 0;
  a.transitions.push_back(TreeAutomaton::Transition{q_pad, "#", q_pad, q_pad});
  a.leaf_states = {q_pad};
  if (c.is_zero()) {
    a.num_states = 1;
    a.final_states = {q_pad};
    return a;
  }
  LabeledTree t = encode(c, level);
  int next = 1;
  std::function<int(int)> assign = [&](int n) -> int {
    if (t.is_leaf(n)) return q_pad;
    int l = assign(t.node(n).left);
    int r = assign(t.node(n).right);
    int s = next++;
    a.transitions.push_back(
        TreeAutomaton::Transition{s, t.node(n).label, l, r});
    return s;
  };
  int root = assign(t.root());
  a.num_states = next;
  a.final_states = {root};
  return a;
}

}  // namespace ordac
