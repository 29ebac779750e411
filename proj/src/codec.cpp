#include "ordac/codec.hpp"

#include <functional>
#include <map>

namespace ordac {

std::string base_chars(int level) {
  if (level <= 0) return "#01E";
  if (level == 1) return "#01AE";
  return "#01ABE";
}

Alphabet base_alphabet(int level, int width) {
  return Alphabet{base_chars(level), width};
}

namespace {

// e < omega^level, i.e. every exponent of e is a finite ordinal < level
bool below_omega_pow(const Ordinal& e, int level) {
  for (const auto& t : e.terms()) {
    if (!t.exponent.is_finite()) return false;
    if (t.exponent.finite_value() >= level) return false;
  }
  return true;
}

}  // namespace

bool fits_level(const Ordinal& a, int level) {
  if (level == 0) return a.is_finite();
  for (const auto& t : a.terms())
    if (!below_omega_pow(t.exponent, level)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// encode

namespace {

char spine_letter(int level) { return level == 1 ? 'A' : 'B'; }

// little-endian digit branch for n >= 1
int build_numeral(LabeledTree& arena, const Nat& n) {
  std::vector<int> bits;
  for (Nat v = n; v > 0; v >>= 1) bits.push_back(static_cast<int>(v & 1));
  int cur = arena.add_node("1", arena.add_leaf("#"), arena.add_leaf("#"));
  for (std::size_t j = bits.size() - 1; j-- > 0;) {
    int l = arena.add_leaf("#");
    cur = arena.add_node(bits[j] ? "1" : "0", l, cur);
  }
  return cur;
}

int build_encoding(LabeledTree& arena, const Ordinal& a, int level);

// payload slot of a level-`level` spine: a bare numeral at level 1,
// a full level-(level-1) encoding above that
int build_payload(LabeledTree& arena, const Ordinal& a, int level) {
  if (a.is_zero()) return arena.add_leaf("#");
  if (level == 1) return build_numeral(arena, a.finite_value());
  return build_encoding(arena, a, level - 1);
}

// a != 0, a < omega^(omega^level)
int build_encoding(LabeledTree& arena, const Ordinal& a, int level) {
  if (level == 0)
    return arena.add_node("E", arena.add_leaf("#"),
                          build_numeral(arena, a.finite_value()));

  // group a's terms by the coefficient of omega^(level-1) in the exponent
  std::map<std::size_t, std::vector<Ordinal::Term>, std::greater<>> groups;
  for (const auto& t : a.terms()) {
    Nat idx = 0;
    std::vector<Ordinal::Term> rest;
    for (const auto& et : t.exponent.terms()) {
      if (et.exponent.is_finite() &&
          et.exponent.finite_value() == level - 1 && level - 1 > 0)
        idx = et.coeff;
      else if (et.exponent.is_zero() && level - 1 == 0)
        idx = et.coeff;
      else
        rest.push_back(et);
    }
    if (idx > 1000000)
      throw std::length_error("spine too long to materialize as a tree");
    groups[static_cast<std::size_t>(idx)].push_back(
        Ordinal::Term{Ordinal::from_terms(std::move(rest)), t.coeff});
  }

  std::size_t p = groups.begin()->first;
  auto payload_of = [&](std::size_t i) -> Ordinal {
    auto it = groups.find(i);
    if (it == groups.end()) return Ordinal();
    return Ordinal::from_terms(it->second);
  };

  int cur = arena.add_node("E", arena.add_leaf("#"),
                           build_payload(arena, payload_of(p), level));
  for (std::size_t i = p; i-- > 0;) {
    Ordinal alpha = payload_of(i);
    int right = alpha.is_zero() ? arena.add_leaf("#")
                                : build_payload(arena, alpha, level);
    cur = arena.add_node(std::string(1, spine_letter(level)), cur, right);
  }
  return cur;
}

}  // namespace

LabeledTree encode(const Ordinal& a, int level) {
  if (!fits_level(a, level))
    throw DomainExceeded("ordinal " + ord_format(a) +
                         " is not below omega^(omega^" +
                         std::to_string(level) + ")");
  if (a.is_zero()) return LabeledTree::leaf("#");
  LabeledTree arena;
  int root = build_encoding(arena, a, level);
  return LabeledTree::built(std::move(arena), root);
}

// ---------------------------------------------------------------------------
// decode

namespace {

// leaf labels are not significant; a subtree is blank when all its
// internal nodes read '#'
bool blank(const LabeledTree& t, int n) {
  if (t.is_leaf(n)) return true;
  return t.node(n).label == "#" && blank(t, t.node(n).left) &&
         blank(t, t.node(n).right);
}

Nat read_numeral(const LabeledTree& t, int n) {
  std::vector<int> bits;
  int cur = n;
  while (!blank(t, cur)) {
    const auto& node = t.node(cur);
    if (node.label != "0" && node.label != "1")
      throw MalformedTree("expected binary digit on coefficient branch, found '" +
                          node.label + "'");
    if (!blank(t, node.left))
      throw MalformedTree("left child of a digit node must be all-#");
    bits.push_back(node.label == "1" ? 1 : 0);
    cur = node.right;
  }
  if (bits.empty()) return 0;
  if (bits.back() != 1)
    throw MalformedTree("most significant bit of a coefficient is 0");
  Nat v = 0;
  for (std::size_t j = bits.size(); j-- > 0;)
    v = (v << 1) + bits[j];
  return v;
}

Ordinal decode_spine(const LabeledTree& t, int n, int level);

Ordinal decode_payload(const LabeledTree& t, int n, int level) {
  if (level == 0) return Ordinal(read_numeral(t, n));
  if (blank(t, n)) return Ordinal();
  return decode_spine(t, n, level);
}

Ordinal decode_spine(const LabeledTree& t, int n, int level) {
  const std::string letter(1, spine_letter(level));
  std::vector<std::pair<std::size_t, Ordinal>> coeffs;
  std::size_t i = 0;
  int cur = n;
  while (true) {
    if (blank(t, cur))
      throw MalformedTree("spine ends without an E symbol");
    const auto& node = t.node(cur);
    if (node.label == letter) {
      Ordinal alpha = decode_payload(t, node.right, level - 1);
      if (!alpha.is_zero()) coeffs.emplace_back(i, alpha);
      cur = node.left;
      ++i;
    } else if (node.label == "E") {
      Ordinal alpha = decode_payload(t, node.right, level - 1);
      if (alpha.is_zero())
        throw MalformedTree("coefficient at the E position must be nonzero");
      if (!blank(t, node.left))
        throw MalformedTree("content below the E symbol must be all-#");
      coeffs.emplace_back(i, alpha);
      break;
    } else {
      throw MalformedTree("unexpected symbol '" + node.label +
                          "' on the spine");
    }
  }

  std::vector<Ordinal::Term> terms;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Ordinal beta;  // omega^(level-1) * i
    if (it->first > 0)
      beta = Ordinal::from_terms(
          {Ordinal::Term{Ordinal(static_cast<unsigned long>(level - 1)),
                         Nat(it->first)}});
    Ordinal part = omega_power_times(beta, it->second);
    terms.insert(terms.end(), part.terms().begin(), part.terms().end());
  }
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal decode(const LabeledTree& t, int level) {
  if (blank(t, t.root())) return Ordinal();
  if (level == 0) {
    const auto& node = t.node(t.root());
    if (node.label != "E")
      throw MalformedTree("level-0 tree must be rooted at E");
    if (!blank(t, node.left))
      throw MalformedTree("content below the E symbol must be all-#");
    Nat v = read_numeral(t, node.right);
    if (v == 0)
      throw MalformedTree("coefficient at the E position must be nonzero");
    return Ordinal(v);
  }
  return decode_spine(t, t.root(), level);
}

// ---------------------------------------------------------------------------
// validity automaton

TreeAutomaton validity_automaton(int level) {
  TreeAutomaton a;
  a.alphabet = base_alphabet(level);
  const int q_pad = 0;   // all-# subtree
  const int q_num = 1;   // nonempty numeral, most significant bit 1
  const int q_zero = 2;  // whole tree is blank (the ordinal 0)
  auto add = [&](int parent, char sym, int left, int right) {
    a.transitions.push_back(
        TreeAutomaton::Transition{parent, std::string(1, sym), left, right});
  };
  add(q_pad, '#', q_pad, q_pad);
  add(q_zero, '#', q_pad, q_pad);
  add(q_num, '1', q_pad, q_pad);
  add(q_num, '0', q_pad, q_num);
  add(q_num, '1', q_pad, q_num);

  a.leaf_states = {q_pad, q_zero};
  if (level == 0) {
    const int q_root = 3;
    add(q_root, 'E', q_pad, q_num);
    a.num_states = 4;
    a.final_states = {q_root, q_zero};
  } else {
    // state 2 + j accepts nonzero level-j encodings, j = 1..level
    for (int j = 1; j <= level; ++j) {
      int sp = 2 + j;
      int payload = j == 1 ? q_num : sp - 1;
      char letter = spine_letter(j);
      add(sp, 'E', q_pad, payload);
      add(sp, letter, sp, payload);
      add(sp, letter, sp, q_pad);
    }
    a.num_states = 3 + level;
    a.final_states = {2 + level, q_zero};
  }
  return a;
}

}  // namespace ordac
