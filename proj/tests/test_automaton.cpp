#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ordac/atoms.hpp"
#include "ordac/codec.hpp"

using namespace ordac;

namespace {

/// Accepts every tree over the alphabet.
TreeAutomaton all_trees(const Alphabet& al) {
  TreeAutomaton a;
  a.alphabet = al;
  a.num_states = 1;
  for (const auto& sym : al.symbols())
    a.transitions.push_back(TreeAutomaton::Transition{0, sym, 0, 0});
  a.leaf_states = {0};
  a.final_states = {0};
  return a;
}

/// L(a) == L(b), via emptiness of both difference languages.
bool same_language(const TreeAutomaton& a, const TreeAutomaton& b) {
  TreeAutomaton u = all_trees(a.alphabet);
  return is_empty(product(a, complement(b, u), Connective::AND)) &&
         is_empty(product(b, complement(a, u), Connective::AND));
}

int copy_into(LabeledTree& dst, const LabeledTree& src, int n) {
  if (src.is_leaf(n)) return dst.add_leaf(src.node(n).label);
  int l = copy_into(dst, src, src.node(n).left);
  int r = copy_into(dst, src, src.node(n).right);
  return dst.add_node(src.node(n).label, l, r);
}

std::vector<LabeledTree> trees_to_depth(const std::string& base, int depth) {
  std::vector<LabeledTree> all;
  for (char c : base) all.push_back(LabeledTree::leaf(std::string(1, c)));
  for (int d = 1; d <= depth; ++d) {
    std::vector<LabeledTree> next;
    for (char c : base)
      for (const auto& l : all)
        for (const auto& r : all)
          if (std::max(l.height(), r.height()) == d - 1) {
            LabeledTree t;
            int la = copy_into(t, l, l.root());
            int ra = copy_into(t, r, r.root());
            int root = t.add_node(std::string(1, c), la, ra);
            next.push_back(LabeledTree::built(std::move(t), root));
          }
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

LabeledTree random_tree(const std::string& base, int depth,
                        std::mt19937_64& rng) {
  LabeledTree t;
  std::function<int(int)> gen = [&](int d) -> int {
    std::string lbl(1, base[rng() % base.size()]);
    if (d == 0 || rng() % 3 == 0) return t.add_leaf(lbl);
    int l = gen(d - 1);
    int r = gen(d - 1);
    return t.add_node(lbl, l, r);
  };
  int root = gen(depth);
  return LabeledTree::built(std::move(t), root);
}

}  // namespace

TEST_CASE("alphabet enumerates width-length strings in order") {
  Alphabet a{"#01AE", 1};
  CHECK(a.symbols().size() == 5);
  Alphabet b{"#01AE", 2};
  CHECK(b.symbols().size() == 25);
  CHECK(b.symbols().front() == "##");
  CHECK(b.contains("A1"));
  CHECK_FALSE(b.contains("AB"));
  Alphabet zero{"#01AE", 0};
  CHECK(zero.symbols() == std::vector<std::string>{""});
}

TEST_CASE("membership with run extraction") {
  TreeAutomaton v = validity_automaton(1);
  LabeledTree t = encode(ord_parse("w*2 + 1"), 1);
  Run run;
  REQUIRE(accepts(v, t, &run));
  REQUIRE(run.state.size() == t.size());
  CHECK(v.final_states.count(run.state[static_cast<std::size_t>(t.root())]));
}

TEST_CASE("algebra laws hold on small and random trees") {
  const std::string base = base_chars(1);
  TreeAutomaton u = all_trees(Alphabet{base, 1});
  TreeAutomaton v = validity_automaton(1);
  TreeAutomaton vd = determinize(v);
  TreeAutomaton nv = complement(v, u);
  TreeAutomaton nnv = complement(nv, u);
  // a second, structurally different language: ordinals that are >= omega
  TreeAutomaton ge_w = trim(product(
      v, complement(constant_automaton(Ordinal(0), 1), u), Connective::AND));
  TreeAutomaton and_ab = product(v, ge_w, Connective::AND);
  TreeAutomaton or_ab = product(v, ge_w, Connective::OR);
  TreeAutomaton dm_left = complement(and_ab, u);
  TreeAutomaton dm_right =
      product(complement(v, u), complement(ge_w, u), Connective::OR);

  // the exhaustive depth-2 sweep lives in the acceptance suite; keep the
  // unit test quick with depth 1 plus a seeded random sample
  std::vector<LabeledTree> pool = trees_to_depth(base, 1);
  std::mt19937_64 rng(20260826);
  for (int i = 0; i < 500; ++i) pool.push_back(random_tree(base, 5, rng));

  for (const auto& t : pool) {
    bool in_v = accepts(v, t);
    CHECK(accepts(vd, t) == in_v);          // determinize preserves language
    CHECK(accepts(nv, t) == !in_v);         // complement flips membership
    CHECK(accepts(nnv, t) == in_v);         // double complement
    bool in_g = accepts(ge_w, t);
    CHECK(accepts(and_ab, t) == (in_v && in_g));
    CHECK(accepts(or_ab, t) == (in_v || in_g));
    CHECK(accepts(dm_left, t) == !(in_v && in_g));  // De Morgan
    CHECK(accepts(dm_right, t) == accepts(dm_left, t));
  }

  // the same laws at the language level
  CHECK(same_language(v, vd));
  CHECK(same_language(v, nnv));
  CHECK(same_language(dm_left, dm_right));
}

TEST_CASE("projection is left inverse to cylindrification") {
  TreeAutomaton v = validity_automaton(1);
  for (int at : {0, 1}) {
    TreeAutomaton c = cylindrify(v, at);
    CHECK(c.alphabet.width == 2);
    CHECK(same_language(project(c, at), v));
  }
}

TEST_CASE("permute and merge tracks") {
  TreeAutomaton lt = less_automaton(1);
  TreeAutomaton gt = permute_tracks(lt, {1, 0});
  LabeledTree one_two = convolve({encode(Ordinal(1), 1), encode(Ordinal(2), 1)});
  CHECK(accepts(lt, one_two));
  CHECK_FALSE(accepts(gt, one_two));
  // merging both tracks of x<y yields the empty language (irreflexivity)
  CHECK(is_empty(trim(merge_tracks(lt, 0, 1))));
  // merging both tracks of x<=y yields the valid encodings (reflexivity)
  CHECK(same_language(trim(merge_tracks(less_equal_automaton(1), 0, 1)),
                      validity_automaton(1)));
}

TEST_CASE("union keeps trees on which one side has no run") {
  // {encoding of 1} OR {encoding of 2}: the pair construction would lose
  // both, since each side is stuck on the other's tree
  TreeAutomaton c1 = constant_automaton(Ordinal(1), 1);
  TreeAutomaton c2 = constant_automaton(Ordinal(2), 1);
  TreeAutomaton u12 = product(c1, c2, Connective::OR);
  CHECK(accepts(u12, encode(Ordinal(1), 1)));
  CHECK(accepts(u12, encode(Ordinal(2), 1)));
  CHECK_FALSE(accepts(u12, encode(Ordinal(3), 1)));
}

TEST_CASE("implication product treats stuck runs as false") {
  TreeAutomaton c1 = constant_automaton(Ordinal(1), 1);
  TreeAutomaton c2 = constant_automaton(Ordinal(2), 1);
  // x=1 -> x=2 holds exactly off the encodings of 1
  TreeAutomaton imp = product(c1, c2, Connective::IMPLIES);
  CHECK_FALSE(accepts(imp, encode(Ordinal(1), 1)));
  CHECK(accepts(imp, encode(Ordinal(2), 1)));
  CHECK(accepts(imp, encode(Ordinal(5), 1)));
  TreeAutomaton iff = product(c1, c1, Connective::IFF);
  CHECK(accepts(iff, encode(Ordinal(1), 1)));
  CHECK(accepts(iff, encode(Ordinal(9), 1)));

  // the universe-relativized path agrees on valid trees
  TreeAutomaton v = validity_automaton(1);
  TreeAutomaton rel = relative_product(c1, c2, Connective::IMPLIES, v);
  for (int n : {1, 2, 5})
    CHECK(accepts(rel, encode(Ordinal(n), 1)) ==
          accepts(imp, encode(Ordinal(n), 1)));
}

TEST_CASE("emptiness, witness minimality and determinism") {
  TreeAutomaton v = validity_automaton(1);
  CHECK_FALSE(is_empty(v));
  std::optional<LabeledTree> t = witness(v);
  REQUIRE(t.has_value());
  CHECK(accepts(v, *t));
  CHECK(t->height() == 0);  // the blank leaf already encodes zero
  CHECK(witness(v)->to_sexpr() == t->to_sexpr());  // deterministic

  TreeAutomaton none = product(constant_automaton(Ordinal(1), 1),
                               constant_automaton(Ordinal(2), 1),
                               Connective::AND);
  CHECK(is_empty(trim(none)));
  CHECK_FALSE(witness(none).has_value());

  // minimal-height witness of a nonzero language decodes to 1
  TreeAutomaton u = all_trees(Alphabet{base_chars(1), 1});
  TreeAutomaton nonzero = trim(product(
      v, complement(constant_automaton(Ordinal(0), 1), u), Connective::AND));
  std::optional<LabeledTree> w = witness(nonzero);
  REQUIRE(w.has_value());
  CHECK(decode(*w, 1) == Ordinal(1));
  CHECK(w->height() == encode(Ordinal(1), 1).height());
}

TEST_CASE("trim preserves the language and drops useless states") {
  TreeAutomaton v = validity_automaton(1);
  TreeAutomaton padded = v;
  padded.num_states += 3;  // unreachable junk states
  TreeAutomaton t = trim(padded);
  CHECK(t.num_states <= v.num_states);
  CHECK(same_language(t, v));
}

TEST_CASE("serialization round trip") {
  for (TreeAutomaton a :
       {validity_automaton(2), less_automaton(1), erel_core(1)}) {
    TreeAutomaton b = deserialize(serialize(a));
    CHECK(b.alphabet == a.alphabet);
    CHECK(b.num_states == a.num_states);
    std::vector<TreeAutomaton::Transition> ta = a.transitions;
    std::sort(ta.begin(), ta.end());  // serialization is canonical
    CHECK(b.transitions == ta);
    CHECK(b.leaf_states == a.leaf_states);
    CHECK(b.final_states == a.final_states);
    CHECK(serialize(b) == serialize(a));
  }
  CHECK_THROWS_AS((void)deserialize("not an automaton"), SyntaxError);
}

TEST_CASE("state ceilings raise ResourceBudgetExceeded") {
  CHECK_THROWS_AS((void)determinize(validity_automaton(1), 1),
                  ResourceBudgetExceeded);
  CHECK_THROWS_AS((void)product(validity_automaton(1), validity_automaton(1),
                                Connective::AND, 1),
                  ResourceBudgetExceeded);
}

TEST_CASE("dot output names the graph") {
  std::string dot = automaton_to_dot(erel_core(1), "erel");
  CHECK(dot.find("erel") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
}
