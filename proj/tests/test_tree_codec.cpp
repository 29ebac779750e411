#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>

#include "ordac/codec.hpp"
#include "ordac/enumerate.hpp"
#include "ordac/tree.hpp"

using namespace ordac;

namespace {

Ordinal P(const char* s) { return ord_parse(s); }

/// Replaces every leaf by a '#'-labeled internal node with two '#' leaves,
/// `rounds` times: a non-minimal member of the same representation class.
LabeledTree pad_variant(const LabeledTree& t, int rounds) {
  LabeledTree out;
  std::string blank(static_cast<std::size_t>(t.width()), '#');
  std::function<int(int)> copy = [&](int n) -> int {
    if (t.is_leaf(n)) {
      int cur = out.add_leaf(blank);
      for (int i = 0; i < rounds; ++i)
        cur = out.add_node(blank, cur, out.add_leaf(blank));
      return cur;
    }
    int l = copy(t.node(n).left);
    int r = copy(t.node(n).right);
    return out.add_node(t.node(n).label, l, r);
  };
  int root = copy(t.root());
  return LabeledTree::built(std::move(out), root);
}

}  // namespace

TEST_CASE("s-expression round trip") {
  for (const char* s :
       {"(# () ())", "(E (# () ()) (1 (# () ()) (# () ())))",
        "(AB (## () ()) (1E (# () ()) (# () ())))"}) {
    LabeledTree t = LabeledTree::from_sexpr(s);
    CHECK(LabeledTree::from_sexpr(t.to_sexpr()) == t);
    CHECK(t.to_sexpr() == s);
  }
  CHECK_THROWS_AS((void)LabeledTree::from_sexpr("(A (# () ())"), SyntaxError);
  CHECK_THROWS_AS((void)LabeledTree::from_sexpr(""), SyntaxError);
}

TEST_CASE("convolution and projection are inverse on equal-height stacks") {
  LabeledTree a = encode(P("w*2 + 1"), 1);
  LabeledTree b = encode(P("w^2"), 1);
  LabeledTree c = convolve({a, b});
  CHECK(c.width() == 2);
  CHECK(decode(project_component(c, 0), 1) == P("w*2 + 1"));
  CHECK(decode(project_component(c, 1), 1) == P("w^2"));
}

TEST_CASE("base alphabets are sorted and level-dependent") {
  CHECK(base_chars(0) == "#01E");
  CHECK(base_chars(1) == "#01AE");
  CHECK(base_chars(2) == "#01ABE");
  CHECK(base_chars(5) == "#01ABE");
  CHECK(base_alphabet(1, 3).width == 3);
}

TEST_CASE("round trip and validity over the sweep enumerations") {
  struct Case {
    int level;
    std::vector<Ordinal> values;
  };
  for (const auto& [level, values] :
       {Case{0, ordinal_enumeration({Ordinal(0)}, 40)},
        Case{1, level1_sweep()}, Case{2, level2_sweep()}}) {
    TreeAutomaton valid = validity_automaton(level);
    for (const Ordinal& a : values) {
      LabeledTree t = encode(a, level);
      CHECK(decode(t, level) == a);
      CHECK(accepts(valid, t));
      for (int rounds : {1, 2}) {
        LabeledTree p = pad_variant(t, rounds);
        CHECK(decode(p, level) == a);
        CHECK(accepts(valid, p));
      }
    }
  }
}

TEST_CASE("level-2 values embed level-1 values") {
  for (const Ordinal& a : level1_sweep()) {
    CHECK(decode(encode(a, 2), 2) == a);
    CHECK(accepts(validity_automaton(2), encode(a, 2)));
  }
}

TEST_CASE("encode rejects out-of-level ordinals") {
  CHECK_THROWS_AS((void)encode(Ordinal::omega(), 0), DomainExceeded);
  CHECK_THROWS_AS((void)encode(P("w^w"), 1), DomainExceeded);
  CHECK_THROWS_AS((void)encode(P("w^(w^2)"), 2), DomainExceeded);
  CHECK(fits_level(P("w^2*3"), 1));
  CHECK_FALSE(fits_level(P("w^w"), 1));
  CHECK(fits_level(P("w^w"), 2));
}

TEST_CASE("decode rejects malformed trees with a cited rule") {
  const char* msb_zero = "(E (# () ()) (0 (# () ()) (# () ())))";
  const char* open_spine = "(A (# () ()) (# () ()))";
  const char* zero_payload = "(E (# () ()) (# () ()))";
  const char* bad_label = "(B (# () ()) (# () ()))";
  for (const char* s : {msb_zero, open_spine, zero_payload, bad_label})
    CHECK_THROWS_AS((void)decode(LabeledTree::from_sexpr(s), 1),
                    MalformedTree);
  // validity automaton agrees on the in-alphabet rejects
  TreeAutomaton valid = validity_automaton(1);
  for (const char* s : {msb_zero, open_spine, zero_payload})
    CHECK_FALSE(accepts(valid, LabeledTree::from_sexpr(s)));
  // out-of-alphabet labels are a membership error, not a reject
  CHECK_THROWS_AS((void)accepts(valid, LabeledTree::from_sexpr(bad_label)),
                  AlphabetMismatch);
}

TEST_CASE("validity automaton accepts blanks as zero") {
  TreeAutomaton valid = validity_automaton(1);
  CHECK(accepts(valid, LabeledTree::leaf("#")));
  CHECK(decode(LabeledTree::leaf("#"), 1) == Ordinal(0));
  CHECK(accepts(
      valid, LabeledTree::from_sexpr("(E (# () ()) (1 (# () ()) (# () ())))")));
}

TEST_CASE("height grows with the encoded value") {
  CHECK(encode(Ordinal(0), 1).height() == 0);
  CHECK(encode(Ordinal(1), 1).height() >= 1);
  CHECK(encode(P("w^2*4 + w*2 + 1"), 1).height() >
        encode(Ordinal(1), 1).height());
}
