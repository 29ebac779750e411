#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ordac/codec.hpp"
#include "ordac/compile.hpp"
#include "ordac/enumerate.hpp"

using namespace ordac;

namespace {
Ordinal P(const char* s) { return ord_parse(s); }
bool D(const char* s, int level = 1) {
  CompileOptions opts;
  opts.level = level;
  return decide(*parse_fo(s), opts);
}
}  // namespace

TEST_CASE("parser handles atoms, connectives and quantifiers") {
  CHECK(formula_to_string(*parse_fo("x = y")) == "x = y");
  CHECK(formula_to_string(*parse_fo("E(x, y)")) == "E(x, y)");
  // > and >= are normalized by swapping arguments
  CHECK(formula_to_string(*parse_fo("x > y")) == "y < x");
  CHECK(formula_to_string(*parse_fo("x >= y")) == "y <= x");
  // != desugars to a negation
  CHECK(formula_to_string(*parse_fo("x != y")) == "!(x = y)");
  FormulaPtr f = parse_fo("forall x. exists y. x < y");
  CHECK(f->kind == Formula::Kind::Forall);
  CHECK(f->free_vars.empty());
}

TEST_CASE("compound terms are flattened with fresh existentials") {
  // x + 1 < y introduces a bound name for the sum
  FormulaPtr f = parse_fo("x + 1 < y");
  CHECK(f->free_vars == std::set<std::string>{"x", "y"});
  CHECK(f->kind == Formula::Kind::Exists);
  // a direct sum equation needs no fresh variable
  FormulaPtr g = parse_fo("x + y = z");
  CHECK(g->kind == Formula::Kind::Atom);
  CHECK(g->atom == AtomKind::Plus);
}

TEST_CASE("shadowed binders are alpha-renamed") {
  FormulaPtr f = parse_fo("exists x. (x = 0 & (exists x. x = 1))");
  std::string s = formula_to_string(*f);
  CHECK(s == "exists x. (x = 0 & exists x$0. x$0 = 1)");
  CHECK(f->free_vars.empty());
  CHECK(decide(*f));
}

TEST_CASE("syntax errors carry a position") {
  for (const char* s : {"", "x =", "forall . x = y", "x + = y", "(x = y",
                        "x & y"}) {
    try {
      (void)parse_fo(s);
      FAIL("expected SyntaxError for: ", s);
    } catch (const SyntaxError& e) {
      CHECK(e.position <= std::string(s).size());
    }
  }
}

TEST_CASE("decide on regression sentences") {
  CHECK(D("forall x. forall y. forall z. (x+y)+z = x+(y+z)"));
  CHECK_FALSE(D("forall x. forall y. x + y = y + x"));
  CHECK(D("exists x. exists y. !(x + y = y + x)"));
  CHECK(D("forall x. (x + x = x <-> x = 0)"));
  CHECK_FALSE(D("forall x. forall y. forall z. (x+z = y+z -> x = y)"));
  CHECK(D("forall x. forall y. forall z. (z+x = z+y -> x = y)"));
  CHECK(D("forall x. forall y. (x <= y | y <= x)"));
  CHECK(D("forall x. exists y. x < y"));
  CHECK_FALSE(D("exists y. forall x. x < y"));
  CHECK(D("exists x. x = w^2*2 + 1"));
}

TEST_CASE("implication product agrees with the rewrite path") {
  CompileOptions direct, rewritten;
  rewritten.rewrite_implications = true;
  for (const char* s :
       {"forall x. (x = 0 -> x + x = x)", "forall x. (x + x = x <-> x = 0)",
        "forall x. forall y. (x < y -> !(y < x))",
        "forall x. forall y. (x <= y <-> !(y < x))",
        "forall x. (x < w -> x + w = w)"}) {
    FormulaPtr f = parse_fo(s);
    CHECK(decide(*f, direct) == decide(*f, rewritten));
    CHECK(decide(*f, direct));
  }
}

TEST_CASE("decide requires a closed sentence") {
  CHECK_THROWS_AS((void)decide(*parse_fo("x = 0")), UnboundVariable);
}

TEST_CASE("tight state ceilings raise ResourceBudgetExceeded") {
  CompileOptions opts;
  opts.max_states = 4;
  CHECK_THROWS_AS(
      (void)decide(*parse_fo("forall x. forall y. x + y = y + x"), opts),
      ResourceBudgetExceeded);
}

TEST_CASE("witnesses are minimal and verified") {
  auto w = find_witness(*parse_fo("x + x = x"));
  REQUIRE(w.has_value());
  CHECK(w->at("x") == Ordinal(0));

  w = find_witness(*parse_fo("!(x = 0) & x + x = x"));
  CHECK_FALSE(w.has_value());

  w = find_witness(*parse_fo("x = w*2 + 1"));
  REQUIRE(w.has_value());
  CHECK(w->at("x") == P("w*2 + 1"));

  // the least ordinal closed under successor is omega
  w = find_witness(*parse_fo(
      "0 < x & (forall y. (y < x -> y + 1 < x)) & "
      "(forall z. ((0 < z & (forall y. (y < z -> y + 1 < z))) -> x <= z))"));
  REQUIRE(w.has_value());
  CHECK(w->at("x") == Ordinal::omega());
}

TEST_CASE("compiled atoms agree with ordinal-core on a small sweep") {
  CompileOptions opts;
  Compiled lt = compile(*parse_fo("x < y"), opts);
  Compiled plus = compile(*parse_fo("x + y = z"), opts);
  REQUIRE(lt.order == std::vector<std::string>{"x", "y"});
  REQUIRE(plus.order == std::vector<std::string>{"x", "y", "z"});
  std::vector<Ordinal> vals = {Ordinal(0), Ordinal(1),       Ordinal(2),
                               P("w"),     P("w + 1"),       P("w*2"),
                               P("w^2"),   P("w^2 + w + 1")};
  for (const Ordinal& x : vals)
    for (const Ordinal& y : vals) {
      LabeledTree t = convolve({encode(x, 1), encode(y, 1)});
      CHECK(accepts(lt.automaton, t) == (x < y));
      Ordinal z = ord_add(x, y);
      CHECK(accepts(plus.automaton,
                    convolve({encode(x, 1), encode(y, 1), encode(z, 1)})));
      CHECK_FALSE(accepts(
          plus.automaton,
          convolve({encode(x, 1), encode(y, 1),
                    encode(ord_add(z, Ordinal(1)), 1)})));
    }
}

TEST_CASE("eval_oracle is exact on quantifier-free formulas") {
  std::vector<Ordinal> cands = level1_sweep();
  Valuation v{{"x", P("w")}, {"y", Ordinal(1)}};
  CHECK(eval_oracle(*parse_fo("x < y"), v, cands) == Tri::False);
  CHECK(eval_oracle(*parse_fo("y < x"), v, cands) == Tri::True);
  CHECK(eval_oracle(*parse_fo("y + x = x"), v, cands) == Tri::True);
  CHECK(eval_oracle(*parse_fo("x + y = x"), v, cands) == Tri::False);
  // the monotone existential cases are decided exactly
  CHECK(eval_oracle(*parse_fo("exists z. y + z = x"), v, cands) == Tri::True);
  CHECK(eval_oracle(*parse_fo("exists z. x + z = y"), v, cands) == Tri::False);
}

TEST_CASE("decide at level 0 is finite arithmetic") {
  CHECK(D("forall x. forall y. x + y = y + x", 0));
  CHECK(D("forall x. forall y. forall z. (x+z = y+z -> x = y)", 0));
  CHECK_FALSE(D("exists x. x + 1 = x", 0));
}

TEST_CASE("decide at level 2 sees omega^omega-sized structure") {
  CHECK(D("exists x. x = w^(w)*1", 2));
  CHECK_FALSE(D("forall x. forall y. x + y = y + x", 2));
  CHECK(D("forall x. (x + x = x <-> x = 0)", 2));
}
