#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordac/enumerate.hpp"
#include "ordac/ordinal.hpp"

using namespace ordac;

namespace {
const Ordinal w = Ordinal::omega();
Ordinal P(const char* s) { return ord_parse(s); }
}  // namespace

TEST_CASE("literal grammar round trips") {
  for (const char* s : {"0", "1", "42", "w", "w*3", "w + 1", "w^2",
                        "w^2*3 + w*2 + 7", "w^w", "w^(w*2 + 1)*2 + w^3 + 1",
                        "w^(w^2)", "w^(w^2 + w + 1)*9 + w^(w)*1 + 3"}) {
    Ordinal a = ord_parse(s);
    CHECK(ord_parse(ord_format(a)) == a);
  }
  CHECK(ord_format(P("w^(w)*1")) == "w^w");
  CHECK(ord_format(P("w^0*5")) == "5");
}

TEST_CASE("literal grammar rejects non-normal-form input") {
  for (const char* s : {"", "w +", "w*0", "1 + w", "w + w^2", "w^2 + w^2",
                        "w^(1 + w)", "x", "3 + 4"})
    CHECK_THROWS_AS((void)ord_parse(s), SyntaxError);
}

TEST_CASE("from_terms enforces CNF invariants") {
  CHECK_THROWS(
      (void)Ordinal::from_terms({{Ordinal(1), Nat(0)}}));  // zero coeff
  CHECK_THROWS((void)Ordinal::from_terms(
      {{Ordinal(1), Nat(1)}, {Ordinal(2), Nat(1)}}));  // ascending exponents
  CHECK(Ordinal::from_terms({{Ordinal(1), Nat(2)}, {Ordinal(0), Nat(3)}}) ==
        P("w*2 + 3"));
}

TEST_CASE("finite ordinals") {
  CHECK(Ordinal(0).is_zero());
  CHECK(Ordinal(7).is_finite());
  CHECK(Ordinal(7).finite_value() == 7);
  CHECK_FALSE(w.is_finite());
  CHECK(ord_add(Ordinal(3), Ordinal(4)) == Ordinal(7));
}

TEST_CASE("addition absorbs below the right leading term") {
  CHECK(ord_add(Ordinal(1), w) == w);            // 1 + w = w
  CHECK(ord_add(w, Ordinal(1)) == P("w + 1"));   // w + 1 != w
  CHECK_FALSE(ord_add(w, Ordinal(1)) == w);
  CHECK(ord_add(P("w*2 + 5"), P("w*3")) == P("w*5"));
  CHECK(ord_add(P("w^2 + w"), P("w + 1")) == P("w^2 + w*2 + 1"));
  CHECK(ord_add(P("w^w + w^2*2"), P("w^w*2")) == P("w^w*3"));
}

TEST_CASE("addition identities over the sweep enumeration") {
  std::vector<Ordinal> vals = level1_sweep();
  REQUIRE(vals.size() == 64);
  for (const Ordinal& a : vals) {
    CHECK(ord_add(a, Ordinal(0)) == a);
    CHECK(ord_add(Ordinal(0), a) == a);
  }
  // associativity, exhaustively on a subsample of triples
  for (std::size_t i = 0; i < vals.size(); i += 3)
    for (std::size_t j = 0; j < vals.size(); j += 3)
      for (std::size_t k = 0; k < vals.size(); k += 3) {
        const Ordinal &a = vals[i], &b = vals[j], &c = vals[k];
        CHECK(ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c)));
      }
}

TEST_CASE("comparison is a total order consistent with addition") {
  std::vector<Ordinal> vals = level1_sweep();
  for (const Ordinal& a : vals)
    for (const Ordinal& b : vals) {
      Order ab = ord_cmp(a, b), ba = ord_cmp(b, a);
      CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
      CHECK((ab == Order::EQ) == (a == b));
      // strict monotonicity in the right argument
      if (ab == Order::LT) {
        CHECK(ord_cmp(ord_add(vals[5], a), ord_add(vals[5], b)) == Order::LT);
        // weak monotonicity in the left argument
        CHECK(ord_add(a, vals[5]) <= ord_add(b, vals[5]));
      }
    }
  // transitivity spot sample
  for (std::size_t i = 0; i < vals.size(); i += 5)
    for (std::size_t j = 0; j < vals.size(); j += 5)
      for (std::size_t k = 0; k < vals.size(); k += 5)
        if (vals[i] < vals[j] && vals[j] < vals[k])
          CHECK(vals[i] < vals[k]);
}

TEST_CASE("two_power on CNF exponents") {
  CHECK(two_power(Ordinal(0)) == Ordinal(1));
  CHECK(two_power(Ordinal(3)) == Ordinal(8));
  CHECK(two_power(w) == w);                       // 2^w = w
  CHECK(two_power(P("w + 1")) == P("w*2"));       // 2^(w+1) = w*2
  CHECK(two_power(P("w*2")) == P("w^2"));         // 2^(w*2) = w^2
  CHECK(two_power(P("w*2 + 3")) == P("w^2*8"));
  CHECK_THROWS_AS((void)two_power(P("w^w")), ExponentTooLarge);
}

TEST_CASE("two_development is the inverse of summing 2-powers") {
  for (const Ordinal& b : level1_sweep()) {
    std::vector<Ordinal> dev = two_development(b);
    // strictly descending
    for (std::size_t i = 1; i < dev.size(); ++i) CHECK(dev[i] < dev[i - 1]);
    Ordinal sum;
    for (const Ordinal& g : dev) sum = ord_add(sum, two_power(g));
    CHECK(sum == b);
    // e_relation agrees with membership through two_power
    for (const Ordinal& g : dev) CHECK(e_relation(two_power(g), b));
  }
  CHECK(two_development(Ordinal(0)).empty());
  CHECK(two_development(w) == std::vector<Ordinal>{w});  // w = 2^w
}

TEST_CASE("e_relation characterizes 2-development membership") {
  CHECK(e_relation(Ordinal(1), Ordinal(1)));   // 1 = 2^0
  CHECK(e_relation(Ordinal(4), Ordinal(5)));   // 5 = 4 + 1
  CHECK(e_relation(Ordinal(1), Ordinal(5)));
  CHECK_FALSE(e_relation(Ordinal(2), Ordinal(5)));
  CHECK_FALSE(e_relation(Ordinal(3), Ordinal(3)));  // 3 is not a 2-power
  CHECK(e_relation(w, P("w + 1")));            // w + 1 = 2^w + 2^0
  CHECK(e_relation(Ordinal(1), P("w + 1")));
  CHECK_FALSE(e_relation(w, P("w^2")));        // w^2 = 2^(w*2)
  CHECK(e_relation(P("w^2"), P("w^2")));
}

TEST_CASE("omega_power_times shifts CNF exponents") {
  CHECK(omega_power_times(Ordinal(1), Ordinal(3)) == P("w*3"));
  CHECK(omega_power_times(Ordinal(2), P("w + 2")) == P("w^3 + w^2*2"));
  CHECK(omega_power_times(Ordinal(0), P("w + 1")) == P("w + 1"));
  CHECK(omega_power_times(w, Ordinal(0)) == Ordinal(0));
}

TEST_CASE("omega_character classifies below and above omega^omega") {
  CHECK(omega_character(Ordinal(0)) == OmegaCharacter{0, {}});
  CHECK(omega_character(Ordinal(5)) == OmegaCharacter{0, {5}});
  CHECK(omega_character(P("w^2*3 + 1")) == OmegaCharacter{0, {3, 0, 1}});
  CHECK(omega_character(P("w^w")) == OmegaCharacter{1, {}});
  CHECK(omega_character(P("w^(w + 1) + w*4")) == OmegaCharacter{1, {4, 0}});
}

TEST_CASE("enumerations have the documented sizes") {
  CHECK(level1_sweep().size() == 64);
  CHECK(level2_sweep().size() == 81);
  CHECK(ordinal_enumeration({Ordinal(0)}, 3).size() == 4);
  // all values distinct
  std::vector<Ordinal> vals = level2_sweep();
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      CHECK_FALSE(vals[i] == vals[j]);
}
