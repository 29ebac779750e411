#ifndef ORDAC_ORDINAL_HPP
#define ORDAC_ORDINAL_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordac/errors.hpp"

namespace ordac {

/// Arbitrary-precision natural number (coefficients can get large fast).
using Nat = boost::multiprecision::cpp_int;

enum class Order { LT = -1, EQ = 0, GT = 1 };

/// An ordinal below omega^(omega^omega) in hereditary Cantor Normal Form:
/// a sum of terms omega^e * c with strictly decreasing exponents e (which
/// are themselves Ordinals) and coefficients c >= 1.  The empty sum is 0.
///
/// Values are immutable after construction; every operation returns a new
/// normalized value.
class Ordinal {
 public:
  struct Term;  // completed right below the class

  /// Zero.
  Ordinal() = default;

  /// A finite ordinal (natural number).
  Ordinal(const Nat& n);
  Ordinal(unsigned long n) : Ordinal(Nat(n)) {}
  Ordinal(int n) : Ordinal(Nat(n)) {}

  /// Builds from a term list, checking the CNF invariants.
  static Ordinal from_terms(std::vector<Term> terms);

  static Ordinal omega() { return omega_power(Ordinal(1)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// The finite value; requires is_finite().
  Nat finite_value() const;

  bool operator==(const Ordinal& other) const;

  friend Ordinal omega_power(const Ordinal& e);

 private:
  std::vector<Term> terms_;  // ok while Term is incomplete (C++17 vector)
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coeff;
  bool operator==(const Term&) const = default;
};

inline bool Ordinal::operator==(const Ordinal& other) const {
  return terms_ == other.terms_;
}

/// omega^e as a single-term ordinal (omega^0 = 1).
Ordinal omega_power(const Ordinal& e);

/// Ordinal sum in CNF; terms of `a` below the leading exponent of `b`
/// are absorbed.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);

/// Total order; lexicographic on (exponent, coefficient) term lists with
/// exponents compared recursively.  Kept independent of ord_add so the
/// oracle does not share one code path.
Order ord_cmp(const Ordinal& a, const Ordinal& b);

inline bool operator<(const Ordinal& a, const Ordinal& b) {
  return ord_cmp(a, b) == Order::LT;
}
inline bool operator<=(const Ordinal& a, const Ordinal& b) {
  return ord_cmp(a, b) != Order::GT;
}

/// 2^e for e < omega^omega.  Writes e = omega*g + j and returns
/// omega^g * 2^j.  Throws ExponentTooLarge for e >= omega^omega.
Ordinal two_power(const Ordinal& e);

/// The unique strictly decreasing (g_{n-1},...,g_0) with b = sum 2^{g_i}.
/// Empty for b = 0.
std::vector<Ordinal> two_development(const Ordinal& b);

/// E(x, y): x = 2^g for some g in the 2-development of y.
bool e_relation(const Ordinal& x, const Ordinal& y);

/// omega^b * a for a in CNF (left multiplication by a single omega power).
Ordinal omega_power_times(const Ordinal& b, const Ordinal& a);

/// omega * e (used when mapping CNF exponents to 2-development exponents).
Ordinal omega_times(const Ordinal& e);

/// The (sigma; n_p,...,n_0) classification from a = g*omega^omega + rest.
struct OmegaCharacter {
  int sigma = 0;                // 1 iff the omega^omega part is nonzero
  std::vector<Nat> coeffs;      // n_p ... n_0, leading entry positive
  bool operator==(const OmegaCharacter&) const = default;
};

OmegaCharacter omega_character(const Ordinal& a);

/// Literal grammar (ASCII): "0" | term ("+" term)*, term := nat |
/// "w" ("^" exp)? ("*" nat)?, exp := nat | "w" | "(" ordinal ")".
/// Rejects input that is not in normal form.
Ordinal ord_parse(std::string_view text);
std::string ord_format(const Ordinal& a);

}  // namespace ordac

#endif
