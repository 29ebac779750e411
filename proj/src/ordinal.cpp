#include "ordac/ordinal.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace ordac {

Ordinal::Ordinal(const Nat& n) {
  if (n < 0) throw std::invalid_argument("negative natural");
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff < 1)
      throw std::invalid_argument("CNF coefficient must be >= 1");
    if (i > 0 && ord_cmp(terms[i - 1].exponent, terms[i].exponent) != Order::GT)
      throw std::invalid_argument("CNF exponents must strictly decrease");
  }
  Ordinal a;
  a.terms_ = std::move(terms);
  return a;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Nat Ordinal::finite_value() const {
  if (!is_finite()) throw std::logic_error("ordinal is not finite");
  return terms_.empty() ? Nat(0) : terms_[0].coeff;
}

Ordinal omega_power(const Ordinal& e) {
  Ordinal a;
  a.terms_.push_back(Ordinal::Term{e, Nat(1)});
  return a;
}

Order ord_cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    Order e = ord_cmp(ta[i].exponent, tb[i].exponent);
    if (e != Order::EQ) return e;
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff < tb[i].coeff ? Order::LT : Order::GT;
  }
  if (ta.size() != tb.size())
    return ta.size() < tb.size() ? Order::LT : Order::GT;
  return Order::EQ;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  std::size_t i = 0;
  // keep a's terms with exponent strictly above b's leading exponent
  while (i < a.terms().size() &&
         ord_cmp(a.terms()[i].exponent, lead) == Order::GT)
    out.push_back(a.terms()[i++]);
  if (i < a.terms().size() &&
      ord_cmp(a.terms()[i].exponent, lead) == Order::EQ) {
    out.push_back(
        Ordinal::Term{lead, a.terms()[i].coeff + b.terms().front().coeff});
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  } else {
    out.insert(out.end(), b.terms().begin(), b.terms().end());
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal two_power(const Ordinal& e) {
  // e must be < omega^omega, i.e. all exponents of e are finite.
  std::vector<Ordinal::Term> gamma_terms;
  Nat j = 0;
  for (const auto& t : e.terms()) {
    if (!t.exponent.is_finite())
      throw ExponentTooLarge("two_power: exponent is >= omega^omega");
    Nat f = t.exponent.finite_value();
    if (f == 0) {
      j = t.coeff;
    } else {
      gamma_terms.push_back(Ordinal::Term{Ordinal(Nat(f - 1)), t.coeff});
    }
  }
  Nat pow = Nat(1) << static_cast<unsigned>(j);
  Ordinal gamma = Ordinal::from_terms(std::move(gamma_terms));
  if (gamma.is_zero()) return Ordinal(pow);
  return Ordinal::from_terms({Ordinal::Term{gamma, pow}});
}

Ordinal omega_times(const Ordinal& e) {
  std::vector<Ordinal::Term> out;
  for (const auto& t : e.terms())
    out.push_back(Ordinal::Term{ord_add(Ordinal(1), t.exponent), t.coeff});
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_power_times(const Ordinal& b, const Ordinal& a) {
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms())
    out.push_back(Ordinal::Term{ord_add(b, t.exponent), t.coeff});
  return Ordinal::from_terms(std::move(out));
}

std::vector<Ordinal> two_development(const Ordinal& b) {
  std::vector<Ordinal> out;
  for (const auto& t : b.terms()) {
    Ordinal base = omega_times(t.exponent);  // omega * e
    // bits of the coefficient, most significant first
    std::vector<unsigned> bits;
    for (Nat n = t.coeff; n > 0; n >>= 1)
      bits.push_back(static_cast<unsigned>(n & 1));
    for (std::size_t i = bits.size(); i-- > 0;)
      if (bits[i]) out.push_back(ord_add(base, Ordinal(Nat(i))));
  }
  return out;
}

bool e_relation(const Ordinal& x, const Ordinal& y) {
  auto dx = two_development(x);
  if (dx.size() != 1) return false;  // x is not a power of 2
  for (const auto& g : two_development(y))
    if (g == dx[0]) return true;
  return false;
}

OmegaCharacter omega_character(const Ordinal& a) {
  OmegaCharacter ch;
  long p = -1;
  for (const auto& t : a.terms()) {
    if (!t.exponent.is_finite()) {
      ch.sigma = 1;  // part of the gamma * omega^omega prefix
      continue;
    }
    long e = static_cast<long>(t.exponent.finite_value());
    if (p < 0) {
      p = e;
      ch.coeffs.assign(static_cast<std::size_t>(p) + 1, Nat(0));
    }
    ch.coeffs[static_cast<std::size_t>(p - e)] = t.coeff;
  }
  return ch;
}

// ---------------------------------------------------------------------------
// literal parsing / formatting

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  Ordinal parse() {
    Ordinal a = parse_ordinal();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after ordinal literal");
    return a;
  }

 private:
  Ordinal parse_ordinal() {
    skip_ws();
    if (peek() == '0' && !std::isdigit(peek_at(pos_ + 1))) {
      ++pos_;
      return Ordinal();
    }
    std::vector<Ordinal::Term> terms;
    terms.push_back(parse_term());
    while (true) {
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
      std::size_t at = pos_;
      Ordinal::Term t = parse_term();
      if (!terms.empty() &&
          ord_cmp(terms.back().exponent, t.exponent) != Order::GT)
        fail_at("exponents must strictly decrease (not normal form)", at);
      terms.push_back(std::move(t));
    }
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    skip_ws();
    if (std::isdigit(peek())) {
      std::size_t at = pos_;
      Nat n = parse_nat();
      if (n == 0) fail_at("zero term is only allowed as the literal \"0\"", at);
      return Ordinal::Term{Ordinal(), n};
    }
    if (peek() != 'w') fail("expected term (natural or w...)");
    ++pos_;
    Ordinal exponent(1);
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      exponent = parse_exp();
    }
    Nat coeff = 1;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      coeff = parse_nat();
      if (coeff == 0) fail_at("coefficient must be >= 1", at);
    }
    return Ordinal::Term{exponent, coeff};
  }

  Ordinal parse_exp() {
    skip_ws();
    if (std::isdigit(peek())) return Ordinal(parse_nat());
    if (peek() == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (peek() == '(') {
      ++pos_;
      Ordinal e = parse_ordinal();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    fail("expected exponent (natural, w or parenthesized ordinal)");
  }

  Nat parse_nat() {
    skip_ws();
    if (!std::isdigit(peek())) fail("expected natural number");
    std::size_t start = pos_;
    while (std::isdigit(peek())) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 1 && digits[0] == '0')
      fail_at("no leading zeros", start);
    return Nat(digits);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  int peek() const { return peek_at(pos_); }
  int peek_at(std::size_t i) const {
    return i < s_.size() ? static_cast<unsigned char>(s_[i]) : -1;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw SyntaxError(msg, at);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void format_term(std::ostream& os, const Ordinal::Term& t) {
  const Ordinal& e = t.exponent;
  if (e.is_zero()) {
    os << t.coeff;
    return;
  }
  os << 'w';
  if (!(e.is_finite() && e.finite_value() == 1)) {
    os << '^';
    if (e.is_finite()) {
      os << e.finite_value();
    } else if (e == Ordinal::omega()) {
      os << 'w';
    } else {
      os << '(' << ord_format(e) << ')';
    }
  }
  if (t.coeff != 1) os << '*' << t.coeff;
}

}  // namespace

Ordinal ord_parse(std::string_view text) { return LiteralParser(text).parse(); }

std::string ord_format(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    format_term(os, t);
  }
  return os.str();
}

}  // namespace ordac
