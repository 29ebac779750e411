#include "ordac/enumerate.hpp"

namespace ordac {

std::vector<Ordinal> ordinal_enumeration(const std::vector<Ordinal>& exponents,
                                         const Nat& max_coeff) {
  std::vector<Ordinal> out;
  std::vector<Nat> coeffs(exponents.size(), 0);
  while (true) {
    std::vector<Ordinal::Term> terms;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (coeffs[i] > 0)
        terms.push_back(Ordinal::Term{exponents[i], coeffs[i]});
    out.push_back(Ordinal::from_terms(std::move(terms)));
    std::size_t i = coeffs.size();
    while (i > 0 && coeffs[i - 1] == max_coeff) coeffs[--i] = 0;
    if (i == 0) break;
    ++coeffs[i - 1];
  }
  return out;
}

std::vector<Ordinal> sweep_exponents(int level, int max_degree) {
  std::vector<Ordinal> exps;
  if (level <= 0) return {Ordinal(0)};
  if (level == 1) {
    for (int d = max_degree; d >= 0; --d)
      exps.push_back(Ordinal(static_cast<unsigned long>(d)));
    return exps;
  }
  for (int a = max_degree; a >= 0; --a)
    for (int b = max_degree; b >= 0; --b) {
      std::vector<Ordinal::Term> terms;
      if (a > 0)
        terms.push_back(Ordinal::Term{Ordinal(1), Nat(a)});
      if (b > 0)
        terms.push_back(Ordinal::Term{Ordinal(0), Nat(b)});
      exps.push_back(Ordinal::from_terms(std::move(terms)));
    }
  return exps;
}

std::vector<Ordinal> level1_sweep() {
  return ordinal_enumeration(sweep_exponents(1, 2), 3);
}

std::vector<Ordinal> level2_sweep() {
  return ordinal_enumeration(sweep_exponents(2, 1), 2);
}

}  // namespace ordac
