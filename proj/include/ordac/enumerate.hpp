#ifndef ORDAC_ENUMERATE_HPP
#define ORDAC_ENUMERATE_HPP

#include <vector>

#include "ordac/ordinal.hpp"

namespace ordac {

/// All sums over the given strictly descending exponent list with each
/// coefficient in 0..max_coeff (the zero ordinal included).
std::vector<Ordinal> ordinal_enumeration(const std::vector<Ordinal>& exponents,
                                         const Nat& max_coeff);

/// Exponent menu for the oracle sweeps: {0} at level 0, {max_degree..0}
/// at level 1, {omega*a + b : a,b <= max_degree} at level >= 2.
std::vector<Ordinal> sweep_exponents(int level, int max_degree);

/// The acceptance-sweep enumerations: degree <= 2 / coefficients <= 3 at
/// level 1 (64 values); exponents {omega+1, omega, 1, 0} with
/// coefficients <= 2 at level 2 (81 values).
std::vector<Ordinal> level1_sweep();
std::vector<Ordinal> level2_sweep();

}  // namespace ordac

#endif
