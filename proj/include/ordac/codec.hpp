#ifndef ORDAC_CODEC_HPP
#define ORDAC_CODEC_HPP

#include "ordac/automaton.hpp"
#include "ordac/ordinal.hpp"
#include "ordac/tree.hpp"

namespace ordac {

/// Base symbols for level k: '#', digits, 'E'; 'A' from level 1 and 'B'
/// from level 2 (outer spines).  Sorted, so '#' comes first.
std::string base_chars(int level);
Alphabet base_alphabet(int level, int width = 1);

/// Canonical (minimal-padding) tree encoding of `a` at nesting level k.
/// Throws DomainExceeded when a >= omega^(omega^k).
LabeledTree encode(const Ordinal& a, int level);

/// Inverse of encode over the whole representation class (any padding).
/// Throws MalformedTree citing the violated rule.
Ordinal decode(const LabeledTree& t, int level);

/// Accepts exactly the trees that encode some ordinal below
/// omega^(omega^k), over all padding variants.
TreeAutomaton validity_automaton(int level);

/// True when every exponent of `a` keeps it below omega^(omega^k).
bool fits_level(const Ordinal& a, int level);

}  // namespace ordac

#endif
