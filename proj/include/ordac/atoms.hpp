#ifndef ORDAC_ATOMS_HPP
#define ORDAC_ATOMS_HPP

#include "ordac/automaton.hpp"
#include "ordac/codec.hpp"
#include "ordac/ordinal.hpp"

namespace ordac {

/// Universe automaton for width-w tuple trees at the given level: every
/// track must be a valid ordinal encoding.  Width 0 accepts every tree.
TreeAutomaton universe_automaton(int level, int width);

/// Core of the x+y=z recognizer over the 3-track alphabet (tracks x,y,z).
/// Permissive about per-track well-formedness; addition_automaton
/// intersects it with the validity universe.
TreeAutomaton addition_core(int level);

/// Full x+y=z automaton: core intersected with track validity, trimmed.
TreeAutomaton addition_automaton(int level);

/// Core comparing tracks 0 and 1 as ordinals; pick finals by verdict.
TreeAutomaton comparison_core(int level, Order verdict);
TreeAutomaton comparison_core(int level, const std::vector<Order>& verdicts);

/// x < y, x <= y, x = y over 2 tracks, validity included.
TreeAutomaton less_automaton(int level);
TreeAutomaton less_equal_automaton(int level);
TreeAutomaton equal_automaton(int level);

/// The 3-state core for E(x, y): exactly one node of T_x reads 1 and the
/// same node reads 1 in T_y.
TreeAutomaton erel_core(int level);
TreeAutomaton erel_automaton(int level);

/// Singleton-language automaton for the encodings of `c` (any padding).
TreeAutomaton constant_automaton(const Ordinal& c, int level);

}  // namespace ordac

#endif
