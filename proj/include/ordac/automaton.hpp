#ifndef ORDAC_AUTOMATON_HPP
#define ORDAC_AUTOMATON_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordac/errors.hpp"
#include "ordac/tree.hpp"

namespace ordac {

/// A tuple alphabet: all width-length strings over the sorted base chars.
/// Width 0 has the single empty symbol (used for closed sentences).
struct Alphabet {
  std::string base;  // sorted, distinct characters
  int width = 1;

  std::vector<std::string> symbols() const;
  bool contains(const std::string& sym) const;
  bool operator==(const Alphabet&) const = default;
};

enum class Connective { AND, OR, IMPLIES, IFF };

/// Bottom-up nondeterministic finite tree automaton (Q, Sigma, Delta, I, F).
/// A run maps leaves into I (leaf labels are not constrained) and internal
/// nodes through Delta; the tree is accepted when the root state is final.
struct TreeAutomaton {
  struct Transition {
    int parent;
    std::string sym;
    int left;
    int right;
    auto operator<=>(const Transition&) const = default;
  };

  Alphabet alphabet;
  int num_states = 0;
  std::vector<Transition> transitions;
  std::set<int> leaf_states;   // I
  std::set<int> final_states;  // F
  bool deterministic = false;

  void check() const;  // validates state / symbol ranges
};

/// A run of an automaton on a tree: one state per node index.
struct Run {
  std::vector<int> state;  // indexed by tree node id
};

bool accepts(const TreeAutomaton& a, const LabeledTree& t,
             Run* run_out = nullptr);

/// Subset construction over reachable subsets only.  The result is
/// deterministic but left incomplete: a configuration with no listed
/// successor stands for the empty subset (a rejecting sink).
TreeAutomaton determinize(const TreeAutomaton& a,
                          std::size_t max_states = SIZE_MAX);

/// L(universe) \ L(a): determinize, pair with the universe's runs treating
/// stuck runs of `a` as an implicit rejecting sink, flip acceptance.
TreeAutomaton complement(const TreeAutomaton& a, const TreeAutomaton& universe,
                         std::size_t max_states = SIZE_MAX);

/// Pairwise product over reachable pairs; IMPLIES/IFF determinize and
/// complete the inputs first (AND/OR run directly on nondeterministic
/// inputs, OR as a disjoint-sum union).
TreeAutomaton product(const TreeAutomaton& a, const TreeAutomaton& b,
                      Connective op, std::size_t max_states = SIZE_MAX);

/// Boolean combination of determinized `a` and `b` relative to `universe`:
/// like product, but restricted to the universe's runs so stuck runs can
/// feed an implicit sink without enumerating the whole alphabet.  Used for
/// IMPLIES/IFF over the wide alphabets arising during compilation.
TreeAutomaton relative_product(const TreeAutomaton& a, const TreeAutomaton& b,
                               Connective op, const TreeAutomaton& universe,
                               std::size_t max_states = SIZE_MAX);

/// Erases track `component`; the result guesses the erased symbols.
TreeAutomaton project(const TreeAutomaton& a, int component);

/// Inserts an unconstrained track at index `at`.
TreeAutomaton cylindrify(const TreeAutomaton& a, int at);

/// Reorders tracks: new track i reads old track perm[i].
TreeAutomaton permute_tracks(const TreeAutomaton& a,
                             const std::vector<int>& perm);

/// Keeps only symbols whose tracks i and j agree, then drops track j
/// (diagonal restriction, used for repeated atom variables).
TreeAutomaton merge_tracks(const TreeAutomaton& a, int i, int j);

bool is_empty(const TreeAutomaton& a);

/// A minimal-height accepted tree, or nullopt when the language is empty.
/// Deterministic: minimal height first, then lexicographically least
/// symbol, then least child state pair.
std::optional<LabeledTree> witness(const TreeAutomaton& a);

/// Drops states that are not bottom-up reachable or not co-reachable
/// from a final state; language-preserving.
TreeAutomaton trim(const TreeAutomaton& a);

/// Versioned text serialization with canonical transition order.
std::string serialize(const TreeAutomaton& a);
TreeAutomaton deserialize(std::string_view text);

/// DOT rendering; transitions appear as AND-nodes of the hypergraph.
std::string automaton_to_dot(const TreeAutomaton& a,
                             const std::string& graph_name = "automaton");

}  // namespace ordac

#endif
