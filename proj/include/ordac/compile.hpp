#ifndef ORDAC_COMPILE_HPP
#define ORDAC_COMPILE_HPP

#include <map>
#include <optional>

#include "ordac/automaton.hpp"
#include "ordac/formula.hpp"

namespace ordac {

using Valuation = std::map<std::string, Ordinal>;

struct CompileOptions {
  int level = 1;
  std::size_t max_states = 1'000'000;
  /// Compile -> and <-> by rewriting to !, &, | instead of the
  /// determinized product (cross-check path).
  bool rewrite_implications = false;
};

struct CompileStats {
  std::size_t peak_states = 0;
};

/// A compiled formula: the automaton accepts exactly the convolutions of
/// encodings of satisfying valuations, tracks in `order` (sorted names).
struct Compiled {
  TreeAutomaton automaton;
  std::vector<std::string> order;
};

Compiled compile(const Formula& f, const CompileOptions& opts = {},
                 CompileStats* stats = nullptr);

/// Validity of a closed sentence.  Throws UnboundVariable on free
/// variables.
bool decide(const Formula& f, const CompileOptions& opts = {});

/// Minimal satisfying valuation (by witness-tree height), or nullopt when
/// the formula is unsatisfiable.  The result is re-verified against the
/// compiled automaton before it is returned.
std::optional<Valuation> find_witness(const Formula& f,
                                      const CompileOptions& opts = {});

enum class Tri { False = -1, Unknown = 0, True = 1 };

/// Independent semantic evaluator over ordinal-core arithmetic.
/// Quantifiers enumerate `candidates` (plus the values already in v) and
/// answer Unknown when the verdict could depend on unenumerated ordinals;
/// a few monotonicity cases (e.g. "exists z. x + z = y") are decided
/// exactly.  Quantifier-free formulas always get a definite answer.
Tri eval_oracle(const Formula& f, const Valuation& v,
                const std::vector<Ordinal>& candidates);

}  // namespace ordac

#endif
