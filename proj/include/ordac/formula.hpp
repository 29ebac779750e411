#ifndef ORDAC_FORMULA_HPP
#define ORDAC_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordac/ordinal.hpp"

namespace ordac {

enum class AtomKind { Plus, Eq, Lt, Leq, Erel, EqConst };

/// FO(omega^(omega^k), +, E) formula.  Atoms are primitive relations over
/// variables; compound terms are flattened into fresh existentials by the
/// parser.  Nodes are immutable and carry their free-variable sets.
struct Formula {
  enum class Kind { Atom, Not, And, Or, Implies, Iff, Exists, Forall };

  Kind kind;
  // Kind::Atom
  AtomKind atom = AtomKind::Eq;
  std::vector<std::string> args;  // 3 for Plus, 2 for Eq/Lt/Leq/Erel, 1 for EqConst
  Ordinal constant;               // EqConst only
  // connectives / quantifiers
  std::shared_ptr<const Formula> lhs, rhs;  // Not uses lhs only
  std::string var;                          // Exists / Forall

  std::set<std::string> free_vars;
};

using FormulaPtr = std::shared_ptr<const Formula>;

FormulaPtr make_atom(AtomKind k, std::vector<std::string> args,
                     Ordinal constant = {});
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b);
FormulaPtr make_quantifier(Formula::Kind k, std::string var, FormulaPtr body);

/// Parses the concrete FO syntax.  Bound variables that would shadow an
/// enclosing binding are alpha-renamed; compound terms (sums, literals in
/// relational position) are flattened with fresh existential variables.
/// Throws SyntaxError with a character position.
FormulaPtr parse_fo(std::string_view text);

std::string formula_to_string(const Formula& f);

}  // namespace ordac

#endif
