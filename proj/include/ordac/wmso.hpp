#ifndef ORDAC_WMSO_HPP
#define ORDAC_WMSO_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordac/compile.hpp"
#include "ordac/formula.hpp"

namespace ordac {

/// WMSO(omega^k, <) formula over individual variables (lowercase) and
/// finite-set variables (uppercase).  The parser desugars successor and
/// constant sugar down to the core atoms x<y, x=y, x in X.
struct WmsoFormula {
  enum class Kind { Lt, Eq, In, Not, And, Or, Implies, Iff, Exists, Forall };

  Kind kind;
  std::string a, b;  // atom arguments; b names the set for In
  std::shared_ptr<const WmsoFormula> lhs, rhs;
  std::string var;
  bool var_is_set = false;

  std::set<std::string> free_individuals, free_sets;
};

using WmsoPtr = std::shared_ptr<const WmsoFormula>;

WmsoPtr parse_wmso(std::string_view text);

std::string wmso_to_string(const WmsoFormula& f);

/// AST node counts, for the translation-linearity measurement.
std::size_t wmso_size(const WmsoFormula& f);
std::size_t formula_size(const Formula& f);

/// Equireduction of WMSO(omega^k, <) into FO(2^(omega^k), +, E) =
/// FO(omega^(omega^(k-1)), +, E).  Set variables map to the ordinal whose
/// 2-development is the set; individuals x to 2^x, guarded by E(x,x).
/// Requires k >= 1.
FormulaPtr translate(const WmsoFormula& f, int k);

bool decide_wmso(const WmsoFormula& f, int k,
                 const CompileOptions& base = {});

struct FiniteSetValuation {
  std::map<std::string, Ordinal> individuals;
  std::map<std::string, std::vector<Ordinal>> sets;  // sorted ascending

  bool operator==(const FiniteSetValuation&) const = default;
};

std::optional<FiniteSetValuation> find_witness_wmso(
    const WmsoFormula& f, int k, const CompileOptions& base = {});

/// Direct finite-set semantics: individual quantifiers range over
/// `universe`, set quantifiers over subsets of `universe` with at most
/// max_set_size elements.  Exact on quantifier-free formulas; elsewhere it
/// is the bounded-model check the differential tests rely on.
bool eval_wmso(const WmsoFormula& f, const FiniteSetValuation& v,
               const std::vector<Ordinal>& universe,
               std::size_t max_set_size);

}  // namespace ordac

#endif
