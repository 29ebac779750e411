#ifndef ORDAC_ERRORS_HPP
#define ORDAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordac {

/// Parse failure in an ordinal literal, formula, tree or automaton file.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Value lies outside the ordinal domain supported by the requested level.
class DomainExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// two_power input at or above omega^omega.
class ExponentTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tree violates the encoding rules; the message cites the violated rule.
class MalformedTree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Automaton operation applied across incompatible alphabets.
class AlphabetMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compilation crossed the configured state-count ceiling.
class ResourceBudgetExceeded : public std::runtime_error {
 public:
  ResourceBudgetExceeded(const std::string& where, std::size_t states,
                         std::size_t ceiling)
      : std::runtime_error("state ceiling exceeded while compiling " + where +
                           ": " + std::to_string(states) + " > " +
                           std::to_string(ceiling)),
        subformula(where) {}
  std::string subformula;
};

/// Variable used without a binder or declared twice on one scope path.
class UnboundVariable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// WMSO sort discipline violation (set variable where an individual is
/// expected, or vice versa).
class SortError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordac

#endif
