#include "ordac/compile.hpp"

namespace ordac {

namespace {

const Ordinal& value(const Valuation& v, const std::string& name) {
  auto it = v.find(name);
  if (it == v.end())
    throw UnboundVariable("no value for variable " + name);
  return it->second;
}

int eval(const Formula& f, const Valuation& v,
         const std::vector<Ordinal>& candidates) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      switch (f.atom) {
        case AtomKind::Plus:
          return ord_add(value(v, f.args[0]), value(v, f.args[1])) ==
                         value(v, f.args[2])
                     ? 1
                     : -1;
        case AtomKind::Eq:
          return value(v, f.args[0]) == value(v, f.args[1]) ? 1 : -1;
        case AtomKind::Lt:
          return value(v, f.args[0]) < value(v, f.args[1]) ? 1 : -1;
        case AtomKind::Leq:
          return value(v, f.args[0]) <= value(v, f.args[1]) ? 1 : -1;
        case AtomKind::Erel:
          return e_relation(value(v, f.args[0]), value(v, f.args[1])) ? 1 : -1;
        case AtomKind::EqConst:
          return value(v, f.args[0]) == f.constant ? 1 : -1;
      }
      throw std::logic_error("unreachable");
    case Formula::Kind::Not:
      return -eval(*f.lhs, v, candidates);
    case Formula::Kind::And:
      return std::min(eval(*f.lhs, v, candidates), eval(*f.rhs, v, candidates));
    case Formula::Kind::Or:
      return std::max(eval(*f.lhs, v, candidates), eval(*f.rhs, v, candidates));
    case Formula::Kind::Implies:
      return std::max(-eval(*f.lhs, v, candidates),
                      eval(*f.rhs, v, candidates));
    case Formula::Kind::Iff: {
      int a = eval(*f.lhs, v, candidates);
      int b = eval(*f.rhs, v, candidates);
      return a == 0 || b == 0 ? 0 : a * b;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool exists = f.kind == Formula::Kind::Exists;
      const Formula& body = *f.lhs;
      // Exact case: "exists z. x + z = y" is monotone in z, so it holds
      // iff x <= y regardless of any enumeration bound.
      if (exists && body.kind == Formula::Kind::Atom &&
          body.atom == AtomKind::Plus && body.args[1] == f.var &&
          body.args[0] != f.var && body.args[2] != f.var) {
        return value(v, body.args[0]) <= value(v, body.args[2]) ? 1 : -1;
      }
      // Exact case: "exists z. x + y = z" always holds (sums exist).
      if (exists && body.kind == Formula::Kind::Atom &&
          body.atom == AtomKind::Plus && body.args[2] == f.var &&
          body.args[0] != f.var && body.args[1] != f.var) {
        return 1;
      }
      std::vector<Ordinal> domain = candidates;
      for (const auto& [name, val] : v)
        if (std::find(domain.begin(), domain.end(), val) == domain.end())
          domain.push_back(val);
      Valuation inner = v;
      for (const Ordinal& cand : domain) {
        inner[f.var] = cand;
        int r = eval(body, inner, candidates);
        if (exists && r == 1) return 1;
        if (!exists && r == -1) return -1;
      }
      return 0;  // the rest of the domain was not enumerated
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Tri eval_oracle(const Formula& f, const Valuation& v,
                const std::vector<Ordinal>& candidates) {
  return static_cast<Tri>(eval(f, v, candidates));
}

}  // namespace ordac
