#include "ordac/wmso.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>

namespace ordac {

namespace {

WmsoPtr w_atom(WmsoFormula::Kind k, std::string a, std::string b) {
  auto f = std::make_shared<WmsoFormula>();
  f->kind = k;
  f->a = std::move(a);
  f->b = std::move(b);
  f->free_individuals.insert(f->a);
  if (k == WmsoFormula::Kind::In)
    f->free_sets.insert(f->b);
  else
    f->free_individuals.insert(f->b);
  return f;
}

WmsoPtr w_not(WmsoPtr body) {
  auto f = std::make_shared<WmsoFormula>();
  f->kind = WmsoFormula::Kind::Not;
  f->free_individuals = body->free_individuals;
  f->free_sets = body->free_sets;
  f->lhs = std::move(body);
  return f;
}

WmsoPtr w_binary(WmsoFormula::Kind k, WmsoPtr a, WmsoPtr b) {
  auto f = std::make_shared<WmsoFormula>();
  f->kind = k;
  f->free_individuals = a->free_individuals;
  f->free_sets = a->free_sets;
  f->free_individuals.insert(b->free_individuals.begin(),
                             b->free_individuals.end());
  f->free_sets.insert(b->free_sets.begin(), b->free_sets.end());
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

WmsoPtr w_quantifier(WmsoFormula::Kind k, std::string var, bool is_set,
                     WmsoPtr body) {
  auto f = std::make_shared<WmsoFormula>();
  f->kind = k;
  f->free_individuals = body->free_individuals;
  f->free_sets = body->free_sets;
  (is_set ? f->free_sets : f->free_individuals).erase(var);
  f->var = std::move(var);
  f->var_is_set = is_set;
  f->lhs = std::move(body);
  return f;
}

// ---------------------------------------------------------------------------
// parser

class WmsoParser {
 public:
  explicit WmsoParser(std::string_view text) : text_(text) {}

  WmsoPtr parse() {
    WmsoPtr f = formula();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int fresh_ = 0;
  std::map<std::string, std::string> scope_;

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool eat(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c, const char* what) {
    if (!eat(c))
      throw SyntaxError(std::string("expected '") + c + "' " + what, pos_);
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string try_ident(bool upper) {
    skip_space();
    if (pos_ >= text_.size()) return {};
    char c = text_[pos_];
    bool ok = upper ? std::isupper(static_cast<unsigned char>(c)) != 0
                    : std::islower(static_cast<unsigned char>(c)) != 0;
    if (!ok) return {};
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string fresh_var() { return "$" + std::to_string(fresh_++); }

  std::string resolve(const std::string& surface) {
    auto it = scope_.find(surface);
    return it == scope_.end() ? surface : it->second;
  }

  WmsoPtr formula() {
    skip_space();
    std::size_t save = pos_;
    std::string word = try_ident(false);
    if (word == "forall" || word == "exists") {
      bool is_set = false;
      std::string surface = try_ident(false);
      if (surface.empty()) {
        surface = try_ident(true);
        is_set = true;
      }
      if (surface.empty())
        throw SyntaxError("expected a variable after '" + word + "'", pos_);
      expect('.', "after the quantified variable");
      std::string bound = scope_.count(surface) ? surface + fresh_var() : surface;
      auto prev = scope_.find(surface);
      bool had = prev != scope_.end();
      std::string old = had ? prev->second : std::string();
      scope_[surface] = bound;
      WmsoPtr body = formula();
      if (had)
        scope_[surface] = old;
      else
        scope_.erase(surface);
      return w_quantifier(word == "forall" ? WmsoFormula::Kind::Forall
                                            : WmsoFormula::Kind::Exists,
                          bound, is_set, body);
    }
    pos_ = save;
    return iff();
  }

  WmsoPtr iff() {
    WmsoPtr f = implies();
    while (eat("<->")) f = w_binary(WmsoFormula::Kind::Iff, f, implies());
    return f;
  }

  WmsoPtr implies() {
    WmsoPtr f = disjunction();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return w_binary(WmsoFormula::Kind::Implies, f, implies());
    }
    return f;
  }

  WmsoPtr disjunction() {
    WmsoPtr f = conjunction();
    while (eat('|')) f = w_binary(WmsoFormula::Kind::Or, f, conjunction());
    return f;
  }

  WmsoPtr conjunction() {
    WmsoPtr f = unary();
    while (eat('&')) f = w_binary(WmsoFormula::Kind::And, f, unary());
    return f;
  }

  WmsoPtr unary() {
    if (eat('!')) return w_not(unary());
    skip_space();
    if (peek() == '(') {
      std::size_t save = pos_;
      ++pos_;
      try {
        WmsoPtr f = formula();
        expect(')', "to close '('");
        return f;
      } catch (const SyntaxError&) {
        pos_ = save;
        return atom();
      }
    }
    return atom();
  }

  // a WMSO term: variable, natural constant, or iterated successor; the
  // result is a variable name plus defining side conditions
  struct Lowering {
    std::vector<WmsoPtr> conds;
    std::vector<std::string> introduced;
  };

  std::string zero_var(Lowering& lw) {
    std::string v = fresh_var();
    std::string u = fresh_var();
    lw.introduced.push_back(v);
    lw.conds.push_back(w_not(w_quantifier(
        WmsoFormula::Kind::Exists, u, false,
        w_atom(WmsoFormula::Kind::Lt, u, v))));
    return v;
  }

  std::string succ_var(Lowering& lw, const std::string& a) {
    std::string v = fresh_var();
    std::string c = fresh_var();
    lw.introduced.push_back(v);
    lw.conds.push_back(w_binary(
        WmsoFormula::Kind::And, w_atom(WmsoFormula::Kind::Lt, a, v),
        w_not(w_quantifier(
            WmsoFormula::Kind::Exists, c, false,
            w_binary(WmsoFormula::Kind::And,
                     w_atom(WmsoFormula::Kind::Lt, a, c),
                     w_atom(WmsoFormula::Kind::Lt, c, v))))));
    return v;
  }

  std::string term(Lowering& lw) {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("expected a term", pos_);
    char c = text_[pos_];
    if (std::isupper(static_cast<unsigned char>(c)))
      throw SortError("set variable used where an individual is expected");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      unsigned long n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (n > 64) throw SyntaxError("constant too large to desugar", start);
        ++pos_;
      }
      std::string v = zero_var(lw);
      for (unsigned long i = 0; i < n; ++i) v = succ_var(lw, v);
      return v;
    }
    std::size_t save = pos_;
    std::string id = try_ident(false);
    if (id.empty()) throw SyntaxError("expected a term", pos_);
    if (id == "s" && peek() == '(') {
      ++pos_;
      std::string inner = term(lw);
      expect(')', "to close s(");
      return succ_var(lw, inner);
    }
    if (id == "forall" || id == "exists" || id == "in")
      throw SyntaxError("'" + id + "' cannot be used as a variable", save);
    return resolve(id);
  }

  WmsoPtr atom() {
    Lowering lw;
    std::string t1 = term(lw);
    skip_space();
    WmsoPtr core;
    std::size_t save = pos_;
    std::string word = try_ident(false);
    if (word == "in") {
      std::string set = try_ident(true);
      if (set.empty())
        throw SortError("right-hand side of 'in' must be a set variable");
      core = w_atom(WmsoFormula::Kind::In, t1, resolve(set));
    } else {
      pos_ = save;
      enum class Rel { Eq, Neq, Lt, Leq, Gt, Geq } rel;
      if (eat("<->"))
        throw SyntaxError("expected a comparison operator", pos_ - 3);
      else if (eat("<="))
        rel = Rel::Leq;
      else if (eat(">="))
        rel = Rel::Geq;
      else if (eat("!="))
        rel = Rel::Neq;
      else if (eat('<'))
        rel = Rel::Lt;
      else if (eat('>'))
        rel = Rel::Gt;
      else if (eat('='))
        rel = Rel::Eq;
      else
        throw SyntaxError("expected a comparison operator or 'in'", pos_);
      std::string t2 = term(lw);
      if (rel == Rel::Gt || rel == Rel::Geq) {
        std::swap(t1, t2);
        rel = rel == Rel::Gt ? Rel::Lt : Rel::Leq;
      }
      switch (rel) {
        case Rel::Eq:
          core = w_atom(WmsoFormula::Kind::Eq, t1, t2);
          break;
        case Rel::Neq:
          core = w_not(w_atom(WmsoFormula::Kind::Eq, t1, t2));
          break;
        case Rel::Lt:
          core = w_atom(WmsoFormula::Kind::Lt, t1, t2);
          break;
        case Rel::Leq:
          core = w_not(w_atom(WmsoFormula::Kind::Lt, t2, t1));
          break;
        default:
          throw std::logic_error("unreachable");
      }
    }
    for (auto it = lw.conds.rbegin(); it != lw.conds.rend(); ++it)
      core = w_binary(WmsoFormula::Kind::And, *it, core);
    for (auto it = lw.introduced.rbegin(); it != lw.introduced.rend(); ++it)
      core = w_quantifier(WmsoFormula::Kind::Exists, *it, false, core);
    return core;
  }
};

}  // namespace

WmsoPtr parse_wmso(std::string_view text) { return WmsoParser(text).parse(); }

// ---------------------------------------------------------------------------
// printing and sizes

namespace {

void w_print(const WmsoFormula& f, std::string& out) {
  switch (f.kind) {
    case WmsoFormula::Kind::Lt:
      out += f.a + " < " + f.b;
      return;
    case WmsoFormula::Kind::Eq:
      out += f.a + " = " + f.b;
      return;
    case WmsoFormula::Kind::In:
      out += f.a + " in " + f.b;
      return;
    case WmsoFormula::Kind::Not:
      out += "!(";
      w_print(*f.lhs, out);
      out += ")";
      return;
    case WmsoFormula::Kind::Exists:
    case WmsoFormula::Kind::Forall:
      out += f.kind == WmsoFormula::Kind::Exists ? "exists " : "forall ";
      out += f.var + ". ";
      w_print(*f.lhs, out);
      return;
    default: {
      const char* op = f.kind == WmsoFormula::Kind::And       ? " & "
                       : f.kind == WmsoFormula::Kind::Or      ? " | "
                       : f.kind == WmsoFormula::Kind::Implies ? " -> "
                                                              : " <-> ";
      out += "(";
      w_print(*f.lhs, out);
      out += op;
      w_print(*f.rhs, out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string wmso_to_string(const WmsoFormula& f) {
  std::string out;
  w_print(f, out);
  return out;
}

std::size_t wmso_size(const WmsoFormula& f) {
  std::size_t n = 1;
  if (f.lhs) n += wmso_size(*f.lhs);
  if (f.rhs) n += wmso_size(*f.rhs);
  return n;
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  if (f.lhs) n += formula_size(*f.lhs);
  if (f.rhs) n += formula_size(*f.rhs);
  return n;
}

// ---------------------------------------------------------------------------
// translation

FormulaPtr translate(const WmsoFormula& f, int k) {
  if (k < 1)
    throw DomainExceeded("the WMSO reduction needs k >= 1");
  switch (f.kind) {
    case WmsoFormula::Kind::Lt:
      return make_atom(AtomKind::Lt, {f.a, f.b});
    case WmsoFormula::Kind::Eq:
      return make_atom(AtomKind::Eq, {f.a, f.b});
    case WmsoFormula::Kind::In:
      return make_atom(AtomKind::Erel, {f.a, f.b});
    case WmsoFormula::Kind::Not:
      return make_not(translate(*f.lhs, k));
    case WmsoFormula::Kind::And:
    case WmsoFormula::Kind::Or:
    case WmsoFormula::Kind::Implies:
    case WmsoFormula::Kind::Iff: {
      Formula::Kind kk = f.kind == WmsoFormula::Kind::And       ? Formula::Kind::And
                         : f.kind == WmsoFormula::Kind::Or      ? Formula::Kind::Or
                         : f.kind == WmsoFormula::Kind::Implies ? Formula::Kind::Implies
                                                                : Formula::Kind::Iff;
      return make_binary(kk, translate(*f.lhs, k), translate(*f.rhs, k));
    }
    case WmsoFormula::Kind::Exists:
    case WmsoFormula::Kind::Forall: {
      FormulaPtr body = translate(*f.lhs, k);
      Formula::Kind q = f.kind == WmsoFormula::Kind::Exists
                            ? Formula::Kind::Exists
                            : Formula::Kind::Forall;
      if (!f.var_is_set) {
        // guard: the hatted individual is a power of two, i.e. E(x,x)
        FormulaPtr guard = make_atom(AtomKind::Erel, {f.var, f.var});
        body = make_binary(q == Formula::Kind::Exists ? Formula::Kind::And
                                                      : Formula::Kind::Implies,
                           guard, body);
      }
      return make_quantifier(q, f.var, body);
    }
  }
  throw std::logic_error("unreachable");
}

bool decide_wmso(const WmsoFormula& f, int k, const CompileOptions& base) {
  if (!f.free_individuals.empty() || !f.free_sets.empty())
    throw UnboundVariable("WMSO sentence has free variables");
  CompileOptions opts = base;
  opts.level = k - 1;
  return decide(*translate(f, k), opts);
}

std::optional<FiniteSetValuation> find_witness_wmso(const WmsoFormula& f,
                                                    int k,
                                                    const CompileOptions& base) {
  FormulaPtr g = translate(f, k);
  for (const auto& x : f.free_individuals)
    g = make_binary(Formula::Kind::And, make_atom(AtomKind::Erel, {x, x}), g);
  CompileOptions opts = base;
  opts.level = k - 1;
  std::optional<Valuation> v = find_witness(*g, opts);
  if (!v) return std::nullopt;
  FiniteSetValuation out;
  for (const auto& x : f.free_individuals) {
    std::vector<Ordinal> dev = two_development(v->at(x));
    if (dev.size() != 1)
      throw std::logic_error("guarded individual is not a power of two");
    out.individuals[x] = dev.front();
  }
  for (const auto& X : f.free_sets) {
    std::vector<Ordinal> dev = two_development(v->at(X));
    std::reverse(dev.begin(), dev.end());  // descending -> ascending
    out.sets[X] = std::move(dev);
  }
  return out;
}

// ---------------------------------------------------------------------------
// direct semantics

namespace {

bool eval_w(const WmsoFormula& f, FiniteSetValuation& v,
            const std::vector<Ordinal>& universe, std::size_t max_set_size) {
  switch (f.kind) {
    case WmsoFormula::Kind::Lt:
      return v.individuals.at(f.a) < v.individuals.at(f.b);
    case WmsoFormula::Kind::Eq:
      return v.individuals.at(f.a) == v.individuals.at(f.b);
    case WmsoFormula::Kind::In: {
      const auto& set = v.sets.at(f.b);
      const auto& x = v.individuals.at(f.a);
      return std::find(set.begin(), set.end(), x) != set.end();
    }
    case WmsoFormula::Kind::Not:
      return !eval_w(*f.lhs, v, universe, max_set_size);
    case WmsoFormula::Kind::And:
      return eval_w(*f.lhs, v, universe, max_set_size) &&
             eval_w(*f.rhs, v, universe, max_set_size);
    case WmsoFormula::Kind::Or:
      return eval_w(*f.lhs, v, universe, max_set_size) ||
             eval_w(*f.rhs, v, universe, max_set_size);
    case WmsoFormula::Kind::Implies:
      return !eval_w(*f.lhs, v, universe, max_set_size) ||
             eval_w(*f.rhs, v, universe, max_set_size);
    case WmsoFormula::Kind::Iff:
      return eval_w(*f.lhs, v, universe, max_set_size) ==
             eval_w(*f.rhs, v, universe, max_set_size);
    case WmsoFormula::Kind::Exists:
    case WmsoFormula::Kind::Forall: {
      const bool exists = f.kind == WmsoFormula::Kind::Exists;
      if (!f.var_is_set) {
        for (const Ordinal& cand : universe) {
          v.individuals[f.var] = cand;
          bool r = eval_w(*f.lhs, v, universe, max_set_size);
          v.individuals.erase(f.var);
          if (r == exists) return exists;
        }
        return !exists;
      }
      if (universe.size() > 20)
        throw std::length_error("set quantifier universe too large");
      for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > max_set_size)
          continue;
        std::vector<Ordinal> set;
        for (std::size_t i = 0; i < universe.size(); ++i)
          if (mask & (1u << i)) set.push_back(universe[i]);
        v.sets[f.var] = std::move(set);
        bool r = eval_w(*f.lhs, v, universe, max_set_size);
        v.sets.erase(f.var);
        if (r == exists) return exists;
      }
      return !exists;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool eval_wmso(const WmsoFormula& f, const FiniteSetValuation& v,
               const std::vector<Ordinal>& universe,
               std::size_t max_set_size) {
  FiniteSetValuation scratch = v;
  return eval_w(f, scratch, universe, max_set_size);
}

}  // namespace ordac
