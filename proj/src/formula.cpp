#include "ordac/formula.hpp"

#include <cctype>
#include <map>

namespace ordac {

FormulaPtr make_atom(AtomKind k, std::vector<std::string> args,
                     Ordinal constant) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->atom = k;
  f->args = std::move(args);
  f->constant = std::move(constant);
  f->free_vars.insert(f->args.begin(), f->args.end());
  return f;
}

FormulaPtr make_not(FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->free_vars = body->free_vars;
  f->lhs = std::move(body);
  return f;
}

FormulaPtr make_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->free_vars = a->free_vars;
  f->free_vars.insert(b->free_vars.begin(), b->free_vars.end());
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr make_quantifier(Formula::Kind k, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->free_vars = body->free_vars;
  f->free_vars.erase(var);
  f->var = std::move(var);
  f->lhs = std::move(body);
  return f;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Term {
  enum class Kind { Var, Lit, Sum };
  Kind kind;
  std::string name;  // Var
  Ordinal lit;       // Lit
  std::unique_ptr<Term> a, b;
};

class FoParser {
 public:
  explicit FoParser(std::string_view text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int fresh_ = 0;
  // surface name -> active (possibly alpha-renamed) name
  std::map<std::string, std::string> scope_;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
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
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "' " + what, pos_);
  }

  static bool ident_char(char c) {
    return std::islower(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  }

  // lowercase identifier, or empty when the next token is not one
  std::string try_ident() {
    skip_space();
    if (pos_ >= text_.size() ||
        !std::islower(static_cast<unsigned char>(text_[pos_])))
      return {};
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string fresh_var() { return "$" + std::to_string(fresh_++); }

  std::string resolve(const std::string& surface) {
    auto it = scope_.find(surface);
    return it == scope_.end() ? surface : it->second;
  }

  FormulaPtr formula() {
    skip_space();
    std::size_t save = pos_;
    std::string word = try_ident();
    if (word == "forall" || word == "exists") {
      std::string surface = try_ident();
      if (surface.empty()) throw SyntaxError("expected a variable after '" + word + "'", pos_);
      expect('.', "after the quantified variable");
      // alpha-rename when shadowing an enclosing binding
      std::string bound = scope_.count(surface) ? surface + fresh_var() : surface;
      auto prev = scope_.find(surface);
      std::string old = prev == scope_.end() ? std::string() : prev->second;
      bool had = prev != scope_.end();
      scope_[surface] = bound;
      FormulaPtr body = formula();
      if (had)
        scope_[surface] = old;
      else
        scope_.erase(surface);
      return make_quantifier(word == "forall" ? Formula::Kind::Forall
                                              : Formula::Kind::Exists,
                             bound, body);
    }
    pos_ = save;
    return iff();
  }

  FormulaPtr iff() {
    FormulaPtr f = implies();
    while (eat("<->")) f = make_binary(Formula::Kind::Iff, f, implies());
    return f;
  }

  FormulaPtr implies() {
    FormulaPtr f = disjunction();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return make_binary(Formula::Kind::Implies, f, implies());  // right-assoc
    }
    return f;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (peek() == '|' && (eat('|'))) f = make_binary(Formula::Kind::Or, f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (peek() == '&' && (eat('&'))) f = make_binary(Formula::Kind::And, f, unary());
    return f;
  }

  FormulaPtr unary() {
    if (eat('!')) return make_not(unary());
    skip_space();
    if (peek() == '(') {
      // either a parenthesized formula or a parenthesized term; decide by
      // trying the formula first
      std::size_t save = pos_;
      ++pos_;
      try {
        FormulaPtr f = formula();
        expect(')', "to close '('");
        return f;
      } catch (const SyntaxError&) {
        pos_ = save;
        return atom();
      }
    }
    if (peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (eat('(')) {
        std::string x = try_ident();
        if (x.empty()) throw SyntaxError("expected a variable in E(,)", pos_);
        expect(',', "between the arguments of E");
        std::string y = try_ident();
        if (y.empty()) throw SyntaxError("expected a variable in E(,)", pos_);
        expect(')', "to close E(");
        return make_atom(AtomKind::Erel, {resolve(x), resolve(y)});
      }
      pos_ = save;
    }
    return atom();
  }

  // single ordinal term of the literal grammar: nat | w(^exp)?(*nat)?
  Ordinal literal_term() {
    skip_space();
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    } else {  // 'w', already checked by the caller
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '(') {
          int depth = 0;
          do {
            if (pos_ >= text_.size())
              throw SyntaxError("unbalanced '(' in ordinal literal", start);
            if (text_[pos_] == '(') ++depth;
            if (text_[pos_] == ')') --depth;
            ++pos_;
          } while (depth > 0);
        } else if (pos_ < text_.size() && text_[pos_] == 'w') {
          ++pos_;
        } else {
          while (pos_ < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        }
      }
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
    }
    try {
      return ord_parse(text_.substr(start, pos_ - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), start);
    }
  }

  std::unique_ptr<Term> term_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("expected a term", pos_);
    char c = text_[pos_];
    auto t = std::make_unique<Term>();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t->kind = Term::Kind::Lit;
      t->lit = literal_term();
      return t;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t save = pos_;
      std::string id = try_ident();
      if (id == "w") {
        pos_ = save;
        t->kind = Term::Kind::Lit;
        t->lit = literal_term();
        return t;
      }
      if (id == "forall" || id == "exists" || id == "in")
        throw SyntaxError("'" + id + "' cannot be used as a variable", save);
      t->kind = Term::Kind::Var;
      t->name = resolve(id);
      return t;
    }
    if (c == '(') {
      ++pos_;
      auto inner = term_sum();
      expect(')', "to close a parenthesized term");
      return inner;
    }
    throw SyntaxError("expected a term", pos_);
  }

  std::unique_ptr<Term> term_sum() {
    auto t = term_primary();
    while (eat('+')) {
      auto s = std::make_unique<Term>();
      s->kind = Term::Kind::Sum;
      s->a = std::move(t);
      s->b = term_primary();
      t = std::move(s);
    }
    return t;
  }

  enum class Rel { Eq, Neq, Lt, Leq, Gt, Geq };

  FormulaPtr atom() {
    auto t1 = term_sum();
    skip_space();
    Rel rel;
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
      throw SyntaxError("expected a comparison operator", pos_);
    auto t2 = term_sum();
    if (rel == Rel::Gt || rel == Rel::Geq) {
      std::swap(t1, t2);
      rel = rel == Rel::Gt ? Rel::Lt : Rel::Leq;
    }
    return lower(rel, std::move(t1), std::move(t2));
  }

  // Flattens compound terms with fresh existentials and produces an AST of
  // primitive atoms.
  FormulaPtr lower(Rel rel, std::unique_ptr<Term> t1, std::unique_ptr<Term> t2) {
    std::vector<FormulaPtr> conds;
    std::vector<std::string> introduced;

    auto reduce = [&](auto&& self, const Term& t) -> std::string {
      switch (t.kind) {
        case Term::Kind::Var:
          return t.name;
        case Term::Kind::Lit: {
          std::string v = fresh_var();
          introduced.push_back(v);
          conds.push_back(make_atom(AtomKind::EqConst, {v}, t.lit));
          return v;
        }
        case Term::Kind::Sum: {
          std::string a = self(self, *t.a);
          std::string b = self(self, *t.b);
          std::string v = fresh_var();
          introduced.push_back(v);
          conds.push_back(make_atom(AtomKind::Plus, {a, b, v}));
          return v;
        }
      }
      throw std::logic_error("unreachable");
    };

    FormulaPtr core;
    if (rel == Rel::Eq && t1->kind == Term::Kind::Var &&
        t2->kind == Term::Kind::Lit) {
      core = make_atom(AtomKind::EqConst, {t1->name}, t2->lit);
    } else if (rel == Rel::Eq && t2->kind == Term::Kind::Var &&
               t1->kind == Term::Kind::Lit) {
      core = make_atom(AtomKind::EqConst, {t2->name}, t1->lit);
    } else if (rel == Rel::Eq && t1->kind == Term::Kind::Sum &&
               t2->kind == Term::Kind::Var) {
      std::string a = reduce(reduce, *t1->a);
      std::string b = reduce(reduce, *t1->b);
      core = make_atom(AtomKind::Plus, {a, b, t2->name});
    } else if (rel == Rel::Eq && t2->kind == Term::Kind::Sum &&
               t1->kind == Term::Kind::Var) {
      std::string a = reduce(reduce, *t2->a);
      std::string b = reduce(reduce, *t2->b);
      core = make_atom(AtomKind::Plus, {a, b, t1->name});
    } else {
      std::string v1 = reduce(reduce, *t1);
      std::string v2 = reduce(reduce, *t2);
      switch (rel) {
        case Rel::Eq:
          core = make_atom(AtomKind::Eq, {v1, v2});
          break;
        case Rel::Neq:
          core = make_not(make_atom(AtomKind::Eq, {v1, v2}));
          break;
        case Rel::Lt:
          core = make_atom(AtomKind::Lt, {v1, v2});
          break;
        case Rel::Leq:
          core = make_atom(AtomKind::Leq, {v1, v2});
          break;
        default:
          throw std::logic_error("unreachable");
      }
    }

    FormulaPtr f = core;
    for (auto it = conds.rbegin(); it != conds.rend(); ++it)
      f = make_binary(Formula::Kind::And, *it, f);
    for (auto it = introduced.rbegin(); it != introduced.rend(); ++it)
      f = make_quantifier(Formula::Kind::Exists, *it, f);
    return f;
  }
};

}  // namespace

FormulaPtr parse_fo(std::string_view text) { return FoParser(text).parse(); }

// ---------------------------------------------------------------------------
// printing

namespace {

const char* atom_rel(AtomKind k) {
  switch (k) {
    case AtomKind::Eq:
      return " = ";
    case AtomKind::Lt:
      return " < ";
    case AtomKind::Leq:
      return " <= ";
    default:
      return "";
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      switch (f.atom) {
        case AtomKind::Plus:
          out += f.args[0] + " + " + f.args[1] + " = " + f.args[2];
          break;
        case AtomKind::Erel:
          out += "E(" + f.args[0] + ", " + f.args[1] + ")";
          break;
        case AtomKind::EqConst:
          out += f.args[0] + " = " + ord_format(f.constant);
          break;
        default:
          out += f.args[0] + atom_rel(f.atom) + f.args[1];
      }
      return;
    case Formula::Kind::Not:
      out += "!(";
      print(*f.lhs, out);
      out += ")";
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind == Formula::Kind::Exists ? "exists " : "forall ";
      out += f.var + ". ";
      print(*f.lhs, out);
      return;
    default: {
      const char* op = f.kind == Formula::Kind::And       ? " & "
                       : f.kind == Formula::Kind::Or      ? " | "
                       : f.kind == Formula::Kind::Implies ? " -> "
                                                          : " <-> ";
      out += "(";
      print(*f.lhs, out);
      out += op;
      print(*f.rhs, out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string formula_to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace ordac
