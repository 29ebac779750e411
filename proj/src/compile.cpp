#include "ordac/compile.hpp"

#include <algorithm>

#include "ordac/atoms.hpp"
#include "ordac/codec.hpp"
#include "ordac/tree.hpp"

namespace ordac {

namespace {

struct Ctx {
  const CompileOptions& opts;
  CompileStats* stats;
};

void note(Ctx& c, const TreeAutomaton& a, const Formula& f) {
  auto n = static_cast<std::size_t>(a.num_states);
  if (c.stats && n > c.stats->peak_states) c.stats->peak_states = n;
  if (n > c.opts.max_states)
    throw ResourceBudgetExceeded(formula_to_string(f), n, c.opts.max_states);
}

/// Closes an automaton under padding at the leaves: any state that some
/// all-blank subtree can reach may also sit at a leaf, and any leaf state
/// may instead consume an arbitrary blank subtree.  Projection needs this:
/// the erased track can force padding onto the remaining ones.
TreeAutomaton pad_close(TreeAutomaton a) {
  if (a.alphabet.width == 0) {
    // all width-0 trees stand for the one empty valuation: normalize to
    // the universal or the empty automaton
    TreeAutomaton r;
    r.alphabet = a.alphabet;
    if (!is_empty(a)) {
      r.num_states = 1;
      r.transitions.push_back(TreeAutomaton::Transition{0, "", 0, 0});
      r.leaf_states = {0};
      r.final_states = {0};
      r.deterministic = true;
    }
    return r;
  }
  const std::string blank(static_cast<std::size_t>(a.alphabet.width), '#');
  std::set<int> reach = a.leaf_states;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : a.transitions)
      if (t.sym == blank && reach.count(t.left) && reach.count(t.right) &&
          reach.insert(t.parent).second)
        changed = true;
  }
  a.leaf_states.insert(reach.begin(), reach.end());
  int sink = a.num_states++;
  a.transitions.push_back(TreeAutomaton::Transition{sink, blank, sink, sink});
  for (int q : a.leaf_states)
    a.transitions.push_back(TreeAutomaton::Transition{q, blank, sink, sink});
  a.leaf_states.insert(sink);
  a.deterministic = false;
  return a;
}

/// Inserts unconstrained tracks so that `c` is over the sorted superset
/// `target` of its current order.
Compiled extend(Compiled c, const std::vector<std::string>& target) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (i < c.order.size() && c.order[i] == target[i]) continue;
    c.automaton = cylindrify(c.automaton, static_cast<int>(i));
    c.order.insert(c.order.begin() + static_cast<std::ptrdiff_t>(i), target[i]);
  }
  return c;
}

/// Builds a compiled node from an atom automaton whose tracks are the
/// (possibly repeated) argument list: merges repeats, sorts the tracks.
Compiled align_atom(TreeAutomaton a, std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size();) {
      if (vars[j] == vars[i]) {
        a = merge_tracks(a, static_cast<int>(i), static_cast<int>(j));
        vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }
  std::vector<std::string> target = vars;
  std::sort(target.begin(), target.end());
  std::vector<int> perm;
  for (const auto& v : target)
    perm.push_back(static_cast<int>(
        std::find(vars.begin(), vars.end(), v) - vars.begin()));
  return Compiled{permute_tracks(a, perm), std::move(target)};
}

Compiled compile_node(const Formula& f, Ctx& c);

Compiled compile_atom(const Formula& f, Ctx& c) {
  const int k = c.opts.level;
  TreeAutomaton a;
  switch (f.atom) {
    case AtomKind::Plus:
      a = addition_automaton(k);
      break;
    case AtomKind::Eq:
      a = equal_automaton(k);
      break;
    case AtomKind::Lt:
      a = less_automaton(k);
      break;
    case AtomKind::Leq:
      a = less_equal_automaton(k);
      break;
    case AtomKind::Erel:
      a = erel_automaton(k);
      break;
    case AtomKind::EqConst:
      a = constant_automaton(f.constant, k);
      break;
  }
  Compiled out = align_atom(std::move(a), f.args);
  out.automaton = trim(out.automaton);
  note(c, out.automaton, f);
  return out;
}

Compiled compile_binary(const Formula& f, Ctx& c) {
  Compiled a = compile_node(*f.lhs, c);
  Compiled b = compile_node(*f.rhs, c);
  std::vector<std::string> target;
  std::set_union(a.order.begin(), a.order.end(), b.order.begin(),
                 b.order.end(), std::back_inserter(target));
  a = extend(std::move(a), target);
  b = extend(std::move(b), target);
  Connective op = f.kind == Formula::Kind::And       ? Connective::AND
                  : f.kind == Formula::Kind::Or      ? Connective::OR
                  : f.kind == Formula::Kind::Implies ? Connective::IMPLIES
                                                     : Connective::IFF;
  TreeAutomaton prod;
  if (op == Connective::IMPLIES || op == Connective::IFF) {
    TreeAutomaton universe = universe_automaton(
        c.opts.level, static_cast<int>(target.size()));
    prod = relative_product(a.automaton, b.automaton, op, universe,
                            c.opts.max_states);
  } else {
    prod = trim(product(a.automaton, b.automaton, op, c.opts.max_states));
  }
  Compiled out{std::move(prod), std::move(target)};
  note(c, out.automaton, f);
  return out;
}

Compiled compile_node(const Formula& f, Ctx& c) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return compile_atom(f, c);
    case Formula::Kind::Not: {
      Compiled body = compile_node(*f.lhs, c);
      TreeAutomaton universe = universe_automaton(
          c.opts.level, static_cast<int>(body.order.size()));
      Compiled out{complement(body.automaton, universe, c.opts.max_states),
                   std::move(body.order)};
      note(c, out.automaton, f);
      return out;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return compile_binary(f, c);
    case Formula::Kind::Exists: {
      Compiled body = compile_node(*f.lhs, c);
      auto it = std::find(body.order.begin(), body.order.end(), f.var);
      if (it == body.order.end()) return body;  // vacuous quantifier
      int track = static_cast<int>(it - body.order.begin());
      int width = static_cast<int>(body.order.size());
      std::vector<int> perm;
      for (int i = 0; i < width; ++i)
        if (i != track) perm.push_back(i);
      perm.push_back(track);
      TreeAutomaton a = permute_tracks(body.automaton, perm);
      a = trim(pad_close(project(a, width - 1)));
      body.order.erase(it);
      Compiled out{std::move(a), std::move(body.order)};
      note(c, out.automaton, f);
      return out;
    }
    case Formula::Kind::Forall: {
      // forall is an abbreviation of !exists!
      FormulaPtr desugared = make_not(
          make_quantifier(Formula::Kind::Exists, f.var, make_not(f.lhs)));
      return compile_node(*desugared, c);
    }
  }
  throw std::logic_error("unreachable");
}

/// Rewrites -> and <-> into !, &, | (cross-check path).
FormulaPtr rewrite_implications(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return std::make_shared<Formula>(f);
    case Formula::Kind::Not:
      return make_not(rewrite_implications(*f.lhs));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return make_quantifier(f.kind, f.var, rewrite_implications(*f.lhs));
    case Formula::Kind::Implies:
      return make_binary(Formula::Kind::Or, make_not(rewrite_implications(*f.lhs)),
                         rewrite_implications(*f.rhs));
    case Formula::Kind::Iff: {
      FormulaPtr a = rewrite_implications(*f.lhs);
      FormulaPtr b = rewrite_implications(*f.rhs);
      return make_binary(Formula::Kind::Or,
                         make_binary(Formula::Kind::And, a, b),
                         make_binary(Formula::Kind::And, make_not(a),
                                     make_not(b)));
    }
    default:
      return make_binary(f.kind, rewrite_implications(*f.lhs),
                         rewrite_implications(*f.rhs));
  }
}

}  // namespace

Compiled compile(const Formula& f, const CompileOptions& opts,
                 CompileStats* stats) {
  Ctx c{opts, stats};
  if (opts.rewrite_implications) {
    FormulaPtr g = rewrite_implications(f);
    return compile_node(*g, c);
  }
  return compile_node(f, c);
}

bool decide(const Formula& f, const CompileOptions& opts) {
  if (!f.free_vars.empty()) {
    std::string names;
    for (const auto& v : f.free_vars) names += (names.empty() ? "" : ", ") + v;
    throw UnboundVariable("sentence has free variables: " + names);
  }
  return !is_empty(compile(f, opts).automaton);
}

std::optional<Valuation> find_witness(const Formula& f,
                                      const CompileOptions& opts) {
  Compiled c = compile(f, opts);
  std::optional<LabeledTree> t = witness(c.automaton);
  if (!t) return std::nullopt;
  Valuation v;
  std::vector<LabeledTree> tracks;
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    LabeledTree track = project_component(*t, static_cast<int>(i));
    v[c.order[i]] = decode(track, opts.level);
    tracks.push_back(encode(v[c.order[i]], opts.level));
  }
  if (!c.order.empty() && !accepts(c.automaton, convolve(tracks)))
    throw std::logic_error("witness valuation failed re-verification");
  return v;
}

}  // namespace ordac
