#include "ordac/automaton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace ordac {

std::vector<std::string> Alphabet::symbols() const {
  std::vector<std::string> out{""};
  for (int i = 0; i < width; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * base.size());
    for (const auto& s : out)
      for (char c : base) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

bool Alphabet::contains(const std::string& sym) const {
  if (static_cast<int>(sym.size()) != width) return false;
  for (char c : sym)
    if (base.find(c) == std::string::npos) return false;
  return true;
}

void TreeAutomaton::check() const {
  auto ok_state = [&](int q) { return q >= 0 && q < num_states; };
  for (const auto& t : transitions) {
    if (!ok_state(t.parent) || !ok_state(t.left) || !ok_state(t.right))
      throw std::logic_error("transition references unknown state");
    if (!alphabet.contains(t.sym))
      throw AlphabetMismatch("transition symbol not in alphabet: '" + t.sym +
                             "'");
  }
  for (int q : leaf_states)
    if (!ok_state(q)) throw std::logic_error("leaf state out of range");
  for (int q : final_states)
    if (!ok_state(q)) throw std::logic_error("final state out of range");
}

// ---------------------------------------------------------------------------
// membership

namespace {

using SymIndex =
    std::unordered_map<std::string, std::vector<const TreeAutomaton::Transition*>>;

SymIndex index_by_symbol(const TreeAutomaton& a) {
  SymIndex idx;
  for (const auto& t : a.transitions) idx[t.sym].push_back(&t);
  return idx;
}

}  // namespace

bool accepts(const TreeAutomaton& a, const LabeledTree& t, Run* run_out) {
  if (static_cast<int>(t.node(t.root()).label.size()) != a.alphabet.width)
    throw AlphabetMismatch("tree width does not match automaton alphabet");
  SymIndex idx = index_by_symbol(a);
  std::vector<std::vector<char>> states(t.size(),
                                        std::vector<char>(a.num_states, 0));
  // choice[n][q] remembers one (transition) deriving q at node n
  std::vector<std::vector<const TreeAutomaton::Transition*>> choice;
  if (run_out)
    choice.assign(t.size(), std::vector<const TreeAutomaton::Transition*>(
                                a.num_states, nullptr));

  std::function<void(int)> go = [&](int n) {
    const auto& node = t.node(n);
    if (t.is_leaf(n)) {
      for (int q : a.leaf_states) states[n][q] = 1;
      return;
    }
    go(node.left);
    go(node.right);
    if (!a.alphabet.contains(node.label))
      throw AlphabetMismatch("tree label not in alphabet: '" + node.label +
                             "'");
    auto it = idx.find(node.label);
    if (it == idx.end()) return;
    int count = 0;
    for (const auto* tr : it->second) {
      if (states[node.left][tr->left] && states[node.right][tr->right]) {
        if (!states[n][tr->parent]) {
          states[n][tr->parent] = 1;
          ++count;
          if (run_out) choice[n][tr->parent] = tr;
        }
      }
    }
    if (a.deterministic && count > 1)
      throw std::logic_error("deterministic automaton produced multiple states");
  };
  go(t.root());

  int root_final = -1;
  for (int q : a.final_states)
    if (states[t.root()][q]) {
      root_final = q;
      break;
    }
  if (root_final < 0) return false;
  if (run_out) {
    run_out->state.assign(t.size(), -1);
    std::function<void(int, int)> fill = [&](int n, int q) {
      run_out->state[static_cast<std::size_t>(n)] = q;
      if (t.is_leaf(n)) return;
      const auto* tr = choice[n][q];
      fill(t.node(n).left, tr->left);
      fill(t.node(n).right, tr->right);
    };
    fill(t.root(), root_final);
  }
  return true;
}

// ---------------------------------------------------------------------------
// determinization

namespace {

using Subset = std::vector<int>;  // sorted state list

}  // namespace

TreeAutomaton determinize(const TreeAutomaton& a, std::size_t max_states) {
  if (a.deterministic) return a;
  std::vector<std::vector<const TreeAutomaton::Transition*>> by_left(
      static_cast<std::size_t>(a.num_states));
  for (const auto& t : a.transitions)
    by_left[static_cast<std::size_t>(t.left)].push_back(&t);

  std::map<Subset, int> id;
  std::vector<Subset> subsets;
  auto intern = [&](Subset s) {
    auto [it, fresh] = id.emplace(std::move(s), static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      if (subsets.size() > max_states)
        throw ResourceBudgetExceeded("determinize", subsets.size(), max_states);
    }
    return it->second;
  };

  Subset leaf(a.leaf_states.begin(), a.leaf_states.end());
  int leaf_id = intern(std::move(leaf));

  TreeAutomaton d;
  d.alphabet = a.alphabet;
  d.leaf_states = {leaf_id};
  d.deterministic = true;

  // The result is left incomplete: configurations with no successor stand
  // for the empty subset.  complement / relative_product reintroduce the
  // implicit sink where stuck runs matter.
  std::vector<char> in_right(static_cast<std::size_t>(a.num_states));
  std::size_t done = 0;  // pairs with both indices < done are processed
  while (done < subsets.size()) {
    std::size_t upto = subsets.size();
    for (std::size_t l = 0; l < upto; ++l) {
      for (std::size_t r = 0; r < upto; ++r) {
        if (l < done && r < done) continue;
        std::fill(in_right.begin(), in_right.end(), 0);
        for (int q : subsets[r]) in_right[static_cast<std::size_t>(q)] = 1;
        std::vector<std::pair<std::string, int>> hits;
        for (int q : subsets[l])
          for (const auto* tr : by_left[static_cast<std::size_t>(q)])
            if (in_right[static_cast<std::size_t>(tr->right)])
              hits.emplace_back(tr->sym, tr->parent);
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (std::size_t i = 0; i < hits.size();) {
          std::size_t j = i;
          Subset parents;
          while (j < hits.size() && hits[j].first == hits[i].first)
            parents.push_back(hits[j++].second);
          int p = intern(std::move(parents));
          d.transitions.push_back(TreeAutomaton::Transition{
              p, hits[i].first, static_cast<int>(l), static_cast<int>(r)});
          i = j;
        }
      }
    }
    done = upto;
  }

  d.num_states = static_cast<int>(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s)
    for (int q : subsets[s])
      if (a.final_states.count(q)) {
        d.final_states.insert(static_cast<int>(s));
        break;
      }
  std::sort(d.transitions.begin(), d.transitions.end());
  d.transitions.erase(std::unique(d.transitions.begin(), d.transitions.end()),
                      d.transitions.end());
  return d;
}

// ---------------------------------------------------------------------------
// relativized boolean combinations

namespace {

/// Deterministic successor lookup with an implicit sink for stuck runs.
struct DetLookup {
  TreeAutomaton det;
  int sink;
  std::map<std::tuple<int, int, std::string>, int> table;

  DetLookup(const TreeAutomaton& a, std::size_t max_states)
      : det(determinize(a, max_states)), sink(det.num_states) {
    if (det.leaf_states.size() != 1) {
      // a pre-flagged deterministic input may carry several leaf states;
      // the lookup needs a unique run, so rebuild via subset construction
      TreeAutomaton n = det;
      n.deterministic = false;
      det = determinize(n, max_states);
      sink = det.num_states;
    }
    for (const auto& t : det.transitions)
      table.emplace(std::tuple(t.left, t.right, t.sym), t.parent);
  }

  int leaf() const { return *det.leaf_states.begin(); }
  int next(int l, int r, const std::string& sym) const {
    if (l == sink || r == sink) return sink;
    auto it = table.find(std::tuple(l, r, sym));
    return it == table.end() ? sink : it->second;
  }
  bool is_final(int q) const { return q != sink && det.final_states.count(q); }
};

TreeAutomaton relative_combine(const TreeAutomaton* a, const TreeAutomaton* b,
                               const std::function<bool(bool, bool)>& truth,
                               const TreeAutomaton& universe,
                               std::size_t max_states) {
  std::optional<DetLookup> A, B;
  if (a) {
    if (a->alphabet != universe.alphabet)
      throw AlphabetMismatch("relative combination: alphabets differ");
    A.emplace(*a, max_states);
  }
  if (b) {
    if (b->alphabet != universe.alphabet)
      throw AlphabetMismatch("relative combination: alphabets differ");
    B.emplace(*b, max_states);
  }

  using Trip = std::tuple<int, int, int>;  // (universe, A, B); -1 if absent
  std::map<Trip, int> id;
  std::vector<Trip> trips;
  auto intern = [&](int qu, int qa, int qb) {
    auto [it, fresh] =
        id.emplace(Trip(qu, qa, qb), static_cast<int>(trips.size()));
    if (fresh) {
      trips.emplace_back(qu, qa, qb);
      if (trips.size() > max_states)
        throw ResourceBudgetExceeded("relative combination", trips.size(),
                                     max_states);
    }
    return it->second;
  };

  TreeAutomaton p;
  p.alphabet = universe.alphabet;
  for (int qu : universe.leaf_states)
    p.leaf_states.insert(
        intern(qu, A ? A->leaf() : -1, B ? B->leaf() : -1));

  std::vector<std::vector<const TreeAutomaton::Transition*>> u_by_left(
      static_cast<std::size_t>(universe.num_states));
  for (const auto& t : universe.transitions)
    u_by_left[static_cast<std::size_t>(t.left)].push_back(&t);

  std::size_t done = 0;
  while (done < trips.size()) {
    std::size_t upto = trips.size();
    for (std::size_t l = 0; l < upto; ++l) {
      for (std::size_t r = 0; r < upto; ++r) {
        if (l < done && r < done) continue;
        auto [ul, la, lb] = trips[l];
        auto [ur, ra, rb] = trips[r];
        for (const auto* tr : u_by_left[static_cast<std::size_t>(ul)]) {
          if (tr->right != ur) continue;
          int pa = A ? A->next(la, ra, tr->sym) : -1;
          int pb = B ? B->next(lb, rb, tr->sym) : -1;
          int parent = intern(tr->parent, pa, pb);
          p.transitions.push_back(TreeAutomaton::Transition{
              parent, tr->sym, static_cast<int>(l), static_cast<int>(r)});
        }
      }
    }
    done = upto;
  }

  p.num_states = static_cast<int>(trips.size());
  for (int s = 0; s < p.num_states; ++s) {
    auto [qu, qa, qb] = trips[static_cast<std::size_t>(s)];
    if (!universe.final_states.count(qu)) continue;
    if (truth(A && A->is_final(qa), B && B->is_final(qb)))
      p.final_states.insert(s);
  }
  std::sort(p.transitions.begin(), p.transitions.end());
  p.transitions.erase(std::unique(p.transitions.begin(), p.transitions.end()),
                      p.transitions.end());
  return trim(p);
}

}  // namespace

TreeAutomaton complement(const TreeAutomaton& a, const TreeAutomaton& universe,
                         std::size_t max_states) {
  return relative_combine(
      &a, nullptr, [](bool x, bool) { return !x; }, universe, max_states);
}

TreeAutomaton relative_product(const TreeAutomaton& a, const TreeAutomaton& b,
                               Connective op, const TreeAutomaton& universe,
                               std::size_t max_states) {
  auto truth = [op](bool x, bool y) {
    switch (op) {
      case Connective::AND: return x && y;
      case Connective::OR: return x || y;
      case Connective::IMPLIES: return !x || y;
      case Connective::IFF: return x == y;
    }
    return false;
  };
  return relative_combine(&a, &b, truth, universe, max_states);
}

// ---------------------------------------------------------------------------
// product

TreeAutomaton product(const TreeAutomaton& a_in, const TreeAutomaton& b_in,
                      Connective op, std::size_t max_states) {
  if (a_in.alphabet != b_in.alphabet)
    throw AlphabetMismatch("product: alphabets differ");
  if (op == Connective::OR) {
    // a pair product would lose trees on which one side has no run at
    // all; nondeterministic union is simply the disjoint sum
    TreeAutomaton u;
    u.alphabet = a_in.alphabet;
    u.num_states = a_in.num_states + b_in.num_states;
    u.transitions = a_in.transitions;
    const int off = a_in.num_states;
    for (const auto& t : b_in.transitions)
      u.transitions.push_back(TreeAutomaton::Transition{
          t.parent + off, t.sym, t.left + off, t.right + off});
    u.leaf_states = a_in.leaf_states;
    u.final_states = a_in.final_states;
    for (int q : b_in.leaf_states) u.leaf_states.insert(q + off);
    for (int q : b_in.final_states) u.final_states.insert(q + off);
    if (u.leaf_states.size() > max_states ||
        static_cast<std::size_t>(u.num_states) > max_states)
      throw ResourceBudgetExceeded("union", static_cast<std::size_t>(u.num_states),
                                   max_states);
    std::sort(u.transitions.begin(), u.transitions.end());
    return u;
  }
  // IMPLIES/IFF need the complement of a side, so a lost run must reach an
  // explicit sink: determinize, then fill every missing configuration.
  const bool need_det = (op == Connective::IMPLIES || op == Connective::IFF);
  auto complete = [max_states](const TreeAutomaton& in) {
    TreeAutomaton d = determinize(in, max_states);
    std::set<std::tuple<int, int, std::string>> have;
    for (const auto& t : d.transitions)
      have.emplace(t.left, t.right, t.sym);
    const int sink = d.num_states++;
    for (const auto& sym : d.alphabet.symbols())
      for (int l = 0; l < d.num_states; ++l)
        for (int r = 0; r < d.num_states; ++r)
          if (l == sink || r == sink || !have.count({l, r, sym}))
            d.transitions.push_back(TreeAutomaton::Transition{sink, sym, l, r});
    return d;
  };
  TreeAutomaton a_store, b_store;
  const TreeAutomaton* ap = &a_in;
  const TreeAutomaton* bp = &b_in;
  if (need_det) {
    a_store = complete(a_in);
    ap = &a_store;
    b_store = complete(b_in);
    bp = &b_store;
  }
  const TreeAutomaton& A = *ap;
  const TreeAutomaton& B = *bp;

  std::map<std::pair<int, int>, std::vector<const TreeAutomaton::Transition*>>
      a_by_children;
  for (const auto& t : A.transitions)
    a_by_children[{t.left, t.right}].push_back(&t);
  std::map<std::tuple<int, int, std::string>,
           std::vector<const TreeAutomaton::Transition*>>
      b_by_config;
  for (const auto& t : B.transitions)
    b_by_config[{t.left, t.right, t.sym}].push_back(&t);

  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](int qa, int qb) {
    auto [it, fresh] =
        id.emplace(std::make_pair(qa, qb), static_cast<int>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(qa, qb);
      if (pairs.size() > max_states)
        throw ResourceBudgetExceeded("product", pairs.size(), max_states);
    }
    return it->second;
  };

  TreeAutomaton p;
  p.alphabet = A.alphabet;
  p.deterministic = A.deterministic && B.deterministic;
  for (int qa : A.leaf_states)
    for (int qb : B.leaf_states) p.leaf_states.insert(intern(qa, qb));

  std::size_t done = 0;
  while (done < pairs.size()) {
    std::size_t upto = pairs.size();
    for (std::size_t l = 0; l < upto; ++l) {
      for (std::size_t r = 0; r < upto; ++r) {
        if (l < done && r < done) continue;
        auto [la, lb] = pairs[l];
        auto [ra, rb] = pairs[r];
        auto ita = a_by_children.find({la, ra});
        if (ita == a_by_children.end()) continue;
        for (const auto* ta : ita->second) {
          auto itb = b_by_config.find({lb, rb, ta->sym});
          if (itb == b_by_config.end()) continue;
          for (const auto* tb : itb->second) {
            int parent = intern(ta->parent, tb->parent);
            p.transitions.push_back(TreeAutomaton::Transition{
                parent, ta->sym, static_cast<int>(l), static_cast<int>(r)});
          }
        }
      }
    }
    done = upto;
  }

  p.num_states = static_cast<int>(pairs.size());
  auto truth = [op](bool x, bool y) {
    switch (op) {
      case Connective::AND: return x && y;
      case Connective::OR: return x || y;
      case Connective::IMPLIES: return !x || y;
      case Connective::IFF: return x == y;
    }
    return false;
  };
  for (int s = 0; s < p.num_states; ++s) {
    auto [qa, qb] = pairs[static_cast<std::size_t>(s)];
    if (truth(A.final_states.count(qa) > 0, B.final_states.count(qb) > 0))
      p.final_states.insert(s);
  }
  std::sort(p.transitions.begin(), p.transitions.end());
  p.transitions.erase(std::unique(p.transitions.begin(), p.transitions.end()),
                      p.transitions.end());
  return p;
}

// ---------------------------------------------------------------------------
// track operations

TreeAutomaton project(const TreeAutomaton& a, int component) {
  if (a.alphabet.width < 1 || component < 0 || component >= a.alphabet.width)
    throw std::out_of_range("project: bad component index");
  TreeAutomaton r = a;
  r.alphabet.width = a.alphabet.width - 1;
  for (auto& t : r.transitions)
    t.sym.erase(static_cast<std::size_t>(component), 1);
  r.deterministic = false;
  std::sort(r.transitions.begin(), r.transitions.end());
  r.transitions.erase(std::unique(r.transitions.begin(), r.transitions.end()),
                      r.transitions.end());
  return r;
}

TreeAutomaton cylindrify(const TreeAutomaton& a, int at) {
  if (at < 0 || at > a.alphabet.width)
    throw std::out_of_range("cylindrify: bad index");
  TreeAutomaton r = a;
  r.alphabet.width = a.alphabet.width + 1;
  r.transitions.clear();
  for (const auto& t : a.transitions)
    for (char c : a.alphabet.base) {
      std::string sym = t.sym;
      sym.insert(static_cast<std::size_t>(at), 1, c);
      r.transitions.push_back(
          TreeAutomaton::Transition{t.parent, std::move(sym), t.left, t.right});
    }
  std::sort(r.transitions.begin(), r.transitions.end());
  return r;
}

TreeAutomaton permute_tracks(const TreeAutomaton& a,
                             const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.alphabet.width)
    throw std::out_of_range("permute_tracks: bad permutation size");
  TreeAutomaton r = a;
  for (auto& t : r.transitions) {
    std::string sym(t.sym.size(), ' ');
    for (std::size_t i = 0; i < perm.size(); ++i)
      sym[i] = t.sym[static_cast<std::size_t>(perm[i])];
    t.sym = std::move(sym);
  }
  std::sort(r.transitions.begin(), r.transitions.end());
  return r;
}

TreeAutomaton merge_tracks(const TreeAutomaton& a, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= a.alphabet.width ||
      j >= a.alphabet.width)
    throw std::out_of_range("merge_tracks: bad indices");
  TreeAutomaton r = a;
  r.alphabet.width = a.alphabet.width - 1;
  r.transitions.clear();
  for (const auto& t : a.transitions) {
    if (t.sym[static_cast<std::size_t>(i)] != t.sym[static_cast<std::size_t>(j)])
      continue;
    std::string sym = t.sym;
    sym.erase(static_cast<std::size_t>(j), 1);
    r.transitions.push_back(
        TreeAutomaton::Transition{t.parent, std::move(sym), t.left, t.right});
  }
  r.deterministic = false;
  std::sort(r.transitions.begin(), r.transitions.end());
  r.transitions.erase(std::unique(r.transitions.begin(), r.transitions.end()),
                      r.transitions.end());
  return r;
}

// ---------------------------------------------------------------------------
// emptiness, witness, trim

namespace {

struct Mark {
  int height = -1;  // -1: unreachable
  std::string sym;  // best deriving transition (empty for leaves)
  int left = -1, right = -1;
};

std::vector<Mark> mark_reachable(const TreeAutomaton& a) {
  std::vector<Mark> m(static_cast<std::size_t>(a.num_states));
  for (int q : a.leaf_states) m[static_cast<std::size_t>(q)].height = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : a.transitions) {
      const Mark& l = m[static_cast<std::size_t>(t.left)];
      const Mark& r = m[static_cast<std::size_t>(t.right)];
      if (l.height < 0 || r.height < 0) continue;
      int h = 1 + std::max(l.height, r.height);
      Mark& p = m[static_cast<std::size_t>(t.parent)];
      bool better =
          p.height < 0 || h < p.height ||
          (h == p.height &&
           (t.sym < p.sym ||
            (t.sym == p.sym && std::pair(t.left, t.right) <
                                   std::pair(p.left, p.right))));
      if (better) {
        p = Mark{h, t.sym, t.left, t.right};
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace

bool is_empty(const TreeAutomaton& a) {
  auto m = mark_reachable(a);
  for (int q : a.final_states)
    if (m[static_cast<std::size_t>(q)].height >= 0) return false;
  return true;
}

std::optional<LabeledTree> witness(const TreeAutomaton& a) {
  auto m = mark_reachable(a);
  int best = -1;
  for (int q : a.final_states) {
    const Mark& mk = m[static_cast<std::size_t>(q)];
    if (mk.height < 0) continue;
    if (best < 0 || mk.height < m[static_cast<std::size_t>(best)].height)
      best = q;
  }
  if (best < 0) return std::nullopt;
  std::string leaf_label =
      a.alphabet.width == 0
          ? std::string()
          : std::string(static_cast<std::size_t>(a.alphabet.width),
                        a.alphabet.base.front());
  LabeledTree arena;
  std::function<int(int)> build = [&](int q) -> int {
    const Mark& mk = m[static_cast<std::size_t>(q)];
    if (mk.height == 0 && a.leaf_states.count(q)) return arena.add_leaf(leaf_label);
    int l = build(mk.left);
    int r = build(mk.right);
    return arena.add_node(mk.sym, l, r);
  };
  int root = build(best);
  return LabeledTree::built(std::move(arena), root);
}

TreeAutomaton trim(const TreeAutomaton& a) {
  auto m = mark_reachable(a);
  std::vector<char> reach(static_cast<std::size_t>(a.num_states), 0);
  for (int q = 0; q < a.num_states; ++q)
    reach[static_cast<std::size_t>(q)] = m[static_cast<std::size_t>(q)].height >= 0;

  std::vector<char> co(static_cast<std::size_t>(a.num_states), 0);
  for (int q : a.final_states)
    if (reach[static_cast<std::size_t>(q)]) co[static_cast<std::size_t>(q)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : a.transitions) {
      if (!co[static_cast<std::size_t>(t.parent)]) continue;
      if (!reach[static_cast<std::size_t>(t.left)] ||
          !reach[static_cast<std::size_t>(t.right)])
        continue;
      for (int c : {t.left, t.right})
        if (!co[static_cast<std::size_t>(c)]) {
          co[static_cast<std::size_t>(c)] = 1;
          changed = true;
        }
    }
  }

  std::vector<int> remap(static_cast<std::size_t>(a.num_states), -1);
  int next = 0;
  for (int q = 0; q < a.num_states; ++q)
    if (reach[static_cast<std::size_t>(q)] && co[static_cast<std::size_t>(q)])
      remap[static_cast<std::size_t>(q)] = next++;

  TreeAutomaton r;
  r.alphabet = a.alphabet;
  r.num_states = next;
  r.deterministic = false;  // completeness is lost by trimming
  for (const auto& t : a.transitions) {
    int p = remap[static_cast<std::size_t>(t.parent)];
    int l = remap[static_cast<std::size_t>(t.left)];
    int rr = remap[static_cast<std::size_t>(t.right)];
    if (p >= 0 && l >= 0 && rr >= 0)
      r.transitions.push_back(TreeAutomaton::Transition{p, t.sym, l, rr});
  }
  for (int q : a.leaf_states)
    if (remap[static_cast<std::size_t>(q)] >= 0)
      r.leaf_states.insert(remap[static_cast<std::size_t>(q)]);
  for (int q : a.final_states)
    if (remap[static_cast<std::size_t>(q)] >= 0)
      r.final_states.insert(remap[static_cast<std::size_t>(q)]);
  std::sort(r.transitions.begin(), r.transitions.end());
  return r;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

// empty symbols (width 0) are stored as "_"
std::string sym_out(const std::string& s) { return s.empty() ? "_" : s; }
std::string sym_in(const std::string& s) { return s == "_" ? "" : s; }

}  // namespace

std::string serialize(const TreeAutomaton& a) {
  std::ostringstream os;
  os << "ordac-automaton v1\n";
  os << "base " << (a.alphabet.base.empty() ? "_" : a.alphabet.base) << "\n";
  os << "width " << a.alphabet.width << "\n";
  os << "states " << a.num_states << "\n";
  os << "deterministic " << (a.deterministic ? 1 : 0) << "\n";
  os << "leaf";
  for (int q : a.leaf_states) os << ' ' << q;
  os << "\nfinal";
  for (int q : a.final_states) os << ' ' << q;
  os << "\n";
  auto sorted = a.transitions;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& t : sorted)
    os << "trans " << t.parent << ' ' << sym_out(t.sym) << ' ' << t.left << ' '
       << t.right << "\n";
  return os.str();
}

TreeAutomaton deserialize(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "ordac-automaton v1")
    throw SyntaxError("bad automaton header", 0);
  TreeAutomaton a;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "base") {
      std::string b;
      ls >> b;
      a.alphabet.base = (b == "_" ? "" : b);
    } else if (key == "width") {
      ls >> a.alphabet.width;
    } else if (key == "states") {
      ls >> a.num_states;
    } else if (key == "deterministic") {
      int d;
      ls >> d;
      a.deterministic = d != 0;
    } else if (key == "leaf") {
      int q;
      while (ls >> q) a.leaf_states.insert(q);
    } else if (key == "final") {
      int q;
      while (ls >> q) a.final_states.insert(q);
    } else if (key == "trans") {
      TreeAutomaton::Transition t;
      std::string sym;
      if (!(ls >> t.parent >> sym >> t.left >> t.right))
        throw SyntaxError("bad transition line", lineno);
      t.sym = sym_in(sym);
      a.transitions.push_back(std::move(t));
    } else {
      throw SyntaxError("unknown automaton field: " + key, lineno);
    }
  }
  a.check();
  return a;
}

std::string automaton_to_dot(const TreeAutomaton& a,
                             const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int q = 0; q < a.num_states; ++q) {
    os << "  q" << q << " [shape=circle";
    if (a.final_states.count(q)) os << ", peripheries=2";
    if (a.leaf_states.count(q)) os << ", style=bold";
    os << "];\n";
  }
  auto sorted = a.transitions;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& t = sorted[i];
    os << "  t" << i << " [shape=box, label=\"" << sym_out(t.sym) << "\"];\n";
    os << "  q" << t.left << " -> t" << i << " [label=\"a\"];\n";
    os << "  q" << t.right << " -> t" << i << " [label=\"b\"];\n";
    os << "  t" << i << " -> q" << t.parent << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ordac
