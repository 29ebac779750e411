#include "ordac/tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ordac {

LabeledTree LabeledTree::leaf(std::string label) {
  LabeledTree t;
  int r = t.add_leaf(std::move(label));
  return built(std::move(t), r);
}

int LabeledTree::add_leaf(std::string label) {
  nodes_.push_back(Node{std::move(label), -1, -1});
  return static_cast<int>(nodes_.size()) - 1;
}

int LabeledTree::add_node(std::string label, int left, int right) {
  if ((left < 0) != (right < 0))
    throw std::logic_error("tree node must have 0 or 2 children");
  nodes_.push_back(Node{std::move(label), left, right});
  return static_cast<int>(nodes_.size()) - 1;
}

LabeledTree LabeledTree::built(LabeledTree arena, int root) {
  arena.root_ = root;
  return arena;
}

int LabeledTree::height_of(int i) const {
  const Node& n = node(i);
  if (n.left < 0) return 0;
  return 1 + std::max(height_of(n.left), height_of(n.right));
}

bool LabeledTree::equal_at(int i, const LabeledTree& other, int j) const {
  const Node& a = node(i);
  const Node& b = other.node(j);
  if (a.label != b.label) return false;
  if ((a.left < 0) != (b.left < 0)) return false;
  if (a.left < 0) return true;
  return equal_at(a.left, other, b.left) && equal_at(a.right, other, b.right);
}

std::string LabeledTree::to_sexpr() const {
  std::ostringstream os;
  std::function<void(int)> emit = [&](int i) {
    const Node& n = node(i);
    os << '(' << n.label;
    if (n.left < 0) {
      os << " () ()";
    } else {
      os << ' ';
      emit(n.left);
      os << ' ';
      emit(n.right);
    }
    os << ')';
  };
  emit(root_);
  return os.str();
}

namespace {

class SexprParser {
 public:
  explicit SexprParser(std::string_view s) : s_(s) {}

  LabeledTree parse() {
    LabeledTree arena;
    int root = parse_node(arena);
    if (root < 0) throw SyntaxError("tree may not be empty", 0);
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("trailing input after tree", pos_);
    return LabeledTree::built(std::move(arena), root);
  }

 private:
  // returns node index or -1 for "()"
  int parse_node(LabeledTree& arena) {
    skip_ws();
    expect('(');
    skip_ws();
    if (peek() == ')') {
      ++pos_;
      return -1;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::string label(s_.substr(start, pos_ - start));
    int left = parse_node(arena);
    int right = parse_node(arena);
    skip_ws();
    expect(')');
    if ((left < 0) != (right < 0))
      throw SyntaxError("node must have 0 or 2 children", start);
    if (left < 0) return arena.add_leaf(std::move(label));
    return arena.add_node(std::move(label), left, right);
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int peek() const {
    return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LabeledTree LabeledTree::from_sexpr(std::string_view text) {
  return SexprParser(text).parse();
}

std::string LabeledTree::to_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  node [shape=circle];\n";
  std::function<void(int)> emit = [&](int i) {
    const Node& n = node(i);
    os << "  n" << i << " [label=\"" << n.label << "\"];\n";
    if (n.left >= 0) {
      os << "  n" << i << " -> n" << n.left << " [label=\"a\"];\n";
      os << "  n" << i << " -> n" << n.right << " [label=\"b\"];\n";
      emit(n.left);
      emit(n.right);
    }
  };
  emit(root_);
  os << "}\n";
  return os.str();
}

namespace {

struct ConvPos {
  const LabeledTree* tree;  // may be null when this component ran out
  int node;                 // valid only when tree != null
};

bool all_absent_or_leaf(const std::vector<ConvPos>& ps) {
  for (const auto& p : ps)
    if (p.tree && !p.tree->is_leaf(p.node)) return false;
  return true;
}

int convolve_at(LabeledTree& arena, const std::vector<ConvPos>& ps) {
  std::string label;
  for (const auto& p : ps)
    label += p.tree ? p.tree->node(p.node).label : std::string("#");
  if (all_absent_or_leaf(ps)) return arena.add_leaf(std::move(label));
  std::vector<ConvPos> ls, rs;
  for (const auto& p : ps) {
    if (p.tree && !p.tree->is_leaf(p.node)) {
      ls.push_back(ConvPos{p.tree, p.tree->node(p.node).left});
      rs.push_back(ConvPos{p.tree, p.tree->node(p.node).right});
    } else {
      ls.push_back(ConvPos{nullptr, -1});
      rs.push_back(ConvPos{nullptr, -1});
    }
  }
  int l = convolve_at(arena, ls);
  int r = convolve_at(arena, rs);
  return arena.add_node(std::move(label), l, r);
}

}  // namespace

LabeledTree convolve(const std::vector<LabeledTree>& trees) {
  if (trees.empty()) throw std::logic_error("convolve needs at least one tree");
  std::vector<ConvPos> ps;
  for (const auto& t : trees) ps.push_back(ConvPos{&t, t.root()});
  LabeledTree arena;
  int root = convolve_at(arena, ps);
  return LabeledTree::built(std::move(arena), root);
}

namespace {

bool component_blank(const LabeledTree& t, int n, int i) {
  if (t.node(n).label.at(static_cast<std::size_t>(i)) != '#') return false;
  if (t.is_leaf(n)) return true;
  return component_blank(t, t.node(n).left, i) &&
         component_blank(t, t.node(n).right, i);
}

int project_at(LabeledTree& arena, const LabeledTree& t, int n, int i) {
  std::string label(1, t.node(n).label.at(static_cast<std::size_t>(i)));
  if (t.is_leaf(n)) return arena.add_leaf(std::move(label));
  if (component_blank(t, n, i)) return arena.add_leaf("#");
  int l = project_at(arena, t, t.node(n).left, i);
  int r = project_at(arena, t, t.node(n).right, i);
  return arena.add_node(std::move(label), l, r);
}

}  // namespace

LabeledTree project_component(const LabeledTree& t, int i) {
  if (i < 0 || i >= t.width())
    throw std::out_of_range("component index out of range");
  LabeledTree arena;
  if (component_blank(t, t.root(), i))
    return LabeledTree::leaf("#");
  int root = project_at(arena, t, t.root(), i);
  return LabeledTree::built(std::move(arena), root);
}

}  // namespace ordac
