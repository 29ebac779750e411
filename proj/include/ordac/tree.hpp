#ifndef ORDAC_TREE_HPP
#define ORDAC_TREE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ordac/errors.hpp"

namespace ordac {

/// A finite binary labeled tree where every node has 0 or 2 children.
/// Labels are strings of track characters; width-w tuple trees carry
/// w characters per node (width 0 uses the empty label).
///
/// Nodes live in an arena; `root` indexes it.  Child index -1 means leaf
/// (both children are -1 or neither is).
class LabeledTree {
 public:
  struct Node {
    std::string label;
    int left = -1;
    int right = -1;
  };

  static LabeledTree leaf(std::string label);

  const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  int root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  bool is_leaf(int i) const { return node(i).left < 0; }

  /// Number of characters per label (0 for width-0 trees).
  int width() const { return static_cast<int>(node(root_).label.size()); }

  int height() const { return height_of(root_); }
  int height_of(int i) const;

  bool operator==(const LabeledTree& other) const {
    return equal_at(root_, other, other.root_);
  }

  /// Builder: append nodes bottom-up, then seal with `built`.
  int add_leaf(std::string label);
  int add_node(std::string label, int left, int right);
  static LabeledTree built(LabeledTree arena, int root);

  std::string to_sexpr() const;
  static LabeledTree from_sexpr(std::string_view text);
  std::string to_dot(const std::string& graph_name = "tree") const;

 private:
  bool equal_at(int i, const LabeledTree& other, int j) const;

  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Superposes trees into one tuple tree: node set is the union, each
/// component reads its own label or '#' where its tree is absent.
LabeledTree convolve(const std::vector<LabeledTree>& trees);

/// Extracts component `i` of a tuple tree, collapsing maximal all-'#'
/// subtrees to single '#' leaves (minimal valid padding).
LabeledTree project_component(const LabeledTree& t, int i);

}  // namespace ordac

#endif
