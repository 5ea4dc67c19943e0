#pragma once

// Non-planar rooted trees and forests, labeled forests, and the calculus of
// admissible cuts on them.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhall/linear_combo.hpp"

namespace rhall {

/// Unlabeled rooted tree in canonical form: children are kept sorted by
/// their balanced-parenthesis encoding, so equal values mean isomorphic
/// trees.
class RootedTree {
 public:
  /// The one-vertex tree "()".
  RootedTree();
  /// Root with the given children, in any order.
  explicit RootedTree(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const { return children_; }
  std::size_t size() const { return size_; }
  const std::string& encoding() const { return encoding_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.encoding_ == b.encoding_;
  }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  std::vector<RootedTree> children_;
  std::size_t size_ = 1;
  std::string encoding_;
};

/// Multiset of rooted trees, stored sorted. The empty forest is the zero
/// object and is written "0".
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);

  const std::vector<RootedTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  /// Total vertex count, which is also the Hall-algebra degree.
  std::size_t size() const;
  std::string encoding() const;

  friend Forest operator+(const Forest& a, const Forest& b);  // disjoint union
  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest&, const Forest&) = default;

 private:
  std::vector<RootedTree> trees_;
};

/// Canonical form of a tree literal whose children may be in any order.
RootedTree canonicalize(std::string_view tree_literal);

/// All canonical trees with exactly n vertices, sorted by encoding.
std::vector<RootedTree> enumerate_trees(std::size_t n);
/// All forests with exactly n vertices, sorted by encoding.
std::vector<Forest> enumerate_forests(std::size_t n);

Integer aut_order(const RootedTree& tree);
/// Includes the permutations of isomorphic components.
Integer aut_order(const Forest& forest);

using Label = std::uint32_t;

/// Forest whose vertices carry pairwise distinct natural-number labels.
/// Components are ordered by root label.
class LabeledForest {
 public:
  LabeledForest() = default;
  /// (label, parent) pairs; throws InvalidArgument on duplicate labels,
  /// unknown parents or cycles.
  explicit LabeledForest(const std::vector<std::pair<Label, std::optional<Label>>>& vertices);

  /// Labels the canonical forest in preorder starting from `first_label`.
  static LabeledForest from_forest(const Forest& forest, Label first_label = 0);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool contains(Label v) const { return nodes_.count(v) != 0; }
  std::vector<Label> labels() const;
  const std::vector<Label>& roots() const { return roots_; }
  std::optional<Label> parent(Label v) const;
  const std::vector<Label>& children(Label v) const;
  /// v together with all of its descendants.
  std::vector<Label> subtree(Label v) const;
  Label root_of(Label v) const;
  /// True if `ancestor` lies on the path from v to its root (v excluded).
  bool is_proper_ancestor(Label ancestor, Label v) const;

  /// Sub-forest induced on a vertex subset; parents outside the subset make
  /// a vertex a root.
  LabeledForest induced(const std::set<Label>& vertices) const;

  RootedTree shape_of(Label root) const;
  Forest shape() const;

  /// Labeled literal such as "4(7(1,5),3(2,6))"; components separated by
  /// single spaces, "0" for the empty forest.
  std::string to_string() const;

  friend bool operator==(const LabeledForest& a, const LabeledForest& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  struct Node {
    std::optional<Label> parent;
    std::vector<Label> children;
    friend bool operator==(const Node&, const Node&) = default;
  };

  std::map<Label, Node> nodes_;
  std::vector<Label> roots_;
};

/// Admissible cut of one tree: an antichain of edges (an edge is named by
/// its child vertex) or the distinguished full cut.
class Cut {
 public:
  static Cut null() { return Cut(false, {}); }
  static Cut full() { return Cut(true, {}); }
  static Cut edges(std::vector<Label> child_vertices);

  bool is_full() const { return full_; }
  bool is_null() const { return !full_ && edges_.empty(); }
  const std::vector<Label>& edge_children() const { return edges_; }

  friend bool operator==(const Cut&, const Cut&) = default;
  friend auto operator<=>(const Cut&, const Cut&) = default;

 private:
  Cut(bool full, std::vector<Label> edges) : full_(full), edges_(std::move(edges)) {}

  bool full_ = false;
  std::vector<Label> edges_;
};

/// One Cut per component, in the forest's component order.
struct ForestCut {
  std::vector<Cut> components;

  static ForestCut null(const LabeledForest& f);
  static ForestCut full(const LabeledForest& f);

  /// "null", "full" or "{7,2}" per component, space separated.
  std::string to_string() const;

  friend bool operator==(const ForestCut&, const ForestCut&) = default;
  friend auto operator<=>(const ForestCut&, const ForestCut&) = default;
};

bool is_admissible(const LabeledForest& f, const ForestCut& c);

/// Every admissible cut, sorted.
std::vector<ForestCut> admissible_cuts(const LabeledForest& f);
std::vector<ForestCut> admissible_cuts(const Forest& f);

/// Vertex set of P_C(f). Admissible cuts correspond one-to-one with vertex
/// sets closed under taking descendants. Throws InvalidCut.
std::set<Label> branch_vertices(const LabeledForest& f, const ForestCut& c);
/// Inverse of branch_vertices. Throws InvalidCut if `vertices` is not
/// closed under taking descendants.
ForestCut cut_from_branch_vertices(const LabeledForest& f, const std::set<Label>& vertices);

struct CutPieces {
  LabeledForest branches;  // P_C
  LabeledForest trunk;     // R_C
};
CutPieces apply_cut(const LabeledForest& f, const ForestCut& c);
std::pair<Forest, Forest> apply_cut(const Forest& f, const ForestCut& c);

/// c1 <= c2 when the cut edges of c2 sit at or above those of c1, i.e.
/// P_{c1} is contained in P_{c2}. null is the bottom and full the top.
bool cut_leq(const LabeledForest& f, const ForestCut& c1, const ForestCut& c2);
/// Least upper bound: cut the edge closer to the root.
ForestCut cut_join(const LabeledForest& f, const ForestCut& c1, const ForestCut& c2);
/// Greatest lower bound: cut the edge farther from the root.
ForestCut cut_meet(const LabeledForest& f, const ForestCut& c1, const ForestCut& c2);

/// Cut induced by `cprime` on the subforest P_c(f), returned as a cut of
/// apply_cut(f, c).branches.
ForestCut induced_cut(const LabeledForest& f, const ForestCut& c, const ForestCut& cprime);

/// The cut e >= c with P_e(f) = P_c(f) + sub, where `sub` is a subforest of
/// R_c(f). Throws InvalidArgument if it is not.
ForestCut lift_subforest(const LabeledForest& f, const ForestCut& c, const LabeledForest& sub);

/// True iff the underlying unlabeled forests coincide.
bool is_isomorphic(const LabeledForest& a, const LabeledForest& b);

/// Root- and incidence-preserving bijection, keyed by source label.
using VertexMap = std::map<Label, Label>;

/// Every isomorphism a -> b (components may be permuted). Sorted.
std::vector<VertexMap> isomorphisms(const LabeledForest& a, const LabeledForest& b);

}  // namespace rhall
