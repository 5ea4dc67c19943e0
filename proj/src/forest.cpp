#include "rhall/forest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rhall/error.hpp"
#include "rhall/text.hpp"

namespace rhall {

RootedTree::RootedTree() : encoding_("()") {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  encoding_ = "(";
  for (const auto& child : children_) {
    size_ += child.size_;
    encoding_ += child.encoding_;
  }
  encoding_ += ")";
}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
}

std::size_t Forest::size() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.size();
  return n;
}

std::string Forest::encoding() const {
  if (trees_.empty()) return "0";
  std::string out;
  for (const auto& t : trees_) {
    if (!out.empty()) out += ' ';
    out += t.encoding();
  }
  return out;
}

Forest operator+(const Forest& a, const Forest& b) {
  std::vector<RootedTree> trees = a.trees_;
  trees.insert(trees.end(), b.trees_.begin(), b.trees_.end());
  return Forest(std::move(trees));
}

RootedTree canonicalize(std::string_view tree_literal) { return parse_tree(tree_literal); }

namespace {

// Multisets of trees drawn from `pool` (ordered) with total vertex count
// `total`, each returned as a non-decreasing index sequence.
void multisets(const std::vector<RootedTree>& pool, std::size_t total, std::size_t from,
               std::vector<RootedTree>& current, std::vector<std::vector<RootedTree>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i].size() > total) continue;
    current.push_back(pool[i]);
    multisets(pool, total - pool[i].size(), i, current, out);
    current.pop_back();
  }
}

// All trees with at most n vertices.
std::vector<RootedTree> tree_pool(std::size_t n) {
  std::vector<RootedTree> pool;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<RootedTree> prev(pool);
    std::vector<std::vector<RootedTree>> child_sets;
    std::vector<RootedTree> current;
    multisets(prev, k - 1, 0, current, child_sets);
    for (auto& children : child_sets) pool.emplace_back(std::move(children));
  }
  return pool;
}

}  // namespace

std::vector<RootedTree> enumerate_trees(std::size_t n) {
  std::vector<RootedTree> out;
  if (n == 0) return out;
  for (auto& t : tree_pool(n))
    if (t.size() == n) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests(std::size_t n) {
  std::vector<std::vector<RootedTree>> sets;
  std::vector<RootedTree> current;
  multisets(tree_pool(n), n, 0, current, sets);
  std::vector<Forest> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Integer factorial(std::size_t m) {
  Integer r = 1;
  for (std::size_t i = 2; i <= m; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

// Product over runs of equal items of aut(item)^m * m!; items are sorted.
Integer aut_of_sorted(const std::vector<RootedTree>& items) {
  Integer result = 1;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j] == items[i]) ++j;
    const Integer a = aut_order(items[i]);
    for (std::size_t k = i; k < j; ++k) result *= a;
    result *= factorial(j - i);
    i = j;
  }
  return result;
}

}  // namespace

Integer aut_order(const RootedTree& tree) { return aut_of_sorted(tree.children()); }

Integer aut_order(const Forest& forest) { return aut_of_sorted(forest.trees()); }

// ---------------------------------------------------------------------------
// LabeledForest

LabeledForest::LabeledForest(const std::vector<std::pair<Label, std::optional<Label>>>& vertices) {
  for (const auto& [label, parent] : vertices) {
    if (!nodes_.emplace(label, Node{parent, {}}).second)
      throw InvalidArgument("duplicate vertex label " + std::to_string(label));
  }
  for (auto& [label, node] : nodes_) {
    if (!node.parent) {
      roots_.push_back(label);
      continue;
    }
    auto it = nodes_.find(*node.parent);
    if (it == nodes_.end())
      throw InvalidArgument("vertex " + std::to_string(label) + " has unknown parent " +
                            std::to_string(*node.parent));
    it->second.children.push_back(label);
  }
  for (auto& [label, node] : nodes_) std::sort(node.children.begin(), node.children.end());
  // Every vertex must reach a root.
  for (const auto& [label, node] : nodes_) {
    Label v = label;
    std::size_t steps = 0;
    while (auto p = nodes_.at(v).parent) {
      v = *p;
      if (++steps > nodes_.size())
        throw InvalidArgument("parent relation has a cycle through " + std::to_string(label));
    }
  }
}

LabeledForest LabeledForest::from_forest(const Forest& forest, Label first_label) {
  std::vector<std::pair<Label, std::optional<Label>>> vertices;
  Label next = first_label;
  std::function<void(const RootedTree&, std::optional<Label>)> visit =
      [&](const RootedTree& t, std::optional<Label> parent) {
        const Label me = next++;
        vertices.emplace_back(me, parent);
        for (const auto& child : t.children()) visit(child, me);
      };
  for (const auto& t : forest.trees()) visit(t, std::nullopt);
  return LabeledForest(vertices);
}

std::vector<Label> LabeledForest::labels() const {
  std::vector<Label> out;
  out.reserve(nodes_.size());
  for (const auto& [label, node] : nodes_) out.push_back(label);
  return out;
}

std::optional<Label> LabeledForest::parent(Label v) const {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) throw InvalidArgument("unknown vertex " + std::to_string(v));
  return it->second.parent;
}

const std::vector<Label>& LabeledForest::children(Label v) const {
  auto it = nodes_.find(v);
  if (it == nodes_.end()) throw InvalidArgument("unknown vertex " + std::to_string(v));
  return it->second.children;
}

std::vector<Label> LabeledForest::subtree(Label v) const {
  std::vector<Label> out{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& kids = children(out[i]);
    out.insert(out.end(), kids.begin(), kids.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Label LabeledForest::root_of(Label v) const {
  while (auto p = parent(v)) v = *p;
  return v;
}

bool LabeledForest::is_proper_ancestor(Label ancestor, Label v) const {
  for (auto p = parent(v); p; p = parent(*p))
    if (*p == ancestor) return true;
  return false;
}

LabeledForest LabeledForest::induced(const std::set<Label>& vertices) const {
  std::vector<std::pair<Label, std::optional<Label>>> kept;
  for (Label v : vertices) {
    auto p = parent(v);
    kept.emplace_back(v, p && vertices.count(*p) ? p : std::nullopt);
  }
  return LabeledForest(kept);
}

RootedTree LabeledForest::shape_of(Label root) const {
  std::vector<RootedTree> kids;
  for (Label c : children(root)) kids.push_back(shape_of(c));
  return RootedTree(std::move(kids));
}

Forest LabeledForest::shape() const {
  std::vector<RootedTree> trees;
  for (Label r : roots_) trees.push_back(shape_of(r));
  return Forest(std::move(trees));
}

std::string LabeledForest::to_string() const {
  if (nodes_.empty()) return "0";
  std::function<void(Label, std::string&)> write = [&](Label v, std::string& out) {
    out += std::to_string(v);
    const auto& kids = children(v);
    if (kids.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      write(kids[i], out);
    }
    out += ')';
  };
  std::string out;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) out += ' ';
    write(roots_[i], out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cuts

Cut Cut::edges(std::vector<Label> child_vertices) {
  std::sort(child_vertices.begin(), child_vertices.end());
  child_vertices.erase(std::unique(child_vertices.begin(), child_vertices.end()),
                       child_vertices.end());
  return Cut(false, std::move(child_vertices));
}

ForestCut ForestCut::null(const LabeledForest& f) {
  return ForestCut{std::vector<Cut>(f.roots().size(), Cut::null())};
}

ForestCut ForestCut::full(const LabeledForest& f) {
  return ForestCut{std::vector<Cut>(f.roots().size(), Cut::full())};
}

std::string ForestCut::to_string() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += ' ';
    if (c.is_full()) {
      out += "full";
    } else if (c.is_null()) {
      out += "null";
    } else {
      out += '{';
      for (std::size_t i = 0; i < c.edge_children().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.edge_children()[i]);
      }
      out += '}';
    }
  }
  return out;
}

namespace {

std::string admissibility_problem(const LabeledForest& f, const ForestCut& c) {
  const auto& roots = f.roots();
  if (c.components.size() != roots.size())
    return "cut has " + std::to_string(c.components.size()) + " components, forest has " +
           std::to_string(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Cut& cut = c.components[i];
    if (cut.is_full()) continue;
    for (Label v : cut.edge_children()) {
      if (!f.contains(v) || f.root_of(v) != roots[i])
        return "edge above " + std::to_string(v) + " is not in component " + std::to_string(i);
      if (v == roots[i]) return "vertex " + std::to_string(v) + " is a root and has no edge above it";
      for (Label w : cut.edge_children())
        if (f.is_proper_ancestor(w, v))
          return "edges above " + std::to_string(w) + " and " + std::to_string(v) +
                 " lie on one root path (not an antichain)";
    }
  }
  return {};
}

// Antichains of edges strictly below v, each as a sorted list of child labels.
std::vector<std::vector<Label>> antichains_below(const LabeledForest& f, Label v) {
  std::vector<std::vector<Label>> acc{{}};
  for (Label c : f.children(v)) {
    std::vector<std::vector<Label>> options{{c}};
    for (auto& a : antichains_below(f, c)) options.push_back(std::move(a));
    std::vector<std::vector<Label>> next;
    for (const auto& left : acc)
      for (const auto& right : options) {
        auto merged = left;
        merged.insert(merged.end(), right.begin(), right.end());
        next.push_back(std::move(merged));
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

bool is_admissible(const LabeledForest& f, const ForestCut& c) {
  return admissibility_problem(f, c).empty();
}

std::vector<ForestCut> admissible_cuts(const LabeledForest& f) {
  std::vector<ForestCut> acc{ForestCut{}};
  for (Label root : f.roots()) {
    std::vector<Cut> options{Cut::full()};
    for (auto& a : antichains_below(f, root)) options.push_back(Cut::edges(std::move(a)));
    std::vector<ForestCut> next;
    next.reserve(acc.size() * options.size());
    for (const auto& prefix : acc)
      for (const auto& option : options) {
        ForestCut fc = prefix;
        fc.components.push_back(option);
        next.push_back(std::move(fc));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::vector<ForestCut> admissible_cuts(const Forest& f) {
  return admissible_cuts(LabeledForest::from_forest(f));
}

std::set<Label> branch_vertices(const LabeledForest& f, const ForestCut& c) {
  if (auto problem = admissibility_problem(f, c); !problem.empty()) throw InvalidCut(problem);
  std::set<Label> out;
  for (std::size_t i = 0; i < f.roots().size(); ++i) {
    const Cut& cut = c.components[i];
    if (cut.is_full()) {
      for (Label v : f.subtree(f.roots()[i])) out.insert(v);
    } else {
      for (Label e : cut.edge_children())
        for (Label v : f.subtree(e)) out.insert(v);
    }
  }
  return out;
}

ForestCut cut_from_branch_vertices(const LabeledForest& f, const std::set<Label>& vertices) {
  for (Label v : vertices) {
    if (!f.contains(v)) throw InvalidCut("vertex " + std::to_string(v) + " is not in the forest");
    for (Label c : f.children(v))
      if (!vertices.count(c))
        throw InvalidCut("vertex set is not closed under descendants at " + std::to_string(v));
  }
  ForestCut out;
  for (Label root : f.roots()) {
    if (vertices.count(root)) {
      out.components.push_back(Cut::full());
      continue;
    }
    std::vector<Label> edges;
    for (Label v : f.subtree(root))
      if (vertices.count(v) && !vertices.count(*f.parent(v))) edges.push_back(v);
    out.components.push_back(Cut::edges(std::move(edges)));
  }
  return out;
}

CutPieces apply_cut(const LabeledForest& f, const ForestCut& c) {
  const auto branches = branch_vertices(f, c);
  std::set<Label> rest;
  for (Label v : f.labels())
    if (!branches.count(v)) rest.insert(v);
  return CutPieces{f.induced(branches), f.induced(rest)};
}

std::pair<Forest, Forest> apply_cut(const Forest& f, const ForestCut& c) {
  const auto pieces = apply_cut(LabeledForest::from_forest(f), c);
  return {pieces.branches.shape(), pieces.trunk.shape()};
}

bool cut_leq(const LabeledForest& f, const ForestCut& c1, const ForestCut& c2) {
  const auto s1 = branch_vertices(f, c1);
  const auto s2 = branch_vertices(f, c2);
  return std::includes(s2.begin(), s2.end(), s1.begin(), s1.end());
}

ForestCut cut_join(const LabeledForest& f, const ForestCut& c1, const ForestCut& c2) {
  auto s = branch_vertices(f, c1);
  for (Label v : branch_vertices(f, c2)) s.insert(v);
  return cut_from_branch_vertices(f, s);
}

ForestCut cut_meet(const LabeledForest& f, const ForestCut& c1, const ForestCut& c2) {
  const auto s1 = branch_vertices(f, c1);
  const auto s2 = branch_vertices(f, c2);
  std::set<Label> s;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(s, s.end()));
  return cut_from_branch_vertices(f, s);
}

ForestCut induced_cut(const LabeledForest& f, const ForestCut& c, const ForestCut& cprime) {
  const auto sub = apply_cut(f, c).branches;
  return cut_from_branch_vertices(sub, branch_vertices(f, cut_meet(f, c, cprime)));
}

ForestCut lift_subforest(const LabeledForest& f, const ForestCut& c, const LabeledForest& sub) {
  const auto trunk = apply_cut(f, c).trunk;
  std::set<Label> extra;
  for (Label v : sub.labels()) {
    if (!trunk.contains(v))
      throw InvalidArgument("vertex " + std::to_string(v) + " is not in R_C of the forest");
    extra.insert(v);
  }
  if (!(trunk.induced(extra) == sub))
    throw InvalidArgument("structure of " + sub.to_string() + " differs from R_C");
  try {
    cut_from_branch_vertices(trunk, extra);
  } catch (const InvalidCut&) {
    throw InvalidArgument(sub.to_string() + " is not a subforest of " + trunk.to_string());
  }
  auto all = branch_vertices(f, c);
  all.insert(extra.begin(), extra.end());
  return cut_from_branch_vertices(f, all);
}

bool is_isomorphic(const LabeledForest& a, const LabeledForest& b) { return a.shape() == b.shape(); }

namespace {

struct IsoSearch {
  const LabeledForest& a;
  const LabeledForest& b;
  std::map<Label, std::string> code_a, code_b;
  std::vector<VertexMap> found;
  VertexMap current;

  using Group = std::pair<std::vector<Label>, std::vector<Label>>;

  void run(std::vector<Group> pending) {
    while (!pending.empty() && pending.back().first.empty()) pending.pop_back();
    if (pending.empty()) {
      found.push_back(current);
      return;
    }
    const Group& group = pending.back();
    const Label x = group.first.back();
    for (std::size_t j = 0; j < group.second.size(); ++j) {
      const Label y = group.second[j];
      if (code_a.at(x) != code_b.at(y)) continue;
      std::vector<Group> next = pending;
      next.back().first.pop_back();
      next.back().second.erase(next.back().second.begin() + static_cast<std::ptrdiff_t>(j));
      next.emplace_back(a.children(x), b.children(y));
      current[x] = y;
      run(std::move(next));
      current.erase(x);
    }
  }
};

}  // namespace

std::vector<VertexMap> isomorphisms(const LabeledForest& a, const LabeledForest& b) {
  if (a.size() != b.size() || !(a.shape() == b.shape())) return {};
  IsoSearch search{a, b, {}, {}, {}, {}};
  for (Label v : a.labels()) search.code_a[v] = a.shape_of(v).encoding();
  for (Label v : b.labels()) search.code_b[v] = b.shape_of(v).encoding();
  search.run({{a.roots(), b.roots()}});
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace rhall
