#include "rhall/tree_hall.hpp"

#include <functional>
#include <set>

#include "rhall/error.hpp"
#include "rhall/text.hpp"

namespace rhall {

LinearCombo forest_basis(const Forest& f) { return LinearCombo::basis(f.encoding()); }

LinearCombo forest_basis(std::string_view forest_literal) { return forest_basis(parse_forest(forest_literal)); }

Integer structure_constant_h(const Forest& f1, const Forest& f2, const Forest& k) {
  if (f1.size() + f2.size() != k.size()) return 0;
  const auto labeled = LabeledForest::from_forest(k);
  Integer count = 0;
  for (const auto& c : admissible_cuts(labeled)) {
    const auto pieces = apply_cut(labeled, c);
    if (pieces.branches.shape() == f1 && pieces.trunk.shape() == f2) ++count;
  }
  return count;
}

namespace {

// Forests obtained from f2 by hanging each tree of f1 under some vertex of
// f2 or leaving it as a new component.
std::set<Forest> graft_candidates(const Forest& f1, const Forest& f2) {
  const auto base = LabeledForest::from_forest(f2);
  const auto labels = base.labels();
  const auto& extra = f1.trees();
  std::set<Forest> out;
  // choice[i] == labels.size() means "new component".
  std::vector<std::size_t> choice(extra.size(), 0);
  std::function<RootedTree(Label)> build = [&](Label v) {
    std::vector<RootedTree> kids;
    for (Label c : base.children(v)) kids.push_back(build(c));
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (choice[i] < labels.size() && labels[choice[i]] == v) kids.push_back(extra[i]);
    return RootedTree(std::move(kids));
  };
  while (true) {
    std::vector<RootedTree> trees;
    for (Label r : base.roots()) trees.push_back(build(r));
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (choice[i] == labels.size()) trees.push_back(extra[i]);
    out.insert(Forest(std::move(trees)));
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == labels.size()) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  return out;
}

}  // namespace

LinearCombo hall_product(const Forest& f1, const Forest& f2) {
  LinearCombo out;
  for (const auto& k : graft_candidates(f1, f2)) out.add(k.encoding(), Rational(structure_constant_h(f1, f2, k)));
  return out;
}

const HallOps& forest_hall_ops() {
  static const HallOps ops{
      [](const std::string& a, const std::string& b) { return hall_product(parse_forest(a), parse_forest(b)); },
      [](const std::string& key) {
        std::vector<std::string> parts;
        for (const auto& t : parse_forest(key).trees()) parts.push_back(t.encoding());
        return parts;
      },
      [](std::vector<std::string> parts) {
        std::vector<RootedTree> trees;
        for (const auto& p : parts) trees.push_back(parse_tree(p));
        return Forest(std::move(trees)).encoding();
      },
      "0"};
  return ops;
}

LinearCombo hall_product(const LinearCombo& a, const LinearCombo& b) { return hall_multiply(forest_hall_ops(), a, b); }

PairCombo coproduct(const LinearCombo& a) { return hall_coproduct(forest_hall_ops(), a); }

Rational counit(const LinearCombo& a) { return hall_counit(forest_hall_ops(), a); }

LinearCombo antipode(const LinearCombo& a) { return hall_antipode(forest_hall_ops(), a); }

std::size_t degree(const std::string& forest_literal) { return parse_forest(forest_literal).size(); }

LinearCombo prelie_tree(const RootedTree& t1, const RootedTree& t2) {
  const Forest one(std::vector<RootedTree>{t1});
  const Forest two(std::vector<RootedTree>{t2});
  std::set<RootedTree> candidates;
  for (const auto& k : graft_candidates(one, two))
    if (k.trees().size() == 1) candidates.insert(k.trees()[0]);
  LinearCombo out;
  for (const auto& t : candidates) {
    const auto labeled = LabeledForest::from_forest(Forest(std::vector<RootedTree>{t}));
    long a = 0;
    for (Label v : labeled.labels()) {
      if (!labeled.parent(v)) continue;
      const auto pieces = apply_cut(labeled, ForestCut{{Cut::edges({v})}});
      if (pieces.branches.shape() == one && pieces.trunk.shape() == two) ++a;
    }
    out.add(t.encoding(), a);
  }
  return out;
}

namespace {

RootedTree single_tree(const std::string& key) {
  const Forest f = parse_forest(key);
  if (f.trees().size() != 1) throw InvalidArgument("'" + key + "' is not a single tree");
  return f.trees()[0];
}

}  // namespace

LinearCombo prelie_tree(const LinearCombo& a, const LinearCombo& b) {
  LinearCombo out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out += (ca * cb) * prelie_tree(single_tree(ka), single_tree(kb));
  return out;
}

LinearCombo bracket_tree(const RootedTree& t1, const RootedTree& t2) {
  return prelie_tree(t1, t2) - prelie_tree(t2, t1);
}

LinearCombo bracket_tree(const LinearCombo& a, const LinearCombo& b) {
  return prelie_tree(a, b) - prelie_tree(b, a);
}

LinearCombo j_embed(const RootedTree& t) { return LinearCombo::basis(t.encoding()); }

LinearCombo j_embed(const LinearCombo& trees) {
  LinearCombo out;
  for (const auto& [key, c] : trees) out += c * j_embed(single_tree(key));
  return out;
}

}  // namespace rhall
