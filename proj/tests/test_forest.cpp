#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "rhall/error.hpp"
#include "rhall/fixtures.hpp"
#include "rhall/forest.hpp"
#include "rhall/text.hpp"

using namespace rhall;

namespace {

// Parent-array trees, canonicalized with an independent AHU-style string.
using ParentArray = std::vector<int>;  // parent[0] = -1

std::string ahu(const ParentArray& parent, int v) {
  std::vector<std::string> kids;
  for (int c = 0; c < static_cast<int>(parent.size()); ++c)
    if (parent[c] == v) kids.push_back(ahu(parent, c));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::set<std::string> leaf_closure(int n) {
  std::set<std::vector<int>> layer{{-1}};
  for (int size = 1; size < n; ++size) {
    std::set<std::vector<int>> next;
    for (const auto& p : layer)
      for (int v = 0; v < size; ++v) {
        auto q = p;
        q.push_back(v);
        next.insert(q);
      }
    layer = next;
  }
  std::set<std::string> out;
  for (const auto& p : layer) out.insert(ahu(p, 0));
  return out;
}

// Rooted tree counts from the classical recurrence.
std::vector<long> tree_counts(int n) {
  std::vector<long> a(n + 1, 0);
  a[1] = 1;
  for (int m = 1; m < n; ++m) {
    long total = 0;
    for (int k = 1; k <= m; ++k) {
      long s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += d * a[d];
      total += s * a[m - k + 1];
    }
    a[m + 1] = total / m;
  }
  return a;
}

// Counts label permutations preserving the parent relation.
long brute_aut(const LabeledForest& f) {
  auto labels = f.labels();
  auto perm = labels;
  long count = 0;
  do {
    std::map<Label, Label> s;
    for (std::size_t i = 0; i < labels.size(); ++i) s[labels[i]] = perm[i];
    bool ok = true;
    for (Label v : labels) {
      auto p = f.parent(v);
      auto q = f.parent(s[v]);
      if (p.has_value() != q.has_value() || (p && s[*p] != *q)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("canonical tree encodings") {
  CHECK(canonicalize("(()(()))").encoding() == "((())())");
  CHECK(canonicalize("()").encoding() == "()");
  const std::string expected = canonicalize("(()()(()))").encoding();
  for (const char* p : {"((())()())", "(()(())())", "(()()(()))"}) CHECK(canonicalize(p).encoding() == expected);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n)) CHECK(canonicalize(t.encoding()) == t);
}

TEST_CASE("tree enumeration agrees with leaf addition and the counting recurrence") {
  const auto counts = tree_counts(8);
  CHECK(enumerate_trees(0).empty());
  for (int n = 1; n <= 8; ++n) {
    const auto trees = enumerate_trees(n);
    CHECK(static_cast<long>(trees.size()) == counts[n]);
    std::set<std::string> ours;
    for (const auto& t : trees) ours.insert(t.encoding());
    CHECK(ours.size() == trees.size());
    if (n <= 7) CHECK(ours == leaf_closure(n));
  }
  CHECK(enumerate_trees(3).size() == 2);
  CHECK(enumerate_trees(6).size() == 20);
  std::vector<std::size_t> forest_counts;
  for (std::size_t n = 0; n <= 5; ++n) forest_counts.push_back(enumerate_forests(n).size());
  CHECK(forest_counts == std::vector<std::size_t>{1, 1, 2, 4, 9, 20});
}

TEST_CASE("forest literals") {
  CHECK(parse_forest("0").empty());
  CHECK(parse_forest("() (())").encoding() == "(()) ()");
  CHECK(Forest().encoding() == "0");
  CHECK_THROWS_AS(parse_forest("(()"), ParseError);
  CHECK_THROWS_AS(parse_forest("()  ()"), ParseError);
  CHECK_THROWS_AS(parse_forest(""), ParseError);
  try {
    parse_forest("() (x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("labeled forests") {
  const auto t = cut_example_tree();
  CHECK(t.size() == 7);
  CHECK(t.to_string() == "4(3(2,6),7(1,5))");
  CHECK(t.shape().encoding() == "((()())(()()))");
  CHECK_THROWS_AS(parse_labeled_forest("1(1)"), InvalidArgument);
  CHECK_THROWS_AS(LabeledForest({{1, 2}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(LabeledForest({{1, 5}}), InvalidArgument);
  const auto f = LabeledForest::from_forest(parse_forest("(()) ()"), 10);
  CHECK(f.to_string() == "10(11) 12");
}

TEST_CASE("admissible cut counts") {
  CHECK(admissible_cuts(parse_forest("()")).size() == 2);
  CHECK(admissible_cuts(parse_forest("(())")).size() == 3);
  CHECK(admissible_cuts(Forest()).size() == 1);
  // cuts of a forest multiply over components
  CHECK(admissible_cuts(parse_forest("() (())")).size() == 6);
}

TEST_CASE("the seven-vertex cut example") {
  const auto t = cut_example_tree();
  const auto c = cut_example_cut();
  const auto cuts = admissible_cuts(t);
  CHECK(std::find(cuts.begin(), cuts.end(), c) != cuts.end());
  const auto pieces = apply_cut(t, c);
  CHECK(pieces.branches.to_string() == "2 7(1,5)");
  CHECK(pieces.trunk.to_string() == "4(3(6))");

  const auto full = apply_cut(t, ForestCut::full(t));
  CHECK(full.branches == t);
  CHECK(full.trunk.empty());
  const auto null = apply_cut(t, ForestCut::null(t));
  CHECK(null.branches.empty());
  CHECK(null.trunk == t);
}

TEST_CASE("inadmissible cuts are rejected") {
  const auto t = cut_example_tree();
  CHECK_THROWS_AS(apply_cut(t, ForestCut{{Cut::edges({7, 1})}}), InvalidCut);
  CHECK_THROWS_AS(apply_cut(t, ForestCut{{Cut::edges({4})}}), InvalidCut);
  CHECK_THROWS_AS(apply_cut(t, ForestCut{{Cut::null(), Cut::null()}}), InvalidCut);
  CHECK_THROWS_AS(apply_cut(t, ForestCut{{Cut::edges({99})}}), InvalidCut);
}

TEST_CASE("cut partition of vertices") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& f : enumerate_forests(n)) {
      const auto l = LabeledForest::from_forest(f);
      for (const auto& c : admissible_cuts(l)) {
        const auto pieces = apply_cut(l, c);
        CHECK(pieces.branches.size() + pieces.trunk.size() == n);
      }
    }
}

TEST_CASE("join and meet on a chain") {
  const auto chain = parse_labeled_forest("1(2(3))");
  const ForestCut top{{Cut::edges({2})}};
  const ForestCut bottom{{Cut::edges({3})}};
  CHECK(cut_join(chain, bottom, top) == top);
  CHECK(cut_meet(chain, bottom, top) == bottom);
  CHECK(cut_join(chain, top, ForestCut::null(chain)) == top);
  CHECK(cut_meet(chain, top, ForestCut::full(chain)) == top);
  CHECK(cut_join(chain, top, ForestCut::full(chain)) == ForestCut::full(chain));
}

TEST_CASE("join and meet of edges on disjoint paths") {
  const auto cherry = parse_labeled_forest("1(2,3)");
  const ForestCut a{{Cut::edges({2})}};
  const ForestCut b{{Cut::edges({3})}};
  const ForestCut both{{Cut::edges({2, 3})}};
  CHECK(cut_join(cherry, a, b) == both);
  // The greatest lower bound: the only cut below both {2} and {3} is null.
  CHECK(cut_meet(cherry, a, b) == ForestCut::null(cherry));
}

TEST_CASE("cut lattice laws by brute force") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const auto l = LabeledForest::from_forest(Forest(std::vector<RootedTree>{t}));
      const auto cuts = admissible_cuts(l);
      for (const auto& x : cuts)
        for (const auto& y : cuts) {
          const auto j = cut_join(l, x, y);
          const auto m = cut_meet(l, x, y);
          REQUIRE(is_admissible(l, j));
          REQUIRE(is_admissible(l, m));
          CHECK(j == cut_join(l, y, x));
          CHECK(m == cut_meet(l, y, x));
          CHECK(cut_leq(l, x, j));
          CHECK(cut_leq(l, y, j));
          CHECK(cut_leq(l, m, x));
          CHECK(cut_leq(l, m, y));
          for (const auto& z : cuts) {
            if (cut_leq(l, x, z) && cut_leq(l, y, z)) CHECK(cut_leq(l, j, z));
            if (cut_leq(l, z, x) && cut_leq(l, z, y)) CHECK(cut_leq(l, z, m));
            if (n <= 5) {
              CHECK(cut_join(l, cut_join(l, x, y), z) == cut_join(l, x, cut_join(l, y, z)));
              CHECK(cut_meet(l, cut_meet(l, x, y), z) == cut_meet(l, x, cut_meet(l, y, z)));
            }
          }
        }
      for (const auto& x : cuts) {
        CHECK(cut_join(l, x, x) == x);
        CHECK(cut_meet(l, x, x) == x);
        CHECK(cut_leq(l, ForestCut::null(l), x));
        CHECK(cut_leq(l, x, ForestCut::full(l)));
      }
    }
}

TEST_CASE("induced cuts") {
  const auto t = cut_example_tree();
  const auto c = cut_example_cut();
  const auto sub = apply_cut(t, c).branches;
  const auto induced = induced_cut(t, c, ForestCut{{Cut::edges({1})}});
  // components of P: 2, then 7(1,5)
  CHECK(induced == ForestCut{{Cut::null(), Cut::edges({1})}});
  CHECK(induced_cut(t, c, ForestCut::null(t)) == ForestCut::null(sub));
  CHECK(induced_cut(t, c, ForestCut::full(t)) == ForestCut::full(sub));
}

TEST_CASE("lifting subforests of the trunk") {
  const auto t = cut_example_tree();
  const auto c = cut_example_cut();
  const auto e = lift_subforest(t, c, parse_labeled_forest("6"));
  CHECK(e == ForestCut{{Cut::edges({2, 6, 7})}});
  CHECK(apply_cut(t, e).branches.to_string() == "2 6 7(1,5)");
  CHECK(lift_subforest(t, c, LabeledForest()) == c);
  CHECK(lift_subforest(t, c, apply_cut(t, c).trunk) == ForestCut::full(t));
  CHECK_THROWS_AS(lift_subforest(t, c, parse_labeled_forest("3")), InvalidArgument);
  CHECK_THROWS_AS(lift_subforest(t, c, parse_labeled_forest("1")), InvalidArgument);
}

TEST_CASE("lift is a bijection onto the cuts above c") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& f : enumerate_forests(n)) {
      const auto l = LabeledForest::from_forest(f);
      const auto cuts = admissible_cuts(l);
      for (const auto& c : cuts) {
        const auto trunk = apply_cut(l, c).trunk;
        std::set<ForestCut> image;
        std::size_t subs = 0;
        for (const auto& d : admissible_cuts(trunk)) {
          const auto sub = apply_cut(trunk, d).branches;
          const auto e = lift_subforest(l, c, sub);
          CHECK(apply_cut(l, e).trunk == apply_cut(trunk, d).trunk);
          image.insert(e);
          ++subs;
        }
        CHECK(image.size() == subs);
        std::set<ForestCut> above;
        for (const auto& e : cuts)
          if (cut_meet(l, c, e) == c) above.insert(e);
        CHECK(image == above);
      }
    }
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(parse_tree("()")) == 1);
  CHECK(aut_order(parse_tree("(()())")) == 2);
  CHECK(aut_order(parse_forest("() ()")) == 2);
  CHECK(aut_order(Forest()) == 1);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& f : enumerate_forests(n)) {
      const auto l = LabeledForest::from_forest(f);
      CHECK(aut_order(f) == brute_aut(l));
      CHECK(aut_order(f) == static_cast<long>(isomorphisms(l, l).size()));
    }
}

TEST_CASE("isomorphism of labeled forests") {
  CHECK(is_isomorphic(parse_labeled_forest("1(2,3(4))"), parse_labeled_forest("9(7(5),8)")));
  CHECK_FALSE(is_isomorphic(LabeledForest::from_forest(parse_forest("((()))")),
                            LabeledForest::from_forest(parse_forest("(()())"))));
  CHECK(is_isomorphic(parse_labeled_forest("1 2(3)"), parse_labeled_forest("5(6) 4")));
}

TEST_CASE("the worked morphism pieces are isomorphic in two ways") {
  const auto f1 = morphism_example_source();
  const auto f2 = morphism_example_target();
  const ForestCut c1{{Cut::full(), Cut::edges({4})}};
  const ForestCut c2{{Cut::edges({6})}};
  const auto r = apply_cut(f1, c1).trunk;
  const auto p = apply_cut(f2, c2).branches;
  CHECK(r.to_string() == "6(5,8)");
  CHECK(p.to_string() == "6(2,9)");
  const auto isos = isomorphisms(r, p);
  REQUIRE(isos.size() == 2);
  CHECK(std::find(isos.begin(), isos.end(), VertexMap{{5, 9}, {6, 6}, {8, 2}}) != isos.end());
  CHECK(std::find(isos.begin(), isos.end(), VertexMap{{5, 2}, {6, 6}, {8, 9}}) != isos.end());
}
