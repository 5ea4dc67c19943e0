#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "rhall/category.hpp"
#include "rhall/error.hpp"
#include "rhall/fixtures.hpp"
#include "rhall/text.hpp"
#include "rhall/verify.hpp"

using namespace rhall;

namespace {

LabeledForest lf(const char* text) { return LabeledForest::from_forest(parse_forest(text), 1); }

}  // namespace

TEST_CASE("small forest Hom sets") {
  CHECK(hom_set_forests(lf("()"), lf("()")).size() == 2);
  CHECK(hom_set_forests(lf("()"), lf("(())")).size() == 2);
  CHECK(hom_set_forests(lf("0"), lf("(())")).size() == 1);
  const auto homs = hom_set_forests(lf("() ()"), lf("() ()"));
  // identity, its twist, zero, and the four maps through one vertex
  CHECK(homs.size() == 7);
  for (const auto& m : homs) CHECK_NOTHROW(check_morphism(m));
}

TEST_CASE("the worked morphism and its twist") {
  const auto src = morphism_example_source();
  const auto dst = morphism_example_target();
  std::vector<ForestMorphism> found;
  for (const auto& m : hom_set_forests(src, dst))
    if (m.c2 == ForestCut{{Cut::edges({6})}} && apply_cut(src, m.c1).trunk.to_string() == "6(5,8)") found.push_back(m);
  REQUIRE(found.size() == 2);
  CHECK(found[0].f != found[1].f);
  for (const auto& m : found) {
    CHECK(m.f.at(6) == 6);
    CHECK(cokernel_forest(m).target.to_string() == "7");
    CHECK(kernel_forest(m).source.to_string() == "2(1(3)) 4");
  }
}

TEST_CASE("identity, zero, kernel and cokernel") {
  const auto f = parse_labeled_forest("4(7(1,5),3(2,6)) 8");
  const auto id = identity_forest(f);
  CHECK_NOTHROW(check_morphism(id));
  CHECK(is_mono(id));
  CHECK(is_epi(id));
  CHECK(kernel_forest(id).source.empty());
  CHECK(cokernel_forest(id).target.empty());
  const auto g = lf("(()) ()");
  for (const auto& m : hom_set_forests(lf("(())"), g)) {
    CHECK(compose_forest(identity_forest(m.source), m) == m);
    CHECK(compose_forest(m, identity_forest(g)) == m);
    const auto z = compose_forest(m, zero_forest(g, f));
    CHECK(z == zero_forest(m.source, f));
  }
  CHECK_THROWS_AS(compose_forest(identity_forest(g), identity_forest(f)), InvalidArgument);
  ForestMorphism bad = id;
  bad.f.begin()->second = 99;
  CHECK_THROWS_AS(check_morphism(bad), InvalidArgument);
}

TEST_CASE("short exact sequence counts") {
  CHECK(count_short_exact(parse_forest("()"), parse_forest("()"), parse_forest("() ()")) == 2);
  CHECK(count_short_exact(parse_forest("()"), parse_forest("()"), parse_forest("(())")) == 1);
  CHECK(count_short_exact(parse_forest("()"), parse_forest("()"), parse_forest("(()())")) == 0);
  CHECK(count_short_exact(parse_forest("0"), parse_forest("(())"), parse_forest("(())")) == 1);
}

TEST_CASE("graph Hom sets") {
  const auto bub = fixture_graph("BUB");
  CHECK(hom_set_graphs(bub, bub).size() == 1 + 4);
  CHECK(hom_set_graphs(HalfEdgeGraph{}, bub).size() == 1);
  const auto id = identity_graph(bub);
  CHECK(is_mono(id));
  CHECK(is_epi(id));
  for (const auto& m : hom_set_graphs(bub, bub)) CHECK(compose_graph(id, m) == m);
  CHECK_THROWS_AS(compose_graph(identity_graph(fixture_graph("TRI")), id), InvalidArgument);
}

TEST_CASE("the three-loop example admits its exact sequence") {
  const auto g = fixture_graph("Gamma_eg");
  const auto bub = fixture_graph("BUB");
  const auto q = fixture_graph("Gamma_eg_quotient");
  const auto n = count_short_exact_graphs(bub, q, g);
  CHECK(n >= 1);
  CHECK(n == aut_order(bub) * aut_order(q));
}

TEST_CASE("composition is sometimes undefined for graphs") {
  // The two triangles of G_b share an edge, and an edge is not a subgraph:
  // a mono onto one triangle followed by an epi killing the other has no
  // composite.
  const auto gb = fixture_graph("G_b");
  const auto tri = fixture_graph("TRI");
  const auto bub = fixture_graph("BUB");
  std::size_t defined = 0, undefined = 0;
  const auto homs = hom_set_graphs(tri, bub);
  for (const auto& m1 : hom_set_graphs(tri, gb))
    for (const auto& m2 : hom_set_graphs(gb, bub)) {
      try {
        const auto m = compose_graph(m1, m2);
        CHECK(std::find(homs.begin(), homs.end(), m) != homs.end());
        ++defined;
      } catch (const CompositionUndefined&) {
        VertexSet meet;
        std::set_intersection(m1.gamma2.begin(), m1.gamma2.end(), m2.gamma1.begin(), m2.gamma1.end(),
                              std::inserter(meet, meet.end()));
        CHECK(meet.size() == 2);
        ++undefined;
      }
    }
  CHECK(defined > 0);
  CHECK(undefined > 0);
}

TEST_CASE("category axioms at small size") {
  const auto f = verify_category_forests(3);
  CHECK_MESSAGE(f.ok, f.counterexample);
  const auto g = verify_category_graphs(4);
  CHECK_MESSAGE(g.ok, g.counterexample);
}
