#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rhall/error.hpp"
#include "rhall/fixtures.hpp"
#include "rhall/graph.hpp"
#include "rhall/text.hpp"

using namespace rhall;

namespace {

// Brute-force automorphism count: every vertex permutation, every bijection
// of the half-edges at each vertex, then check the pairing.
long brute_aut(const HalfEdgeGraph& g) {
  const auto vs = g.vertices();
  std::vector<int> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool degree_ok = true;
    for (std::size_t i = 0; i < vs.size(); ++i)
      degree_ok &= g.half_edges_at(vs[i]).size() == g.half_edges_at(vs[perm[i]]).size();
    if (!degree_ok) continue;
    std::vector<std::vector<HalfEdgeId>> targets;
    for (std::size_t i = 0; i < vs.size(); ++i) targets.push_back(g.half_edges_at(vs[perm[i]]));
    std::function<void(std::size_t, HalfEdgeMap&)> rec = [&](std::size_t i, HalfEdgeMap& m) {
      if (i == vs.size()) {
        for (const auto& [h, x] : m) {
          auto p = g.partner(h);
          auto px = g.partner(x);
          if (p.has_value() != px.has_value() || (p && m.at(*p) != *px)) return;
        }
        ++count;
        return;
      }
      auto t = targets[i];
      std::sort(t.begin(), t.end());
      const auto& src = g.half_edges_at(vs[i]);
      do {
        for (std::size_t k = 0; k < src.size(); ++k) m[src[k]] = t[k];
        rec(i + 1, m);
      } while (std::next_permutation(t.begin(), t.end()));
    };
    HalfEdgeMap m;
    rec(0, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Random relabeling of ids, same structure.
HalfEdgeGraph relabel(const HalfEdgeGraph& g, unsigned seed) {
  auto vs = g.vertices();
  auto hs = g.half_edges();
  std::vector<int> vnew(vs.size()), hnew(hs.size());
  std::iota(vnew.begin(), vnew.end(), 50);
  std::iota(hnew.begin(), hnew.end(), 300);
  unsigned s = seed;
  auto rnd = [&s](int n) {
    s = s * 1103515245u + 12345u;
    return static_cast<int>((s >> 16) % static_cast<unsigned>(n));
  };
  for (int i = static_cast<int>(vnew.size()) - 1; i > 0; --i) std::swap(vnew[i], vnew[rnd(i + 1)]);
  for (int i = static_cast<int>(hnew.size()) - 1; i > 0; --i) std::swap(hnew[i], hnew[rnd(i + 1)]);
  std::map<int, int> vm, hm;
  for (std::size_t i = 0; i < vs.size(); ++i) vm[vs[i]] = vnew[i];
  for (std::size_t i = 0; i < hs.size(); ++i) hm[hs[i]] = hnew[i];
  HalfEdgeGraph out;
  for (VertexId v : vs) out.add_vertex(vm[v]);
  for (HalfEdgeId h : hs) out.add_half_edge(hm[h], vm[g.vertex_of(h)]);
  for (const auto& [a, b] : g.internal_edges()) out.pair(hm[a], hm[b]);
  return out;
}

}  // namespace

TEST_CASE("fixtures are valid phi^3 graphs") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(fixture_graph(name));
  }
  CHECK(loop_number(fixture_graph("BUB")) == 1);
  CHECK(loop_number(fixture_graph("TRI")) == 1);
  CHECK(loop_number(fixture_graph("COROLLA")) == 0);
  CHECK(loop_number(fixture_graph("G_a")) == 2);
  CHECK(loop_number(fixture_graph("G_b")) == 2);
  CHECK(loop_number(fixture_graph("Gamma_eg")) == 3);
  CHECK(fixture_graph("BUB").externals().size() == 2);
  CHECK(fixture_graph("TRI").externals().size() == 3);
  CHECK(fixture_graph("Gamma_eg").externals().size() == 2);
}

TEST_CASE("validation names the violated rule") {
  auto kind_of = [](const char* text) {
    try {
      validate_feynman(parse_graph(text));
    } catch (const InvalidGraph& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of("v 0;h 0 0;h 1 0") == static_cast<int>(InvalidGraph::Kind::NotTrivalent));
  CHECK(kind_of("v 0;v 1;h 0 0;h 1 0;h 2 0;h 3 1;h 4 1;h 5 1;p 0 3") ==
        static_cast<int>(InvalidGraph::Kind::ExternalCount));
  CHECK_THROWS_AS(parse_graph("v 0;h 0 1"), InvalidGraph);
  CHECK_THROWS_AS(parse_graph("v 0;h 0 0;h 1 0;h 2 0;p 0 0"), InvalidGraph);
  CHECK_THROWS_AS(parse_graph("v 0;h 0 0;h 1 0;h 2 0;p 0 1;p 1 2"), InvalidGraph);
  CHECK_THROWS_AS(parse_graph("x 0"), ParseError);
  CHECK_THROWS_AS(parse_graph("v"), ParseError);
  CHECK(parse_graph("0").empty());
}

TEST_CASE("serialization round trip") {
  for (const auto& name : fixture_names()) {
    const auto g = fixture_graph(name);
    CHECK(parse_graph(serialize_graph(g)) == g);
    CHECK(parse_graph(canonical_form(g)) == parse_graph(canonical_form(g)));
    CHECK(canonical_form(parse_graph(canonical_form(g))) == canonical_form(g));
  }
}

TEST_CASE("one-particle irreducibility") {
  CHECK(is_1pi(fixture_graph("BUB")));
  CHECK(is_1pi(fixture_graph("TRI")));
  CHECK(is_1pi(fixture_graph("G_a")));
  CHECK(is_1pi(fixture_graph("G_b")));
  CHECK(is_1pi(fixture_graph("Gamma_eg")));
  CHECK(is_1pi(fixture_graph("COROLLA")));
  // bubble on a leg of a corolla: the joining edge is a bridge
  const auto bridged = insert_at_leg(fixture_graph("TRI"), 0, 0, fixture_graph("BUB"));
  CHECK(is_connected(bridged));
  CHECK_FALSE(is_1pi(bridged));
  CHECK_THROWS_AS(is_1pi(disjoint_union(fixture_graph("BUB"), fixture_graph("TRI"))), InvalidArgument);
}

TEST_CASE("quotient of the three-loop example") {
  const auto g = fixture_graph("Gamma_eg");
  const auto w = gamma_eg_subgraph();
  CHECK(is_subgraph(g, w));
  const auto q = contract(g, w);
  CHECK(q == fixture_graph("Gamma_eg_quotient"));
  CHECK(is_isomorphic(q, fixture_graph("Gamma_eg_quotient")));
  CHECK(loop_number(q) == 2);
  CHECK(is_isomorphic(induced(g, w), fixture_graph("BUB")));
}

TEST_CASE("subgraphs of the three-loop example") {
  const auto g = fixture_graph("Gamma_eg");
  const auto subs = enumerate_subgraphs(g);
  CHECK(std::find(subs.begin(), subs.end(), gamma_eg_subgraph()) != subs.end());
  // exhaustive oracle over all vertex subsets
  const auto vs = g.vertices();
  std::vector<VertexSet> oracle;
  for (unsigned mask = 1; mask + 1 < (1u << vs.size()); ++mask) {
    VertexSet w;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1u) w.insert(vs[i]);
    const auto sub = induced(g, w);
    bool ok = true;
    for (const auto& c : components(sub)) {
      const auto piece = induced(sub, c);
      const auto legs = piece.externals().size();
      ok &= loop_number(piece) > 0 && (legs == 2 || legs == 3);
    }
    if (ok) oracle.push_back(w);
  }
  std::sort(oracle.begin(), oracle.end());
  CHECK(subs == oracle);
}

TEST_CASE("subobjects bracket the proper subgraphs") {
  const auto g = fixture_graph("G_a");
  const auto all = subobjects(g);
  CHECK(all.front().empty());
  CHECK(all.back() == g.vertex_set());
  CHECK(all.size() == enumerate_subgraphs(g).size() + 2);
  CHECK(quotient(g, g.vertex_set()).empty());
  CHECK(quotient(g, {}) == g);
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(fixture_graph("BUB")) == 4);
  CHECK(aut_order(fixture_graph("TRI")) == 6);
  CHECK(aut_order(fixture_graph("COROLLA")) == 6);
  CHECK(aut_order(fixture_graph("G_a")) == 4);
  CHECK(aut_order(fixture_graph("G_b")) == 4);
  for (const auto& name : fixture_names()) {
    const auto g = fixture_graph(name);
    if (g.vertex_count() > 6) continue;
    CAPTURE(name);
    CHECK(aut_order(g) == brute_aut(g));
    CHECK(aut_order(g) == static_cast<long>(isomorphisms(g, g).size()));
  }
  const auto two = disjoint_union(fixture_graph("BUB"), fixture_graph("BUB"));
  CHECK(aut_order(two) == 32);
  CHECK(brute_aut(two) == 32);
}

TEST_CASE("canonical form is complete on small connected graphs") {
  for (int loops = 0; loops <= 2; ++loops)
    for (int ext : {2, 3}) {
      const auto gs = enumerate_connected_graphs(loops, ext);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        CHECK(canonical_form(relabel(gs[i], 7u + static_cast<unsigned>(i))) == canonical_form(gs[i]));
        for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK(isomorphisms(gs[i], gs[j]).empty());
        if (gs[i].vertex_count() <= 6) CHECK(aut_order(gs[i]) == brute_aut(gs[i]));
      }
    }
}

TEST_CASE("connected graph counts") {
  CHECK(enumerate_connected_graphs(0, 3).size() == 1);
  CHECK(enumerate_connected_graphs(0, 2).empty());
  // bubble and tadpole-on-an-edge
  CHECK(enumerate_connected_graphs(1, 2).size() == 2);
  // triangle and a leg-bubble / tadpole on the corolla
  const auto one3 = enumerate_connected_graphs(1, 3);
  CHECK(one3.size() == 3);
  bool has_tri = false;
  for (const auto& g : one3) has_tri |= is_isomorphic(g, fixture_graph("TRI"));
  CHECK(has_tri);
  for (const auto& g : enumerate_connected_graphs(2, 3)) {
    CHECK(is_connected(g));
    CHECK(loop_number(g) == 2);
    CHECK_NOTHROW(validate_feynman(g));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  for (const auto& name : fixture_names()) {
    const auto g = fixture_graph(name);
    for (unsigned seed = 1; seed < 6; ++seed) CHECK(canonical_form(relabel(g, seed)) == canonical_form(g));
  }
  CHECK_FALSE(is_isomorphic(fixture_graph("G_a"), fixture_graph("G_b")));
  CHECK(canonical_form(HalfEdgeGraph{}) == "0");
}

TEST_CASE("insertion inverts contraction") {
  const auto bub = fixture_graph("BUB");
  const auto tri = fixture_graph("TRI");
  const auto e = tri.internal_edges().front();
  const auto ext = bub.externals();
  const auto g = insert_at_edge(tri, e, {{ext[0], e.first}, {ext[1], e.second}}, bub);
  CHECK(is_isomorphic(g, fixture_graph("G_a")));
  CHECK(loop_number(g) == 2);
  const auto tx = tri.externals();
  VertexId v = bub.vertices().front();
  const auto& at = bub.half_edges_at(v);
  const auto h = insert_at_vertex(bub, v, {{tx[0], at[0]}, {tx[1], at[1]}, {tx[2], at[2]}}, tri);
  CHECK(is_isomorphic(h, fixture_graph("G_b")));
  // contracting the inserted piece gives back the host
  for (const auto& w : enumerate_subgraphs(g))
    if (is_isomorphic(induced(g, w), bub)) CHECK(is_isomorphic(contract(g, w), tri));
}

TEST_CASE("primitives") {
  CHECK(is_primitive(fixture_graph("BUB")));
  CHECK(is_primitive(fixture_graph("TRI")));
  CHECK_FALSE(is_primitive(fixture_graph("G_a")));
  CHECK_FALSE(is_primitive(fixture_graph("G_b")));
  const auto prims = enumerate_primitives(1);
  CHECK(std::find(prims.begin(), prims.end(), canonical_form(fixture_graph("BUB"))) != prims.end());
  CHECK(std::find(prims.begin(), prims.end(), canonical_form(fixture_graph("TRI"))) != prims.end());
}

TEST_CASE("size guard") {
  HalfEdgeGraph big;
  for (int i = 0; i < 13; ++i) big = disjoint_union(big, fixture_graph("BUB"));
  CHECK_THROWS_AS(enumerate_subgraphs(big), BoundExceeded);
}
