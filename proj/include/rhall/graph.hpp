#pragma once

// Half-edge graphs and phi^3 Feynman graphs: validation, subgraphs,
// contraction, insertion, canonical forms.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rhall/linear_combo.hpp"

namespace rhall {

using VertexId = int;
using HalfEdgeId = int;
using VertexSet = std::set<VertexId>;

/// Vertices, half-edges, the incidence map half-edge -> vertex and a
/// symmetric partial pairing. Unpaired half-edges are external legs.
class HalfEdgeGraph {
 public:
  void add_vertex(VertexId v);
  void add_half_edge(HalfEdgeId h, VertexId v);
  void pair(HalfEdgeId a, HalfEdgeId b);
  void unpair(HalfEdgeId h);
  /// Removes h, leaving its partner (if any) external.
  void remove_half_edge(HalfEdgeId h);
  /// Removes v and all half-edges at v.
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return at_.count(v) != 0; }
  bool has_half_edge(HalfEdgeId h) const { return incidence_.count(h) != 0; }
  bool empty() const { return at_.empty(); }
  std::size_t vertex_count() const { return at_.size(); }
  std::size_t half_edge_count() const { return incidence_.size(); }

  std::vector<VertexId> vertices() const;
  VertexSet vertex_set() const;
  std::vector<HalfEdgeId> half_edges() const;
  VertexId vertex_of(HalfEdgeId h) const;
  std::optional<HalfEdgeId> partner(HalfEdgeId h) const;
  /// Sorted.
  const std::vector<HalfEdgeId>& half_edges_at(VertexId v) const;
  std::vector<HalfEdgeId> externals() const;
  /// Internal edges as (a, b) with a < b, sorted.
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> internal_edges() const;

  /// Largest id in use, or -1.
  VertexId max_vertex_id() const;
  HalfEdgeId max_half_edge_id() const;

  friend bool operator==(const HalfEdgeGraph&, const HalfEdgeGraph&) = default;

 private:
  std::map<VertexId, std::vector<HalfEdgeId>> at_;
  std::map<HalfEdgeId, VertexId> incidence_;
  std::map<HalfEdgeId, HalfEdgeId> partner_;
};

/// A HalfEdgeGraph that passed validate_feynman: trivalent, and every
/// connected component has 2 or 3 external half-edges.
using FeynmanGraph = HalfEdgeGraph;

/// Returns g unchanged or throws InvalidGraph naming the violated rule.
FeynmanGraph validate_feynman(const HalfEdgeGraph& g);

/// Connected components as vertex sets, ordered by smallest vertex id.
std::vector<VertexSet> components(const HalfEdgeGraph& g);
bool is_connected(const HalfEdgeGraph& g);
/// First Betti number: internal edges - vertices + components.
int loop_number(const HalfEdgeGraph& g);
/// Throws InvalidArgument for a disconnected or empty graph.
bool is_1pi(const HalfEdgeGraph& g);

/// Vertices W, every half-edge incident to W, and the pairs with both ends
/// among those half-edges.
HalfEdgeGraph induced(const HalfEdgeGraph& g, const VertexSet& w);

/// W is nonempty and each component of induced(g, W) has a loop and 2 or 3
/// external half-edges.
bool is_subgraph(const HalfEdgeGraph& g, const VertexSet& w);
/// Subgraph, or one of the improper subobjects: empty or everything.
bool is_subobject(const HalfEdgeGraph& g, const VertexSet& w);

/// Proper subgraphs (neither empty nor all of g), sorted. Throws
/// BoundExceeded above 24 vertices.
std::vector<VertexSet> enumerate_subgraphs(const HalfEdgeGraph& g);
/// The empty set, the proper subgraphs, then the full vertex set (once,
/// for nonempty g).
std::vector<VertexSet> subobjects(const HalfEdgeGraph& g);

/// Collapses each component of the subgraph W: three external legs give a
/// new vertex (id = smallest vertex id of the component), two legs delete
/// the component and join the two outside partners.
HalfEdgeGraph contract(const HalfEdgeGraph& g, const VertexSet& w);
/// The quotient used for morphisms and Hall products: components of W that
/// are whole components of g are removed first, so g/g is empty.
HalfEdgeGraph quotient(const HalfEdgeGraph& g, const VertexSet& w);

/// Copy of g with every vertex id shifted by dv and half-edge id by dh.
HalfEdgeGraph shifted(const HalfEdgeGraph& g, int dv, int dh);
/// b is relabeled past the ids of a.
HalfEdgeGraph disjoint_union(const HalfEdgeGraph& a, const HalfEdgeGraph& b);

using HalfEdgeMap = std::map<HalfEdgeId, HalfEdgeId>;

/// g2 with vertex v replaced by g1; f sends the external legs of g1 onto
/// the half-edges at v. g1's ids are shifted past g2's.
HalfEdgeGraph insert_at_vertex(const HalfEdgeGraph& g2, VertexId v, const HalfEdgeMap& f,
                               const HalfEdgeGraph& g1);
/// g2 with the internal edge {e.first, e.second} cut open and g1 spliced
/// in; f sends the two external legs of g1 onto e.first and e.second.
HalfEdgeGraph insert_at_edge(const HalfEdgeGraph& g2, std::pair<HalfEdgeId, HalfEdgeId> e,
                             const HalfEdgeMap& f, const HalfEdgeGraph& g1);
/// g2 with the 2-leg graph g1 attached to the external leg `leg`: the leg
/// `joined` of g1 pairs with it and the other leg of g1 becomes external.
HalfEdgeGraph insert_at_leg(const HalfEdgeGraph& g2, HalfEdgeId leg, HalfEdgeId joined,
                            const HalfEdgeGraph& g1);

/// Canonical serialization: vertices and half-edges renumbered from 0 by a
/// canonical labeling, lines "v i", "h i v", "p a b" joined by ';'. "0" for
/// the empty graph.
std::string canonical_form(const HalfEdgeGraph& g);
/// Number of pairs (vertex bijection, half-edge bijection) preserving
/// incidence and pairing. External legs may be permuted.
Integer aut_order(const HalfEdgeGraph& g);
bool is_isomorphic(const HalfEdgeGraph& a, const HalfEdgeGraph& b);

struct GraphIso {
  std::map<VertexId, VertexId> vertices;
  HalfEdgeMap half_edges;
  friend bool operator==(const GraphIso&, const GraphIso&) = default;
  friend auto operator<=>(const GraphIso&, const GraphIso&) = default;
};
/// Every isomorphism a -> b by exhaustive backtracking. Sorted.
std::vector<GraphIso> isomorphisms(const HalfEdgeGraph& a, const HalfEdgeGraph& b);

/// Connected graph without proper subgraphs.
bool is_primitive(const HalfEdgeGraph& g);

/// Every connected phi^3 graph with the given loop number and number of
/// external legs, one per isomorphism class, sorted by canonical form.
std::vector<HalfEdgeGraph> enumerate_connected_graphs(int loops, int externals);
/// Canonical forms of connected primitive graphs with 1..max_loops loops.
std::vector<std::string> enumerate_primitives(int max_loops);

}  // namespace rhall
