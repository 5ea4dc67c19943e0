#include <algorithm>
#include <sstream>

#include "rhall/category.hpp"
#include "rhall/error.hpp"

namespace rhall {

namespace {

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  for (VertexId v : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

template <typename Map>
std::string map_string(const Map& m) {
  std::string out = "{";
  for (const auto& [a, b] : m) {
    if (out.size() > 1) out += ',';
    out += std::to_string(a) + "->" + std::to_string(b);
  }
  return out + "}";
}

// The half-edge of quotient(g, w) that plays the role of h. Half-edges that
// sit on a deleted 2-leg component are followed through it to the partner of
// the other leg.
std::optional<HalfEdgeId> resolve(const HalfEdgeGraph& g, const VertexSet& w, const HalfEdgeGraph& q,
                                  HalfEdgeId h) {
  for (std::size_t guard = 0; guard <= g.half_edge_count(); ++guard) {
    if (q.has_half_edge(h)) return h;
    if (!g.has_half_edge(h) || !w.count(g.vertex_of(h))) return std::nullopt;
    const auto sub = induced(g, w);
    VertexSet comp;
    for (const auto& c : components(sub))
      if (c.count(g.vertex_of(h))) comp = c;
    std::vector<HalfEdgeId> legs;
    for (VertexId v : comp)
      for (HalfEdgeId x : g.half_edges_at(v)) {
        auto p = g.partner(x);
        if (!p || !comp.count(g.vertex_of(*p))) legs.push_back(x);
      }
    if (legs.size() != 2 || (legs[0] != h && legs[1] != h)) return std::nullopt;
    const HalfEdgeId other = legs[0] == h ? legs[1] : legs[0];
    auto p = g.partner(other);
    if (!p) return std::nullopt;
    h = *p;
  }
  return std::nullopt;
}

}  // namespace

std::string GraphMorphism::to_string() const {
  return "gamma1=" + set_string(gamma1) + " gamma2=" + set_string(gamma2) + " fV=" + map_string(f.vertices) +
         " fH=" + map_string(f.half_edges);
}

std::vector<GraphMorphism> hom_set_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2) {
  if (g1.vertex_count() > 12 || g2.vertex_count() > 12)
    throw BoundExceeded("Hom enumeration limited to graphs of 12 vertices");
  std::vector<GraphMorphism> out;
  const auto subs2 = subobjects(g2);
  std::vector<HalfEdgeGraph> pieces;
  for (const auto& w : subs2) pieces.push_back(induced(g2, w));
  for (const auto& w1 : subobjects(g1)) {
    const auto q = quotient(g1, w1);
    for (std::size_t i = 0; i < subs2.size(); ++i) {
      if (pieces[i].vertex_count() != q.vertex_count() || pieces[i].half_edge_count() != q.half_edge_count())
        continue;
      for (auto& iso : isomorphisms(q, pieces[i])) out.push_back(GraphMorphism{g1, g2, w1, subs2[i], std::move(iso)});
    }
  }
  return out;
}

GraphMorphism identity_graph(const HalfEdgeGraph& g) {
  GraphIso id;
  for (VertexId v : g.vertices()) id.vertices[v] = v;
  for (HalfEdgeId h : g.half_edges()) id.half_edges[h] = h;
  return GraphMorphism{g, g, {}, g.vertex_set(), id};
}

GraphMorphism compose_graph(const GraphMorphism& m1, const GraphMorphism& m2) {
  if (!(m1.target == m2.source)) throw InvalidArgument("morphisms are not composable: middle objects differ");
  const auto& g1 = m1.source;
  const auto& g2 = m1.target;
  const auto& g3 = m2.target;

  VertexSet meet;
  std::set_intersection(m1.gamma2.begin(), m1.gamma2.end(), m2.gamma1.begin(), m2.gamma1.end(),
                        std::inserter(meet, meet.end()));
  if (!is_subobject(induced(g2, m1.gamma2), meet))
    throw CompositionUndefined("intersection " + set_string(meet) + " is not a subobject");

  VertexSet e1 = m1.gamma1;
  for (const auto& [u, w] : m1.f.vertices)
    if (meet.count(w)) e1.insert(u);
  if (!is_subobject(g1, e1)) throw CompositionUndefined("preimage " + set_string(e1) + " is not a subobject");

  const auto q1 = quotient(g1, m1.gamma1);
  const auto q2 = quotient(g2, m2.gamma1);
  const auto q = quotient(g1, e1);
  GraphIso gf;
  std::set<HalfEdgeId> used_h;
  std::set<VertexId> used_v;
  for (HalfEdgeId h : q.half_edges()) {
    const auto r = resolve(g1, m1.gamma1, q1, h);
    if (!r || !m1.f.half_edges.count(*r))
      throw CompositionUndefined("half-edge " + std::to_string(h) + " has no counterpart in the first quotient");
    const auto s = resolve(g2, m2.gamma1, q2, m1.f.half_edges.at(*r));
    if (!s || !m2.f.half_edges.count(*s))
      throw CompositionUndefined("half-edge " + std::to_string(h) + " has no counterpart in the second quotient");
    const HalfEdgeId x = m2.f.half_edges.at(*s);
    if (!used_h.insert(x).second) throw CompositionUndefined("composite is not injective on half-edges");
    gf.half_edges[h] = x;
    const VertexId vq = q.vertex_of(h);
    const VertexId vx = g3.vertex_of(x);
    auto [it, fresh] = gf.vertices.emplace(vq, vx);
    if (!fresh && it->second != vx) throw CompositionUndefined("composite does not respect incidence");
    if (fresh && !used_v.insert(vx).second) throw CompositionUndefined("composite is not injective on vertices");
  }
  VertexSet e3(used_v.begin(), used_v.end());
  if (!is_subobject(g3, e3)) throw CompositionUndefined("image " + set_string(e3) + " is not a subobject");
  const auto image = induced(g3, e3);
  if (image.half_edge_count() != q.half_edge_count())
    throw CompositionUndefined("composite does not cover the image");
  for (HalfEdgeId h : q.half_edges()) {
    const auto p = q.partner(h);
    const auto px = image.partner(gf.half_edges.at(h));
    if (p.has_value() != px.has_value() || (p && gf.half_edges.at(*p) != *px))
      throw CompositionUndefined("composite does not preserve the pairing");
  }
  return GraphMorphism{g1, g3, e1, e3, gf};
}

bool is_mono(const GraphMorphism& m) { return m.gamma1.empty(); }

bool is_epi(const GraphMorphism& m) { return m.gamma2 == m.target.vertex_set(); }

Integer count_short_exact_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, const HalfEdgeGraph& k) {
  std::vector<GraphMorphism> monos, epis;
  for (auto& m : hom_set_graphs(g1, k))
    if (is_mono(m)) monos.push_back(std::move(m));
  for (auto& m : hom_set_graphs(k, g2))
    if (is_epi(m)) epis.push_back(std::move(m));
  Integer count = 0;
  for (const auto& mono : monos)
    for (const auto& epi : epis)
      if (mono.gamma2 == epi.gamma1) ++count;
  return count;
}

}  // namespace rhall
