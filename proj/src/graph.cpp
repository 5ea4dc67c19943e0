#include "rhall/graph.hpp"

#include <algorithm>

#include "rhall/error.hpp"

namespace rhall {

using Kind = InvalidGraph::Kind;

void HalfEdgeGraph::add_vertex(VertexId v) {
  if (v < 0) throw InvalidGraph(Kind::UnknownId, "negative vertex id " + std::to_string(v));
  if (!at_.emplace(v, std::vector<HalfEdgeId>{}).second)
    throw InvalidGraph(Kind::UnknownId, "duplicate vertex " + std::to_string(v));
}

void HalfEdgeGraph::add_half_edge(HalfEdgeId h, VertexId v) {
  if (h < 0) throw InvalidGraph(Kind::UnknownId, "negative half-edge id " + std::to_string(h));
  auto it = at_.find(v);
  if (it == at_.end())
    throw InvalidGraph(Kind::UnknownId,
                       "half-edge " + std::to_string(h) + " on unknown vertex " + std::to_string(v));
  if (!incidence_.emplace(h, v).second)
    throw InvalidGraph(Kind::MalformedPairing, "duplicate half-edge " + std::to_string(h));
  auto& list = it->second;
  list.insert(std::upper_bound(list.begin(), list.end(), h), h);
}

void HalfEdgeGraph::pair(HalfEdgeId a, HalfEdgeId b) {
  if (!has_half_edge(a) || !has_half_edge(b))
    throw InvalidGraph(Kind::UnknownId,
                       "pair " + std::to_string(a) + " " + std::to_string(b) + " names an unknown half-edge");
  if (a == b) throw InvalidGraph(Kind::MalformedPairing, "half-edge " + std::to_string(a) + " paired with itself");
  if (partner_.count(a) || partner_.count(b))
    throw InvalidGraph(Kind::MalformedPairing,
                       "half-edge paired twice in pair " + std::to_string(a) + " " + std::to_string(b));
  partner_[a] = b;
  partner_[b] = a;
}

void HalfEdgeGraph::unpair(HalfEdgeId h) {
  auto it = partner_.find(h);
  if (it == partner_.end()) return;
  partner_.erase(it->second);
  partner_.erase(it);
}

void HalfEdgeGraph::remove_half_edge(HalfEdgeId h) {
  auto it = incidence_.find(h);
  if (it == incidence_.end()) return;
  unpair(h);
  auto& list = at_.at(it->second);
  list.erase(std::find(list.begin(), list.end(), h));
  incidence_.erase(it);
}

void HalfEdgeGraph::remove_vertex(VertexId v) {
  auto it = at_.find(v);
  if (it == at_.end()) return;
  for (HalfEdgeId h : std::vector<HalfEdgeId>(it->second)) remove_half_edge(h);
  at_.erase(v);
}

std::vector<VertexId> HalfEdgeGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(at_.size());
  for (const auto& [v, hs] : at_) out.push_back(v);
  return out;
}

VertexSet HalfEdgeGraph::vertex_set() const {
  VertexSet out;
  for (const auto& [v, hs] : at_) out.insert(out.end(), v);
  return out;
}

std::vector<HalfEdgeId> HalfEdgeGraph::half_edges() const {
  std::vector<HalfEdgeId> out;
  out.reserve(incidence_.size());
  for (const auto& [h, v] : incidence_) out.push_back(h);
  return out;
}

VertexId HalfEdgeGraph::vertex_of(HalfEdgeId h) const {
  auto it = incidence_.find(h);
  if (it == incidence_.end()) throw InvalidGraph(Kind::UnknownId, "unknown half-edge " + std::to_string(h));
  return it->second;
}

std::optional<HalfEdgeId> HalfEdgeGraph::partner(HalfEdgeId h) const {
  auto it = partner_.find(h);
  if (it == partner_.end()) return std::nullopt;
  return it->second;
}

const std::vector<HalfEdgeId>& HalfEdgeGraph::half_edges_at(VertexId v) const {
  auto it = at_.find(v);
  if (it == at_.end()) throw InvalidGraph(Kind::UnknownId, "unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<HalfEdgeId> HalfEdgeGraph::externals() const {
  std::vector<HalfEdgeId> out;
  for (const auto& [h, v] : incidence_)
    if (!partner_.count(h)) out.push_back(h);
  return out;
}

std::vector<std::pair<HalfEdgeId, HalfEdgeId>> HalfEdgeGraph::internal_edges() const {
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> out;
  for (const auto& [a, b] : partner_)
    if (a < b) out.emplace_back(a, b);
  return out;
}

VertexId HalfEdgeGraph::max_vertex_id() const { return at_.empty() ? -1 : at_.rbegin()->first; }

HalfEdgeId HalfEdgeGraph::max_half_edge_id() const {
  return incidence_.empty() ? -1 : incidence_.rbegin()->first;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> components(const HalfEdgeGraph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    VertexSet comp{start};
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdgeId h : g.half_edges_at(v)) {
        auto p = g.partner(h);
        if (!p) continue;
        const VertexId w = g.vertex_of(*p);
        if (seen.insert(w).second) {
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const HalfEdgeGraph& g) { return components(g).size() == 1; }

int loop_number(const HalfEdgeGraph& g) {
  return static_cast<int>(g.internal_edges().size()) - static_cast<int>(g.vertex_count()) +
         static_cast<int>(components(g).size());
}

FeynmanGraph validate_feynman(const HalfEdgeGraph& g) {
  for (VertexId v : g.vertices()) {
    const auto n = g.half_edges_at(v).size();
    if (n != 3)
      throw InvalidGraph(Kind::NotTrivalent,
                         "vertex " + std::to_string(v) + " has " + std::to_string(n) + " half-edges, expected 3");
  }
  for (const auto& comp : components(g)) {
    int ext = 0;
    for (VertexId v : comp)
      for (HalfEdgeId h : g.half_edges_at(v))
        if (!g.partner(h)) ++ext;
    if (ext != 2 && ext != 3)
      throw InvalidGraph(Kind::ExternalCount, "component containing vertex " + std::to_string(*comp.begin()) +
                                                  " has " + std::to_string(ext) + " external half-edges");
  }
  return g;
}

bool is_1pi(const HalfEdgeGraph& g) {
  if (!is_connected(g)) throw InvalidArgument("is_1pi needs a connected nonempty graph");
  for (const auto& [a, b] : g.internal_edges()) {
    HalfEdgeGraph cut = g;
    cut.unpair(a);
    if (!is_connected(cut)) return false;
  }
  return true;
}

HalfEdgeGraph induced(const HalfEdgeGraph& g, const VertexSet& w) {
  HalfEdgeGraph out;
  for (VertexId v : w) {
    if (!g.has_vertex(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
    out.add_vertex(v);
  }
  for (VertexId v : w)
    for (HalfEdgeId h : g.half_edges_at(v)) out.add_half_edge(h, v);
  for (VertexId v : w)
    for (HalfEdgeId h : g.half_edges_at(v))
      if (auto p = g.partner(h); p && h < *p && out.has_half_edge(*p)) out.pair(h, *p);
  return out;
}

namespace {

int external_count(const HalfEdgeGraph& g, const VertexSet& comp) {
  int ext = 0;
  for (VertexId v : comp)
    for (HalfEdgeId h : g.half_edges_at(v))
      if (!g.partner(h)) ++ext;
  return ext;
}

bool valid_selection(const HalfEdgeGraph& sub) {
  for (const auto& comp : components(sub)) {
    const int ext = external_count(sub, comp);
    if (ext != 2 && ext != 3) return false;
    if (loop_number(induced(sub, comp)) < 1) return false;
  }
  return true;
}

}  // namespace

bool is_subgraph(const HalfEdgeGraph& g, const VertexSet& w) {
  if (w.empty()) return false;
  for (VertexId v : w)
    if (!g.has_vertex(v)) return false;
  return valid_selection(induced(g, w));
}

bool is_subobject(const HalfEdgeGraph& g, const VertexSet& w) {
  return w.empty() || w == g.vertex_set() || is_subgraph(g, w);
}

std::vector<VertexSet> enumerate_subgraphs(const HalfEdgeGraph& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  if (n > 24) throw BoundExceeded("subgraph scan limited to 24 vertices, graph has " + std::to_string(n));
  std::vector<VertexSet> out;
  if (n < 2) return out;
  for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
    VertexSet w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) w.insert(verts[i]);
    if (valid_selection(induced(g, w))) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> subobjects(const HalfEdgeGraph& g) {
  std::vector<VertexSet> out{VertexSet{}};
  for (auto& w : enumerate_subgraphs(g)) out.push_back(std::move(w));
  if (!g.empty()) out.push_back(g.vertex_set());
  return out;
}

HalfEdgeGraph contract(const HalfEdgeGraph& g, const VertexSet& w) {
  if (!is_subgraph(g, w)) throw InvalidArgument("vertex set is not a subgraph");
  HalfEdgeGraph out = g;
  for (const auto& comp : components(induced(g, w))) {
    std::vector<HalfEdgeId> legs;
    std::vector<HalfEdgeId> inner;
    for (VertexId v : comp)
      for (HalfEdgeId h : out.half_edges_at(v)) {
        auto p = out.partner(h);
        if (p && comp.count(out.vertex_of(*p)))
          inner.push_back(h);
        else
          legs.push_back(h);
      }
    if (legs.size() == 3) {
      std::vector<std::optional<HalfEdgeId>> partners;
      for (HalfEdgeId h : legs) partners.push_back(out.partner(h));
      for (VertexId v : comp) out.remove_vertex(v);
      const VertexId fresh = *comp.begin();
      out.add_vertex(fresh);
      for (std::size_t i = 0; i < legs.size(); ++i) {
        out.add_half_edge(legs[i], fresh);
        if (partners[i]) out.pair(legs[i], *partners[i]);
      }
    } else {
      auto p0 = out.partner(legs[0]);
      auto p1 = out.partner(legs[1]);
      if (p0 && *p0 == legs[1])
        throw InvalidArgument("contracting a 2-leg component whose legs are joined would leave a bare edge");
      for (VertexId v : comp) out.remove_vertex(v);
      if (p0 && p1) out.pair(*p0, *p1);
    }
  }
  return out;
}

HalfEdgeGraph quotient(const HalfEdgeGraph& g, const VertexSet& w) {
  if (w.empty()) return g;
  if (w == g.vertex_set()) return {};
  if (!is_subgraph(g, w)) throw InvalidArgument("vertex set is not a subobject");
  HalfEdgeGraph rest = g;
  VertexSet remaining = w;
  for (const auto& comp : components(g)) {
    if (std::includes(w.begin(), w.end(), comp.begin(), comp.end())) {
      for (VertexId v : comp) {
        rest.remove_vertex(v);
        remaining.erase(v);
      }
    }
  }
  if (remaining.empty()) return rest;
  return contract(rest, remaining);
}

HalfEdgeGraph shifted(const HalfEdgeGraph& g, int dv, int dh) {
  HalfEdgeGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v + dv);
  for (HalfEdgeId h : g.half_edges()) out.add_half_edge(h + dh, g.vertex_of(h) + dv);
  for (const auto& [a, b] : g.internal_edges()) out.pair(a + dh, b + dh);
  return out;
}

HalfEdgeGraph disjoint_union(const HalfEdgeGraph& a, const HalfEdgeGraph& b) {
  HalfEdgeGraph out = a;
  const HalfEdgeGraph moved = shifted(b, a.max_vertex_id() + 1, a.max_half_edge_id() + 1);
  for (VertexId v : moved.vertices()) out.add_vertex(v);
  for (HalfEdgeId h : moved.half_edges()) out.add_half_edge(h, moved.vertex_of(h));
  for (const auto& [x, y] : moved.internal_edges()) out.pair(x, y);
  return out;
}

namespace {

// g2 together with a shifted copy of g1; `shift` receives the half-edge
// offset applied to g1.
HalfEdgeGraph merged(const HalfEdgeGraph& g2, const HalfEdgeGraph& g1, int& shift) {
  shift = g2.max_half_edge_id() + 1;
  const HalfEdgeGraph moved = shifted(g1, g2.max_vertex_id() + 1, shift);
  HalfEdgeGraph out = g2;
  for (VertexId v : moved.vertices()) out.add_vertex(v);
  for (HalfEdgeId h : moved.half_edges()) out.add_half_edge(h, moved.vertex_of(h));
  for (const auto& [x, y] : moved.internal_edges()) out.pair(x, y);
  return out;
}

void check_bijection(const HalfEdgeMap& f, const std::vector<HalfEdgeId>& from,
                     std::vector<HalfEdgeId> to) {
  std::vector<HalfEdgeId> keys, values;
  for (const auto& [k, v] : f) {
    keys.push_back(k);
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  std::sort(to.begin(), to.end());
  if (keys != from || values != to) throw InvalidArgument("f is not a bijection onto the insertion site");
}

}  // namespace

HalfEdgeGraph insert_at_vertex(const HalfEdgeGraph& g2, VertexId v, const HalfEdgeMap& f,
                               const HalfEdgeGraph& g1) {
  const auto legs = g1.externals();
  if (legs.size() != 3) throw InvalidArgument("vertex insertion needs a graph with 3 external legs");
  if (!g2.has_vertex(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
  const auto site = g2.half_edges_at(v);
  if (site.size() != 3) throw InvalidArgument("insertion vertex is not trivalent");
  check_bijection(f, legs, site);
  int shift = 0;
  HalfEdgeGraph out = merged(g2, g1, shift);
  HalfEdgeMap inverse;
  for (const auto& [leg, target] : f) inverse[target] = leg;
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> joins;
  for (const auto& [leg, target] : f) {
    auto p = g2.partner(target);
    if (!p) continue;
    if (g2.vertex_of(*p) == v) {
      // self-loop at v: join the two legs that replace it
      if (leg < inverse.at(*p)) joins.emplace_back(leg + shift, inverse.at(*p) + shift);
    } else {
      joins.emplace_back(leg + shift, *p);
    }
  }
  out.remove_vertex(v);
  for (const auto& [a, b] : joins) out.pair(a, b);
  return out;
}

HalfEdgeGraph insert_at_edge(const HalfEdgeGraph& g2, std::pair<HalfEdgeId, HalfEdgeId> e,
                             const HalfEdgeMap& f, const HalfEdgeGraph& g1) {
  const auto legs = g1.externals();
  if (legs.size() != 2) throw InvalidArgument("edge insertion needs a graph with 2 external legs");
  auto p = g2.has_half_edge(e.first) ? g2.partner(e.first) : std::nullopt;
  if (!p || *p != e.second) throw InvalidArgument("insertion site is not an internal edge");
  check_bijection(f, legs, {e.first, e.second});
  int shift = 0;
  HalfEdgeGraph out = merged(g2, g1, shift);
  out.unpair(e.first);
  for (const auto& [leg, target] : f) out.pair(leg + shift, target);
  return out;
}

HalfEdgeGraph insert_at_leg(const HalfEdgeGraph& g2, HalfEdgeId leg, HalfEdgeId joined,
                            const HalfEdgeGraph& g1) {
  const auto legs = g1.externals();
  if (legs.size() != 2) throw InvalidArgument("leg insertion needs a graph with 2 external legs");
  if (!g2.has_half_edge(leg) || g2.partner(leg)) throw InvalidArgument("insertion site is not an external leg");
  if (joined != legs[0] && joined != legs[1]) throw InvalidArgument("joined half-edge is not a leg of g1");
  int shift = 0;
  HalfEdgeGraph out = merged(g2, g1, shift);
  out.pair(leg, joined + shift);
  return out;
}

bool is_primitive(const HalfEdgeGraph& g) {
  if (!is_connected(g)) throw InvalidArgument("is_primitive needs a connected graph");
  return enumerate_subgraphs(g).empty();
}

}  // namespace rhall
