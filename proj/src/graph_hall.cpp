#include "rhall/graph_hall.hpp"

#include <algorithm>

#include "rhall/error.hpp"
#include "rhall/text.hpp"

namespace rhall {

LinearCombo graph_basis(const HalfEdgeGraph& g) { return LinearCombo::basis(canonical_form(g)); }

HalfEdgeGraph graph_from_key(const std::string& key) { return parse_graph(key); }

namespace {

// Calls `emit` with every insertion of g1 into g2 at vertices or internal
// edges; with `legs` set, 2-leg graphs are also attached to external legs.
template <typename Emit>
void each_insertion(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, bool legs, Emit&& emit) {
  const auto ext = g1.externals();
  if (ext.size() == 3) {
    for (VertexId v : g2.vertices()) {
      auto site = g2.half_edges_at(v);
      std::sort(site.begin(), site.end());
      do {
        HalfEdgeMap f;
        for (std::size_t i = 0; i < 3; ++i) f[ext[i]] = site[i];
        emit(insert_at_vertex(g2, v, f, g1));
      } while (std::next_permutation(site.begin(), site.end()));
    }
  } else if (ext.size() == 2) {
    for (const auto& [a, b] : g2.internal_edges()) {
      emit(insert_at_edge(g2, {a, b}, {{ext[0], a}, {ext[1], b}}, g1));
      emit(insert_at_edge(g2, {a, b}, {{ext[0], b}, {ext[1], a}}, g1));
    }
    if (legs)
      for (HalfEdgeId leg : g2.externals()) {
        emit(insert_at_leg(g2, leg, ext[0], g1));
        emit(insert_at_leg(g2, leg, ext[1], g1));
      }
  } else {
    throw InvalidArgument("inserted graph must have 2 or 3 external legs, found " + std::to_string(ext.size()));
  }
}

template <typename F>
LinearCombo bilinear(const LinearCombo& a, const LinearCombo& b, F&& f) {
  LinearCombo out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out += (ca * cb) * f(graph_from_key(ka), graph_from_key(kb));
  return out;
}

}  // namespace

LinearCombo prelie_star(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2) {
  if (!is_connected(g1)) throw InvalidArgument("the inserted graph must be connected");
  LinearCombo out;
  each_insertion(g1, g2, false, [&](const HalfEdgeGraph& g) { out.add(canonical_form(g), 1); });
  return out;
}

LinearCombo prelie_star(const LinearCombo& a, const LinearCombo& b) {
  return bilinear(a, b, [](const HalfEdgeGraph& x, const HalfEdgeGraph& y) { return prelie_star(x, y); });
}

LinearCombo bracket_star(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2) {
  return prelie_star(g1, g2) - prelie_star(g2, g1);
}

LinearCombo bracket_star(const LinearCombo& a, const LinearCombo& b) { return prelie_star(a, b) - prelie_star(b, a); }

Integer subgraph_count_a(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, const HalfEdgeGraph& g) {
  const auto k1 = canonical_form(g1);
  const auto k2 = canonical_form(g2);
  Integer count = 0;
  for (const auto& w : enumerate_subgraphs(g)) {
    if (w.size() != g1.vertex_count()) continue;
    if (canonical_form(induced(g, w)) == k1 && canonical_form(contract(g, w)) == k2) ++count;
  }
  return count;
}

LinearCombo prelie_sharp(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2) {
  LinearCombo out;
  for (const auto& [key, c] : prelie_star(g1, g2)) out.add(key, Rational(subgraph_count_a(g1, g2, graph_from_key(key))));
  return out;
}

LinearCombo prelie_sharp(const LinearCombo& a, const LinearCombo& b) {
  return bilinear(a, b, [](const HalfEdgeGraph& x, const HalfEdgeGraph& y) { return prelie_sharp(x, y); });
}

LinearCombo bracket_sharp(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2) {
  return prelie_sharp(g1, g2) - prelie_sharp(g2, g1);
}

LinearCombo bracket_sharp(const LinearCombo& a, const LinearCombo& b) {
  return prelie_sharp(a, b) - prelie_sharp(b, a);
}

LinearCombo aut_scale(const LinearCombo& x) {
  LinearCombo out;
  for (const auto& [key, c] : x) out.add(key, c * Rational(aut_order(graph_from_key(key))));
  return out;
}

Integer structure_constant_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, const HalfEdgeGraph& k) {
  if (g1.vertex_count() > k.vertex_count()) return 0;
  const auto k1 = canonical_form(g1);
  const auto k2 = canonical_form(g2);
  Integer count = 0;
  for (const auto& w : subobjects(k)) {
    if (w.size() != g1.vertex_count()) continue;
    if (canonical_form(induced(k, w)) == k1 && canonical_form(quotient(k, w)) == k2) ++count;
  }
  return count;
}

LinearCombo hall_product_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2) {
  std::map<std::string, HalfEdgeGraph> current{{canonical_form(g2), g2}};
  for (const auto& comp : components(g1)) {
    const auto piece = induced(g1, comp);
    std::map<std::string, HalfEdgeGraph> next;
    auto keep = [&next](HalfEdgeGraph g) {
      auto key = canonical_form(g);
      next.emplace(std::move(key), std::move(g));
    };
    for (const auto& [key, x] : current) {
      keep(disjoint_union(x, piece));
      each_insertion(piece, x, true, keep);
    }
    current = std::move(next);
  }
  LinearCombo out;
  for (const auto& [key, k] : current) out.add(key, Rational(structure_constant_graphs(g1, g2, k)));
  return out;
}

const HallOps& graph_hall_ops() {
  static const HallOps ops{
      [](const std::string& a, const std::string& b) {
        return hall_product_graphs(graph_from_key(a), graph_from_key(b));
      },
      [](const std::string& key) {
        const auto g = graph_from_key(key);
        std::vector<std::string> parts;
        for (const auto& comp : components(g)) parts.push_back(canonical_form(induced(g, comp)));
        std::sort(parts.begin(), parts.end());
        return parts;
      },
      [](std::vector<std::string> parts) {
        HalfEdgeGraph g;
        for (const auto& p : parts) g = disjoint_union(g, graph_from_key(p));
        return canonical_form(g);
      },
      "0"};
  return ops;
}

LinearCombo hall_product_graphs(const LinearCombo& a, const LinearCombo& b) {
  return hall_multiply(graph_hall_ops(), a, b);
}

PairCombo coproduct_graphs(const LinearCombo& a) { return hall_coproduct(graph_hall_ops(), a); }

Rational counit_graphs(const LinearCombo& a) { return hall_counit(graph_hall_ops(), a); }

LinearCombo antipode_graphs(const LinearCombo& a) { return hall_antipode(graph_hall_ops(), a); }

int graph_degree(const std::string& key) { return loop_number(graph_from_key(key)); }

namespace {

void add_class(PrimitiveClass& into, const PrimitiveClass& from) {
  for (const auto& [key, m] : from) into[key] += m;
}

std::vector<VertexSet> primitive_subgraphs(const HalfEdgeGraph& c) {
  std::vector<VertexSet> out;
  for (const auto& w : enumerate_subgraphs(c)) {
    const auto sub = induced(c, w);
    if (is_connected(sub) && enumerate_subgraphs(sub).empty()) out.push_back(w);
  }
  return out;
}

std::set<PrimitiveClass> connected_choices(const HalfEdgeGraph& c, bool first_only);

std::set<PrimitiveClass> all_choices(const HalfEdgeGraph& g, bool first_only) {
  std::set<PrimitiveClass> acc{PrimitiveClass{}};
  for (const auto& comp : components(g)) {
    std::set<PrimitiveClass> next;
    for (const auto& part : connected_choices(induced(g, comp), first_only))
      for (const auto& prefix : acc) {
        PrimitiveClass sum = prefix;
        add_class(sum, part);
        next.insert(std::move(sum));
      }
    acc = std::move(next);
  }
  return acc;
}

std::set<PrimitiveClass> connected_choices(const HalfEdgeGraph& c, bool first_only) {
  if (loop_number(c) == 0) return {PrimitiveClass{}};
  const auto subs = primitive_subgraphs(c);
  if (subs.empty()) return {PrimitiveClass{{canonical_form(c), 1}}};
  std::set<PrimitiveClass> out;
  for (const auto& w : subs) {
    const PrimitiveClass head{{canonical_form(induced(c, w)), 1}};
    for (const auto& rest : all_choices(contract(c, w), first_only)) {
      PrimitiveClass sum = head;
      add_class(sum, rest);
      out.insert(std::move(sum));
    }
    if (first_only) break;
  }
  return out;
}

}  // namespace

PrimitiveClass grothendieck_class(const HalfEdgeGraph& g) { return *all_choices(g, true).begin(); }

std::set<PrimitiveClass> grothendieck_class_choices(const HalfEdgeGraph& g) { return all_choices(g, false); }

std::string to_string(const PrimitiveClass& c) {
  std::string out;
  for (const auto& [key, m] : c) out += std::to_string(m) + " × " + key + "\n";
  return out;
}

}  // namespace rhall
