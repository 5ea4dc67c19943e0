#pragma once

// Lie and Hall algebras of Feynman graphs. Basis keys are canonical_form
// strings; "0" is the empty graph.

#include <map>
#include <set>
#include <string>

#include "rhall/graph.hpp"
#include "rhall/hall_core.hpp"
#include "rhall/linear_combo.hpp"

namespace rhall {

LinearCombo graph_basis(const HalfEdgeGraph& g);
/// Parses a canonical key back into a graph.
HalfEdgeGraph graph_from_key(const std::string& key);

/// Insertions of g1 into g2: at every vertex through all 6 leg bijections
/// (3 legs) or into every internal edge through both bijections (2 legs).
LinearCombo prelie_star(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2);
LinearCombo prelie_star(const LinearCombo& a, const LinearCombo& b);
LinearCombo bracket_star(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2);
LinearCombo bracket_star(const LinearCombo& a, const LinearCombo& b);

/// Proper subgraphs gamma of g with gamma = g1 and g/gamma = g2.
Integer subgraph_count_a(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, const HalfEdgeGraph& g);

/// sum a(g1, g2; G) G over the graphs G in the support of prelie_star.
LinearCombo prelie_sharp(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2);
LinearCombo prelie_sharp(const LinearCombo& a, const LinearCombo& b);
LinearCombo bracket_sharp(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2);
LinearCombo bracket_sharp(const LinearCombo& a, const LinearCombo& b);

/// G -> |Aut(G)| G.
LinearCombo aut_scale(const LinearCombo& x);

/// Subobjects gamma of k (the empty one and k itself included) with
/// gamma = g1 and k/gamma = g2.
Integer structure_constant_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, const HalfEdgeGraph& k);
LinearCombo hall_product_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2);
LinearCombo hall_product_graphs(const LinearCombo& a, const LinearCombo& b);
PairCombo coproduct_graphs(const LinearCombo& a);
Rational counit_graphs(const LinearCombo& a);
LinearCombo antipode_graphs(const LinearCombo& a);
/// Loop number.
int graph_degree(const std::string& key);

const HallOps& graph_hall_ops();

/// Multiset of primitive graph keys.
using PrimitiveClass = std::map<std::string, int>;

/// Splits off primitive subgraphs one at a time (taking the first in
/// enumeration order) until only primitive pieces remain.
PrimitiveClass grothendieck_class(const HalfEdgeGraph& g);
/// The results of every possible sequence of choices.
std::set<PrimitiveClass> grothendieck_class_choices(const HalfEdgeGraph& g);
/// Lines "<multiplicity> × <key>".
std::string to_string(const PrimitiveClass& c);

}  // namespace rhall
