#pragma once

// Named example objects: the small graphs BUB, TRI, COROLLA, G_a, G_b,
// Gamma_eg and the quotient Gamma_eg_quotient, plus the labeled forests used
// in the cut and morphism examples.

#include <string>
#include <string_view>
#include <vector>

#include "rhall/forest.hpp"
#include "rhall/graph.hpp"

namespace rhall {

std::vector<std::string> fixture_names();
/// The fixture's graph-format text, or nullptr for an unknown name.
const char* fixture_text(std::string_view name);
/// Parsed and validated fixture. Throws InvalidArgument for unknown names.
FeynmanGraph fixture_graph(std::string_view name);

/// The two-vertex subgraph {v3, v4} of Gamma_eg.
VertexSet gamma_eg_subgraph();

/// Seven-vertex tree 4(7(1,5),3(2,6)) used for the cut example.
LabeledForest cut_example_tree();
/// Cut severing the edges above 7 and above 2.
ForestCut cut_example_cut();

/// Source and target of the worked forest morphism: 2(1(3)) 6(5,8(4)) and
/// 7(6(9,2)).
LabeledForest morphism_example_source();
LabeledForest morphism_example_target();

}  // namespace rhall
