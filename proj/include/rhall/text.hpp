#pragma once

// Text formats: tree and forest literals, labeled forest literals, the
// line-oriented graph format.

#include <string>
#include <string_view>

#include "rhall/forest.hpp"
#include "rhall/graph.hpp"

namespace rhall {

/// Nested parentheses, e.g. "(()())". Throws ParseError.
RootedTree parse_tree(std::string_view text);
/// Tree literals separated by single spaces, or "0".
Forest parse_forest(std::string_view text);

/// Labeled literal, e.g. "4(7(1,5),3(2,6)) 8". Throws ParseError, or
/// InvalidArgument on repeated labels.
LabeledForest parse_labeled_forest(std::string_view text);

/// Lines "v <id>", "h <id> <vertex>", "p <hid> <hid>"; '#' starts a comment
/// and ';' also ends a line. Throws ParseError on syntax and InvalidGraph on
/// inconsistent ids. The result is not checked for the phi^3 rules.
HalfEdgeGraph parse_graph(std::string_view text);
/// Multi-line form of the graph, ids as stored.
std::string serialize_graph(const HalfEdgeGraph& g);

}  // namespace rhall
