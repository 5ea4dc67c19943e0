#include "rhall/fixtures.hpp"

#include <map>

#include "rhall/error.hpp"
#include "rhall/text.hpp"

namespace rhall {

namespace detail {
const std::map<std::string, const char*>& fixture_table();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::fixture_table()) out.push_back(name);
  return out;
}

const char* fixture_text(std::string_view name) {
  const auto& table = detail::fixture_table();
  auto it = table.find(std::string(name));
  return it == table.end() ? nullptr : it->second;
}

FeynmanGraph fixture_graph(std::string_view name) {
  const char* text = fixture_text(name);
  if (!text) throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
  return validate_feynman(parse_graph(text));
}

VertexSet gamma_eg_subgraph() { return {3, 4}; }

LabeledForest cut_example_tree() { return parse_labeled_forest("4(7(1,5),3(2,6))"); }

ForestCut cut_example_cut() { return ForestCut{{Cut::edges({7, 2})}}; }

LabeledForest morphism_example_source() { return parse_labeled_forest("2(1(3)) 6(5,8(4))"); }

LabeledForest morphism_example_target() { return parse_labeled_forest("7(6(9,2))"); }

}  // namespace rhall
