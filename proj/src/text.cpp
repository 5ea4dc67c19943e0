#include "rhall/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "rhall/error.hpp"

namespace rhall {

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  RootedTree parse() {
    RootedTree t = tree();
    if (pos_ != text_.size()) fail("trailing characters after tree");
    return t;
  }

 private:
  RootedTree tree() {
    if (pos_ >= text_.size()) fail("unexpected end of tree literal");
    if (text_[pos_] != '(') fail(std::string("expected '(' but found '") + text_[pos_] + "'");
    ++pos_;
    std::vector<RootedTree> children;
    while (pos_ < text_.size() && text_[pos_] == '(') children.push_back(tree());
    if (pos_ >= text_.size()) fail("unbalanced parentheses");
    if (text_[pos_] != ')') fail(std::string("unexpected '") + text_[pos_] + "'");
    ++pos_;
    return RootedTree(std::move(children));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset_ + pos_, what); }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser(text, 0).parse(); }

Forest parse_forest(std::string_view text) {
  if (text == "0") return Forest();
  if (text.empty()) throw ParseError(0, "empty forest literal (use \"0\")");
  std::vector<RootedTree> trees;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(' ', start);
    const auto token = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    if (token.empty()) throw ParseError(start, "trees must be separated by single spaces");
    trees.push_back(TreeParser(token, start).parse());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Forest(std::move(trees));
}

namespace {

class LabeledParser {
 public:
  explicit LabeledParser(std::string_view text) : text_(text) {}

  LabeledForest parse() {
    if (text_ == "0") return LabeledForest();
    while (true) {
      node(std::nullopt);
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ' ') fail("expected a space between trees");
      ++pos_;
    }
    return LabeledForest(vertices_);
  }

 private:
  void node(std::optional<Label> parent) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a vertex label");
    if (pos_ - start > 9) throw ParseError(start, "vertex label too large");
    const Label label = static_cast<Label>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    vertices_.emplace_back(label, parent);
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        node(label);
        if (pos_ >= text_.size()) fail("unbalanced parentheses");
        if (text_[pos_] == ')') break;
        if (text_[pos_] != ',') fail(std::string("unexpected '") + text_[pos_] + "'");
        ++pos_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<Label, std::optional<Label>>> vertices_;
};

}  // namespace

LabeledForest parse_labeled_forest(std::string_view text) { return LabeledParser(text).parse(); }

namespace {

int parse_id(const std::string& token, std::size_t column) {
  if (token.empty() || token.size() > 9) throw ParseError(column, "bad id '" + token + "'");
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(column, "bad id '" + token + "'");
  return std::stoi(token);
}

}  // namespace

HalfEdgeGraph parse_graph(std::string_view text) {
  struct Line {
    std::size_t column;
    std::vector<std::pair<std::string, std::size_t>> tokens;
  };
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != '\n' && text[end] != ';' && text[end] != '#') ++end;
    std::string_view raw = text.substr(pos, end - pos);
    // a comment runs to the end of the physical line, ';' included
    if (end < text.size() && text[end] == '#')
      while (end < text.size() && text[end] != '\n') ++end;
    Line line{pos, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t s = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (s < i) line.tokens.emplace_back(std::string(raw.substr(s, i - s)), pos + s);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end >= text.size()) break;
    pos = end + 1;
  }

  if (lines.size() == 1 && lines[0].tokens.size() == 1 && lines[0].tokens[0].first == "0")
    return HalfEdgeGraph();

  HalfEdgeGraph g;
  // Vertices first, then half-edges, then pairs, so line order is free.
  for (int pass = 0; pass < 3; ++pass) {
    for (const auto& line : lines) {
      const auto& [kind, kind_col] = line.tokens[0];
      if (kind != "v" && kind != "h" && kind != "p")
        throw ParseError(kind_col, "unknown line kind '" + kind + "'");
      const std::size_t arity = kind == "v" ? 2 : 3;
      if (line.tokens.size() != arity)
        throw ParseError(line.column, "'" + kind + "' line needs " + std::to_string(arity - 1) + " ids");
      std::vector<int> ids;
      for (std::size_t k = 1; k < line.tokens.size(); ++k)
        ids.push_back(parse_id(line.tokens[k].first, line.tokens[k].second));
      if (kind == "v" && pass == 0) g.add_vertex(ids[0]);
      if (kind == "h" && pass == 1) g.add_half_edge(ids[0], ids[1]);
      if (kind == "p" && pass == 2) g.pair(ids[0], ids[1]);
    }
  }
  return g;
}

std::string serialize_graph(const HalfEdgeGraph& g) {
  if (g.empty()) return "0\n";
  std::ostringstream out;
  for (VertexId v : g.vertices()) out << "v " << v << '\n';
  for (HalfEdgeId h : g.half_edges()) out << "h " << h << ' ' << g.vertex_of(h) << '\n';
  for (const auto& [a, b] : g.internal_edges()) out << "p " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace rhall
