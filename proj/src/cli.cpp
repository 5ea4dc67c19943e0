#include "rhall/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rhall/category.hpp"
#include "rhall/error.hpp"
#include "rhall/fixtures.hpp"
#include "rhall/graph_hall.hpp"
#include "rhall/text.hpp"
#include "rhall/tree_hall.hpp"
#include "rhall/verify.hpp"

namespace rhall::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

std::string trimmed(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

// Fixture name, then file path, then a shipped fixture file name, then inline
// text.
HalfEdgeGraph load_graph_unchecked(const std::string& arg) {
  if (const char* text = fixture_text(arg)) return parse_graph(text);
  if (is_file(arg)) return parse_graph(read_file(arg));
  if (arg.ends_with(".fg"))
    if (const char* text = fixture_text(std::string_view(arg).substr(0, arg.size() - 3))) return parse_graph(text);
  return parse_graph(arg);
}

FeynmanGraph load_graph(const std::string& arg) { return validate_feynman(load_graph_unchecked(arg)); }

std::string literal(const std::string& arg) { return is_file(arg) ? trimmed(read_file(arg)) : arg; }

Forest load_forest(const std::string& arg) { return parse_forest(literal(arg)); }

RootedTree load_tree(const std::string& arg) { return parse_tree(literal(arg)); }

// Labeled literal, or an unlabeled one labeled 1, 2, ... in preorder.
LabeledForest load_labeled(const std::string& arg) {
  const auto text = literal(arg);
  try {
    return LabeledForest::from_forest(parse_forest(text), 1);
  } catch (const ParseError&) {
    return parse_labeled_forest(text);
  }
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    item = trimmed(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("not a vertex id: '" + item + "'");
    }
  }
  return out;
}

HalfEdgeMap parse_leg_map(const std::string& text) {
  HalfEdgeMap out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidArgument("leg map entries look like leg:half-edge, got '" + item + "'");
    try {
      out[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw InvalidArgument("not a half-edge id in '" + item + "'");
    }
  }
  return out;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (VertexId v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Writes results as plain text or as JSON with the same content.
class Emitter {
 public:
  Emitter(std::ostream& out, const bool& as_json) : out_(out), json_(as_json) {}

  void combo(const LinearCombo& c) {
    if (!json_) {
      out_ << c.to_string();
      return;
    }
    json terms = json::array();
    for (const auto& [key, q] : c) terms.push_back({{"coefficient", to_string(q)}, {"key", key}});
    out_ << json{{"terms", terms}}.dump(2) << "\n";
  }

  void pairs(const PairCombo& c) {
    if (!json_) {
      out_ << c.to_string();
      return;
    }
    json terms = json::array();
    for (const auto& [key, q] : c)
      terms.push_back({{"coefficient", to_string(q)}, {"left", key.first}, {"right", key.second}});
    out_ << json{{"terms", terms}}.dump(2) << "\n";
  }

  void value(const std::string& v) {
    if (json_)
      out_ << json{{"value", v}}.dump(2) << "\n";
    else
      out_ << v << (!v.empty() && v.back() == '\n' ? "" : "\n");
  }

  void lines(const std::vector<std::string>& items) {
    if (json_) {
      out_ << json{{"items", items}}.dump(2) << "\n";
      return;
    }
    for (const auto& item : items) out_ << item << "\n";
  }

  void report(const std::vector<VerifyReport>& reports) {
    if (json_) {
      json all = json::array();
      for (const auto& r : reports)
        all.push_back({{"suite", r.name}, {"ok", r.ok}, {"checks", r.checks}, {"counterexample", r.counterexample}});
      out_ << all.dump(2) << "\n";
      return;
    }
    for (const auto& r : reports) {
      out_ << r.name << ": " << (r.ok ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
      if (!r.ok) out_ << "counterexample: " << r.counterexample << "\n";
    }
  }

 private:
  std::ostream& out_;
  const bool& json_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall algebras of rooted forests and Feynman graphs", "rhall"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");
  Emitter emit(out, as_json);
  int status = kOk;
  std::function<void()> action;
  auto on = [&action](CLI::App* cmd, std::function<void()> f) { cmd->callback([&action, f] { action = f; }); };

  // Positional storage shared by the subcommands; only one runs.
  std::string a, b, c;
  int count = 0;
  int index_i = 0, index_j = 0;
  bool flag = false;
  int max_size = 0;
  std::string where_vertex, where_edge, where_leg, leg_map;

  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [](CLI::App* g, const char* name, const char* help) {
    auto* cmd = g->add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  // tree
  auto* tree = group("tree", "rooted trees and forests");
  auto* t_canon = leaf(tree, "canon", "canonical literal of a forest");
  t_canon->add_option("forest", a)->required();
  on(t_canon, [&] { emit.value(load_forest(a).encoding()); });
  auto* t_aut = leaf(tree, "aut", "automorphism group order");
  t_aut->add_option("forest", a)->required();
  on(t_aut, [&] { emit.value(aut_order(load_forest(a)).get_str()); });
  auto* t_cuts = leaf(tree, "cuts", "admissible cuts with branch and trunk parts");
  t_cuts->add_option("forest", a, "labeled or unlabeled literal")->required();
  on(t_cuts, [&] {
    const auto f = load_labeled(a);
    std::vector<std::string> rows;
    for (const auto& cut : admissible_cuts(f)) {
      const auto pieces = apply_cut(f, cut);
      rows.push_back(cut.to_string() + " P=" + pieces.branches.to_string() + " R=" + pieces.trunk.to_string());
    }
    emit.lines(rows);
  });
  auto* t_enum = leaf(tree, "enumerate", "all trees (or forests) with n vertices");
  t_enum->add_option("n", count)->required()->check(CLI::Range(0, 12));
  t_enum->add_flag("--forests", flag, "enumerate forests instead of trees");
  on(t_enum, [&] {
    std::vector<std::string> rows;
    if (flag)
      for (const auto& f : enumerate_forests(static_cast<std::size_t>(count))) rows.push_back(f.encoding());
    else
      for (const auto& t : enumerate_trees(static_cast<std::size_t>(count))) rows.push_back(t.encoding());
    emit.lines(rows);
  });

  // treealg
  auto* talg = group("treealg", "forest Hall algebra and tree pre-Lie algebra");
  auto* ta_prod = leaf(talg, "product", "Hall product of two forests");
  ta_prod->add_option("f1", a)->required();
  ta_prod->add_option("f2", b)->required();
  on(ta_prod, [&] { emit.combo(hall_product(load_forest(a), load_forest(b))); });
  auto* ta_cop = leaf(talg, "coproduct", "coproduct of a forest");
  ta_cop->add_option("forest", a)->required();
  on(ta_cop, [&] { emit.pairs(coproduct(forest_basis(load_forest(a)))); });
  auto* ta_anti = leaf(talg, "antipode", "antipode of a forest");
  ta_anti->add_option("forest", a)->required();
  on(ta_anti, [&] { emit.combo(antipode(forest_basis(load_forest(a)))); });
  auto* ta_pl = leaf(talg, "prelie", "grafting product of two trees");
  ta_pl->add_option("t1", a)->required();
  ta_pl->add_option("t2", b)->required();
  on(ta_pl, [&] { emit.combo(prelie_tree(load_tree(a), load_tree(b))); });
  auto* ta_br = leaf(talg, "bracket", "Lie bracket of two trees");
  ta_br->add_option("t1", a)->required();
  ta_br->add_option("t2", b)->required();
  on(ta_br, [&] { emit.combo(bracket_tree(load_tree(a), load_tree(b))); });
  auto* ta_h = leaf(talg, "hconst", "structure constant: cuts of K with branch F1 and trunk F2");
  ta_h->add_option("f1", a)->required();
  ta_h->add_option("f2", b)->required();
  ta_h->add_option("k", c)->required();
  on(ta_h, [&] { emit.value(structure_constant_h(load_forest(a), load_forest(b), load_forest(c)).get_str()); });

  // graph
  auto* graph = group("graph", "Feynman graphs");
  auto* g_val = leaf(graph, "validate", "check the phi^3 rules");
  g_val->add_option("graph", a, "fixture name, file or inline text")->required();
  on(g_val, [&] {
    const auto g = load_graph(a);
    emit.value("valid: " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.internal_edges().size()) + " internal edges, " +
               std::to_string(g.externals().size()) + " external legs, " + std::to_string(loop_number(g)) +
               " loops");
  });
  auto* g_canon = leaf(graph, "canon", "canonical form");
  g_canon->add_option("graph", a)->required();
  on(g_canon, [&] { emit.value(canonical_form(load_graph(a))); });
  auto* g_aut = leaf(graph, "aut", "automorphism group order");
  g_aut->add_option("graph", a)->required();
  on(g_aut, [&] { emit.value(aut_order(load_graph(a)).get_str()); });
  auto* g_subs = leaf(graph, "subgraphs", "proper subgraphs as vertex sets");
  g_subs->add_option("graph", a)->required();
  on(g_subs, [&] {
    std::vector<std::string> rows;
    for (const auto& w : enumerate_subgraphs(load_graph(a))) rows.push_back(set_text(w));
    emit.lines(rows);
  });
  auto* g_con = leaf(graph, "contract", "contract the subgraph on the given vertices");
  g_con->add_option("graph", a)->required();
  g_con->add_option("vertices", b, "comma-separated vertex ids")->required();
  on(g_con, [&] {
    const auto g = load_graph(a);
    const auto w = parse_vertex_list(b);
    if (!is_subgraph(g, w)) throw InvalidArgument(set_text(w) + " is not a subgraph");
    emit.value(serialize_graph(contract(g, w)));
  });
  auto* g_ins = leaf(graph, "insert", "insert G1 into G2 at a vertex, an internal edge or an external leg");
  g_ins->add_option("g1", a)->required();
  g_ins->add_option("g2", b)->required();
  auto* at_v = g_ins->add_option("--vertex", where_vertex, "vertex of G2 (G1 with 3 legs)");
  auto* at_e = g_ins->add_option("--edge", where_edge, "internal edge a,b of G2 (G1 with 2 legs)");
  auto* at_l = g_ins->add_option("--leg", where_leg, "external leg of G2 (G1 with 2 legs)");
  at_v->excludes(at_e)->excludes(at_l);
  at_e->excludes(at_l);
  g_ins->add_option("--map", leg_map, "leg:half-edge pairs; defaults to sorted order");
  on(g_ins, [&] {
    const auto g1 = load_graph(a);
    const auto g2 = load_graph(b);
    const auto legs = g1.externals();
    auto default_map = [&](std::vector<HalfEdgeId> site) {
      if (!leg_map.empty()) return parse_leg_map(leg_map);
      if (site.size() != legs.size()) throw InvalidArgument("G1 has the wrong number of legs for this site");
      HalfEdgeMap f;
      for (std::size_t i = 0; i < legs.size(); ++i) f[legs[i]] = site[i];
      return f;
    };
    HalfEdgeGraph result;
    if (!where_vertex.empty()) {
      const auto vs = parse_vertex_list(where_vertex);
      if (vs.size() != 1 || !g2.has_vertex(*vs.begin())) throw InvalidArgument("unknown vertex " + where_vertex);
      result = insert_at_vertex(g2, *vs.begin(), default_map(g2.half_edges_at(*vs.begin())), g1);
    } else if (!where_edge.empty()) {
      const auto hs = parse_vertex_list(where_edge);
      if (hs.size() != 2) throw InvalidArgument("an edge is given as two half-edge ids");
      const std::pair<HalfEdgeId, HalfEdgeId> e{*hs.begin(), *hs.rbegin()};
      result = insert_at_edge(g2, e, default_map({e.first, e.second}), g1);
    } else if (!where_leg.empty()) {
      const auto hs = parse_vertex_list(where_leg);
      if (hs.size() != 1) throw InvalidArgument("a leg is one half-edge id");
      const HalfEdgeId joined = leg_map.empty() ? legs.front() : parse_leg_map(leg_map).begin()->first;
      result = insert_at_leg(g2, *hs.begin(), joined, g1);
    } else {
      throw InvalidArgument("one of --vertex, --edge or --leg is required");
    }
    emit.value(serialize_graph(result));
  });
  auto* g_prim = leaf(graph, "primitive", "connected with no proper subgraph");
  g_prim->add_option("graph", a)->required();
  on(g_prim, [&] { emit.value(is_primitive(load_graph(a)) ? "true" : "false"); });
  auto* g_class = leaf(graph, "class", "Grothendieck class as a multiset of primitives");
  g_class->add_option("graph", a)->required();
  g_class->add_flag("--all", flag, "every result over all decomposition orders");
  on(g_class, [&] {
    const auto g = load_graph(a);
    if (!flag) {
      std::vector<std::string> rows;
      for (const auto& [key, m] : grothendieck_class(g)) rows.push_back(std::to_string(m) + " × " + key);
      emit.lines(rows);
      return;
    }
    std::vector<std::string> rows;
    for (const auto& cls : grothendieck_class_choices(g)) rows.push_back(trimmed(to_string(cls)));
    emit.lines(rows);
  });
  auto* g_1pi = leaf(graph, "onepi", "one-particle irreducibility");
  g_1pi->add_option("graph", a)->required();
  on(g_1pi, [&] { emit.value(is_1pi(load_graph(a)) ? "true" : "false"); });

  // graphalg
  auto* galg = group("graphalg", "graph Lie and Hall algebras");
  auto binary = [&](const char* name, const char* help, std::function<LinearCombo(const HalfEdgeGraph&, const HalfEdgeGraph&)> f) {
    auto* cmd = leaf(galg, name, help);
    cmd->add_option("g1", a)->required();
    cmd->add_option("g2", b)->required();
    on(cmd, [&, f] { emit.combo(f(load_graph(a), load_graph(b))); });
  };
  binary("prelie-star", "insertion product", [](const auto& x, const auto& y) { return prelie_star(x, y); });
  binary("prelie-sharp", "subgraph counting product", [](const auto& x, const auto& y) { return prelie_sharp(x, y); });
  binary("bracket-star", "bracket of the insertion product",
         [](const auto& x, const auto& y) { return bracket_star(x, y); });
  binary("bracket-sharp", "bracket of the subgraph counting product",
         [](const auto& x, const auto& y) { return bracket_sharp(x, y); });
  binary("product", "Hall product", [](const auto& x, const auto& y) { return hall_product_graphs(x, y); });
  auto* ga_cop = leaf(galg, "coproduct", "Hall coproduct");
  ga_cop->add_option("graph", a)->required();
  on(ga_cop, [&] { emit.pairs(coproduct_graphs(graph_basis(load_graph(a)))); });

  // oracle
  auto* oracle = group("oracle", "categorical oracle: Hom sets, composition, exact sequences");
  auto* o_hom = leaf(oracle, "hom", "list Hom(A, B)");
  o_hom->add_option("a", a)->required();
  o_hom->add_option("b", b)->required();
  o_hom->add_flag("--graph", flag, "objects are graphs");
  on(o_hom, [&] {
    std::vector<std::string> rows;
    if (flag)
      for (const auto& m : hom_set_graphs(load_graph(a), load_graph(b))) rows.push_back(m.to_string());
    else
      for (const auto& m : hom_set_forests(load_labeled(a), load_labeled(b))) rows.push_back(m.to_string());
    emit.lines(rows);
  });
  auto* o_comp = leaf(oracle, "compose", "compose Hom(A, B)[i] with Hom(B, C)[j]");
  o_comp->add_option("a", a)->required();
  o_comp->add_option("b", b)->required();
  o_comp->add_option("c", c)->required();
  o_comp->add_option("i", index_i)->required()->check(CLI::NonNegativeNumber);
  o_comp->add_option("j", index_j)->required()->check(CLI::NonNegativeNumber);
  o_comp->add_flag("--graph", flag, "objects are graphs");
  on(o_comp, [&] {
    auto pick = [](const auto& homs, int i) {
      if (static_cast<std::size_t>(i) >= homs.size())
        throw InvalidArgument("index " + std::to_string(i) + " out of range, Hom has " + std::to_string(homs.size()));
      return homs[static_cast<std::size_t>(i)];
    };
    if (flag) {
      const auto x = load_graph(a), y = load_graph(b), z = load_graph(c);
      emit.value(compose_graph(pick(hom_set_graphs(x, y), index_i), pick(hom_set_graphs(y, z), index_j)).to_string());
    } else {
      const auto x = load_labeled(a), y = load_labeled(b), z = load_labeled(c);
      emit.value(
          compose_forest(pick(hom_set_forests(x, y), index_i), pick(hom_set_forests(y, z), index_j)).to_string());
    }
  });
  auto* o_ses = leaf(oracle, "ses", "count short exact sequences F1 -> K -> F2");
  o_ses->add_option("f1", a)->required();
  o_ses->add_option("f2", b)->required();
  o_ses->add_option("k", c)->required();
  o_ses->add_flag("--graph", flag, "objects are graphs");
  on(o_ses, [&] {
    if (flag)
      emit.value(count_short_exact_graphs(load_graph(a), load_graph(b), load_graph(c)).get_str());
    else
      emit.value(count_short_exact(load_forest(a), load_forest(b), load_forest(c)).get_str());
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  verify->fallthrough();
  auto names = verify_suite_names();
  names.push_back("all");
  verify->add_option("suite", a)->required()->check(CLI::IsMember(names));
  verify->add_option("--max-size", max_size, "size bound (vertices for forests, loops for graphs)")
      ->check(CLI::PositiveNumber);
  on(verify, [&] {
    std::vector<VerifyReport> reports;
    if (a == "all")
      for (const auto& name : verify_suite_names()) reports.push_back(run_verify_suite(name, max_size));
    else
      reports.push_back(run_verify_suite(a, max_size));
    emit.report(reports);
    for (const auto& r : reports)
      if (!r.ok) status = kVerifyFailed;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidGraph& e) {
    err << "invalid graph: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidCut& e) {
    err << "invalid cut: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOther;
  }
  return status;
}

}  // namespace rhall::cli
