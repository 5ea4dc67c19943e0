// One line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rhall/fixtures.hpp"
#include "rhall/forest.hpp"
#include "rhall/graph.hpp"
#include "rhall/graph_hall.hpp"
#include "rhall/text.hpp"
#include "rhall/verify.hpp"

using namespace rhall;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<VerifyReport()> run;
};

VerifyReport merge(std::string name, std::initializer_list<VerifyReport> parts) {
  VerifyReport r;
  r.name = std::move(name);
  std::size_t checks = 0;
  for (const auto& p : parts) {
    checks += p.checks;
    r.expect(p.ok, [&] { return p.name + ": " + p.counterexample; });
  }
  r.checks = checks;
  return r;
}

// Unlabeled rooted trees by the Euler transform recurrence.
std::vector<long> rooted_tree_counts(int n) {
  std::vector<long> a(n + 1, 0);
  a[1] = 1;
  for (int m = 1; m < n; ++m) {
    long s = 0;
    for (int k = 1; k <= m; ++k) {
      long d_sum = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) d_sum += d * a[d];
      s += d_sum * a[m - k + 1];
    }
    a[m + 1] = s / m;
  }
  return a;
}

VerifyReport paper_bracket() {
  VerifyReport r;
  r.name = "bracket";
  LinearCombo expected = 6 * graph_basis(fixture_graph("G_a"));
  expected -= 12 * graph_basis(fixture_graph("G_b"));
  const auto got = bracket_star(fixture_graph("BUB"), fixture_graph("TRI"));
  r.expect(got == expected, [&] { return "[BUB, TRI] =\n" + got.to_string(); });
  return r;
}

VerifyReport paper_cut() {
  VerifyReport r;
  r.name = "cut";
  const auto pieces = apply_cut(cut_example_tree(), cut_example_cut());
  r.expect(pieces.branches == parse_labeled_forest("7(1,5) 2"),
           [&] { return "P = " + pieces.branches.to_string(); });
  r.expect(pieces.trunk == parse_labeled_forest("4(3(6))"), [&] { return "R = " + pieces.trunk.to_string(); });
  return r;
}

VerifyReport paper_quotient() {
  VerifyReport r;
  r.name = "quotient";
  const auto q = contract(fixture_graph("Gamma_eg"), gamma_eg_subgraph());
  r.expect(is_isomorphic(q, fixture_graph("Gamma_eg_quotient")), [&] { return serialize_graph(q); });
  return r;
}

VerifyReport structural_counts() {
  VerifyReport r;
  r.name = "counts";
  const auto oracle = rooted_tree_counts(6);
  for (int n = 1; n <= 6; ++n) {
    const auto got = enumerate_trees(static_cast<std::size_t>(n)).size();
    r.expect(static_cast<long>(got) == oracle[n],
             [&] { return "n = " + std::to_string(n) + ": " + std::to_string(got) + " trees"; });
  }
  const auto g = fixture_graph("Gamma_eg");
  const auto subs = enumerate_subgraphs(g);
  r.expect(subs == std::vector<VertexSet>{gamma_eg_subgraph()}, [&] {
    std::string s = std::to_string(subs.size()) + " proper subgraphs of Gamma_eg, expected only {3,4}:";
    for (const auto& w : subs) {
      s += " {";
      for (auto v : w) s += (s.back() == '{' ? "" : ",") + std::to_string(v);
      s += "}";
    }
    return s;
  });
  const PrimitiveClass expected{{canonical_form(fixture_graph("BUB")), 2}, {canonical_form(fixture_graph("TRI")), 1}};
  r.expect(grothendieck_class(g) == expected, [&] { return "class is\n" + to_string(grothendieck_class(g)); });
  const auto choices = grothendieck_class_choices(g);
  r.expect(choices.size() == 1 && *choices.begin() == expected,
           [&] { return std::to_string(choices.size()) + " distinct classes over decomposition orders"; });
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bracket of bubble and triangle", 1, paper_bracket},
      {2, "seven-vertex cut example", 1, paper_cut},
      {3, "three-loop quotient example", 1, paper_quotient},
      {4, "Hall vs exact sequences, forests <= 5 vertices", 120, [] { return verify_hall_oracle_trees(5); }},
      {5, "Hall vs exact sequences, graphs <= 2 loops", 300, [] { return verify_hall_oracle_graphs(2); }},
      {6, "Hopf axioms, forests <= 6, graphs <= 2 loops", 300,
       [] { return merge("hopf", {verify_hopf_trees(6), verify_hopf_graphs(2)}); }},
      {7, "pre-Lie, antisymmetry, Jacobi", 300, [] { return merge("lie", {verify_prelie(7), verify_jacobi(7)}); }},
      {8, "embedding of the tree Lie algebra", 60, [] { return verify_j_embedding(6); }},
      {9, "automorphism scaling intertwines brackets", 120, [] { return verify_phi_intertwiner(2); }},
      {10, "tree counts, subgraphs and class of Gamma_eg", 60, structural_counts},
      {11, "category composition and torsors", 300, [] { return verify_category(4); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.counterexample = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.ok && secs < c.limit_seconds;
    all = all && pass;
    std::printf("criterion %2d %s  %8.3fs / %4.0fs  %zu checks  %s\n", c.id, pass ? "PASS" : "FAIL", secs,
                c.limit_seconds, r.checks, c.title.c_str());
    if (!r.ok) std::printf("    %s\n", r.counterexample.c_str());
    else if (!pass) std::printf("    over the time limit\n");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
