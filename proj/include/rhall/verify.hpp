#pragma once

// Exhaustive identity checks at bounded size. Each suite returns a report
// with the number of identities checked and the first failure found.

#include <functional>
#include <string>
#include <vector>

#include "rhall/graph.hpp"
#include "rhall/hall_core.hpp"

namespace rhall {

struct VerifyReport {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  /// First failing instance, empty when ok.
  std::string counterexample;

  /// Records one check; keeps the first failure only.
  template <typename Describe>
  void expect(bool holds, Describe&& describe) {
    ++checks;
    if (!holds && ok) {
      ok = false;
      counterexample = describe();
    }
  }
};

/// BUB and TRI closed under insertion, connected, up to max_loops loops.
std::vector<HalfEdgeGraph> graph_test_family(int max_loops);
/// Keys of the empty graph and of all disjoint unions of family members
/// with at most max_loops loops in total.
std::vector<std::string> graph_test_objects(int max_loops);

/// Unit, associativity, coassociativity, counit, compatibility of product
/// and coproduct, and the antipode identities on the given basis keys.
/// Products are taken of tuples whose degrees sum to at most max_degree.
VerifyReport verify_hopf(const std::string& name, const HallOps& ops, const std::vector<std::string>& keys,
                         const std::function<int(const std::string&)>& degree, int max_degree);

VerifyReport verify_hopf_trees(int max_vertices);
VerifyReport verify_hopf_graphs(int max_loops);
/// Associator symmetry for tree grafting (triples up to max_vertices in
/// total) and for both graph products on triples from {BUB, TRI}.
VerifyReport verify_prelie(int max_vertices);
/// Antisymmetry and the Jacobi identity on the same families.
VerifyReport verify_jacobi(int max_vertices);
/// Hall coefficients against short exact sequence counts divided by the
/// automorphism orders, for forest pairs up to max_vertices in total.
VerifyReport verify_hall_oracle_trees(int max_vertices);
/// The same for graph pairs of the test family up to max_loops in total.
VerifyReport verify_hall_oracle_graphs(int max_loops);
VerifyReport verify_hall_oracle(int max_vertices);
/// aut_scale carries insertion to subgraph counting on the test family.
VerifyReport verify_phi_intertwiner(int max_loops);
/// The bracket of BUB and TRI, the seven-vertex cut and the three-loop
/// quotient.
VerifyReport verify_paper_example();
/// j([T1, T2]) = T1 x T2 - T2 x T1 in the forest Hall algebra.
VerifyReport verify_j_embedding(int max_vertices);
/// Identity laws, associativity of composition and the mono/epi torsor
/// counts for forests up to max_vertices vertices and small graphs.
VerifyReport verify_category(int max_vertices);
VerifyReport verify_category_forests(int max_vertices);
/// Graphs of the test family with at most max_vertices vertices, plus the
/// empty graph and the corolla.
VerifyReport verify_category_graphs(int max_vertices);

std::vector<std::string> verify_suite_names();
/// Runs a suite by name; max_size <= 0 selects its default bound. Throws
/// InvalidArgument for an unknown name.
VerifyReport run_verify_suite(const std::string& name, int max_size);

}  // namespace rhall
