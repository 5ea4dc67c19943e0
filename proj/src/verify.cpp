#include "rhall/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <type_traits>
#include <unordered_map>

#include "rhall/category.hpp"
#include "rhall/error.hpp"
#include "rhall/fixtures.hpp"
#include "rhall/forest.hpp"
#include "rhall/graph_hall.hpp"
#include "rhall/text.hpp"
#include "rhall/tree_hall.hpp"

namespace rhall {

namespace {

// Same operations with products memoized; the suites multiply the same
// basis pairs many times.
HallOps cached(const HallOps& ops) {
  auto memo = std::make_shared<std::map<std::pair<std::string, std::string>, LinearCombo>>();
  HallOps out = ops;
  out.product = [memo, product = ops.product](const std::string& a, const std::string& b) {
    auto key = std::make_pair(a, b);
    if (auto it = memo->find(key); it != memo->end()) return it->second;
    return memo->emplace(key, product(a, b)).first->second;
  };
  return out;
}

PairCombo multiply(const HallOps& ops, const PairCombo& x, const PairCombo& y) {
  PairCombo out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const auto left = ops.product(kx.first, ky.first);
      const auto right = ops.product(kx.second, ky.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add({l, r}, cx * cy * cl * cr);
    }
  return out;
}

std::string pair_text(const std::string& a, const std::string& b) { return "x = " + a + ", y = " + b; }

std::string triple_text(const std::string& a, const std::string& b, const std::string& c) {
  return "x = " + a + ", y = " + b + ", z = " + c;
}

std::vector<RootedTree> trees_up_to(int n) {
  std::vector<RootedTree> out;
  for (int k = 1; k <= n; ++k)
    for (auto& t : enumerate_trees(static_cast<std::size_t>(k))) out.push_back(std::move(t));
  return out;
}

LinearCombo tree_combo(const RootedTree& t) { return LinearCombo::basis(t.encoding()); }

int tree_size(const RootedTree& t) { return static_cast<int>(t.size()); }

// Associator symmetry in the first two arguments and the Jacobi identity
// for a product p on the given elements.
template <typename Product>
LinearCombo associator(Product&& p, const LinearCombo& x, const LinearCombo& y, const LinearCombo& z) {
  return p(p(x, y), z) - p(x, p(y, z));
}

template <typename Bracket>
LinearCombo jacobiator(Bracket&& b, const LinearCombo& x, const LinearCombo& y, const LinearCombo& z) {
  return b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y));
}

std::vector<HalfEdgeGraph> bub_tri() { return {fixture_graph("BUB"), fixture_graph("TRI")}; }

LinearCombo star(const LinearCombo& a, const LinearCombo& b) { return prelie_star(a, b); }
LinearCombo sharp(const LinearCombo& a, const LinearCombo& b) { return prelie_sharp(a, b); }
LinearCombo star_bracket(const LinearCombo& a, const LinearCombo& b) { return bracket_star(a, b); }
LinearCombo sharp_bracket(const LinearCombo& a, const LinearCombo& b) { return bracket_sharp(a, b); }

std::optional<GraphMorphism> try_compose(const GraphMorphism& a, const GraphMorphism& b) {
  try {
    return compose_graph(a, b);
  } catch (const CompositionUndefined&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<HalfEdgeGraph> graph_test_family(int max_loops) {
  std::map<std::string, HalfEdgeGraph> family;
  for (const auto& g : bub_tri())
    if (loop_number(g) <= max_loops) family.emplace(canonical_form(g), g);
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = family;
    for (const auto& [kx, x] : snapshot)
      for (const auto& [ky, y] : snapshot) {
        if (loop_number(x) + loop_number(y) > max_loops) continue;
        for (const auto& [key, c] : prelie_star(x, y))
          if (family.emplace(key, graph_from_key(key)).second) grew = true;
      }
  }
  std::vector<HalfEdgeGraph> out;
  for (auto& [key, g] : family) out.push_back(std::move(g));
  return out;
}

std::vector<std::string> graph_test_objects(int max_loops) {
  const auto family = graph_test_family(max_loops);
  std::vector<std::pair<std::string, int>> parts;
  for (const auto& g : family) parts.emplace_back(canonical_form(g), loop_number(g));
  std::set<std::string> out;
  // Multisets as nondecreasing index sequences.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int loops) {
    std::vector<std::string> keys;
    for (std::size_t i : chosen) keys.push_back(parts[i].first);
    std::sort(keys.begin(), keys.end());
    out.insert(graph_hall_ops().join(keys));
    for (std::size_t i = from; i < parts.size(); ++i) {
      if (loops + parts[i].second > max_loops) continue;
      chosen.push_back(i);
      grow(i, loops + parts[i].second);
      chosen.pop_back();
    }
  };
  grow(0, 0);
  return {out.begin(), out.end()};
}

VerifyReport verify_hopf(const std::string& name, const HallOps& base, const std::vector<std::string>& keys,
                         const std::function<int(const std::string&)>& degree, int max_degree) {
  const HallOps ops = cached(base);
  VerifyReport r;
  r.name = name;
  const auto one = LinearCombo::basis(ops.unit);
  std::map<std::string, PairCombo> delta;
  std::map<std::string, LinearCombo> anti;
  std::map<std::string, int> deg;
  for (const auto& k : keys) {
    delta[k] = hall_coproduct(ops, LinearCombo::basis(k));
    deg[k] = degree(k);
  }
  auto antipode_of = [&](const std::string& k) -> const LinearCombo& {
    auto it = anti.find(k);
    if (it == anti.end()) it = anti.emplace(k, hall_antipode(ops, LinearCombo::basis(k))).first;
    return it->second;
  };
  auto coproduct_of = [&](const std::string& k) -> const PairCombo& {
    auto it = delta.find(k);
    if (it == delta.end()) it = delta.emplace(k, hall_coproduct(ops, LinearCombo::basis(k))).first;
    return it->second;
  };

  for (const auto& x : keys) {
    const auto bx = LinearCombo::basis(x);
    r.expect(hall_multiply(ops, one, bx) == bx && hall_multiply(ops, bx, one) == bx,
             [&] { return "unit law fails for " + x; });

    TripleCombo left, right;
    for (const auto& [p, c] : delta[x]) {
      for (const auto& [q, d] : coproduct_of(p.first)) left.add({q.first, q.second, p.second}, c * d);
      for (const auto& [q, d] : coproduct_of(p.second)) right.add({p.first, q.first, q.second}, c * d);
    }
    r.expect(left == right, [&] { return "coassociativity fails for " + x; });

    LinearCombo via_left, via_right, s_left, s_right;
    for (const auto& [p, c] : delta[x]) {
      if (p.first == ops.unit) via_left.add(p.second, c);
      if (p.second == ops.unit) via_right.add(p.first, c);
      s_left += c * hall_multiply(ops, antipode_of(p.first), LinearCombo::basis(p.second));
      s_right += c * hall_multiply(ops, LinearCombo::basis(p.first), antipode_of(p.second));
    }
    r.expect(via_left == bx && via_right == bx, [&] { return "counit law fails for " + x; });
    const LinearCombo expected = x == ops.unit ? one : LinearCombo{};
    r.expect(s_left == expected, [&] { return "S * id != unit o counit for " + x + ":\n" + s_left.to_string(); });
    r.expect(s_right == expected, [&] { return "id * S != unit o counit for " + x + ":\n" + s_right.to_string(); });
  }

  for (const auto& x : keys)
    for (const auto& y : keys) {
      if (deg[x] + deg[y] > max_degree) continue;
      const auto xy = hall_multiply(ops, LinearCombo::basis(x), LinearCombo::basis(y));
      r.expect(hall_counit(ops, xy) == Rational(x == ops.unit && y == ops.unit ? 1 : 0),
               [&] { return "counit is not multiplicative: " + pair_text(x, y); });
      r.expect(hall_coproduct(ops, xy) == multiply(ops, delta[x], delta[y]),
               [&] { return "coproduct is not multiplicative: " + pair_text(x, y); });
      for (const auto& z : keys) {
        if (deg[x] + deg[y] + deg[z] > max_degree) continue;
        const auto bz = LinearCombo::basis(z);
        const auto lhs = hall_multiply(ops, xy, bz);
        const auto rhs =
            hall_multiply(ops, LinearCombo::basis(x), hall_multiply(ops, LinearCombo::basis(y), bz));
        r.expect(lhs == rhs, [&] { return "associativity fails: " + triple_text(x, y, z); });
      }
    }
  return r;
}

VerifyReport verify_hopf_trees(int max_vertices) {
  std::vector<std::string> keys;
  for (int n = 0; n <= max_vertices; ++n)
    for (const auto& f : enumerate_forests(static_cast<std::size_t>(n))) keys.push_back(f.encoding());
  return verify_hopf(
      "hopf-trees", forest_hall_ops(), keys, [](const std::string& k) { return static_cast<int>(degree(k)); },
      max_vertices);
}

VerifyReport verify_hopf_graphs(int max_loops) {
  return verify_hopf("hopf-graphs", graph_hall_ops(), graph_test_objects(max_loops), graph_degree, max_loops);
}

VerifyReport verify_prelie(int max_vertices) {
  VerifyReport r;
  r.name = "prelie";
  const auto trees = trees_up_to(max_vertices - 2);
  auto graft = [](const LinearCombo& a, const LinearCombo& b) { return prelie_tree(a, b); };
  for (const auto& x : trees)
    for (const auto& y : trees)
      for (const auto& z : trees) {
        if (tree_size(x) + tree_size(y) + tree_size(z) > max_vertices) continue;
        const auto bx = tree_combo(x), by = tree_combo(y), bz = tree_combo(z);
        r.expect(associator(graft, bx, by, bz) == associator(graft, by, bx, bz), [&] {
          return "tree associator not symmetric: " + triple_text(x.encoding(), y.encoding(), z.encoding());
        });
      }
  const auto gs = bub_tri();
  for (const auto& x : gs)
    for (const auto& y : gs)
      for (const auto& z : gs) {
        const auto bx = graph_basis(x), by = graph_basis(y), bz = graph_basis(z);
        const auto text = [&] { return triple_text(canonical_form(x), canonical_form(y), canonical_form(z)); };
        r.expect(associator(star, bx, by, bz) == associator(star, by, bx, bz),
                 [&] { return "insertion associator not symmetric: " + text(); });
        r.expect(associator(sharp, bx, by, bz) == associator(sharp, by, bx, bz),
                 [&] { return "subgraph-count associator not symmetric: " + text(); });
      }
  return r;
}

VerifyReport verify_jacobi(int max_vertices) {
  VerifyReport r;
  r.name = "jacobi";
  const auto trees = trees_up_to(max_vertices - 1);
  auto br = [](const LinearCombo& a, const LinearCombo& b) { return bracket_tree(a, b); };
  for (const auto& x : trees)
    for (const auto& y : trees) {
      if (tree_size(x) + tree_size(y) > max_vertices) continue;
      const auto bx = tree_combo(x), by = tree_combo(y);
      r.expect(br(bx, by) == -br(by, bx),
               [&] { return "tree bracket not antisymmetric: " + pair_text(x.encoding(), y.encoding()); });
      for (const auto& z : trees) {
        if (tree_size(x) + tree_size(y) + tree_size(z) > max_vertices) continue;
        r.expect(jacobiator(br, bx, by, tree_combo(z)).is_zero(), [&] {
          return "tree Jacobi identity fails: " + triple_text(x.encoding(), y.encoding(), z.encoding());
        });
      }
    }
  const auto gs = bub_tri();
  for (const auto& x : gs)
    for (const auto& y : gs) {
      const auto bx = graph_basis(x), by = graph_basis(y);
      r.expect(star_bracket(bx, by) == -star_bracket(by, bx) && sharp_bracket(bx, by) == -sharp_bracket(by, bx),
               [&] { return "graph bracket not antisymmetric: " + pair_text(canonical_form(x), canonical_form(y)); });
      for (const auto& z : gs) {
        const auto bz = graph_basis(z);
        const auto text = [&] { return triple_text(canonical_form(x), canonical_form(y), canonical_form(z)); };
        r.expect(jacobiator(star_bracket, bx, by, bz).is_zero(),
                 [&] { return "insertion Jacobi identity fails: " + text(); });
        r.expect(jacobiator(sharp_bracket, bx, by, bz).is_zero(),
                 [&] { return "subgraph-count Jacobi identity fails: " + text(); });
      }
    }
  return r;
}

VerifyReport verify_hall_oracle_trees(int max_vertices) {
  VerifyReport r;
  r.name = "hall-oracle";
  for (int n1 = 0; n1 <= max_vertices; ++n1)
    for (int n2 = 0; n1 + n2 <= max_vertices; ++n2)
      for (const auto& f1 : enumerate_forests(static_cast<std::size_t>(n1)))
        for (const auto& f2 : enumerate_forests(static_cast<std::size_t>(n2))) {
          const auto product = hall_product(f1, f2);
          const Rational autos(aut_order(f1) * aut_order(f2));
          for (const auto& k : enumerate_forests(static_cast<std::size_t>(n1 + n2))) {
            const Rational expected = Rational(count_short_exact(f1, f2, k)) / autos;
            r.expect(product.coefficient(k.encoding()) == expected, [&] {
              return "forest Hall coefficient of " + k.encoding() + " in " + pair_text(f1.encoding(), f2.encoding()) +
                     " is " + to_string(product.coefficient(k.encoding())) + ", oracle gives " + to_string(expected);
            });
          }
        }
  return r;
}

VerifyReport verify_hall_oracle_graphs(int max_loops) {
  VerifyReport r;
  r.name = "hall-oracle";
  // Independent candidates for K: multisets of all connected graphs.
  std::vector<std::pair<std::string, int>> connected;
  for (int l = 0; l <= max_loops; ++l)
    for (int e : {2, 3})
      for (const auto& g : enumerate_connected_graphs(l, e)) connected.emplace_back(canonical_form(g), l);
  auto candidates = [&](int loops, std::size_t max_parts) {
    std::set<std::string> out;
    std::vector<std::string> chosen;
    std::function<void(std::size_t, int)> grow = [&](std::size_t from, int used) {
      if (used == loops) {
        auto keys = chosen;
        std::sort(keys.begin(), keys.end());
        out.insert(graph_hall_ops().join(keys));
      }
      if (chosen.size() == max_parts) return;
      for (std::size_t i = from; i < connected.size(); ++i) {
        if (used + connected[i].second > loops) continue;
        chosen.push_back(connected[i].first);
        grow(i, used + connected[i].second);
        chosen.pop_back();
      }
    };
    grow(0, 0);
    return out;
  };

  const auto objects = graph_test_objects(max_loops);
  for (const auto& a : objects)
    for (const auto& b : objects) {
      const int loops = graph_degree(a) + graph_degree(b);
      if (loops > max_loops) continue;
      const auto g1 = graph_from_key(a), g2 = graph_from_key(b);
      const auto product = hall_product_graphs(g1, g2);
      const auto ks = candidates(loops, components(g1).size() + components(g2).size());
      for (const auto& [key, c] : product)
        r.expect(ks.count(key) != 0, [&] { return "product term outside the candidate set: " + key; });
      const Rational autos(aut_order(g1) * aut_order(g2));
      for (const auto& key : ks) {
        const Rational expected = Rational(count_short_exact_graphs(g1, g2, graph_from_key(key))) / autos;
        r.expect(product.coefficient(key) == expected, [&] {
          return "graph Hall coefficient of " + key + " in " + pair_text(a, b) + " is " +
                 to_string(product.coefficient(key)) + ", oracle gives " + to_string(expected);
        });
      }
    }
  return r;
}

VerifyReport verify_hall_oracle(int max_vertices) {
  auto r = verify_hall_oracle_trees(max_vertices);
  const auto g = verify_hall_oracle_graphs(2);
  r.checks += g.checks;
  if (r.ok && !g.ok) {
    r.ok = false;
    r.counterexample = g.counterexample;
  }
  return r;
}

VerifyReport verify_phi_intertwiner(int max_loops) {
  VerifyReport r;
  r.name = "phi-intertwiner";
  const auto bub = fixture_graph("BUB"), tri = fixture_graph("TRI");
  r.expect(subgraph_count_a(bub, tri, fixture_graph("G_a")) == 1, [] { return "a(BUB, TRI; G_a) != 1"; });
  r.expect(subgraph_count_a(tri, bub, fixture_graph("G_b")) == 2, [] { return "a(TRI, BUB; G_b) != 2"; });
  r.expect(subgraph_count_a(bub, tri, fixture_graph("G_b")) == 0, [] { return "a(BUB, TRI; G_b) != 0"; });
  const auto family = graph_test_family(max_loops);
  for (const auto& x : family)
    for (const auto& y : family) {
      if (loop_number(x) + loop_number(y) > max_loops + 1) continue;
      const auto bx = graph_basis(x), by = graph_basis(y);
      const auto sx = aut_scale(bx), sy = aut_scale(by);
      const auto text = [&] { return pair_text(canonical_form(x), canonical_form(y)); };
      r.expect(aut_scale(prelie_star(bx, by)) == prelie_sharp(sx, sy),
               [&] { return "scaling does not carry insertion to subgraph counting: " + text(); });
      r.expect(aut_scale(bracket_star(bx, by)) == bracket_sharp(sx, sy),
               [&] { return "scaling does not intertwine the brackets: " + text(); });
    }
  return r;
}

VerifyReport verify_paper_example() {
  VerifyReport r;
  r.name = "paper-example";
  LinearCombo expected = 6 * graph_basis(fixture_graph("G_a"));
  expected -= 12 * graph_basis(fixture_graph("G_b"));
  const auto bracket = bracket_star(fixture_graph("BUB"), fixture_graph("TRI"));
  r.expect(bracket == expected, [&] { return "[BUB, TRI] =\n" + bracket.to_string(); });

  const auto pieces = apply_cut(cut_example_tree(), cut_example_cut());
  r.expect(pieces.branches == parse_labeled_forest("7(1,5) 2") && pieces.trunk == parse_labeled_forest("4(3(6))"),
           [&] { return "cut gives P = " + pieces.branches.to_string() + ", R = " + pieces.trunk.to_string(); });

  const auto q = contract(fixture_graph("Gamma_eg"), gamma_eg_subgraph());
  r.expect(is_isomorphic(q, fixture_graph("Gamma_eg_quotient")),
           [&] { return "quotient is\n" + serialize_graph(q); });
  return r;
}

VerifyReport verify_j_embedding(int max_vertices) {
  VerifyReport r;
  r.name = "j-embedding";
  const auto trees = trees_up_to(max_vertices - 1);
  for (const auto& x : trees)
    for (const auto& y : trees) {
      if (tree_size(x) + tree_size(y) > max_vertices) continue;
      const auto lhs = j_embed(bracket_tree(x, y));
      const auto rhs = hall_product(j_embed(x), j_embed(y)) - hall_product(j_embed(y), j_embed(x));
      r.expect(lhs == rhs, [&] { return "j does not preserve the bracket: " + pair_text(x.encoding(), y.encoding()); });
    }
  return r;
}

namespace {

// Identity laws, closure and associativity of composition over every
// composable triple. Each composable pair is composed once and the result
// located in its Hom set, so the triple check is table lookups.
template <typename Object, typename Hom, typename Compose, typename Identity>
void check_composition(VerifyReport& r, const std::vector<Object>& objects, Hom&& hom, Compose&& compose,
                       Identity&& identity) {
  const std::size_t n = objects.size();
  using Morphism = typename std::invoke_result_t<Hom, const Object&, const Object&>::value_type;
  std::vector<std::vector<std::vector<Morphism>>> homs(n, std::vector<std::vector<Morphism>>(n));
  std::vector<std::vector<std::unordered_map<std::string, int>>> index(n, std::vector<std::unordered_map<std::string, int>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      homs[a][b] = hom(objects[a], objects[b]);
      for (std::size_t i = 0; i < homs[a][b].size(); ++i) index[a][b][homs[a][b][i].to_string()] = static_cast<int>(i);
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& m : homs[a][b]) {
        const auto left = compose(identity(objects[a]), m);
        const auto right = compose(m, identity(objects[b]));
        r.expect(left && right && *left == m && *right == m, [&] { return "identity law fails for " + m.to_string(); });
      }

  // table[a][b][c][i * |H(b,c)| + j] = index of H(a,b)[i] then H(b,c)[j] in
  // H(a,c), or -1 where the composite is undefined.
  std::vector<std::vector<std::vector<std::vector<int>>>> table(
      n, std::vector<std::vector<std::vector<int>>>(n, std::vector<std::vector<int>>(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& h1 = homs[a][b];
        const auto& h2 = homs[b][c];
        auto& t = table[a][b][c];
        t.assign(h1.size() * h2.size(), -1);
        for (std::size_t i = 0; i < h1.size(); ++i)
          for (std::size_t j = 0; j < h2.size(); ++j) {
            const auto m = compose(h1[i], h2[j]);
            if (!m) continue;
            const auto it = index[a][c].find(m->to_string());
            const bool found = it != index[a][c].end() && homs[a][c][it->second] == *m;
            r.expect(found, [&] { return "composite is not a morphism: " + m->to_string(); });
            if (found) t[i * h2.size() + j] = it->second;
          }
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const std::size_t nb = homs[b][c].size(), nc = homs[c][d].size();
          const auto& ab_c = table[a][b][c];
          const auto& bc_d = table[b][c][d];
          const auto& ac_d = table[a][c][d];
          const auto& ab_d = table[a][b][d];
          for (std::size_t i = 0; i < homs[a][b].size(); ++i)
            for (std::size_t j = 0; j < nb; ++j) {
              const int ij = ab_c[i * nb + j];
              if (ij < 0) continue;
              for (std::size_t k = 0; k < nc; ++k) {
                const int jk = bc_d[j * nc + k];
                if (jk < 0) continue;
                const int lhs = ac_d[static_cast<std::size_t>(ij) * nc + k];
                const int rhs = ab_d[i * homs[b][d].size() + static_cast<std::size_t>(jk)];
                r.expect(lhs == rhs, [&] {
                  return "composition not associative: " + homs[a][b][i].to_string() + " ; " +
                         homs[b][c][j].to_string() + " ; " + homs[c][d][k].to_string();
                });
              }
            }
        }
}

}  // namespace

VerifyReport verify_category_forests(int max_vertices) {
  VerifyReport r;
  r.name = "category";
  std::vector<LabeledForest> forests;
  for (int n = 0; n <= max_vertices; ++n)
    for (const auto& f : enumerate_forests(static_cast<std::size_t>(n))) forests.push_back(LabeledForest::from_forest(f));
  check_composition(
      r, forests, hom_set_forests,
      [](const ForestMorphism& a, const ForestMorphism& b) { return std::optional(compose_forest(a, b)); },
      identity_forest);

  // Torsors: monos with a fixed image and epis with a fixed kernel.
  for (const auto& f : forests)
    for (const auto& k : forests) {
      std::map<ForestCut, Integer> by_image, by_kernel;
      for (const auto& m : hom_set_forests(f, k))
        if (is_mono(m)) ++by_image[m.c2];
      for (const auto& m : hom_set_forests(k, f))
        if (is_epi(m)) ++by_kernel[m.c1];
      const auto autos = aut_order(f.shape());
      for (const auto& [cut, n] : by_image)
        r.expect(n == autos, [&] { return "monos onto " + cut.to_string() + " are not a torsor"; });
      for (const auto& [cut, n] : by_kernel)
        r.expect(n == autos, [&] { return "epis with kernel " + cut.to_string() + " are not a torsor"; });
    }
  return r;
}

VerifyReport verify_category_graphs(int max_vertices) {
  VerifyReport r;
  r.name = "category";
  std::vector<HalfEdgeGraph> graphs{HalfEdgeGraph{}, fixture_graph("COROLLA")};
  for (const auto& key : graph_test_objects(2)) {
    auto g = graph_from_key(key);
    if (!g.empty() && static_cast<int>(g.vertex_count()) <= max_vertices) graphs.push_back(std::move(g));
  }
  r.expect(hom_set_graphs(fixture_graph("BUB"), fixture_graph("BUB")).size() == 5,
           [] { return "|Hom(BUB, BUB)| != 5"; });
  check_composition(r, graphs, hom_set_graphs, try_compose, identity_graph);
  for (const auto& g : graphs)
    for (const auto& k : graphs) {
      std::map<VertexSet, Integer> by_image, by_kernel;
      for (const auto& m : hom_set_graphs(g, k))
        if (is_mono(m)) ++by_image[m.gamma2];
      for (const auto& m : hom_set_graphs(k, g))
        if (is_epi(m)) ++by_kernel[m.gamma1];
      const auto autos = aut_order(g);
      for (const auto& [w, n] : by_image)
        r.expect(n == autos, [] { return "graph monos onto a fixed image are not a torsor"; });
      for (const auto& [w, n] : by_kernel)
        r.expect(n == autos, [] { return "graph epis with a fixed kernel are not a torsor"; });
    }
  return r;
}

VerifyReport verify_category(int max_vertices) {
  auto r = verify_category_forests(max_vertices);
  const auto g = verify_category_graphs(5);
  r.checks += g.checks;
  if (r.ok && !g.ok) {
    r.ok = false;
    r.counterexample = g.counterexample;
  }
  return r;
}

std::vector<std::string> verify_suite_names() {
  return {"hopf-trees", "hopf-graphs",   "prelie",      "jacobi",  "hall-oracle", "phi-intertwiner",
          "paper-example", "j-embedding", "category"};
}

VerifyReport run_verify_suite(const std::string& name, int max_size) {
  auto bound = [max_size](int fallback) { return max_size > 0 ? max_size : fallback; };
  if (name == "hopf-trees") return verify_hopf_trees(bound(6));
  if (name == "hopf-graphs") return verify_hopf_graphs(std::min(bound(2), 2));
  if (name == "prelie") return verify_prelie(bound(7));
  if (name == "jacobi") return verify_jacobi(bound(7));
  if (name == "hall-oracle") return verify_hall_oracle(bound(5));
  if (name == "phi-intertwiner") return verify_phi_intertwiner(std::min(bound(2), 2));
  if (name == "paper-example") return verify_paper_example();
  if (name == "j-embedding") return verify_j_embedding(bound(6));
  if (name == "category") return verify_category(bound(4));
  throw InvalidArgument("unknown verification suite '" + name + "'");
}

}  // namespace rhall
