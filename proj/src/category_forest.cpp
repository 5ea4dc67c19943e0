#include <algorithm>
#include <sstream>

#include "rhall/category.hpp"
#include "rhall/error.hpp"

namespace rhall {

std::string ForestMorphism::to_string() const {
  std::ostringstream out;
  out << "c1=" << c1.to_string() << " c2=" << c2.to_string() << " f={";
  bool first = true;
  for (const auto& [a, b] : f) {
    if (!first) out << ',';
    first = false;
    out << a << "->" << b;
  }
  out << '}';
  return out.str();
}

std::vector<ForestMorphism> hom_set_forests(const LabeledForest& f1, const LabeledForest& f2) {
  if (f1.size() > 10 || f2.size() > 10) throw BoundExceeded("Hom enumeration limited to forests of 10 vertices");
  std::vector<ForestMorphism> out;
  for (const auto& c1 : admissible_cuts(f1)) {
    const auto r = apply_cut(f1, c1).trunk;
    for (const auto& c2 : admissible_cuts(f2)) {
      const auto p = apply_cut(f2, c2).branches;
      for (auto& iso : isomorphisms(r, p)) out.push_back(ForestMorphism{f1, f2, c1, c2, std::move(iso)});
    }
  }
  return out;
}

ForestMorphism identity_forest(const LabeledForest& f) {
  VertexMap id;
  for (Label v : f.labels()) id[v] = v;
  return ForestMorphism{f, f, ForestCut::null(f), ForestCut::full(f), id};
}

ForestMorphism zero_forest(const LabeledForest& f1, const LabeledForest& f2) {
  return ForestMorphism{f1, f2, ForestCut::full(f1), ForestCut::null(f2), {}};
}

void check_morphism(const ForestMorphism& m) {
  const auto r = apply_cut(m.source, m.c1).trunk;
  const auto p = apply_cut(m.target, m.c2).branches;
  const auto isos = isomorphisms(r, p);
  if (std::find(isos.begin(), isos.end(), m.f) == isos.end())
    throw InvalidArgument("f is not an isomorphism R_c1(source) -> P_c2(target)");
}

ForestMorphism compose_forest(const ForestMorphism& m1, const ForestMorphism& m2) {
  if (!(m1.target == m2.source)) throw InvalidArgument("morphisms are not composable: middle objects differ");
  const auto& f1 = m1.source;
  const auto& f2 = m1.target;
  const auto& f3 = m2.target;
  // D2 restricted to P_{C2}(F2), pulled back along f into R_{C1}(F1).
  const auto s_d2 = branch_vertices(f2, m2.c1);
  std::set<Label> e1 = branch_vertices(f1, m1.c1);
  for (const auto& [u, w] : m1.f)
    if (s_d2.count(w)) e1.insert(u);
  const ForestCut e1_cut = cut_from_branch_vertices(f1, e1);
  VertexMap gf;
  std::set<Label> e3;
  for (const auto& [u, w] : m1.f) {
    if (s_d2.count(w)) continue;
    const Label x = m2.f.at(w);
    gf[u] = x;
    e3.insert(x);
  }
  return ForestMorphism{f1, f3, e1_cut, cut_from_branch_vertices(f3, e3), gf};
}

bool is_mono(const ForestMorphism& m) { return m.c1 == ForestCut::null(m.source); }

bool is_epi(const ForestMorphism& m) { return m.c2 == ForestCut::full(m.target); }

ForestMorphism kernel_forest(const ForestMorphism& m) {
  const auto p = apply_cut(m.source, m.c1).branches;
  VertexMap id;
  for (Label v : p.labels()) id[v] = v;
  return ForestMorphism{p, m.source, ForestCut::null(p), m.c1, id};
}

ForestMorphism cokernel_forest(const ForestMorphism& m) {
  const auto r = apply_cut(m.target, m.c2).trunk;
  VertexMap id;
  for (Label v : r.labels()) id[v] = v;
  return ForestMorphism{m.target, r, m.c2, ForestCut::full(r), id};
}

Integer count_short_exact(const Forest& f1, const Forest& f2, const Forest& k) {
  const auto l1 = LabeledForest::from_forest(f1);
  const auto l2 = LabeledForest::from_forest(f2);
  const auto lk = LabeledForest::from_forest(k);
  std::vector<ForestMorphism> monos, epis;
  for (auto& m : hom_set_forests(l1, lk))
    if (is_mono(m)) monos.push_back(std::move(m));
  for (auto& m : hom_set_forests(lk, l2))
    if (is_epi(m)) epis.push_back(std::move(m));
  Integer count = 0;
  for (const auto& mono : monos)
    for (const auto& epi : epis)
      if (mono.c2 == epi.c1) ++count;
  return count;
}

}  // namespace rhall
