#pragma once

// The categories of labeled rooted forests and of Feynman graphs at desk
// scale: Hom sets, composition, kernels and cokernels, and brute-force
// counts of short exact sequences.

#include <string>
#include <vector>

#include "rhall/forest.hpp"
#include "rhall/graph.hpp"

namespace rhall {

/// (c1, c2, f) with f: R_{c1}(source) -> P_{c2}(target) an isomorphism.
struct ForestMorphism {
  LabeledForest source;
  LabeledForest target;
  ForestCut c1;
  ForestCut c2;
  VertexMap f;

  /// "c1=<cut> c2=<cut> f={a->b,...}".
  std::string to_string() const;
  friend bool operator==(const ForestMorphism&, const ForestMorphism&) = default;
};

/// Every morphism, ordered by (c1, c2, f). Throws BoundExceeded when either
/// forest has more than 10 vertices.
std::vector<ForestMorphism> hom_set_forests(const LabeledForest& f1, const LabeledForest& f2);
/// (null, full, id).
ForestMorphism identity_forest(const LabeledForest& f);
/// (full, null, empty map).
ForestMorphism zero_forest(const LabeledForest& f1, const LabeledForest& f2);
/// Throws InvalidArgument unless the data define a morphism.
void check_morphism(const ForestMorphism& m);

/// m2 o m1 for m1: F1 -> F2 and m2: F2 -> F3.
ForestMorphism compose_forest(const ForestMorphism& m1, const ForestMorphism& m2);

bool is_mono(const ForestMorphism& m);
bool is_epi(const ForestMorphism& m);
/// (null, c1, id): P_{c1}(F1) -> F1.
ForestMorphism kernel_forest(const ForestMorphism& m);
/// (c2, full, id): F2 -> R_{c2}(F2).
ForestMorphism cokernel_forest(const ForestMorphism& m);

/// Pairs (mono F1 -> K, epi K -> F2) whose image is the kernel of the epi.
Integer count_short_exact(const Forest& f1, const Forest& f2, const Forest& k);

/// (gamma1, gamma2, f) with f: source/gamma1 -> induced(target, gamma2) an
/// isomorphism of half-edge graphs.
struct GraphMorphism {
  HalfEdgeGraph source;
  HalfEdgeGraph target;
  VertexSet gamma1;
  VertexSet gamma2;
  GraphIso f;

  std::string to_string() const;
  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

/// Every morphism over all pairs of subobjects. Throws BoundExceeded above
/// 12 vertices.
std::vector<GraphMorphism> hom_set_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2);
GraphMorphism identity_graph(const HalfEdgeGraph& g);
/// m2 o m1. Throws CompositionUndefined when an intermediate intersection,
/// preimage or image fails to be a subobject or the composite is not an
/// isomorphism onto its image; InvalidArgument for mismatched objects.
GraphMorphism compose_graph(const GraphMorphism& m1, const GraphMorphism& m2);
bool is_mono(const GraphMorphism& m);
bool is_epi(const GraphMorphism& m);

Integer count_short_exact_graphs(const HalfEdgeGraph& g1, const HalfEdgeGraph& g2, const HalfEdgeGraph& k);

}  // namespace rhall
