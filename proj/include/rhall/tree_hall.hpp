#pragma once

// The Hall algebra of labeled rooted forests (basis: forest literals) and
// the pre-Lie algebra of rooted trees.

#include "rhall/forest.hpp"
#include "rhall/hall_core.hpp"
#include "rhall/linear_combo.hpp"

namespace rhall {

/// delta_F as a one-term combination keyed by the forest literal.
LinearCombo forest_basis(const Forest& f);
LinearCombo forest_basis(std::string_view forest_literal);

/// Number of admissible cuts of k with P_C(k) = f1 and R_C(k) = f2.
Integer structure_constant_h(const Forest& f1, const Forest& f2, const Forest& k);

LinearCombo hall_product(const Forest& f1, const Forest& f2);
LinearCombo hall_product(const LinearCombo& a, const LinearCombo& b);
PairCombo coproduct(const LinearCombo& a);
Rational counit(const LinearCombo& a);
LinearCombo antipode(const LinearCombo& a);
/// Vertex count of a forest literal.
std::size_t degree(const std::string& forest_literal);

const HallOps& forest_hall_ops();

/// sum over trees T of a(t1, t2; T) T, where a counts edges e of T whose
/// cut has P = t1 and R = t2.
LinearCombo prelie_tree(const RootedTree& t1, const RootedTree& t2);
LinearCombo prelie_tree(const LinearCombo& a, const LinearCombo& b);
LinearCombo bracket_tree(const RootedTree& t1, const RootedTree& t2);
LinearCombo bracket_tree(const LinearCombo& a, const LinearCombo& b);

/// T -> delta_T, extended linearly.
LinearCombo j_embed(const RootedTree& t);
LinearCombo j_embed(const LinearCombo& trees);

}  // namespace rhall
