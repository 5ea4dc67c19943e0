#pragma once

// Coproduct, counit and antipode shared by the forest and graph Hall
// algebras. Both are cocommutative with Delta(f)(M, N) = f(M + N), so only
// the way a basis key splits into components differs.

#include <functional>
#include <string>
#include <vector>

#include "rhall/linear_combo.hpp"

namespace rhall {

struct HallOps {
  /// Product of two basis keys.
  std::function<LinearCombo(const std::string&, const std::string&)> product;
  /// Component keys of a basis key, sorted; empty for the unit.
  std::function<std::vector<std::string>(const std::string&)> split;
  /// Key of the disjoint union of components.
  std::function<std::string(std::vector<std::string>)> join;
  /// Key of the empty object.
  std::string unit;
};

LinearCombo hall_multiply(const HallOps& ops, const LinearCombo& a, const LinearCombo& b);
/// Each way of splitting the component multiset into two parts, once.
PairCombo hall_coproduct(const HallOps& ops, const LinearCombo& a);
Rational hall_counit(const HallOps& ops, const LinearCombo& a);
/// S(x) = -x - sum S(x') x'' over the reduced coproduct.
LinearCombo hall_antipode(const HallOps& ops, const LinearCombo& a);

/// m o (left (x) right) applied to a PairCombo.
LinearCombo multiply_pairs(const HallOps& ops, const PairCombo& pairs);

}  // namespace rhall
