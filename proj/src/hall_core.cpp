#include "rhall/hall_core.hpp"

#include <map>

namespace rhall {

LinearCombo hall_multiply(const HallOps& ops, const LinearCombo& a, const LinearCombo& b) {
  LinearCombo out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      LinearCombo term = ops.product(ka, kb);
      term *= ca * cb;
      out += term;
    }
  return out;
}

namespace {

void basis_coproduct(const HallOps& ops, const std::string& key, const Rational& c, PairCombo& out) {
  const auto parts = ops.split(key);
  // Runs of equal components; choose how many of each go left.
  std::vector<std::pair<std::string, int>> runs;
  for (const auto& p : parts) {
    if (!runs.empty() && runs.back().first == p)
      ++runs.back().second;
    else
      runs.emplace_back(p, 1);
  }
  std::vector<int> take(runs.size(), 0);
  while (true) {
    std::vector<std::string> left, right;
    for (std::size_t i = 0; i < runs.size(); ++i)
      for (int k = 0; k < runs[i].second; ++k) (k < take[i] ? left : right).push_back(runs[i].first);
    out.add({ops.join(left), ops.join(right)}, c);
    std::size_t i = 0;
    while (i < runs.size() && take[i] == runs[i].second) take[i++] = 0;
    if (i == runs.size()) break;
    ++take[i];
  }
}

LinearCombo basis_antipode(const HallOps& ops, const std::string& key, std::map<std::string, LinearCombo>& memo) {
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  LinearCombo result;
  if (key == ops.unit) {
    result = LinearCombo::basis(ops.unit);
  } else {
    result = -LinearCombo::basis(key);
    PairCombo split;
    basis_coproduct(ops, key, 1, split);
    for (const auto& [pair, c] : split) {
      if (pair.first == ops.unit || pair.second == ops.unit) continue;
      LinearCombo term = hall_multiply(ops, basis_antipode(ops, pair.first, memo), LinearCombo::basis(pair.second));
      result -= c * term;
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

PairCombo hall_coproduct(const HallOps& ops, const LinearCombo& a) {
  PairCombo out;
  for (const auto& [key, c] : a) basis_coproduct(ops, key, c, out);
  return out;
}

Rational hall_counit(const HallOps& ops, const LinearCombo& a) { return a.coefficient(ops.unit); }

LinearCombo hall_antipode(const HallOps& ops, const LinearCombo& a) {
  std::map<std::string, LinearCombo> memo;
  LinearCombo out;
  for (const auto& [key, c] : a) out += c * basis_antipode(ops, key, memo);
  return out;
}

LinearCombo multiply_pairs(const HallOps& ops, const PairCombo& pairs) {
  LinearCombo out;
  for (const auto& [pair, c] : pairs) out += c * ops.product(pair.first, pair.second);
  return out;
}

}  // namespace rhall
