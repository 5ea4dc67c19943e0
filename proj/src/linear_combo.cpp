#include "rhall/linear_combo.hpp"

#include <sstream>

#include "rhall/error.hpp"

namespace rhall {

namespace {

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError(0, "empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError(i, std::string("unexpected '") + c + "' in rational");
    }
  }
  if (!seen_digit) throw ParseError(text.size(), "truncated rational");
  Rational q(text[0] == '+' ? text.substr(1) : text, 10);
  if (q.get_den() == 0) throw ParseError(text.find('/') + 1, "zero denominator");
  q.canonicalize();
  return q;
}

LinearCombo LinearCombo::basis(const std::string& key, const Rational& coefficient) {
  LinearCombo out;
  out.add(key, coefficient);
  return out;
}

void LinearCombo::add(const std::string& key, const Rational& coefficient) {
  accumulate(terms_, key, coefficient);
}

Rational LinearCombo::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinearCombo& LinearCombo::operator+=(const LinearCombo& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

LinearCombo& LinearCombo::operator-=(const LinearCombo& other) {
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

LinearCombo& LinearCombo::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

std::string LinearCombo::to_string() const {
  std::ostringstream out;
  for (const auto& [key, c] : terms_) out << rhall::to_string(c) << ' ' << key << '\n';
  return out.str();
}

void PairCombo::add(const Key& key, const Rational& coefficient) {
  accumulate(terms_, key, coefficient);
}

Rational PairCombo::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

PairCombo& PairCombo::operator+=(const PairCombo& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

PairCombo& PairCombo::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

std::string PairCombo::to_string() const {
  std::ostringstream out;
  for (const auto& [key, c] : terms_)
    out << rhall::to_string(c) << ' ' << key.first << " | " << key.second << '\n';
  return out.str();
}

void TripleCombo::add(const Key& key, const Rational& coefficient) {
  accumulate(terms_, key, coefficient);
}

}  // namespace rhall
