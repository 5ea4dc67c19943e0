#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace rhall {

using Rational = mpq_class;
using Integer = mpz_class;

/// "n/d" with the denominator always written, e.g. "1/1", "-12/1".
std::string to_string(const Rational& q);

/// Parses "n/d" or "n". Throws ParseError.
Rational parse_rational(const std::string& text);

/// Finitely supported Q-valued function on basis keys. Keys are canonical
/// serializations (forest literals or graph keys); zero coefficients are
/// never stored.
class LinearCombo {
 public:
  using Terms = std::map<std::string, Rational>;

  LinearCombo() = default;

  static LinearCombo basis(const std::string& key, const Rational& coefficient = 1);

  void add(const std::string& key, const Rational& coefficient);
  Rational coefficient(const std::string& key) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  LinearCombo& operator+=(const LinearCombo& other);
  LinearCombo& operator-=(const LinearCombo& other);
  LinearCombo& operator*=(const Rational& scalar);

  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  friend LinearCombo operator*(const Rational& s, LinearCombo a) { return a *= s; }
  friend LinearCombo operator-(LinearCombo a) { return a *= -1; }
  friend bool operator==(const LinearCombo& a, const LinearCombo& b) { return a.terms_ == b.terms_; }

  /// One "<n>/<d> <key>" line per term, sorted by key; empty for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Function on ordered pairs of basis keys, the value type of coproducts.
class PairCombo {
 public:
  using Key = std::pair<std::string, std::string>;
  using Terms = std::map<Key, Rational>;

  void add(const Key& key, const Rational& coefficient);
  Rational coefficient(const Key& key) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  PairCombo& operator+=(const PairCombo& other);
  PairCombo& operator*=(const Rational& scalar);
  friend bool operator==(const PairCombo& a, const PairCombo& b) { return a.terms_ == b.terms_; }

  /// Lines "<n>/<d> <left> | <right>".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Function on ordered triples, used for coassociativity checks.
class TripleCombo {
 public:
  using Key = std::tuple<std::string, std::string, std::string>;
  using Terms = std::map<Key, Rational>;

  void add(const Key& key, const Rational& coefficient);
  const Terms& terms() const { return terms_; }
  friend bool operator==(const TripleCombo& a, const TripleCombo& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace rhall
