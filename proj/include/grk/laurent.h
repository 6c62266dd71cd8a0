#ifndef GRK_LAURENT_H
#define GRK_LAURENT_H

#include <map>
#include <string>

#include "grk/rational.h"

namespace grk {

// Laurent polynomial in q with exact rational coefficients; zero
// coefficients are never stored.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  QLaurent(long c) : QLaurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static QLaurent q_pow(int k, const Rational& c = 1);

  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  Rational coeff(int k) const;
  void add_term(int k, const Rational& c);
  int min_exp() const;
  int max_exp() const;

  Rational eval(const Rational& q) const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(QLaurent a);
  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  std::string str() const;

 private:
  std::map<int, Rational> t_;
};

Rational rational_pow(const Rational& x, int k);

}  // namespace grk

#endif
