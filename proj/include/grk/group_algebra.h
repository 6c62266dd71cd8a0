#ifndef GRK_GROUP_ALGEBRA_H
#define GRK_GROUP_ALGEBRA_H

#include <map>
#include <string>
#include <vector>

#include "grk/errors.h"
#include "grk/laurent.h"
#include "grk/lattice.h"
#include "grk/rational.h"
#include "grk/weyl.h"

namespace grk {

// Exponent vector of a monomial q^k e^lambda: the weight coordinates of
// lambda followed by k. e^delta = q is folded into the last slot.
using Monomial = std::vector<int>;

// Element of Q[q^{+-1}][X^*], stored as a sparse map monomial -> coefficient.
class GroupAlgElt {
 public:
  GroupAlgElt() = default;
  explicit GroupAlgElt(int total_rank) : n_(total_rank) {}
  static GroupAlgElt constant(int total_rank, const QLaurent& c);
  static GroupAlgElt constant(int total_rank, const Rational& c) { return constant(total_rank, QLaurent(c)); }
  static GroupAlgElt exp(const Weight& lambda, int qexp = 0, const Rational& c = 1);
  static GroupAlgElt monomial(const Monomial& m, const Rational& c = 1);

  int total_rank() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  // Coefficients collected by weight.
  std::map<Weight, QLaurent> by_weight() const;
  bool is_q_free() const;

  GroupAlgElt& operator+=(const GroupAlgElt& o);
  GroupAlgElt& operator-=(const GroupAlgElt& o);
  GroupAlgElt& operator*=(const Rational& c);
  friend GroupAlgElt operator+(GroupAlgElt a, const GroupAlgElt& b) { return a += b; }
  friend GroupAlgElt operator-(GroupAlgElt a, const GroupAlgElt& b) { return a -= b; }
  friend GroupAlgElt operator-(GroupAlgElt a) { return a *= Rational(-1); }
  friend GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b);
  friend GroupAlgElt operator*(const Rational& c, GroupAlgElt a) { return a *= c; }
  friend GroupAlgElt operator*(GroupAlgElt a, const Rational& c) { return a *= c; }
  friend bool operator==(const GroupAlgElt&, const GroupAlgElt&) = default;

  GroupAlgElt mul_monomial(const Monomial& m, const Rational& c = 1) const;
  GroupAlgElt pow(int k) const;

  // f(q) -> f(value); the result has q-exponent 0 everywhere.
  GroupAlgElt q_specialize(const Rational& value) const;

  std::string str() const;

 private:
  void check(const GroupAlgElt& o) const;
  int n_ = 0;
  std::map<Monomial, Rational> t_;
};

// (u t_gamma) . q^k e^mu = q^{k + <gamma, mu>} e^{u mu}
Monomial act_monomial(const FiniteWeylElt& w, const Monomial& m);
Monomial act_monomial(const ExtAffWeylElt& w, const Monomial& m);
GroupAlgElt weyl_act(const FiniteWeylElt& w, const GroupAlgElt& f);
GroupAlgElt weyl_act(const ExtAffWeylElt& w, const GroupAlgElt& f);

Monomial monomial_of(const Weight& lambda, int qexp = 0);
Weight weight_of(const Monomial& m);
int q_exponent(const Monomial& m);
Monomial monomial_add(const Monomial& a, const Monomial& b);
Monomial monomial_scale(int k, const Monomial& a);

struct NotDivisible : IntegralityError {
  NotDivisible(const std::string& what, GroupAlgElt rem)
      : IntegralityError(what), remainder(std::move(rem)) {}
  GroupAlgElt remainder;
};

// c with a = b c, or NotDivisible carrying the nonzero remainder.
GroupAlgElt exact_divide(const GroupAlgElt& a, const GroupAlgElt& b);
// Same, but reports failure through the return flag instead of throwing.
bool try_divide(const GroupAlgElt& a, const GroupAlgElt& b, GroupAlgElt& quotient,
                GroupAlgElt* remainder = nullptr);

}  // namespace grk

#endif
