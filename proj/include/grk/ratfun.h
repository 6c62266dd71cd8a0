#ifndef GRK_RATFUN_H
#define GRK_RATFUN_H

#include <map>
#include <string>
#include <utility>

#include "grk/group_algebra.h"

namespace grk {

// Irreducible denominator factor Phi_d(x^m) evaluated at a primitive monomial
// m whose first nonzero exponent is positive. Phi_1(x) is taken as 1 - x.
struct CycloFactor {
  int d = 1;
  Monomial m;
  friend auto operator<=>(const CycloFactor&, const CycloFactor&) = default;
};

// Element of the fraction field of Q[q^{+-1}][X^*] whose denominator is a
// product of cyclotomic factors of monomials. Canonical: no factor divides
// the numerator; all units sit in the numerator.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(int total_rank) : num_(total_rank) {}
  RatFun(GroupAlgElt num);  // NOLINT(google-explicit-constructor)
  RatFun(GroupAlgElt num, std::map<CycloFactor, int> den);

  static RatFun one(int total_rank) { return RatFun(GroupAlgElt::constant(total_rank, Rational(1))); }
  // 1 / f for a monomial or a two-term f; other inputs raise DomainError.
  static RatFun inverse_of(const GroupAlgElt& f);

  int total_rank() const { return num_.total_rank(); }
  const GroupAlgElt& num() const { return num_; }
  const std::map<CycloFactor, int>& den_factors() const { return den_; }
  GroupAlgElt den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  // The numerator, or IntegralityError when a denominator remains.
  const GroupAlgElt& polynomial() const;

  RatFun inverse() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator-(RatFun a);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  friend bool operator==(const RatFun&, const RatFun&) = default;

  std::string str() const;

 private:
  void canonicalize();
  GroupAlgElt num_;
  std::map<CycloFactor, int> den_;
};

RatFun weyl_act(const FiniteWeylElt& w, const RatFun& f);
RatFun weyl_act(const ExtAffWeylElt& w, const RatFun& f);

// Integer coefficients of the d-th cyclotomic polynomial, constant term first.
const std::vector<int>& cyclotomic(int d);
// Phi_d(m) as a group algebra element (with Phi_1(m) = 1 - m).
GroupAlgElt cyclo_value(const CycloFactor& f);

}  // namespace grk

#endif
