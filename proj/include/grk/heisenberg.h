#ifndef GRK_HEISENBERG_H
#define GRK_HEISENBERG_H

#include <map>
#include <set>
#include <string>
#include <utility>

#include "grk/laurent.h"
#include "grk/lattice.h"

namespace grk {

using HeisKey = std::pair<Weight, Coweight>;

// Normal form sum c(q) e^lambda t_gamma, weights to the left of translations,
// with t_gamma e^mu = q^<gamma,mu> e^mu t_gamma.
class HeisElt {
 public:
  HeisElt() = default;
  explicit HeisElt(int total_rank) : n_(total_rank) {}
  static HeisElt unit(int total_rank);
  static HeisElt scalar(int total_rank, const QLaurent& c);
  static HeisElt monomial(const Weight& lambda, const Coweight& gamma, const QLaurent& c = Rational(1));
  static HeisElt e(const Weight& lambda);
  static HeisElt t(const Coweight& gamma);

  int total_rank() const { return n_; }
  const std::map<HeisKey, QLaurent>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  QLaurent coeff(const Weight& lambda, const Coweight& gamma) const;
  void add_term(const Weight& lambda, const Coweight& gamma, const QLaurent& c);

  HeisElt& operator+=(const HeisElt& o);
  HeisElt& operator-=(const HeisElt& o);
  friend HeisElt operator+(HeisElt a, const HeisElt& b) { return a += b; }
  friend HeisElt operator-(HeisElt a, const HeisElt& b) { return a -= b; }
  friend HeisElt operator-(HeisElt a);
  friend HeisElt operator*(const HeisElt& a, const HeisElt& b);
  friend HeisElt operator*(const QLaurent& c, const HeisElt& a);
  friend bool operator==(const HeisElt&, const HeisElt&) = default;

  HeisElt pow(int k) const;
  // q -> value; the result has constant coefficients.
  HeisElt q_specialize(const Rational& value) const;
  bool is_q_free() const;

  std::set<Coweight> t_support() const;
  std::set<Weight> weight_support() const;
  // The part of weight lambda, as a polynomial in the t_gamma.
  std::map<Coweight, QLaurent> weight_block(const Weight& lambda) const;

  std::string str() const;

 private:
  void check(const HeisElt& o) const;
  int n_ = 0;
  std::map<HeisKey, QLaurent> t_;
};

// max <gamma, varpi_i> over the t-support, i.e. the largest coefficient of
// alpha_i^vee; the completion direction. Throws DomainError on zero.
int filtration_degree(const HeisElt& a, int i);
// Terms attaining filtration_degree(a, i).
HeisElt leading_part(const HeisElt& a, int i);
// t_gamma a t_{-gamma}
HeisElt conjugate_by_t(const Coweight& gamma, const HeisElt& a);

}  // namespace grk

#endif
