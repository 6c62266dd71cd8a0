#ifndef GRK_NILDAHA_H
#define GRK_NILDAHA_H

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "grk/ratfun.h"
#include "grk/root_data.h"
#include "grk/weyl.h"

namespace grk {

// Finite sum  sum_w c_w (x) w  with rational-function coefficients on the
// left; (c (x) w)(d (x) v) = c w(d) (x) wv.
class SmashElt {
 public:
  SmashElt() = default;
  explicit SmashElt(int total_rank) : n_(total_rank) {}
  static SmashElt scalar(const RootDatum& d, const RatFun& c);
  static SmashElt group(const RootDatum& d, const ExtAffWeylElt& w, const RatFun& c);

  int total_rank() const { return n_; }
  const std::map<ExtAffWeylElt, RatFun>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  RatFun coeff(const ExtAffWeylElt& w) const;
  void add_term(const ExtAffWeylElt& w, const RatFun& c);

  friend SmashElt operator+(SmashElt a, const SmashElt& b);
  friend SmashElt operator-(SmashElt a, const SmashElt& b);
  friend SmashElt operator*(const SmashElt& a, const SmashElt& b);
  friend SmashElt operator*(const RatFun& c, const SmashElt& a);
  friend bool operator==(const SmashElt&, const SmashElt&) = default;

  std::string str() const;

 private:
  int n_ = 0;
  std::map<ExtAffWeylElt, RatFun> t_;
};

// Value of a on f in the polynomial representation; IntegralityError if a
// denominator survives.
GroupAlgElt apply_poly(const SmashElt& a, const GroupAlgElt& f);
RatFun apply_rational(const SmashElt& a, const RatFun& f);

struct RelationResult {
  std::string name;
  bool passed = true;
  long instances = 0;
  std::string witness;  // first failing instance, empty when passed
};

// Generators of the nil-DAHA inside the smash algebra, with a memo table
// for D_w (concurrent readers, serialized writers).
class NilDaha {
 public:
  explicit NilDaha(const RootDatum& d);

  const RootDatum& datum() const { return d_; }
  int total_rank() const { return d_.total_rank(); }

  // Monomial of e^{alpha_i}; e^{alpha_0} = q^{-1} e^{-theta}.
  Monomial alpha_monomial(int i) const;
  // <alpha_i^vee, m>, with alpha_0^vee = -theta^vee; q pairs to 0.
  int coroot_pairing(int i, const Monomial& m) const;

  SmashElt one() const;
  SmashElt e(const Weight& lambda) const;
  SmashElt scalar(const RatFun& c) const { return SmashElt::scalar(d_, c); }
  SmashElt D(int i) const;
  SmashElt T(const Coweight& gamma) const;
  SmashElt s(int i) const { return SmashElt::group(d_, simple_reflection(d_, i), RatFun::one(total_rank())); }

  // T_c D_{i_1} ... D_{i_l} along the canonical reduced word.
  SmashElt d_w(const ExtAffWeylElt& w) const;
  SmashElt d_word(const std::vector<int>& word) const;
  // sum_{w in W} 1/prod_{a>0}(1 - e^{w a}) (x) w
  SmashElt d_w0_closed() const;

  // Demazure operator on the polynomial representation, computed monomialwise.
  GroupAlgElt demazure(int i, const GroupAlgElt& f) const;
  GroupAlgElt demazure_word(const std::vector<int>& word, const GroupAlgElt& f) const;
  // Delta_i f = D_i f - s_i f
  GroupAlgElt delta(int i, const GroupAlgElt& f) const;
  GroupAlgElt reflect(int i, const GroupAlgElt& f) const;

  GroupAlgElt weyl_character(const Weight& lambda) const;

  bool leibniz_check(int i, const Weight& lambda) const;

  // The defining relations as smash-algebra identities on generated samples.
  std::vector<RelationResult> relation_suite(int weight_radius = 1) const;
  // D_w agrees for all reduced words of all w in W_af with length <= max_len.
  RelationResult reduced_word_independence(int max_len) const;

  std::vector<int> affine_nodes() const;

 private:
  RootDatum d_;
  mutable std::shared_mutex mu_;
  mutable std::map<ExtAffWeylElt, SmashElt> dw_memo_;
};

}  // namespace grk

#endif
