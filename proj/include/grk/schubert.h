#ifndef GRK_SCHUBERT_H
#define GRK_SCHUBERT_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grk/nildaha.h"

namespace grk {

// Element sum_w f_w [O_{B^J(w)}] of K_H(B^J), B^J = P^J / B, with w running
// over the parabolic subgroup W^J generated by J. B^J(e) is the whole space
// and B^J(w_0^J) is the point.
class FlagKElt {
 public:
  FlagKElt() = default;
  FlagKElt(std::vector<int> J, int total_rank) : J_(std::move(J)), n_(total_rank) {}

  const std::vector<int>& J() const { return J_; }
  int total_rank() const { return n_; }
  const std::map<FiniteWeylElt, GroupAlgElt>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  GroupAlgElt coeff(const FiniteWeylElt& w) const;
  void add_term(const FiniteWeylElt& w, const GroupAlgElt& f);

  friend FlagKElt operator+(FlagKElt a, const FlagKElt& b);
  friend FlagKElt operator-(FlagKElt a, const FlagKElt& b);
  // character twist by f
  friend FlagKElt operator*(const GroupAlgElt& f, const FlagKElt& x);
  friend bool operator==(const FlagKElt&, const FlagKElt&) = default;

 private:
  std::vector<int> J_;
  int n_ = 0;
  std::map<FiniteWeylElt, GroupAlgElt> t_;
};

// Sum_k f_k [O_{B^J}(lambda_k)], the classes on which Levi restriction is defined.
struct LineBundleCombination {
  std::vector<std::pair<GroupAlgElt, Weight>> terms;
};

class SchubertModule {
 public:
  SchubertModule(const RootDatum& d, std::vector<int> J);

  const RootDatum& datum() const { return h_.datum(); }
  const std::vector<int>& J() const { return J_; }
  const std::vector<FiniteWeylElt>& elements() const { return elements_; }
  const FiniteWeylElt& longest() const { return w0_; }

  FlagKElt zero() const { return FlagKElt(J_, h_.total_rank()); }
  // f [O_{B^J(w)}]
  FlagKElt basis(const FiniteWeylElt& w, const GroupAlgElt& f) const;
  FlagKElt basis(const FiniteWeylElt& w) const;
  FlagKElt structure_sheaf() const;  // [O_{B^J}]
  FlagKElt point_class() const;      // [O_{B^J(w_0^J)}]

  // D_i(f [O_w]) = Delta_i(f) [O_w] + s_i(f) D_i[O_w]
  FlagKElt demazure_act(int i, const FlagKElt& x) const;
  FlagKElt demazure_word(const std::vector<int>& word, const FlagKElt& x) const;
  FlagKElt demazure_longest(const FlagKElt& x) const;

  // D_{w_0^J}(e^{w_0^J lambda} [point])
  FlagKElt line_bundle_global(const Weight& lambda) const;
  FlagKElt from_combination(const LineBundleCombination& c) const;
  // H-equivariant Euler characteristic: every Schubert structure sheaf contributes 1.
  GroupAlgElt character(const FlagKElt& x) const;

  // D_j on a line-bundle combination: D_j(f [O(lambda)]) = D_j(f) [O(lambda)].
  LineBundleCombination demazure_act(int j, const LineBundleCombination& c) const;

  std::string key(const FiniteWeylElt& w) const;  // reduced word, e.g. "121"

 private:
  void check_node(int i) const;
  NilDaha h_;
  std::vector<int> J_;
  std::vector<FiniteWeylElt> elements_;
  FiniteWeylElt w0_;
};

struct UnsupportedClass : DomainError {
  using DomainError::DomainError;
};

// Levi restriction K_H(B^J) -> K_H(B^{J'}) on line-bundle combinations.
FlagKElt levi_restrict(const SchubertModule& target, const LineBundleCombination& c);
// Restriction of a class given in the Schubert basis; only multiples of
// [O_{B^J}] are recognized as line-bundle classes.
FlagKElt levi_restrict(const SchubertModule& source, const SchubertModule& target, const FlagKElt& x);

struct RestrictionCheck {
  bool source_consistent = false;  // combination D_j matches the Schubert-basis D_j on B^J
  bool commutes = false;           // restrict(D_j x) == D_j restrict(x) on B^{J'}
};
RestrictionCheck check_restriction_commutes(const SchubertModule& source, const SchubertModule& target,
                                            const LineBundleCombination& c, int j);

}  // namespace grk

#endif
