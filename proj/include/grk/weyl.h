#ifndef GRK_WEYL_H
#define GRK_WEYL_H

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "grk/lattice.h"
#include "grk/root_data.h"

namespace grk {

// Element of the finite Weyl group W, stored as its integer action matrix on
// the derived weight coordinates together with the matrix of its inverse.
class FiniteWeylElt {
 public:
  FiniteWeylElt() = default;
  static FiniteWeylElt identity(int rank);
  static FiniteWeylElt simple(const RootDatum& d, int i);
  static FiniteWeylElt reflection(const RootDatum& d, const Root& a);
  static FiniteWeylElt from_word(const RootDatum& d, const std::vector<int>& word);

  int rank() const { return r_; }
  bool is_identity() const;

  Weight act(const Weight& lambda) const;
  Coweight act(const Coweight& beta) const;
  Weight act_inverse(const Weight& lambda) const;
  Coweight act_inverse(const Coweight& beta) const;

  FiniteWeylElt inverse() const;

  friend FiniteWeylElt operator*(const FiniteWeylElt& a, const FiniteWeylElt& b);
  friend bool operator==(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a.m_ == b.m_; }
  friend auto operator<=>(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a.m_ <=> b.m_; }

 private:
  int r_ = 0;
  std::vector<int> m_;     // row-major r x r, acts on weights
  std::vector<int> minv_;  // matrix of the inverse
};

int length(const RootDatum& d, const FiniteWeylElt& w);
// ShortLex-least reduced word.
std::vector<int> reduced_word(const RootDatum& d, const FiniteWeylElt& w);
// Elements of the parabolic subgroup W^J (all of W when J is I), by length
// then ShortLex word.
std::vector<FiniteWeylElt> weyl_group_elements(const RootDatum& d, const std::vector<int>& J);
std::vector<FiniteWeylElt> weyl_group_elements(const RootDatum& d);
FiniteWeylElt longest_element(const RootDatum& d, const std::vector<int>& J);
FiniteWeylElt longest_element(const RootDatum& d);

// u t_gamma in the extended affine Weyl group W x| X_*.
class ExtAffWeylElt {
 public:
  ExtAffWeylElt() = default;
  ExtAffWeylElt(FiniteWeylElt u, Coweight gamma);
  static ExtAffWeylElt identity(const RootDatum& d);
  static ExtAffWeylElt translation(const RootDatum& d, const Coweight& gamma);
  static ExtAffWeylElt finite(const RootDatum& d, const FiniteWeylElt& u);

  const FiniteWeylElt& finite_part() const { return u_; }
  const Coweight& translation_part() const { return gamma_; }
  bool is_identity() const { return u_.is_identity() && gamma_.is_zero(); }

  ExtAffWeylElt inverse() const;

  // (u t_g)(v t_h) = uv t_{v^-1 g + h}
  friend ExtAffWeylElt operator*(const ExtAffWeylElt& a, const ExtAffWeylElt& b);
  friend bool operator==(const ExtAffWeylElt&, const ExtAffWeylElt&) = default;
  friend auto operator<=>(const ExtAffWeylElt& a, const ExtAffWeylElt& b) {
    if (auto c = a.u_ <=> b.u_; c != 0) return c;
    return a.gamma_ <=> b.gamma_;
  }

 private:
  FiniteWeylElt u_;
  Coweight gamma_;
};

// s_i for i in I_af = {0} u I. s_0 = s_theta t_{-theta^vee}, so that
// s_theta s_0 = t_{-theta^vee}. Requires a simple derived group for i = 0.
ExtAffWeylElt simple_reflection(const RootDatum& d, int i);
ExtAffWeylElt from_affine_word(const RootDatum& d, const std::vector<int>& word);

// Iwahori-Matsumoto length; central translations have length 0.
int length(const RootDatum& d, const ExtAffWeylElt& w);

struct AffineWord {
  Coweight central;        // central translation tag t_c
  std::vector<int> word;   // letters in I_af
  friend bool operator==(const AffineWord&, const AffineWord&) = default;
};

// w = t_c s_{i_1} ... s_{i_l} with l = length(w); at each step the least left
// descent is split off.
AffineWord reduced_word_affine(const RootDatum& d, const ExtAffWeylElt& w);
ExtAffWeylElt from_affine_word(const RootDatum& d, const AffineWord& w);

bool is_left_descent(const RootDatum& d, const ExtAffWeylElt& w, int i);
bool in_affine_weyl(const RootDatum& d, const ExtAffWeylElt& w);
// Minimal length in its coset w W.
bool is_minimal_coset_rep(const RootDatum& d, const ExtAffWeylElt& w);
// Order of s_i s_j in W_af; 0 when infinite.
int coxeter_order(const RootDatum& d, int i, int j);
// All reduced words of w (w in W_af).
std::vector<std::vector<int>> all_reduced_words(const RootDatum& d, const ExtAffWeylElt& w);
// Elements of W_af with length <= max_length.
std::vector<ExtAffWeylElt> affine_ball(const RootDatum& d, int max_length);
// -2 rho^vee = -(sum of positive coroots), a strictly antidominant element of Q^vee.
Coweight minus_two_rho_vee(const RootDatum& d);

struct SemiInfiniteConfig {
  int max_probes = 8;  // values of N tried before giving up
  int agree = 3;       // consecutive equal answers required
};

struct SemiInfiniteTrace {
  bool value = false;
  int first_n = 0;             // N at which the agreeing run starts
  std::vector<bool> answers;   // answer for N0, N0+1, ...
};

// Bruhat and semi-infinite orders with a shared memo table. Concurrent
// readers are allowed; memo writes are serialized.
class AffineOrders {
 public:
  explicit AffineOrders(const RootDatum& d, SemiInfiniteConfig cfg = {});

  bool bruhat_leq(const ExtAffWeylElt& w, const ExtAffWeylElt& v) const;
  bool semi_infinite_leq(const ExtAffWeylElt& w, const ExtAffWeylElt& v) const;
  SemiInfiniteTrace semi_infinite_trace(const ExtAffWeylElt& w, const ExtAffWeylElt& v) const;

  const RootDatum& datum() const { return d_; }

 private:
  bool bruhat_uncached(ExtAffWeylElt w, ExtAffWeylElt v) const;
  std::pair<ExtAffWeylElt, ExtAffWeylElt> align_central(const ExtAffWeylElt& w,
                                                        const ExtAffWeylElt& v) const;

  RootDatum d_;
  SemiInfiniteConfig cfg_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<ExtAffWeylElt, ExtAffWeylElt>, bool> memo_;
};

}  // namespace grk

#endif
