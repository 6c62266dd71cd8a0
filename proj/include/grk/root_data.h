#ifndef GRK_ROOT_DATA_H
#define GRK_ROOT_DATA_H

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grk/lattice.h"
#include "grk/rational.h"

namespace grk {

struct SimpleFactor {
  char type = 'A';
  int rank = 1;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct Root {
  Weight weight;            // fundamental-weight coordinates
  Coweight coroot;          // simple-coroot coordinates
  std::vector<int> simple;  // expansion in simple roots
  int height = 0;
};

// Root datum of G = [G,G] x H' with [G,G] simply connected. Simple nodes are
// numbered 1..r across the simple factors in declaration order; the central
// torus H' contributes trailing coordinates to both lattices.
class RootDatum {
 public:
  static RootDatum build(std::vector<SimpleFactor> family, int central_rank = 0);
  // "A2", "B2", "A1xA2"; Bourbaki labelling.
  static RootDatum parse(std::string_view family, int central_rank = 0);

  const std::vector<SimpleFactor>& family() const { return family_; }
  int rank() const { return rank_; }
  int central_rank() const { return central_rank_; }
  int total_rank() const { return rank_ + central_rank_; }
  bool is_simple() const { return family_.size() == 1; }
  std::string label() const;

  // <alpha_i^vee, alpha_j>, nodes 1-based.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  int factor_of(int i) const { return factor_of_[i - 1]; }

  const Weight& simple_root(int i) const { return simple_roots_[i - 1]; }
  Coweight simple_coroot(int i) const;
  Weight fundamental_weight(int i) const;
  Weight central_weight(int k) const;
  Coweight central_coweight(int k) const;
  Weight zero_weight() const { return Weight(total_rank()); }
  Coweight zero_coweight() const { return Coweight(total_rank()); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  // Highest root of the given simple factor (0-based factor index).
  const Root& highest_root(int factor = 0) const { return positive_[highest_[factor]]; }
  const Weight& rho() const { return rho_; }
  // 1/2 sum of positive roots, computed from the root list.
  Weight half_sum_positive_roots() const;

  // +1 for a positive root, -1 for a negative root, 0 otherwise.
  int root_sign(const Weight& w) const;
  // Index into positive_roots() of +-w, or -1.
  int root_index(const Weight& w) const;

  Weight reflect(int i, Weight lambda) const;
  Coweight reflect(int i, Coweight beta) const;
  Weight reflect(const Root& a, Weight lambda) const;
  Coweight reflect(const Root& a, Coweight beta) const;

  bool is_dominant(const Weight& lambda) const;
  bool is_dominant(const Weight& lambda, const std::vector<int>& J) const;
  bool is_central(const Weight& lambda) const;
  bool is_central(const Coweight& beta) const;
  bool in_coroot_lattice(const Coweight& beta) const { return is_central_zero(beta); }

  std::vector<int> nodes() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.family_ == b.family_ && a.central_rank_ == b.central_rank_;
  }

 private:
  bool is_central_zero(const Coweight& beta) const;

  std::vector<SimpleFactor> family_;
  int rank_ = 0;
  int central_rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> factor_of_;
  std::vector<Weight> simple_roots_;
  std::vector<Root> positive_;
  std::vector<int> highest_;
  std::map<Weight, int> root_lookup_;  // +-alpha -> signed (index + 1)
  Weight rho_;
};

// Cartan matrix of a single simple type in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(char type, int rank);

// Standard parabolic / Levi data attached to J subset of I.
struct LeviSpec {
  std::vector<int> J;  // sorted node labels

  bool contains(int i) const;
  // beta in Q^vee_{J,+}: nonnegative coroot coordinates supported on J, no central part.
  bool in_positive_coroot_cone(const RootDatum& d, const Coweight& beta) const;
  // Lambda^{I \ J} = span of fundamental weights off J.
  std::vector<Weight> complementary_fundamental_weights(const RootDatum& d) const;
  // X_*^-(J): <beta, alpha_j> < 0 for all j in J.
  bool strictly_antidominant_on(const RootDatum& d, const Coweight& beta) const;
  bool antidominant_on(const RootDatum& d, const Coweight& beta) const;
};

LeviSpec make_levi(const RootDatum& d, std::vector<int> J);

using RationalWeight = std::vector<Rational>;

struct HullMembership {
  bool in_hull = false;       // mu in Sigma(lambda)
  bool in_hull_minus_orbit = false;  // mu in Sigma_*(lambda)
};

// Exact test of mu in conv(W lambda) by rational linear feasibility.
HullMembership hull_membership(const RootDatum& d, const RationalWeight& lambda,
                               const RationalWeight& mu);
HullMembership hull_membership(const RootDatum& d, const Weight& lambda, const Weight& mu);

// W-orbit of a weight, generated by simple reflections.
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& lambda);
std::vector<RationalWeight> weyl_orbit(const RootDatum& d, const RationalWeight& lambda);

RationalWeight to_rational(const Weight& w);

}  // namespace grk

#endif
