#ifndef GRK_DARBOUX_H
#define GRK_DARBOUX_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grk/heisenberg.h"
#include "grk/nildaha.h"
#include "grk/qfrac.h"
#include "grk/root_data.h"

namespace grk {

struct Token {
  enum class Kind { Phi, Xi, H, Trans, Exp, Char, Scalar };
  Kind kind = Kind::Scalar;
  int node = 0;        // Phi, Xi, H
  Weight weight;       // Exp, Char
  Coweight coweight;   // Trans
  QLaurent scalar;     // Scalar

  static Token phi(int i);
  static Token xi(int i);
  static Token h(int i);
  static Token trans(const Coweight& g);
  static Token exp(const Weight& l);
  static Token chr(const Weight& l);
  static Token constant(const QLaurent& c);
  std::string str() const;
  friend bool operator==(const Token&, const Token&) = default;
};

// Ordered product of tokens.
struct GenWord {
  std::vector<Token> tokens;
  std::string str() const;
  friend GenWord operator*(GenWord a, const GenWord& b);
};

// "xi1 phi2 t:1,0 e:0,1 char:0,0,1 q^2 -3/2", separated by blanks or '*'.
GenWord parse_word(const RootDatum& d, const std::string& text);

struct IdentityResult {
  std::string name;
  bool passed = true;
  long instances = 0;
  std::string witness;
};

using FamilyIndex = std::pair<Weight, Coweight>;

struct Membership {
  bool feasible = false;
  std::map<FamilyIndex, QFrac> coefficients;  // (lambda, gamma) -> coefficient
  std::string certificate;                    // why the box is infeasible
};

struct ChainReport {
  std::vector<int> J, Jp;
  std::uint64_t seed = 0;
  int samples = 0;
  int decomposed = 0;
  std::vector<std::string> failures;  // words that did not decompose
  bool passed() const { return decomposed == samples; }
};

struct RankReport {
  long family_size = 0;
  long rank = 0;
  bool full_rank() const { return rank == family_size; }
};

class Darboux {
 public:
  explicit Darboux(RootDatum d);
  const RootDatum& datum() const { return d_; }
  int total_rank() const { return d_.total_rank(); }

  HeisElt phi(int i) const;  // e^{-varpi_i}
  HeisElt xi(int i) const;   // (1 - t_{alpha_i^vee}) e^{varpi_i}
  HeisElt h(int i) const;    // 1 - e^{varpi_i} phi(i)
  HeisElt image(const Token& tok) const;
  HeisElt image(const GenWord& w) const;

  std::vector<IdentityResult> check_relations() const;

  // prod_{n_i<0} xi_i^{-n_i} prod_{n_i>0} phi_i^{n_i} t_gamma, n_i = <alpha_i^vee, lambda>
  HeisElt c_basis_element(const Weight& lambda, const Coweight& gamma) const;
  GenWord c_basis_word(const Weight& lambda, const Coweight& gamma) const;
  // Level-J member: xi/phi for j in J, e^{-n_i varpi_i} for i outside J, and
  // e^{-lambda_central}; its leading monomial is e^{-lambda} t_gamma.
  HeisElt family_member(const std::vector<int>& J, const Weight& lambda, const Coweight& gamma) const;

  // Exact decomposition of target over the level-J family with |coords| <= radius.
  Membership membership_decompose(const HeisElt& target, const std::vector<int>& J, int radius) const;

  // Level-J generators: phi_i, xi_j (j in J), e^{varpi_i} (i not in J), t_{+-e_k}, central characters.
  std::vector<GenWord> level_generators(const std::vector<int>& J) const;
  ChainReport levi_chain_check(const std::vector<int>& J, const std::vector<int>& Jp, int samples, int degree,
                               int radius, std::uint64_t seed) const;

  // Rank over Q(q) of {c_basis_element(lambda, gamma)} with |<alpha_i^vee,lambda>| <= lambda_radius
  // (no central part) and gamma in the box of the given radius.
  RankReport clag_rank(int lambda_radius, int gamma_radius) const;

 private:
  std::vector<int> normalize_levi(std::vector<int> J) const;
  RootDatum d_;
};

// Kills monomials e^lambda t_gamma with gamma_i != 0 for some i outside J.
// Needs every gamma in Q^vee_+ (DomainError otherwise).
HeisElt levi_specialize(const RootDatum& d, const HeisElt& a, const std::vector<int>& J);
bool is_admissible(const RootDatum& d, const HeisElt& a);

}  // namespace grk

#endif
