#ifndef GRK_CHECKS_H
#define GRK_CHECKS_H

#include <cstdint>
#include <string>
#include <vector>

#include "grk/root_data.h"
#include "grk/weyl.h"

namespace grk {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  long instances = 0;
  std::string witness;
  double seconds = 0;

  void record(bool ok, const std::string& where) {
    ++instances;
    if (!ok && passed) {
      passed = false;
      witness = where;
    }
  }
};

// Derived coroot coordinates in [-radius, radius], central part zero.
std::vector<Coweight> coroot_box(const RootDatum& d, int radius);
bool antidominant(const RootDatum& d, const Coweight& beta);
bool strictly_antidominant(const RootDatum& d, const Coweight& beta);
std::vector<std::vector<int>> all_subsets(const std::vector<int>& nodes);

CheckResult check_nildaha_relations(const RootDatum& d, int weight_radius);
CheckResult check_word_independence(const RootDatum& d, int max_len);
// W-invariance and Weyl dimension for dominant weights with coordinates <= max_coord.
CheckResult check_characters(const RootDatum& d, int max_coord);
// af-len 1-3 over u in W and beta in the coroot box; rank >= 3 samples beta.
CheckResult check_length_identities(const RootDatum& d, int radius, std::uint64_t seed);
// Elements u t_beta <= e in the semi-infinite order have beta in Q^vee_+, and
// the order reverses Bruhat on W (all pairs up to rank 2, u against e, s_i, w_0 beyond).
CheckResult check_semi_infinite(const RootDatum& d, int radius);
CheckResult check_darboux_relations(const RootDatum& d);
CheckResult check_clag_rank(const RootDatum& d, int lambda_radius, int gamma_radius);
// Every chain J' in J in I.
CheckResult check_levi_chains(const RootDatum& d, int samples, int degree, int radius, std::uint64_t seed);
CheckResult check_levi_specialize(const RootDatum& d, int pairs, std::uint64_t seed);
CheckResult check_schubert(const RootDatum& d);
CheckResult check_toda(int n);

struct SuiteConfig {
  std::uint64_t seed = 0;
  int chain_samples = 20;
  int chain_degree = 3;
  int chain_box = 6;
  int specialize_pairs = 100;
  int word_length = 4;
  bool parallel = true;
};

// The full battery for one datum; checks that need a simple group or type A
// are marked skipped elsewhere.
std::vector<CheckResult> run_suite(const RootDatum& d, const SuiteConfig& cfg);

}  // namespace grk

#endif
