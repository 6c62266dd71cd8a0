#ifndef GRK_TODA_H
#define GRK_TODA_H

#include <vector>

#include "grk/darboux.h"

namespace grk {

// Darboux image of ch V for SL(n):
// phi_1 + sum_{i=1}^{n-1} xi_i phi_{i+1}, with phi_n omitted.
struct TodaHamiltonian {
  int n = 0;
  HeisElt value;
  std::vector<GenWord> provenance;  // one word per summand
};

RootDatum sl_datum(int n);  // A_{n-1}, 2 <= n <= 8

TodaHamiltonian toda_ch_v(int n);
// levi_specialize(toda_ch_v(n), J)
HeisElt toda_restrict(int n, const std::vector<int>& J);
// The same element built from level-J tokens: xi_i with i outside J becomes e^{varpi_i}.
HeisElt toda_rebuild(int n, const std::vector<int>& J);
// q = 1, J = {} image against the character of the highest weight varpi_{n-1}.
bool classical_limit_check(int n);

}  // namespace grk

#endif
