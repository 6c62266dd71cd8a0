#include "grk/toda.h"

#include <string>

namespace grk {

namespace {

std::vector<GenWord> toda_words(int n) {
  std::vector<GenWord> words{GenWord{{Token::phi(1)}}};
  for (int i = 1; i <= n - 1; ++i) {
    GenWord w{{Token::xi(i)}};
    if (i + 1 < n) w.tokens.push_back(Token::phi(i + 1));
    words.push_back(w);
  }
  return words;
}

}  // namespace

RootDatum sl_datum(int n) {
  if (n < 2 || n > 8) throw DomainError("Toda needs 2 <= n <= 8, got " + std::to_string(n));
  return RootDatum::parse("A" + std::to_string(n - 1));
}

TodaHamiltonian toda_ch_v(int n) {
  Darboux D(sl_datum(n));
  TodaHamiltonian h;
  h.n = n;
  h.provenance = toda_words(n);
  h.value = HeisElt(D.total_rank());
  for (const auto& w : h.provenance) h.value += D.image(w);
  return h;
}

HeisElt toda_restrict(int n, const std::vector<int>& J) {
  return levi_specialize(sl_datum(n), toda_ch_v(n).value, J);
}

HeisElt toda_rebuild(int n, const std::vector<int>& J) {
  Darboux D(sl_datum(n));
  LeviSpec L = make_levi(D.datum(), J);
  HeisElt r(D.total_rank());
  for (GenWord w : toda_words(n)) {
    for (auto& t : w.tokens)
      if (t.kind == Token::Kind::Xi && !L.contains(t.node)) t = Token::exp(D.datum().fundamental_weight(t.node));
    r += D.image(w);
  }
  return r;
}

bool classical_limit_check(int n) {
  RootDatum d = sl_datum(n);
  HeisElt lim = levi_specialize(d, toda_ch_v(n).value, {}).q_specialize(1);
  GroupAlgElt ch = NilDaha(d).weyl_character(d.fundamental_weight(n - 1));
  HeisElt expect(d.total_rank());
  for (const auto& [m, c] : ch.terms()) {
    if (q_exponent(m) != 0) return false;
    expect.add_term(weight_of(m), d.zero_coweight(), QLaurent(c));
  }
  return lim == expect;
}

}  // namespace grk
