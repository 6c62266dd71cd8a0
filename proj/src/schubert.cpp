#include "grk/schubert.h"

#include <algorithm>

namespace grk {

GroupAlgElt FlagKElt::coeff(const FiniteWeylElt& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? GroupAlgElt(n_) : it->second;
}

void FlagKElt::add_term(const FiniteWeylElt& w, const GroupAlgElt& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = t_.emplace(w, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FlagKElt operator+(FlagKElt a, const FlagKElt& b) {
  if (a.J_ != b.J_) throw DatumMismatch("flag classes over different parabolics");
  for (const auto& [w, f] : b.t_) a.add_term(w, f);
  return a;
}

FlagKElt operator-(FlagKElt a, const FlagKElt& b) {
  if (a.J_ != b.J_) throw DatumMismatch("flag classes over different parabolics");
  for (const auto& [w, f] : b.t_) a.add_term(w, -f);
  return a;
}

FlagKElt operator*(const GroupAlgElt& f, const FlagKElt& x) {
  FlagKElt y(x.J_, x.n_);
  for (const auto& [w, g] : x.t_) y.add_term(w, f * g);
  return y;
}

SchubertModule::SchubertModule(const RootDatum& d, std::vector<int> J)
    : h_(d), J_(make_levi(d, std::move(J)).J) {
  elements_ = weyl_group_elements(d, J_);
  w0_ = longest_element(d, J_);
}

void SchubertModule::check_node(int i) const {
  if (!std::binary_search(J_.begin(), J_.end(), i))
    throw DomainError("D_" + std::to_string(i) + " does not act on this parabolic flag variety");
}

FlagKElt SchubertModule::basis(const FiniteWeylElt& w, const GroupAlgElt& f) const {
  FlagKElt x = zero();
  x.add_term(w, f);
  return x;
}

FlagKElt SchubertModule::basis(const FiniteWeylElt& w) const {
  return basis(w, GroupAlgElt::constant(h_.total_rank(), Rational(1)));
}

FlagKElt SchubertModule::structure_sheaf() const { return basis(FiniteWeylElt::identity(datum().rank())); }
FlagKElt SchubertModule::point_class() const { return basis(w0_); }

FlagKElt SchubertModule::demazure_act(int i, const FlagKElt& x) const {
  check_node(i);
  if (x.J() != J_) throw DatumMismatch("flag class over a different parabolic");
  const RootDatum& d = datum();
  FiniteWeylElt si = FiniteWeylElt::simple(d, i);
  FlagKElt y = zero();
  for (const auto& [w, f] : x.terms()) {
    y.add_term(w, h_.delta(i, f));
    FiniteWeylElt sw = si * w;
    const FiniteWeylElt& target = length(d, sw) < length(d, w) ? sw : w;
    y.add_term(target, h_.reflect(i, f));
  }
  return y;
}

FlagKElt SchubertModule::demazure_word(const std::vector<int>& word, const FlagKElt& x) const {
  FlagKElt y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = demazure_act(*it, y);
  return y;
}

FlagKElt SchubertModule::demazure_longest(const FlagKElt& x) const {
  return demazure_word(reduced_word(datum(), w0_), x);
}

FlagKElt SchubertModule::line_bundle_global(const Weight& lambda) const {
  return demazure_longest(GroupAlgElt::exp(w0_.act(lambda)) * point_class());
}

FlagKElt SchubertModule::from_combination(const LineBundleCombination& c) const {
  FlagKElt x = zero();
  for (const auto& [f, lambda] : c.terms) x = x + f * line_bundle_global(lambda);
  return x;
}

GroupAlgElt SchubertModule::character(const FlagKElt& x) const {
  GroupAlgElt s(h_.total_rank());
  for (const auto& kv : x.terms()) s += kv.second;
  return s;
}

LineBundleCombination SchubertModule::demazure_act(int j, const LineBundleCombination& c) const {
  check_node(j);
  LineBundleCombination out;
  for (const auto& [f, lambda] : c.terms) out.terms.emplace_back(h_.demazure(j, f), lambda);
  return out;
}

std::string SchubertModule::key(const FiniteWeylElt& w) const {
  std::string s;
  for (int i : reduced_word(datum(), w)) s += std::to_string(i);
  return s.empty() ? "e" : s;
}

FlagKElt levi_restrict(const SchubertModule& target, const LineBundleCombination& c) {
  return target.from_combination(c);
}

FlagKElt levi_restrict(const SchubertModule& source, const SchubertModule& target, const FlagKElt& x) {
  if (!std::includes(source.J().begin(), source.J().end(), target.J().begin(), target.J().end()))
    throw DomainError("Levi restriction needs J' inside J");
  FiniteWeylElt e = FiniteWeylElt::identity(source.datum().rank());
  for (const auto& kv : x.terms())
    if (!(kv.first == e))
      throw UnsupportedClass("class is not a recognized line-bundle combination; pass it as one");
  LineBundleCombination c;
  if (!x.is_zero()) c.terms.emplace_back(x.coeff(e), source.datum().zero_weight());
  return levi_restrict(target, c);
}

RestrictionCheck check_restriction_commutes(const SchubertModule& source, const SchubertModule& target,
                                            const LineBundleCombination& c, int j) {
  if (!std::includes(source.J().begin(), source.J().end(), target.J().begin(), target.J().end()))
    throw DomainError("Levi restriction needs J' inside J");
  RestrictionCheck r;
  LineBundleCombination dc = target.demazure_act(j, c);
  r.source_consistent = source.from_combination(dc) == source.demazure_act(j, source.from_combination(c));
  r.commutes = levi_restrict(target, dc) == target.demazure_act(j, levi_restrict(target, c));
  return r;
}

}  // namespace grk
