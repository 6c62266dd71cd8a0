#include "grk/heisenberg.h"

#include <limits>

namespace grk {

HeisElt HeisElt::unit(int total_rank) { return scalar(total_rank, Rational(1)); }

HeisElt HeisElt::scalar(int total_rank, const QLaurent& c) {
  HeisElt a(total_rank);
  a.add_term(Weight(total_rank), Coweight(total_rank), c);
  return a;
}

HeisElt HeisElt::monomial(const Weight& lambda, const Coweight& gamma, const QLaurent& c) {
  if (lambda.size() != gamma.size()) throw DatumMismatch("weight and coweight ranks differ");
  HeisElt a(static_cast<int>(lambda.size()));
  a.add_term(lambda, gamma, c);
  return a;
}

HeisElt HeisElt::e(const Weight& lambda) { return monomial(lambda, Coweight(lambda.size())); }
HeisElt HeisElt::t(const Coweight& gamma) { return monomial(Weight(gamma.size()), gamma); }

QLaurent HeisElt::coeff(const Weight& lambda, const Coweight& gamma) const {
  auto it = t_.find({lambda, gamma});
  return it == t_.end() ? QLaurent() : it->second;
}

void HeisElt::add_term(const Weight& lambda, const Coweight& gamma, const QLaurent& c) {
  if (static_cast<int>(lambda.size()) != n_ || static_cast<int>(gamma.size()) != n_)
    throw DatumMismatch("Heisenberg monomial of the wrong rank");
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(HeisKey{lambda, gamma}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void HeisElt::check(const HeisElt& o) const {
  if (o.n_ != n_) throw DatumMismatch("Heisenberg elements over different data");
}

HeisElt& HeisElt::operator+=(const HeisElt& o) {
  check(o);
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

HeisElt& HeisElt::operator-=(const HeisElt& o) {
  check(o);
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

HeisElt operator-(HeisElt a) {
  for (auto& kv : a.t_) kv.second = -kv.second;
  return a;
}

HeisElt operator*(const HeisElt& a, const HeisElt& b) {
  a.check(b);
  HeisElt r(a.n_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      long k = pairing(ka.second, kb.first);
      r.add_term(ka.first + kb.first, ka.second + kb.second, QLaurent::q_pow(static_cast<int>(k)) * ca * cb);
    }
  return r;
}

HeisElt operator*(const QLaurent& c, const HeisElt& a) {
  HeisElt r(a.n_);
  for (const auto& [k, x] : a.t_) r.add_term(k.first, k.second, c * x);
  return r;
}

HeisElt HeisElt::pow(int k) const {
  if (k < 0) throw DomainError("negative power in the Heisenberg algebra");
  HeisElt r = unit(n_);
  for (int j = 0; j < k; ++j) r = r * *this;
  return r;
}

HeisElt HeisElt::q_specialize(const Rational& value) const {
  if (value == 0) throw DomainError("q cannot be specialized to 0");
  HeisElt r(n_);
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c.eval(value));
  return r;
}

bool HeisElt::is_q_free() const {
  for (const auto& kv : t_)
    if (!kv.second.is_constant()) return false;
  return true;
}

std::set<Coweight> HeisElt::t_support() const {
  std::set<Coweight> s;
  for (const auto& kv : t_) s.insert(kv.first.second);
  return s;
}

std::set<Weight> HeisElt::weight_support() const {
  std::set<Weight> s;
  for (const auto& kv : t_) s.insert(kv.first.first);
  return s;
}

std::map<Coweight, QLaurent> HeisElt::weight_block(const Weight& lambda) const {
  std::map<Coweight, QLaurent> out;
  for (auto it = t_.lower_bound({lambda, Coweight()}); it != t_.end() && it->first.first == lambda; ++it)
    out.emplace(it->first.second, it->second);
  return out;
}

std::string HeisElt::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (!k.first.is_zero()) s += "*e^" + k.first.str();
    if (!k.second.is_zero()) s += "*t^" + k.second.str();
  }
  return s;
}

int filtration_degree(const HeisElt& a, int i) {
  if (a.is_zero()) throw DomainError("filtration degree of zero");
  int best = std::numeric_limits<int>::min();
  for (const auto& g : a.t_support()) best = std::max(best, g[i - 1]);
  return best;
}

HeisElt leading_part(const HeisElt& a, int i) {
  int top = filtration_degree(a, i);
  HeisElt r(a.total_rank());
  for (const auto& [k, c] : a.terms())
    if (k.second[i - 1] == top) r.add_term(k.first, k.second, c);
  return r;
}

HeisElt conjugate_by_t(const Coweight& gamma, const HeisElt& a) {
  HeisElt r(a.total_rank());
  for (const auto& [k, c] : a.terms())
    r.add_term(k.first, k.second, QLaurent::q_pow(static_cast<int>(pairing(gamma, k.first))) * c);
  return r;
}

}  // namespace grk
