#include "grk/group_algebra.h"

#include <algorithm>
#include <climits>

namespace grk {

GroupAlgElt GroupAlgElt::constant(int total_rank, const QLaurent& c) {
  GroupAlgElt f(total_rank);
  for (const auto& [k, x] : c.terms()) {
    Monomial m(total_rank + 1, 0);
    m.back() = k;
    f.t_.emplace(std::move(m), x);
  }
  return f;
}

GroupAlgElt GroupAlgElt::exp(const Weight& lambda, int qexp, const Rational& c) {
  return monomial(monomial_of(lambda, qexp), c);
}

GroupAlgElt GroupAlgElt::monomial(const Monomial& m, const Rational& c) {
  GroupAlgElt f(static_cast<int>(m.size()) - 1);
  if (c != 0) f.t_.emplace(m, c);
  return f;
}

Rational GroupAlgElt::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void GroupAlgElt::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != n_ + 1) throw DatumMismatch("monomial rank mismatch");
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

std::map<Weight, QLaurent> GroupAlgElt::by_weight() const {
  std::map<Weight, QLaurent> out;
  for (const auto& [m, c] : t_) out[weight_of(m)].add_term(q_exponent(m), c);
  return out;
}

bool GroupAlgElt::is_q_free() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.first.back() == 0; });
}

void GroupAlgElt::check(const GroupAlgElt& o) const {
  if (o.n_ != n_) throw DatumMismatch("group algebra: rank mismatch");
}

GroupAlgElt& GroupAlgElt::operator+=(const GroupAlgElt& o) {
  check(o);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

GroupAlgElt& GroupAlgElt::operator-=(const GroupAlgElt& o) {
  check(o);
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

GroupAlgElt& GroupAlgElt::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& kv : t_) kv.second *= c;
  return *this;
}

GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b) {
  a.check(b);
  GroupAlgElt p(a.n_);
  Monomial m(a.n_ + 1);
  for (const auto& [x, c] : a.t_)
    for (const auto& [y, d] : b.t_) {
      for (int k = 0; k <= a.n_; ++k) m[k] = x[k] + y[k];
      p.add_term(m, c * d);
    }
  return p;
}

GroupAlgElt GroupAlgElt::mul_monomial(const Monomial& m, const Rational& c) const {
  GroupAlgElt p(n_);
  if (c == 0) return p;
  for (const auto& [x, d] : t_) p.t_.emplace(monomial_add(x, m), c * d);
  return p;
}

GroupAlgElt GroupAlgElt::pow(int k) const {
  if (k < 0) throw DomainError("negative power of a group algebra element");
  GroupAlgElt r = constant(n_, Rational(1)), b = *this;
  for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
    if (e & 1U) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

GroupAlgElt GroupAlgElt::q_specialize(const Rational& value) const {
  if (value == 0) throw DomainError("q cannot be specialized to 0");
  GroupAlgElt f(n_);
  for (const auto& [m, c] : t_) {
    Monomial x = m;
    int k = x.back();
    x.back() = 0;
    f.add_term(x, c * rational_pow(value, k));
  }
  return f;
}

std::string GroupAlgElt::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!s.empty()) s += (c < 0 ? " - " : " + ");
    else if (c < 0) s += "-";
    Rational a = abs(c);
    bool trivial = std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
    if (a != 1 || trivial) s += a.get_str();
    if (m.back() != 0) {
      if (a != 1) s += "*";
      s += "q";
      if (m.back() != 1) s += "^" + std::to_string(m.back());
    }
    bool wt = std::any_of(m.begin(), m.end() - 1, [](int x) { return x != 0; });
    if (wt) {
      if (a != 1 || m.back() != 0) s += "*";
      s += "e" + weight_of(m).str();
    }
  }
  return s;
}

Monomial monomial_of(const Weight& lambda, int qexp) {
  Monomial m(lambda.begin(), lambda.end());
  m.push_back(qexp);
  return m;
}

Weight weight_of(const Monomial& m) { return Weight(std::vector<int>(m.begin(), m.end() - 1)); }

int q_exponent(const Monomial& m) { return m.back(); }

Monomial monomial_add(const Monomial& a, const Monomial& b) {
  Monomial c(a);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return c;
}

Monomial monomial_scale(int k, const Monomial& a) {
  Monomial c(a);
  for (int& x : c) x *= k;
  return c;
}

Monomial act_monomial(const FiniteWeylElt& w, const Monomial& m) {
  Monomial out = monomial_of(w.act(weight_of(m)), m.back());
  return out;
}

Monomial act_monomial(const ExtAffWeylElt& w, const Monomial& m) {
  Weight mu = weight_of(m);
  long k = m.back() + pairing(w.translation_part(), mu);
  return monomial_of(w.finite_part().act(mu), static_cast<int>(k));
}

GroupAlgElt weyl_act(const FiniteWeylElt& w, const GroupAlgElt& f) {
  GroupAlgElt g(f.total_rank());
  for (const auto& [m, c] : f.terms()) g.add_term(act_monomial(w, m), c);
  return g;
}

GroupAlgElt weyl_act(const ExtAffWeylElt& w, const GroupAlgElt& f) {
  GroupAlgElt g(f.total_rank());
  for (const auto& [m, c] : f.terms()) g.add_term(act_monomial(w, m), c);
  return g;
}

// Division by leading terms in lexicographic order. Any quotient c has its
// exponents in the box [min(a) - min(b), max(a) - max(b)] coordinatewise,
// which both bounds the loop and detects failure early.
bool try_divide(const GroupAlgElt& a, const GroupAlgElt& b, GroupAlgElt& quotient,
                GroupAlgElt* remainder) {
  if (b.is_zero()) throw DivisionByZero("division by the zero element");
  if (a.total_rank() != b.total_rank()) throw DatumMismatch("division: rank mismatch");
  const int n = a.total_rank() + 1;
  quotient = GroupAlgElt(a.total_rank());
  if (a.is_zero()) {
    if (remainder) *remainder = GroupAlgElt(a.total_rank());
    return true;
  }
  auto bounds = [n](const GroupAlgElt& f, std::vector<int>& lo, std::vector<int>& hi) {
    lo.assign(n, INT_MAX);
    hi.assign(n, INT_MIN);
    for (const auto& kv : f.terms())
      for (int k = 0; k < n; ++k) {
        lo[k] = std::min(lo[k], kv.first[k]);
        hi[k] = std::max(hi[k], kv.first[k]);
      }
  };
  std::vector<int> alo, ahi, blo, bhi;
  bounds(a, alo, ahi);
  bounds(b, blo, bhi);
  const auto& [blead, bc] = *b.terms().rbegin();
  GroupAlgElt r = a;
  while (!r.is_zero()) {
    const auto& [rlead, rc] = *r.terms().rbegin();
    Monomial m(n);
    bool inside = true;
    for (int k = 0; k < n; ++k) {
      m[k] = rlead[k] - blead[k];
      if (m[k] < alo[k] - blo[k] || m[k] > ahi[k] - bhi[k]) inside = false;
    }
    if (!inside) {
      if (remainder) *remainder = r;
      return false;
    }
    Rational c = rc / bc;
    quotient.add_term(m, c);
    r -= b.mul_monomial(m, c);
  }
  if (remainder) *remainder = r;
  return true;
}

GroupAlgElt exact_divide(const GroupAlgElt& a, const GroupAlgElt& b) {
  GroupAlgElt q, r;
  if (!try_divide(a, b, q, &r))
    throw NotDivisible("not divisible: remainder " + r.str(), r);
  return q;
}

}  // namespace grk
