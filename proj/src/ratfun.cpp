#include "grk/ratfun.h"

#include <mutex>
#include <numeric>

namespace grk {

namespace {

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact quotient of integer polynomials with monic divisor.
std::vector<int> poly_div(std::vector<int> a, const std::vector<int>& b) {
  std::vector<int> q(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    int c = a[k + b.size() - 1];
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  return q;
}

int euler_phi(int d) {
  int n = 0;
  for (int k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1) ++n;
  return n;
}

// m = sign * k * p with p primitive and positively oriented, k >= 1.
void primitive_part(const Monomial& m, Monomial& p, int& k, bool& flipped) {
  int g = 0;
  for (int x : m) g = std::gcd(g, x < 0 ? -x : x);
  k = g;
  p = m;
  for (int& x : p) x /= g;
  flipped = false;
  for (int x : p)
    if (x != 0) {
      flipped = x < 0;
      break;
    }
  if (flipped)
    for (int& x : p) x = -x;
}

// 1 - p^k = prod_{d | k} Phi_d(p) with our Phi_1 = 1 - p.
void add_one_minus(std::map<CycloFactor, int>& den, const Monomial& p, int k, int mult) {
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) den[CycloFactor{d, p}] += mult;
}

}  // namespace

namespace {

const std::vector<int>& fill_cyclotomic(std::map<int, std::vector<int>>& cache, int d) {
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<int> num(d + 1, 0);  // x^d - 1
  num[0] = -1;
  num[d] = 1;
  std::vector<int> prod{1};
  for (int e = 1; e < d; ++e)
    if (d % e == 0) prod = poly_mul(prod, fill_cyclotomic(cache, e));
  return cache.emplace(d, poly_div(num, prod)).first->second;
}

}  // namespace

const std::vector<int>& cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<int>> cache;
  std::lock_guard lock(mu);
  return fill_cyclotomic(cache, d);
}

GroupAlgElt cyclo_value(const CycloFactor& f) {
  const int n = static_cast<int>(f.m.size()) - 1;
  GroupAlgElt g(n);
  if (f.d == 1) {
    g.add_term(Monomial(n + 1, 0), 1);
    g.add_term(f.m, -1);
    return g;
  }
  const auto& c = cyclotomic(f.d);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) g.add_term(monomial_scale(static_cast<int>(j), f.m), c[j]);
  return g;
}

RatFun::RatFun(GroupAlgElt num) : num_(std::move(num)) {}

RatFun::RatFun(GroupAlgElt num, std::map<CycloFactor, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

GroupAlgElt RatFun::den() const {
  GroupAlgElt g = GroupAlgElt::constant(total_rank(), Rational(1));
  for (const auto& [f, k] : den_) g = g * cyclo_value(f).pow(k);
  return g;
}

const GroupAlgElt& RatFun::polynomial() const {
  if (!den_.empty()) throw IntegralityError("expected a Laurent polynomial, got " + str());
  return num_;
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second > 0) {
      GroupAlgElt v = cyclo_value(it->first), q;
      while (it->second > 0 && try_divide(num_, v, q)) {
        num_ = std::move(q);
        --it->second;
      }
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFun RatFun::inverse_of(const GroupAlgElt& f) {
  const int n = f.total_rank();
  if (f.is_zero()) throw DivisionByZero("inverse of zero");
  if (f.size() == 1) {
    const auto& [m, c] = *f.terms().begin();
    return RatFun(GroupAlgElt::monomial(monomial_scale(-1, m), 1 / c));
  }
  if (f.size() != 2) throw DomainError("only monomials and binomials can be inverted: " + f.str());
  // f = c1 m1 (1 + r x), x = m2 - m1 (exponent difference)
  auto it = f.terms().begin();
  const auto& [m1, c1] = *it++;
  const auto& [m2, c2] = *it;
  Rational r = c2 / c1;
  if (r != 1 && r != -1) throw DomainError("binomial is not cyclotomic: " + f.str());
  Monomial x(m2);
  for (int k = 0; k <= n; ++k) x[k] -= m1[k];
  Monomial p;
  int k;
  bool flipped;
  primitive_part(x, p, k, flipped);
  // 1/(c1 m1) is the unit prefactor
  GroupAlgElt unit = GroupAlgElt::monomial(monomial_scale(-1, m1), 1 / c1);
  std::map<CycloFactor, int> den;
  if (r == -1) {
    // 1 - p^k, or 1 - p^{-k} = -p^{-k}(1 - p^k)
    add_one_minus(den, p, k, 1);
    if (flipped) unit = unit.mul_monomial(monomial_scale(k, p), -1);
  } else {
    // 1 + y = (1 - y^2)/(1 - y); keep the factors of 1 - p^{2k} not in 1 - p^k
    for (int d = 1; d <= 2 * k; ++d)
      if ((2 * k) % d == 0 && k % d != 0) den[CycloFactor{d, p}] += 1;
    if (flipped) unit = unit.mul_monomial(monomial_scale(k, p));
  }
  return RatFun(unit, den);
}

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero");
  RatFun inv = inverse_of(num_);
  return inv * RatFun(den());
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  std::map<CycloFactor, int> den = a.den_;
  for (const auto& [f, k] : b.den_) den[f] += k;
  return RatFun(a.num_ * b.num_, std::move(den));
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  std::map<CycloFactor, int> lcm = a.den_;
  for (const auto& [f, k] : b.den_) lcm[f] = std::max(lcm[f], k);
  auto cofactor = [&](const std::map<CycloFactor, int>& den) {
    GroupAlgElt g = GroupAlgElt::constant(a.total_rank(), Rational(1));
    for (const auto& [f, k] : lcm) {
      auto it = den.find(f);
      int have = it == den.end() ? 0 : it->second;
      if (k > have) g = g * cyclo_value(f).pow(k - have);
    }
    return g;
  };
  GroupAlgElt num = a.num_ * cofactor(a.den_) + b.num_ * cofactor(b.den_);
  return RatFun(std::move(num), std::move(lcm));
}

RatFun operator-(RatFun a) {
  a.num_ = -a.num_;
  return a;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

namespace {

template <class W>
RatFun act_impl(const W& w, const RatFun& f) {
  GroupAlgElt num = weyl_act(w, f.num());
  std::map<CycloFactor, int> den;
  for (const auto& [fac, k] : f.den_factors()) {
    Monomial img = act_monomial(w, fac.m);
    Monomial p;
    int g;
    bool flipped;
    primitive_part(img, p, g, flipped);
    den[CycloFactor{fac.d, p}] += k;
    if (flipped) {
      // 1/Phi_d(p^{-1}) = p^{phi(d)}/Phi_d(p) for d >= 2, 1/(1 - p^{-1}) = -p/(1 - p)
      int e = fac.d == 1 ? 1 : euler_phi(fac.d);
      Rational sign = (fac.d == 1 && k % 2 != 0) ? -1 : 1;
      num = num.mul_monomial(monomial_scale(e * k, p), sign);
    }
  }
  return RatFun(std::move(num), std::move(den));
}

}  // namespace

RatFun weyl_act(const FiniteWeylElt& w, const RatFun& f) { return act_impl(w, f); }
RatFun weyl_act(const ExtAffWeylElt& w, const RatFun& f) { return act_impl(w, f); }

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  return "(" + num_.str() + ") / (" + den().str() + ")";
}

}  // namespace grk
