#include "grk/laurent.h"

#include "grk/errors.h"

namespace grk {

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) t_.emplace(0, c);
}

QLaurent QLaurent::q_pow(int k, const Rational& c) {
  QLaurent p;
  if (c != 0) p.t_.emplace(k, c);
  return p;
}

Rational QLaurent::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Rational(0) : it->second;
}

void QLaurent::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int QLaurent::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
int QLaurent::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

Rational rational_pow(const Rational& x, int k) {
  if (k < 0) {
    if (x == 0) throw DivisionByZero("negative power of zero");
    Rational inv = 1 / x;
    return rational_pow(inv, -k);
  }
  Rational r = 1, b = x;
  for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
    if (e & 1U) r *= b;
    b *= b;
  }
  return r;
}

Rational QLaurent::eval(const Rational& q) const {
  Rational s = 0;
  for (const auto& [k, c] : t_) s += c * rational_pow(q, k);
  return s;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent p;
  for (const auto& [i, x] : a.t_)
    for (const auto& [j, y] : b.t_) p.add_term(i + j, x * y);
  return p;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent operator-(QLaurent a) {
  for (auto& [k, c] : a.t_) c = -c;
  return a;
}

std::string QLaurent::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t_) {
    if (!s.empty()) s += (c < 0 ? " - " : " + ");
    else if (c < 0) s += "-";
    Rational a = abs(c);
    bool unit = (a == 1);
    if (k == 0) {
      s += a.get_str();
    } else {
      if (!unit) s += a.get_str() + "*";
      s += "q";
      if (k != 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace grk
