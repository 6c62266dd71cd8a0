#include "grk/qfrac.h"

#include "grk/errors.h"

namespace grk {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly pmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

QPoly padd(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

// a = q b + r
void pdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lb;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

QPoly pgcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly q, r;
    pdivmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

QFrac::QFrac(const Rational& c) : den_{Rational(1)} {
  if (c != 0) num_ = {c};
}

QFrac::QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw DivisionByZero("zero denominator in Q(q)");
  normalize();
}

void QFrac::normalize() {
  if (num_.empty()) {
    den_ = {Rational(1)};
    return;
  }
  QPoly g = pgcd(num_, den_);
  if (g.size() > 1) {
    QPoly q, r;
    pdivmod(num_, g, q, r);
    num_ = std::move(q);
    pdivmod(den_, g, q, r);
    den_ = std::move(q);
  }
  Rational lead = den_.back();
  if (lead != 1) {
    for (auto& c : num_) c /= lead;
    for (auto& c : den_) c /= lead;
  }
}

QFrac QFrac::from_laurent(const QLaurent& f) {
  if (f.is_zero()) return QFrac();
  int lo = f.min_exp();
  int shift = lo < 0 ? -lo : 0;
  QPoly num(static_cast<std::size_t>(f.max_exp() + shift + 1), Rational(0));
  for (const auto& [k, c] : f.terms()) num[k + shift] = c;
  QPoly den(static_cast<std::size_t>(shift + 1), Rational(0));
  den[shift] = 1;
  return QFrac(std::move(num), std::move(den));
}

bool QFrac::is_laurent() const {
  for (std::size_t i = 0; i + 1 < den_.size(); ++i)
    if (den_[i] != 0) return false;
  return true;
}

QLaurent QFrac::to_laurent() const {
  if (!is_laurent()) throw DomainError("not a Laurent polynomial in q: " + str());
  QLaurent f;
  int shift = static_cast<int>(den_.size()) - 1;
  for (std::size_t i = 0; i < num_.size(); ++i) f.add_term(static_cast<int>(i) - shift, num_[i]);
  return f;
}

QFrac QFrac::inverse() const {
  if (num_.empty()) throw DivisionByZero("inverse of zero in Q(q)");
  return QFrac(den_, num_);
}

QFrac operator+(const QFrac& a, const QFrac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QFrac(padd(a.num_, b.num_), a.den_);
  return QFrac(padd(pmul(a.num_, b.den_), pmul(b.num_, a.den_)), pmul(a.den_, b.den_));
}

QFrac operator-(QFrac a) {
  for (auto& c : a.num_) c = -c;
  return a;
}

QFrac operator-(const QFrac& a, const QFrac& b) { return a + (-b); }

QFrac operator*(const QFrac& a, const QFrac& b) {
  if (a.is_zero() || b.is_zero()) return QFrac();
  return QFrac(pmul(a.num_, b.num_), pmul(a.den_, b.den_));
}

std::string QFrac::str() const {
  auto ps = [](const QPoly& p) {
    QLaurent f;
    for (std::size_t i = 0; i < p.size(); ++i) f.add_term(static_cast<int>(i), p[i]);
    return f.str();
  };
  if (den_.size() == 1) return ps(num_);
  return "(" + ps(num_) + ")/(" + ps(den_) + ")";
}

}  // namespace grk
