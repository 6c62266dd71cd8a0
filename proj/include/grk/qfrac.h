#ifndef GRK_QFRAC_H
#define GRK_QFRAC_H

#include <string>
#include <vector>

#include "grk/laurent.h"
#include "grk/rational.h"

namespace grk {

// Polynomial in q, dense, constant term first, no trailing zeros.
using QPoly = std::vector<Rational>;

// Element of Q(q) in lowest terms with a monic denominator.
class QFrac {
 public:
  QFrac() : den_{Rational(1)} {}
  QFrac(const Rational& c);  // NOLINT(google-explicit-constructor)
  QFrac(long c) : QFrac(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  QFrac(QPoly num, QPoly den);
  static QFrac from_laurent(const QLaurent& f);

  bool is_zero() const { return num_.empty(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  // Laurent value when the denominator is a power of q (else DomainError).
  QLaurent to_laurent() const;
  bool is_laurent() const;

  QFrac inverse() const;
  friend QFrac operator+(const QFrac& a, const QFrac& b);
  friend QFrac operator-(const QFrac& a, const QFrac& b);
  friend QFrac operator-(QFrac a);
  friend QFrac operator*(const QFrac& a, const QFrac& b);
  friend QFrac operator/(const QFrac& a, const QFrac& b) { return a * b.inverse(); }
  QFrac& operator+=(const QFrac& o) { return *this = *this + o; }
  QFrac& operator-=(const QFrac& o) { return *this = *this - o; }
  friend bool operator==(const QFrac&, const QFrac&) = default;

  std::string str() const;

 private:
  void normalize();
  QPoly num_, den_;
};

}  // namespace grk

#endif
