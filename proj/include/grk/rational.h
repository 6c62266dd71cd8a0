#ifndef GRK_RATIONAL_H
#define GRK_RATIONAL_H

#include <gmpxx.h>

#include <string>

namespace grk {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace grk

#endif
