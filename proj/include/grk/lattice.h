#ifndef GRK_LATTICE_H
#define GRK_LATTICE_H

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "grk/errors.h"

namespace grk {

// Integer coordinate vector in a fixed lattice basis. The tag keeps weights
// (X^*) and coweights (X_*) from being mixed up.
template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(std::size_t n) : c_(n, 0) {}
  LatticeVec(std::initializer_list<int> il) : c_(il) {}
  explicit LatticeVec(std::vector<int> v) : c_(std::move(v)) {}

  static LatticeVec unit(std::size_t n, std::size_t k) {
    LatticeVec v(n);
    v.c_[k] = 1;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t k) const { return c_[k]; }
  int& operator[](std::size_t k) { return c_[k]; }
  const std::vector<int>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    for (int x : c_)
      if (x != 0) return false;
    return true;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  LatticeVec& operator*=(int s) {
    for (int& x : c_) x *= s;
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(int s, LatticeVec a) { return a *= s; }
  friend LatticeVec operator-(LatticeVec a) { return a *= -1; }

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend auto operator<=>(const LatticeVec& a, const LatticeVec& b) { return a.c_ <=> b.c_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(c_[k]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVec& v) { return os << v.str(); }

 private:
  void check(const LatticeVec& o) const {
    if (o.c_.size() != c_.size()) throw DatumMismatch("lattice rank mismatch");
  }
  std::vector<int> c_;
};

struct WeightTag {};
struct CoweightTag {};

// Weights: fundamental-weight coordinates, then central-character coordinates.
using Weight = LatticeVec<WeightTag>;
// Coweights: simple-coroot coordinates, then central-cocharacter coordinates.
using Coweight = LatticeVec<CoweightTag>;

// <beta, lambda>; the two coordinate systems are dual, so this is a dot product.
inline long pairing(const Coweight& beta, const Weight& lambda) {
  if (beta.size() != lambda.size()) throw DatumMismatch("pairing: rank mismatch");
  long s = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) s += static_cast<long>(beta[k]) * lambda[k];
  return s;
}

}  // namespace grk

#endif
