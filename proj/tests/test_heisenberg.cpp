#include <random>

#include "doctest.h"
#include "grk/heisenberg.h"
#include "grk/root_data.h"

using namespace grk;

namespace {

// Operator model: e^lambda t_gamma sends x^mu to q^<gamma,mu> x^{lambda+mu}.
// Distinct monomials give independent operators, so comparing actions on a
// handful of x^mu at a fixed rational q checks products independently.
std::map<std::vector<int>, Rational> act(const HeisElt& a, const std::map<std::vector<int>, Rational>& v,
                                         const Rational& q) {
  std::map<std::vector<int>, Rational> out;
  for (const auto& [k, c] : a.terms())
    for (const auto& [mu, x] : v) {
      long p = 0;
      std::vector<int> nu(mu);
      for (std::size_t j = 0; j < mu.size(); ++j) {
        p += static_cast<long>(k.second[j]) * mu[j];
        nu[j] += k.first[j];
      }
      Rational qp = rational_pow(q, static_cast<int>(p));
      out[nu] += c.eval(q) * qp * x;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

HeisElt random_elt(std::mt19937_64& rng, int n, int terms, int spread) {
  std::uniform_int_distribution<int> c(-spread, spread), k(-2, 2), nz(1, 5);
  HeisElt a(n);
  for (int t = 0; t < terms; ++t) {
    Weight l(n);
    Coweight g(n);
    for (int j = 0; j < n; ++j) {
      l[j] = c(rng);
      g[j] = c(rng);
    }
    a.add_term(l, g, QLaurent::q_pow(k(rng), nz(rng)) + QLaurent(k(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("commutation rule in A1") {
  RootDatum d = RootDatum::parse("A1");
  Weight w = d.fundamental_weight(1);
  Coweight a = d.simple_coroot(1);
  CHECK(HeisElt::t(a) * HeisElt::e(w) == HeisElt::monomial(w, a, QLaurent::q_pow(1)));
  HeisElt x = HeisElt::monomial(w, a);
  CHECK(x * x == HeisElt::monomial(2 * w, 2 * a, QLaurent::q_pow(1)));
  CHECK(x.pow(2) == x * x);
  CHECK(HeisElt::unit(1) * x == x);
  CHECK(x * HeisElt::unit(1) == x);
  CHECK_THROWS_AS(x * HeisElt::unit(2), DatumMismatch);
}

TEST_CASE("q specialization") {
  RootDatum d = RootDatum::parse("A1");
  Weight w = d.fundamental_weight(1);
  Coweight a = d.simple_coroot(1);
  HeisElt comm = HeisElt::t(a) * HeisElt::e(w) - HeisElt::e(w) * HeisElt::t(a);
  CHECK_FALSE(comm.is_zero());
  CHECK(comm.q_specialize(1).is_zero());
  CHECK(HeisElt::monomial(2 * w, 2 * a, QLaurent::q_pow(1)).q_specialize(1) == HeisElt::monomial(2 * w, 2 * a));
  CHECK_THROWS_AS(comm.q_specialize(0), DomainError);
  std::mt19937_64 rng(7);
  for (int s = 0; s < 50; ++s) {
    HeisElt x = random_elt(rng, 2, 3, 2), y = random_elt(rng, 2, 3, 2);
    CHECK((x * y).q_specialize(2) == (x.q_specialize(2) * y.q_specialize(2)).q_specialize(2));
    CHECK((x * y).q_specialize(1) == (y * x).q_specialize(1));
    CHECK((x * y).q_specialize(2).is_q_free());
  }
}

TEST_CASE("products agree with the operator model") {
  std::mt19937_64 rng(11);
  const Rational q = make_rational(3, 2);
  for (int s = 0; s < 40; ++s) {
    HeisElt x = random_elt(rng, 3, 3, 2), y = random_elt(rng, 3, 3, 2);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> mu{t - 1, 2 - t, t % 2};
      std::map<std::vector<int>, Rational> v{{mu, 1}};
      CHECK(act(x * y, v, q) == act(x, act(y, v, q), q));
    }
  }
}

TEST_CASE("associativity, supports and grading") {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 30; ++s) {
    HeisElt x = random_elt(rng, 2, 3, 2), y = random_elt(rng, 2, 3, 2), z = random_elt(rng, 2, 2, 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    auto sx = x.t_support(), sy = y.t_support();
    for (const auto& g : (x * y).t_support()) {
      bool found = false;
      for (const auto& a : sx)
        for (const auto& b : sy) found = found || (a + b == g);
      CHECK(found);
    }
  }
  CHECK(HeisElt::unit(2).t_support() == std::set<Coweight>{Coweight(2)});
  HeisElt a = HeisElt::monomial(Weight{1, 0}, Coweight{1, 2}), b = HeisElt::monomial(Weight{0, 1}, Coweight{-1, 1});
  CHECK((a * b).t_support() == std::set<Coweight>{Coweight{0, 3}});
}

TEST_CASE("conjugation by translations") {
  std::mt19937_64 rng(17);
  Coweight g{1, -2};
  HeisElt tg = HeisElt::t(g), tmg = HeisElt::t(-g);
  CHECK(tg * tmg == HeisElt::unit(2));
  for (int s = 0; s < 20; ++s) {
    HeisElt x = random_elt(rng, 2, 3, 2), y = random_elt(rng, 2, 3, 2);
    CHECK(conjugate_by_t(g, x) == tg * x * tmg);
    CHECK(conjugate_by_t(g, x * y) == conjugate_by_t(g, x) * conjugate_by_t(g, y));
  }
  HeisElt e = HeisElt::e(Weight{2, 1});
  CHECK(conjugate_by_t(g, e) == QLaurent::q_pow(0) * e);
  CHECK(conjugate_by_t(Coweight{1, 0}, e) == QLaurent::q_pow(2) * e);
}

TEST_CASE("filtration by <gamma, varpi_i>") {
  HeisElt a = HeisElt::monomial(Weight{1, 0}, Coweight{2, 0}) + HeisElt::monomial(Weight{0, 0}, Coweight{2, 1}) +
              HeisElt::monomial(Weight{0, 1}, Coweight{0, 3});
  CHECK(filtration_degree(a, 1) == 2);
  CHECK(filtration_degree(a, 2) == 3);
  CHECK(leading_part(a, 1).terms().size() == 2);
  CHECK(leading_part(a, 2) == HeisElt::monomial(Weight{0, 1}, Coweight{0, 3}));
  CHECK_THROWS_AS(filtration_degree(HeisElt(2), 1), DomainError);
  HeisElt b = HeisElt::monomial(Weight{0, 0}, Coweight{1, 1});
  CHECK(filtration_degree(a * b, 1) == filtration_degree(a, 1) + filtration_degree(b, 1));
}
