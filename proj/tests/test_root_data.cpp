#include <functional>
#include <set>

#include "doctest.h"
#include "grk/root_data.h"
#include "grk/weyl.h"
#include "oracles.h"

using namespace grk;

namespace {

const std::vector<std::pair<char, int>> kTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 6}, {'B', 2}, {'B', 3},
    {'C', 2}, {'C', 3}, {'D', 4}, {'D', 5}, {'G', 2}};

long expected_positive_count(char t, int n) {
  switch (t) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    default: return 6;
  }
}

}  // namespace

TEST_CASE("positive roots agree with the closure oracle and the classified counts") {
  for (auto [t, n] : kTypes) {
    CAPTURE(t);
    CAPTURE(n);
    RootDatum d = RootDatum::build({{t, n}});
    auto ref = oracle::positive_roots(cartan_matrix(t, n));
    CHECK(static_cast<long>(d.positive_roots().size()) == expected_positive_count(t, n));
    std::set<std::vector<int>> mine, theirs(ref.begin(), ref.end());
    for (const auto& a : d.positive_roots()) mine.insert(a.simple);
    CHECK(mine == theirs);
  }
}

TEST_CASE("duality, Cartan entries and rho") {
  for (auto [t, n] : kTypes) {
    RootDatum d = RootDatum::build({{t, n}}, 1);
    auto a = cartan_matrix(t, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(pairing(d.simple_coroot(i), d.fundamental_weight(j)) == (i == j ? 1 : 0));
        CHECK(pairing(d.simple_coroot(i), d.simple_root(j)) == a[i - 1][j - 1]);
      }
    Weight sum = d.zero_weight();
    for (int i = 1; i <= n; ++i) sum += d.fundamental_weight(i);
    CHECK(sum == d.rho());
    CHECK(d.half_sum_positive_roots() == d.rho());
  }
}

TEST_CASE("highest root is dominant and maximal") {
  for (auto [t, n] : kTypes) {
    RootDatum d = RootDatum::build({{t, n}});
    const Root& th = d.highest_root(0);
    CHECK(d.is_dominant(th.weight));
    for (const auto& a : d.positive_roots())
      for (std::size_t k = 0; k < a.simple.size(); ++k) CHECK(a.simple[k] <= th.simple[k]);
  }
}

TEST_CASE("small examples") {
  RootDatum a1 = RootDatum::parse("A1");
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.highest_root().weight == a1.simple_root(1));
  CHECK(a1.rho() == a1.fundamental_weight(1));
  CHECK(pairing(2 * a1.simple_coroot(1), 3 * a1.fundamental_weight(1)) == 6);
  RootDatum a2 = RootDatum::parse("A2");
  CHECK(pairing(a2.simple_coroot(1), a2.simple_root(2)) == -1);
  CHECK(a2.highest_root().simple == std::vector<int>{1, 1});
  CHECK(RootDatum::parse("G2").positive_roots().size() == 6);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(RootDatum::parse("E6"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("A0"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("D3"), ConfigError);
  CHECK_THROWS_AS(RootDatum::parse("Ax"), ConfigError);
  CHECK_THROWS_AS(pairing(Coweight{1, 0}, Weight{1}), DatumMismatch);
}

TEST_CASE("products and central tori") {
  RootDatum d = RootDatum::parse("A1xA2", 1);
  CHECK(d.rank() == 3);
  CHECK(d.total_rank() == 4);
  CHECK(d.positive_roots().size() == 4);
  CHECK(d.label() == "A1xA2+T1");
  CHECK(pairing(d.simple_coroot(1), d.simple_root(2)) == 0);
  CHECK(d.is_central(d.central_weight(0)));
  CHECK_FALSE(d.is_central(d.fundamental_weight(1)));
}

TEST_CASE("hull membership examples") {
  RootDatum a1 = RootDatum::parse("A1");
  auto h = hull_membership(a1, a1.simple_root(1), a1.zero_weight());
  CHECK(h.in_hull);
  CHECK(h.in_hull_minus_orbit);
  h = hull_membership(a1, a1.fundamental_weight(1), a1.fundamental_weight(1));
  CHECK(h.in_hull);
  CHECK_FALSE(h.in_hull_minus_orbit);
  RootDatum a2 = RootDatum::parse("A2");
  CHECK_FALSE(hull_membership(a2, a2.fundamental_weight(1), a2.fundamental_weight(2)).in_hull);
}

TEST_CASE("hull membership matches the dominance oracle and is W-invariant") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
    RootDatum d = RootDatum::build({{t, n}});
    auto a = cartan_matrix(t, n);
    auto ws = weyl_group_elements(d);
    std::vector<Weight> lambdas;
    if (n == 2)
      lambdas = {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 1}};
    else
      lambdas = {Weight{1, 0, 0}, Weight{0, 1, 1}};
    for (const auto& lam : lambdas) {
      std::vector<int> lo(n, -3), c(n);
      std::function<void(int)> rec = [&](int j) {
        if (j == n) {
          Weight mu(c);
          RationalWeight lr = to_rational(lam), mr = to_rational(mu);
          bool got = hull_membership(d, lam, mu).in_hull;
          CHECK(got == oracle::hull_by_dominance(a, lr, mr));
          const auto& w = ws[(c[0] + 7 * (n > 1 ? c[1] : 0) + 100) % ws.size()];
          CHECK(hull_membership(d, w.act(lam), w.act(mu)).in_hull == got);
          return;
        }
        for (c[j] = -3; c[j] <= 3; ++c[j]) rec(j + 1);
      };
      if (n == 3) {
        // sampled: the full cube is large for an exact LP per point
        for (int x = -2; x <= 2; ++x)
          for (int y = -2; y <= 2; y += 2) {
            Weight mu{x, y, -x};
            bool got = hull_membership(d, lam, mu).in_hull;
            CHECK(got == oracle::hull_by_dominance(a, to_rational(lam), to_rational(mu)));
          }
      } else {
        rec(0);
      }
    }
  }
  // rational points
  RootDatum a1 = RootDatum::parse("A1");
  CHECK(hull_membership(a1, RationalWeight{1}, RationalWeight{Rational(1, 2)}).in_hull);
  CHECK_FALSE(hull_membership(a1, RationalWeight{1}, RationalWeight{Rational(3, 2)}).in_hull);
}

TEST_CASE("Levi data") {
  RootDatum d = RootDatum::parse("A3");
  LeviSpec j = make_levi(d, {1, 3});
  CHECK(j.contains(1));
  CHECK_FALSE(j.contains(2));
  CHECK(j.complementary_fundamental_weights(d).size() == 1);
  CHECK(j.in_positive_coroot_cone(d, Coweight{1, 0, 2}));
  CHECK_FALSE(j.in_positive_coroot_cone(d, Coweight{1, 1, 0}));
  CHECK_FALSE(j.in_positive_coroot_cone(d, Coweight{-1, 0, 0}));
  Coweight b = -1 * Coweight{1, 2, 1};
  LeviSpec all = make_levi(d, {1, 2, 3});
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      Coweight beta{x, y, -x};
      if (all.strictly_antidominant_on(d, beta)) CHECK(j.strictly_antidominant_on(d, beta));
    }
  CHECK(all.antidominant_on(d, b));
  CHECK_THROWS(make_levi(d, {4}));
}
