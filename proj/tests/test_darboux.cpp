#include <random>

#include "doctest.h"
#include "grk/darboux.h"

using namespace grk;

namespace {

HeisElt rebuild(const Darboux& D, const std::vector<int>& J, const Membership& m) {
  HeisElt s(D.total_rank());
  for (const auto& [idx, c] : m.coefficients) s += c.to_laurent() * D.family_member(J, idx.first, idx.second);
  return s;
}

const char* kTypes[] = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "A1xA1", "A1xA2"};

}  // namespace

TEST_CASE("generator images") {
  Darboux D(RootDatum::parse("A1"));
  Weight w{1};
  Coweight a{1};
  CHECK(D.image(parse_word(D.datum(), "phi1")) == HeisElt::e(-w));
  CHECK(D.image(parse_word(D.datum(), "xi1 phi1")) == HeisElt::unit(1) - HeisElt::t(a));
  CHECK(D.image(parse_word(D.datum(), "phi1 xi1")) == HeisElt::unit(1) - QLaurent::q_pow(1) * HeisElt::t(a));
  CHECK(D.xi(1) == HeisElt::e(w) - HeisElt::monomial(w, a, QLaurent::q_pow(1)));
  CHECK(D.xi(1).t_support() == std::set<Coweight>{Coweight{0}, a});
  CHECK(D.h(1).is_zero());
}

TEST_CASE("word parsing") {
  RootDatum d = RootDatum::parse("A2", 1);
  GenWord w = parse_word(d, "xi1 phi(2) t:1,0,0 * e:0,1,0 char:0,0,-1 q^-2 3/6 q h2");
  REQUIRE(w.tokens.size() == 9);
  CHECK(w.tokens[1] == Token::phi(2));
  CHECK(w.tokens[6].scalar == QLaurent(make_rational(1, 2)));
  CHECK(parse_word(d, w.str()).str() == w.str());
  CHECK(w.str() == "xi1 phi2 t:1,0,0 e:0,1,0 char:0,0,-1 q^-2 1/2 q h2");
  CHECK_THROWS_AS(parse_word(d, "xi3"), DomainError);
  CHECK_THROWS_AS(parse_word(d, "t:1,0"), DomainError);
  CHECK_THROWS_AS(parse_word(d, "char:1,0,0"), DomainError);
  CHECK_THROWS_AS(parse_word(d, "zeta1"), DomainError);
  Darboux D(d);
  GenWord u = parse_word(d, "xi1 t:0,1,0"), v = parse_word(d, "phi2 e:1,1,1 q");
  CHECK(D.image(u * v) == D.image(u) * D.image(v));
  CHECK(D.image(GenWord{}) == HeisElt::unit(3));
}

TEST_CASE("Heisenberg commutation identities for every supported datum") {
  for (const char* t : kTypes)
    for (int c : {0, 1}) {
      CAPTURE(t);
      CAPTURE(c);
      Darboux D(RootDatum::parse(t, c));
      for (const auto& r : D.check_relations()) {
        CAPTURE(r.name);
        CHECK_MESSAGE(r.passed, r.witness);
      }
    }
  Darboux A2(RootDatum::parse("A2"));
  CHECK(A2.xi(1) * A2.phi(2) == A2.phi(2) * A2.xi(1));
  CHECK_FALSE(A2.xi(1) * A2.phi(1) == A2.phi(1) * A2.xi(1));
}

TEST_CASE("ClaG monomials") {
  Darboux D(RootDatum::parse("A1"));
  Weight w{1};
  Coweight z{0}, a{1};
  CHECK(D.c_basis_element(Weight{0}, z) == HeisElt::unit(1));
  CHECK(D.c_basis_element(w, z) == HeisElt::e(-w));
  CHECK(D.c_basis_element(-w, z) == HeisElt::e(w) - HeisElt::monomial(w, a, QLaurent::q_pow(1)));
  Darboux B2(RootDatum::parse("B2"));
  Weight mixed{-2, 1};
  GenWord word = B2.c_basis_word(mixed, Coweight{0, 1});
  CHECK(word.str() == "xi1 xi1 phi2 t:0,1");
  // phi-block first gives the same element
  CHECK(B2.c_basis_element(mixed, Coweight{0, 0}) == B2.phi(2) * B2.xi(1).pow(2));
}

TEST_CASE("ClaG family has full rank") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(t);
    RankReport r = Darboux(RootDatum::parse(t)).clag_rank(3, 2);
    CHECK(r.full_rank());
    CHECK(r.family_size > 0);
  }
  RankReport r = Darboux(RootDatum::parse("A1", 1)).clag_rank(2, 1);
  CHECK(r.family_size == 5 * 9);
  CHECK(r.full_rank());
}

TEST_CASE("membership examples") {
  Darboux D(RootDatum::parse("A1"));
  Weight w{1};
  Membership m = D.membership_decompose(D.xi(1) + D.phi(1), {1}, 2);
  REQUIRE(m.feasible);
  std::map<FamilyIndex, QFrac> expect{{{-w, Coweight{0}}, QFrac(1)}, {{w, Coweight{0}}, QFrac(1)}};
  CHECK(m.coefficients == expect);
  for (std::vector<int> J : {std::vector<int>{}, std::vector<int>{1}}) {
    Membership u = D.membership_decompose(HeisElt::unit(1), J, 0);
    REQUIRE(u.feasible);
    CHECK(u.coefficients == std::map<FamilyIndex, QFrac>{{{Weight{0}, Coweight{0}}, QFrac(1)}});
  }
  Membership inf = D.membership_decompose(HeisElt::e(w), {1}, 3);
  CHECK_FALSE(inf.feasible);
  CHECK_FALSE(inf.certificate.empty());
  CHECK(D.membership_decompose(HeisElt::e(w), {}, 3).feasible);
  CHECK_THROWS_AS(D.membership_decompose(HeisElt::e(3 * w), {1}, 2), BoundError);
  CHECK_THROWS_AS(D.membership_decompose(HeisElt::t(Coweight{-4}), {1}, 3), BoundError);
}

TEST_CASE("membership recovers random combinations of family members") {
  std::mt19937_64 rng(23);
  for (const char* t : {"A2", "B2", "A1xA1"}) {
    CAPTURE(t);
    Darboux D(RootDatum::parse(t, 1));
    const int n = D.total_rank();
    std::uniform_int_distribution<int> c(-1, 1), k(-2, 2);
    for (std::vector<int> J : {std::vector<int>{1, 2}, std::vector<int>{1}, std::vector<int>{}}) {
      for (int s = 0; s < 8; ++s) {
        std::map<FamilyIndex, QLaurent> chosen;
        HeisElt target(n);
        for (int j = 0; j < 3; ++j) {
          Weight l(n);
          Coweight g(n);
          for (int x = 0; x < n; ++x) {
            l[x] = c(rng);
            g[x] = c(rng);
          }
          QLaurent coef = QLaurent::q_pow(k(rng), 1 + j);
          chosen[{l, g}] += coef;
          target += coef * D.family_member(J, l, g);
        }
        Membership m = D.membership_decompose(target, J, 4);
        REQUIRE(m.feasible);
        CHECK(rebuild(D, J, m) == target);
        for (const auto& [idx, coef] : chosen)
          if (!coef.is_zero()) CHECK(m.coefficients.at(idx).to_laurent() == coef);
      }
    }
  }
}

TEST_CASE("Levi chains") {
  Darboux D(RootDatum::parse("A2"));
  ChainReport same = D.levi_chain_check({1, 2}, {1, 2}, 10, 3, 6, 1);
  CHECK(same.passed());
  Membership m = D.membership_decompose(D.xi(2), {1}, 3);
  REQUIRE(m.feasible);
  CHECK(m.coefficients.size() == 2);
  CHECK(rebuild(D, {1}, m) == D.xi(2));
  HeisElt top = D.c_basis_element(Weight{1, 1}, Coweight{0, 0});
  CHECK(top == HeisElt::e(Weight{-1, -1}));
  CHECK(D.membership_decompose(top, {}, 2).feasible);
  for (std::vector<int> Jp : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{}}) {
    ChainReport r = D.levi_chain_check({1, 2}, Jp, 20, 3, 6, 42);
    CHECK(r.samples == 20);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(D.levi_chain_check({1}, {2}, 1, 1, 6, 0), DomainError);
  auto gens = D.level_generators({1});
  bool has_twist = false;
  for (const auto& g : gens) has_twist = has_twist || g.str() == "e:0,1";
  CHECK(has_twist);
}

TEST_CASE("Levi specialization") {
  RootDatum d = RootDatum::parse("A2");
  Darboux D(d);
  CHECK(levi_specialize(d, D.xi(1), {}) == HeisElt::e(d.fundamental_weight(1)));
  for (std::vector<int> J : {std::vector<int>{}, std::vector<int>{2}, std::vector<int>{1, 2}})
    for (int i : {1, 2}) CHECK(levi_specialize(d, D.phi(i), J) == D.phi(i));
  CHECK_THROWS_AS(levi_specialize(d, HeisElt::t(Coweight{-1, 0}), {1}), DomainError);
  CHECK_THROWS_AS(levi_specialize(RootDatum::parse("A1", 1), HeisElt::t(Coweight{0, 1}), {1}), DomainError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-2, 2), g(0, 2);
  auto random_admissible = [&](int n, int rank) {
    HeisElt a(n);
    for (int t = 0; t < 3; ++t) {
      Weight l(n);
      Coweight gm(n);
      for (int x = 0; x < n; ++x) l[x] = c(rng);
      for (int x = 0; x < rank; ++x) gm[x] = g(rng);
      a.add_term(l, gm, QLaurent::q_pow(c(rng), 1 + t));
    }
    return a;
  };
  for (const char* t : {"A2", "B2", "A3"}) {
    RootDatum dd = RootDatum::parse(t, 1);
    std::vector<int> all = dd.nodes();
    for (int s = 0; s < 100; ++s) {
      HeisElt a = random_admissible(dd.total_rank(), dd.rank()), b = random_admissible(dd.total_rank(), dd.rank());
      std::vector<int> J{1 + s % dd.rank()};
      CHECK(levi_specialize(dd, a * b, J) == levi_specialize(dd, a, J) * levi_specialize(dd, b, J));
      CHECK(levi_specialize(dd, levi_specialize(dd, a, J), J) == levi_specialize(dd, a, J));
      CHECK(levi_specialize(dd, a, all) == a);
      CHECK(levi_specialize(dd, levi_specialize(dd, a, J), {}) == levi_specialize(dd, a, {}));
    }
  }
}
