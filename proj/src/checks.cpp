#include "grk/checks.h"

#include <chrono>
#include <functional>
#include <future>
#include <random>

#include "grk/darboux.h"
#include "grk/nildaha.h"
#include "grk/schubert.h"
#include "grk/toda.h"

namespace grk {

std::vector<Coweight> coroot_box(const RootDatum& d, int radius) {
  std::vector<Coweight> out;
  std::vector<int> c(d.total_rank(), 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == d.rank()) {
      out.emplace_back(c);
      return;
    }
    for (c[j] = -radius; c[j] <= radius; ++c[j]) rec(j + 1);
    c[j] = 0;
  };
  rec(0);
  return out;
}

bool antidominant(const RootDatum& d, const Coweight& beta) {
  for (int i : d.nodes())
    if (pairing(beta, d.simple_root(i)) > 0) return false;
  return true;
}

bool strictly_antidominant(const RootDatum& d, const Coweight& beta) {
  for (int i : d.nodes())
    if (pairing(beta, d.simple_root(i)) >= 0) return false;
  return true;
}

std::vector<std::vector<int>> all_subsets(const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  const std::size_t n = nodes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) J.push_back(nodes[k]);
    out.push_back(J);
  }
  return out;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return "{" + s + "}";
}

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.witness = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckResult skipped(const std::string& name, const std::string& why) {
  CheckResult r;
  r.name = name;
  r.skipped = true;
  r.witness = why;
  return r;
}

Rational weyl_dimension(const RootDatum& d, const Weight& lambda) {
  Rational num(1), den(1);
  for (const auto& a : d.positive_roots()) {
    Coweight av = a.coroot;
    num *= static_cast<long>(pairing(av, lambda + d.rho()));
    den *= static_cast<long>(pairing(av, d.rho()));
  }
  Rational q = num / den;
  q.canonicalize();
  return q;
}

}  // namespace

CheckResult check_nildaha_relations(const RootDatum& d, int weight_radius) {
  return timed("nil-DAHA relations", [&](CheckResult& r) {
    for (const auto& rel : NilDaha(d).relation_suite(weight_radius)) {
      r.instances += rel.instances;
      if (!rel.passed && r.passed) {
        r.passed = false;
        r.witness = rel.name + ": " + rel.witness;
      }
    }
  });
}

CheckResult check_word_independence(const RootDatum& d, int max_len) {
  std::string name = "D_w reduced-word independence, length <= " + std::to_string(max_len);
  if (!d.is_simple()) return skipped(name, "needs a simple derived group");
  return timed(name, [&](CheckResult& r) {
    RelationResult rel = NilDaha(d).reduced_word_independence(max_len);
    r.instances = rel.instances;
    r.passed = rel.passed;
    r.witness = rel.witness;
  });
}

CheckResult check_characters(const RootDatum& d, int max_coord) {
  return timed("Weyl characters: W-invariance and dimension", [&](CheckResult& r) {
    NilDaha h(d);
    auto W = weyl_group_elements(d);
    std::vector<int> c(d.rank(), 0);
    while (true) {
      Weight lambda(d.total_rank());
      for (int k = 0; k < d.rank(); ++k) lambda[k] = c[k];
      GroupAlgElt ch = h.weyl_character(lambda);
      Rational dim(0);
      for (const auto& kv : ch.terms()) dim += kv.second;
      r.record(dim == weyl_dimension(d, lambda), "dimension at " + lambda.str());
      for (int i : d.nodes()) r.record(h.reflect(i, ch) == ch, "s_" + std::to_string(i) + "-invariance at " + lambda.str());
      r.record(ch.coeff(monomial_of(lambda)) == 1, "highest weight multiplicity at " + lambda.str());
      int k = 0;
      while (k < d.rank() && c[k] == max_coord) c[k++] = 0;
      if (k == d.rank()) break;
      ++c[k];
    }
  });
}

CheckResult check_length_identities(const RootDatum& d, int radius, std::uint64_t seed) {
  std::string name = "affine length identities";
  if (!d.is_simple()) return skipped(name, "needs a simple derived group");
  return timed(name, [&](CheckResult& r) {
    auto W = weyl_group_elements(d);
    auto box = coroot_box(d, radius);
    std::vector<Coweight> betas = box;
    if (d.rank() >= 3) {
      std::mt19937_64 rng(seed);
      std::shuffle(betas.begin(), betas.end(), rng);
      betas.resize(std::min<std::size_t>(betas.size(), 40));
    }
    std::vector<Coweight> anti;
    for (const auto& b : box)
      if (antidominant(d, b)) anti.push_back(b);
    for (const auto& beta : betas) {
      auto tb = ExtAffWeylElt::translation(d, beta);
      const int lt = length(d, tb);
      const bool strict = strictly_antidominant(d, beta);
      for (const auto& u : W) {
        auto U = ExtAffWeylElt::finite(d, u);
        r.record(length(d, ExtAffWeylElt::translation(d, u.act(beta))) == lt, "W-invariance of l(t_b), b=" + beta.str());
        if (!strict) continue;
        r.record(length(d, U * tb) == lt - length(d, u), "l(u t_b) = l(t_b) - l(u), b=" + beta.str());
        for (const auto& b2 : anti) {
          auto tl = [&](const Coweight& c) { return length(d, ExtAffWeylElt::translation(d, u.act(c))); };
          r.record(tl(beta + b2) == tl(beta) + tl(b2), "additivity, b=" + beta.str() + " b'=" + b2.str());
        }
      }
      if (strict) r.record(lt == -2 * pairing(beta, d.rho()), "l(t_b) = -2<b,rho>, b=" + beta.str());
    }
    for (const auto& w : affine_ball(d, d.rank() >= 3 ? 4 : 6)) {
      if (!is_minimal_coset_rep(d, w)) continue;
      auto t = ExtAffWeylElt::translation(d, w.translation_part());
      r.record(antidominant(d, w.translation_part()), "minimal representative with non-antidominant gamma");
      r.record(length(d, w) == length(d, t) - length(d, w.finite_part()), "l(w) = l(t_gamma) - l(u) for minimal w");
    }
  });
}

CheckResult check_semi_infinite(const RootDatum& d, int radius) {
  std::string name = "semi-infinite order below e";
  if (!d.is_simple()) return skipped(name, "needs a simple derived group");
  return timed(name, [&](CheckResult& r) {
    AffineOrders o(d);
    auto E = ExtAffWeylElt::identity(d);
    LeviSpec all = make_levi(d, d.nodes());
    auto W = weyl_group_elements(d);
    for (const auto& beta : coroot_box(d, radius))
      for (const auto& u : W) {
        ExtAffWeylElt w(u, beta);
        if (o.semi_infinite_leq(w, E))
          r.record(all.in_positive_coroot_cone(d, beta), "u t_b <= e with b=" + beta.str() + " outside Q^vee_+");
        else
          ++r.instances;
      }
    std::vector<FiniteWeylElt> partners = W;
    if (d.rank() >= 3) {
      partners = {FiniteWeylElt::identity(d.rank()), longest_element(d)};
      for (int i : d.nodes()) partners.push_back(FiniteWeylElt::simple(d, i));
    }
    for (const auto& u : W)
      for (const auto& v : partners) {
        auto U = ExtAffWeylElt::finite(d, u), V = ExtAffWeylElt::finite(d, v);
        r.record(o.semi_infinite_leq(U, V) == o.bruhat_leq(V, U), "finite Weyl group reversal");
      }
  });
}

CheckResult check_darboux_relations(const RootDatum& d) {
  return timed("Heisenberg commutation identities", [&](CheckResult& r) {
    for (const auto& rel : Darboux(d).check_relations()) {
      r.instances += rel.instances;
      if (!rel.passed && r.passed) {
        r.passed = false;
        r.witness = rel.name + ": " + rel.witness;
      }
    }
  });
}

CheckResult check_clag_rank(const RootDatum& d, int lambda_radius, int gamma_radius) {
  return timed("ClaG family rank", [&](CheckResult& r) {
    RankReport rep = Darboux(d).clag_rank(lambda_radius, gamma_radius);
    r.instances = rep.family_size;
    if (!rep.full_rank()) {
      r.passed = false;
      r.witness = "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.family_size);
    }
  });
}

CheckResult check_levi_chains(const RootDatum& d, int samples, int degree, int radius, std::uint64_t seed) {
  return timed("Levi chains", [&](CheckResult& r) {
    Darboux D(d);
    for (const auto& J : all_subsets(d.nodes()))
      for (const auto& Jp : all_subsets(J)) {
        ChainReport rep = D.levi_chain_check(J, Jp, samples, degree, radius, seed);
        r.instances += rep.samples;
        if (!rep.passed() && r.passed) {
          r.passed = false;
          r.witness = join(J) + " > " + join(Jp) + ": " + rep.failures.front();
        }
      }
  });
}

CheckResult check_levi_specialize(const RootDatum& d, int pairs, std::uint64_t seed) {
  return timed("Levi specialization is multiplicative", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> wt(-2, 2), up(0, 2), qe(-2, 2);
    const int n = d.total_rank();
    auto draw = [&] {
      HeisElt a(n);
      for (int t = 0; t < 3; ++t) {
        Weight l(n);
        Coweight g(n);
        for (int k = 0; k < n; ++k) l[k] = wt(rng);
        for (int k = 0; k < d.rank(); ++k) g[k] = up(rng);
        a.add_term(l, g, QLaurent::q_pow(qe(rng), 1 + t));
      }
      return a;
    };
    auto subsets = all_subsets(d.nodes());
    for (int s = 0; s < pairs; ++s) {
      HeisElt a = draw(), b = draw();
      for (const auto& J : subsets) {
        HeisElt la = levi_specialize(d, a, J), lb = levi_specialize(d, b, J);
        r.record(levi_specialize(d, a * b, J) == la * lb, "pair " + std::to_string(s) + " J=" + join(J));
        r.record(levi_specialize(d, la, J) == la, "idempotence, J=" + join(J));
        for (const auto& Jp : all_subsets(J))
          r.record(levi_specialize(d, la, Jp) == levi_specialize(d, a, Jp), "nesting " + join(J) + " > " + join(Jp));
      }
    }
  });
}

CheckResult check_schubert(const RootDatum& d) {
  return timed("Schubert module", [&](CheckResult& r) {
    NilDaha h(d);
    std::vector<Weight> ws{d.zero_weight()};
    for (int i : d.nodes()) {
      ws.push_back(d.fundamental_weight(i));
      ws.push_back(-d.fundamental_weight(i));
    }
    SchubertModule K(d, d.nodes());
    for (const auto& w : K.elements())
      for (const auto& l : ws) {
        FlagKElt x = K.basis(w, GroupAlgElt::exp(l));
        for (int i : d.nodes()) {
          FlagKElt y = K.demazure_act(i, x);
          r.record(K.demazure_act(i, y) == y, "idempotence of D_" + std::to_string(i));
          for (int j : d.nodes()) {
            if (j <= i) continue;
            int m = coxeter_order(d, i, j);
            std::vector<int> u, v;
            for (int k = 0; k < m; ++k) {
              u.push_back(k % 2 ? j : i);
              v.push_back(k % 2 ? i : j);
            }
            r.record(K.demazure_word(u, x) == K.demazure_word(v, x), "braid " + std::to_string(i) + std::to_string(j));
          }
        }
      }
    for (const auto& J : all_subsets(d.nodes())) {
      SchubertModule KJ(d, J);
      auto w0 = reduced_word(d, KJ.longest());
      for (const auto& l : ws) {
        if (!d.is_dominant(l, J)) continue;
        GroupAlgElt poly = h.demazure_word(w0, GroupAlgElt::exp(KJ.longest().act(l)));
        r.record(KJ.character(KJ.line_bundle_global(l)) == poly, "Euler characteristic, J=" + join(J) + " l=" + l.str());
      }
      for (const auto& Jp : all_subsets(J)) {
        SchubertModule KJp(d, Jp);
        for (std::size_t a = 0; a < ws.size(); ++a) {
          LineBundleCombination c;
          c.terms.emplace_back(GroupAlgElt::exp(ws[a]), ws[(a + 1) % ws.size()]);
          for (int j : Jp) {
            RestrictionCheck rc = check_restriction_commutes(KJ, KJp, c, j);
            r.record(rc.source_consistent && rc.commutes, "restriction " + join(J) + " > " + join(Jp));
          }
        }
      }
    }
  });
}

CheckResult check_toda(int n) {
  return timed("Toda SL(" + std::to_string(n) + ")", [&](CheckResult& r) {
    RootDatum d = sl_datum(n);
    r.record(classical_limit_check(n), "classical limit");
    for (const auto& J : all_subsets(d.nodes())) {
      HeisElt v = toda_restrict(n, J);
      r.record(v == toda_rebuild(n, J), "token rebuild, J=" + join(J));
      for (const auto& Jp : all_subsets(J))
        r.record(toda_restrict(n, Jp) == levi_specialize(d, v, Jp), "nesting " + join(J) + " > " + join(Jp));
    }
    Darboux D(d);
    r.record(D.membership_decompose(toda_ch_v(n).value, d.nodes(), 3).feasible, "ch V in the image of K_G");
  });
}

std::vector<CheckResult> run_suite(const RootDatum& d, const SuiteConfig& cfg) {
  std::vector<std::function<CheckResult()>> jobs{
      [&] { return check_nildaha_relations(d, 1); },
      [&] { return check_word_independence(d, cfg.word_length); },
      [&] { return check_characters(d, d.rank() >= 3 ? 1 : 2); },
      [&] { return check_length_identities(d, d.rank() >= 3 ? 2 : 3, cfg.seed); },
      [&] { return check_semi_infinite(d, d.rank() >= 3 ? 1 : 2); },
      [&] { return check_darboux_relations(d); },
      [&] { return check_clag_rank(d, d.rank() >= 3 ? 2 : 3, d.total_rank() >= 3 ? 1 : 2); },
      [&] { return check_levi_chains(d, cfg.chain_samples, cfg.chain_degree, cfg.chain_box, cfg.seed); },
      [&] { return check_levi_specialize(d, cfg.specialize_pairs, cfg.seed); },
      [&] { return check_schubert(d); },
  };
  bool type_a = d.is_simple() && d.family().front().type == 'A' && d.central_rank() == 0 && d.rank() + 1 <= 8;
  if (type_a) {
    jobs.push_back([&] { return check_toda(d.rank() + 1); });
  } else {
    jobs.push_back([] { return skipped("Toda", "needs SL(n), i.e. type A without central part"); });
  }
  std::vector<CheckResult> out;
  if (!cfg.parallel) {
    for (auto& j : jobs) out.push_back(j());
    return out;
  }
  std::vector<std::future<CheckResult>> fut;
  for (auto& j : jobs) fut.push_back(std::async(std::launch::async, j));
  for (auto& f : fut) out.push_back(f.get());
  return out;
}

}  // namespace grk
