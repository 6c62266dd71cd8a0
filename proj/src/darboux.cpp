#include "grk/darboux.h"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace grk {

Token Token::phi(int i) { Token t; t.kind = Kind::Phi; t.node = i; return t; }
Token Token::xi(int i) { Token t; t.kind = Kind::Xi; t.node = i; return t; }
Token Token::h(int i) { Token t; t.kind = Kind::H; t.node = i; return t; }
Token Token::trans(const Coweight& g) { Token t; t.kind = Kind::Trans; t.coweight = g; return t; }
Token Token::exp(const Weight& l) { Token t; t.kind = Kind::Exp; t.weight = l; return t; }
Token Token::chr(const Weight& l) { Token t; t.kind = Kind::Char; t.weight = l; return t; }
Token Token::constant(const QLaurent& c) { Token t; t.kind = Kind::Scalar; t.scalar = c; return t; }

namespace {

std::string coords(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::vector<int> parse_coords(const std::string& s, int n, const std::string& tok) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad coordinate in token '" + tok + "'");
    }
  }
  if (static_cast<int>(v.size()) != n)
    throw DomainError("token '" + tok + "' needs " + std::to_string(n) + " coordinates");
  return v;
}

int parse_node(const std::string& rest, const RootDatum& d, const std::string& tok) {
  std::string s = rest;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw DomainError("bad node in token '" + tok + "'");
  int i = std::stoi(s);
  if (i < 1 || i > d.rank()) throw DomainError("node out of range in token '" + tok + "'");
  return i;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

std::string Token::str() const {
  switch (kind) {
    case Kind::Phi: return "phi" + std::to_string(node);
    case Kind::Xi: return "xi" + std::to_string(node);
    case Kind::H: return "h" + std::to_string(node);
    case Kind::Trans: return "t:" + coords(coweight.coords());
    case Kind::Exp: return "e:" + coords(weight.coords());
    case Kind::Char: return "char:" + coords(weight.coords());
    case Kind::Scalar: break;
  }
  if (scalar.terms().size() == 1) {
    const auto& [k, c] = *scalar.terms().begin();
    if (k == 0) return c.get_str();
    std::string qk = k == 1 ? "q" : "q^" + std::to_string(k);
    if (c == 1) return qk;
    return c.get_str() + " " + qk;
  }
  throw DomainError("scalar token with several q-powers has no text form; split it");
}

std::string GenWord::str() const {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t.str();
  return s;
}

GenWord operator*(GenWord a, const GenWord& b) {
  a.tokens.insert(a.tokens.end(), b.tokens.begin(), b.tokens.end());
  return a;
}

GenWord parse_word(const RootDatum& d, const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), '*', ' ');
  std::stringstream ss(norm);
  std::string tok;
  GenWord w;
  const int n = d.total_rank();
  while (ss >> tok) {
    if (starts_with(tok, "phi")) {
      w.tokens.push_back(Token::phi(parse_node(tok.substr(3), d, tok)));
    } else if (starts_with(tok, "xi")) {
      w.tokens.push_back(Token::xi(parse_node(tok.substr(2), d, tok)));
    } else if (starts_with(tok, "t:")) {
      w.tokens.push_back(Token::trans(Coweight(parse_coords(tok.substr(2), n, tok))));
    } else if (starts_with(tok, "e:")) {
      w.tokens.push_back(Token::exp(Weight(parse_coords(tok.substr(2), n, tok))));
    } else if (starts_with(tok, "char:")) {
      Weight l(parse_coords(tok.substr(5), n, tok));
      if (!d.is_central(l)) throw DomainError("char token needs a character of G: '" + tok + "'");
      w.tokens.push_back(Token::chr(l));
    } else if (tok == "q" || starts_with(tok, "q^")) {
      int k = 1;
      if (tok.size() > 1) {
        try {
          std::size_t used = 0;
          k = std::stoi(tok.substr(2), &used);
          if (used != tok.size() - 2) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw DomainError("bad q-power token '" + tok + "'");
        }
      }
      w.tokens.push_back(Token::constant(QLaurent::q_pow(k)));
    } else if (tok[0] == 'h') {
      w.tokens.push_back(Token::h(parse_node(tok.substr(1), d, tok)));
    } else {
      Rational c;
      if (c.set_str(tok, 10) != 0 || c.get_den() == 0) throw DomainError("unknown token '" + tok + "'");
      c.canonicalize();
      w.tokens.push_back(Token::constant(QLaurent(c)));
    }
  }
  return w;
}

Darboux::Darboux(RootDatum d) : d_(std::move(d)) {}

HeisElt Darboux::phi(int i) const { return HeisElt::e(-d_.fundamental_weight(i)); }

HeisElt Darboux::xi(int i) const {
  HeisElt one_minus_t = HeisElt::unit(total_rank()) - HeisElt::t(d_.simple_coroot(i));
  return one_minus_t * HeisElt::e(d_.fundamental_weight(i));
}

HeisElt Darboux::h(int i) const {
  return HeisElt::unit(total_rank()) - HeisElt::e(d_.fundamental_weight(i)) * phi(i);
}

HeisElt Darboux::image(const Token& tok) const {
  const int n = total_rank();
  switch (tok.kind) {
    case Token::Kind::Phi:
    case Token::Kind::Xi:
    case Token::Kind::H:
      if (tok.node < 1 || tok.node > d_.rank()) throw DomainError("generator node out of range");
      return tok.kind == Token::Kind::Phi ? phi(tok.node) : tok.kind == Token::Kind::Xi ? xi(tok.node) : h(tok.node);
    case Token::Kind::Trans:
      if (static_cast<int>(tok.coweight.size()) != n) throw DatumMismatch("translation token of the wrong rank");
      return HeisElt::t(tok.coweight);
    case Token::Kind::Char:
      if (!d_.is_central(tok.weight)) throw DomainError("char token needs a character of G");
      [[fallthrough]];
    case Token::Kind::Exp:
      if (static_cast<int>(tok.weight.size()) != n) throw DatumMismatch("weight token of the wrong rank");
      return HeisElt::e(tok.weight);
    case Token::Kind::Scalar:
      return HeisElt::scalar(n, tok.scalar);
  }
  throw DomainError("invalid token");
}

HeisElt Darboux::image(const GenWord& w) const {
  HeisElt r = HeisElt::unit(total_rank());
  for (const auto& t : w.tokens) r = r * image(t);
  return r;
}

std::vector<IdentityResult> Darboux::check_relations() const {
  std::vector<IdentityResult> out;
  const int n = total_rank();
  HeisElt one = HeisElt::unit(n);
  auto run = [&](const std::string& name, auto&& body) {
    IdentityResult r;
    r.name = name;
    body(r);
    out.push_back(std::move(r));
  };
  auto record = [](IdentityResult& r, const HeisElt& a, const HeisElt& b, const std::string& where) {
    ++r.instances;
    if (!(a == b) && r.passed) {
      r.passed = false;
      r.witness = where + ": " + a.str() + " != " + b.str();
    }
  };
  const auto nodes = d_.nodes();
  run("xi_i xi_j = xi_j xi_i", [&](IdentityResult& r) {
    for (int i : nodes)
      for (int j : nodes) record(r, xi(i) * xi(j), xi(j) * xi(i), "i=" + std::to_string(i) + " j=" + std::to_string(j));
  });
  run("xi_i phi_j = phi_j xi_i (i != j)", [&](IdentityResult& r) {
    for (int i : nodes)
      for (int j : nodes)
        if (i != j) record(r, xi(i) * phi(j), phi(j) * xi(i), "i=" + std::to_string(i) + " j=" + std::to_string(j));
  });
  run("phi_i phi_j = phi_j phi_i", [&](IdentityResult& r) {
    for (int i : nodes)
      for (int j : nodes) record(r, phi(i) * phi(j), phi(j) * phi(i), "i=" + std::to_string(i) + " j=" + std::to_string(j));
  });
  run("xi_i phi_i = 1 - t_{alpha_i}", [&](IdentityResult& r) {
    for (int i : nodes) record(r, xi(i) * phi(i), one - HeisElt::t(d_.simple_coroot(i)), "i=" + std::to_string(i));
  });
  run("phi_i xi_i = 1 - q t_{alpha_i}", [&](IdentityResult& r) {
    for (int i : nodes)
      record(r, phi(i) * xi(i), one - QLaurent::q_pow(1) * HeisElt::t(d_.simple_coroot(i)), "i=" + std::to_string(i));
  });
  std::vector<Coweight> gammas;
  for (int k = 0; k < n; ++k) {
    gammas.push_back(Coweight::unit(n, k));
    gammas.push_back(-Coweight::unit(n, k));
  }
  std::vector<Weight> lambdas;
  for (int k = 0; k < n; ++k) lambdas.push_back(Weight::unit(n, k));
  run("t_gamma e^lambda = q^<gamma,lambda> e^lambda t_gamma", [&](IdentityResult& r) {
    for (const auto& g : gammas)
      for (const auto& l : lambdas) {
        HeisElt rhs = QLaurent::q_pow(static_cast<int>(pairing(g, l))) * (HeisElt::e(l) * HeisElt::t(g));
        record(r, HeisElt::t(g) * HeisElt::e(l), rhs, "gamma=" + g.str() + " lambda=" + l.str());
      }
  });
  run("t_gamma xi_i = q^<gamma,varpi_i> xi_i t_gamma", [&](IdentityResult& r) {
    for (const auto& g : gammas)
      for (int i : nodes) {
        HeisElt rhs = QLaurent::q_pow(static_cast<int>(pairing(g, d_.fundamental_weight(i)))) * (xi(i) * HeisElt::t(g));
        record(r, HeisElt::t(g) * xi(i), rhs, "gamma=" + g.str() + " i=" + std::to_string(i));
      }
  });
  run("characters of G commute with phi_i, xi_i", [&](IdentityResult& r) {
    for (int k = 1; k <= d_.central_rank(); ++k) {
      HeisElt c = HeisElt::e(d_.central_weight(k));
      for (int i : nodes) {
        record(r, c * phi(i), phi(i) * c, "k=" + std::to_string(k) + " phi" + std::to_string(i));
        record(r, c * xi(i), xi(i) * c, "k=" + std::to_string(k) + " xi" + std::to_string(i));
      }
    }
  });
  return out;
}

GenWord Darboux::c_basis_word(const Weight& lambda, const Coweight& gamma) const {
  GenWord w;
  for (int i : d_.nodes())
    for (int k = 0; k < -lambda[i - 1]; ++k) w.tokens.push_back(Token::xi(i));
  for (int i : d_.nodes())
    for (int k = 0; k < lambda[i - 1]; ++k) w.tokens.push_back(Token::phi(i));
  if (!gamma.is_zero()) w.tokens.push_back(Token::trans(gamma));
  return w;
}

HeisElt Darboux::c_basis_element(const Weight& lambda, const Coweight& gamma) const {
  return image(c_basis_word(lambda, gamma));
}

std::vector<int> Darboux::normalize_levi(std::vector<int> J) const { return make_levi(d_, std::move(J)).J; }

HeisElt Darboux::family_member(const std::vector<int>& J, const Weight& lambda, const Coweight& gamma) const {
  const int n = total_rank();
  LeviSpec L = make_levi(d_, J);
  Weight outside(n), central(n);
  for (int k = d_.rank(); k < n; ++k) central[k] = lambda[k];
  HeisElt xi_block = HeisElt::unit(n), phi_block = HeisElt::unit(n);
  for (int i : d_.nodes()) {
    int m = lambda[i - 1];
    if (!L.contains(i)) {
      outside = outside - m * d_.fundamental_weight(i);
    } else if (m < 0) {
      xi_block = xi_block * xi(i).pow(-m);
    } else if (m > 0) {
      phi_block = phi_block * phi(i).pow(m);
    }
  }
  return HeisElt::e(outside - central) * xi_block * phi_block * HeisElt::t(gamma);
}

namespace {

// Total order on a weight block compatible with translation; every nonzero
// element of Q^vee_+ is above 0.
struct BlockOrder {
  int rank;
  bool operator()(const Coweight& a, const Coweight& b) const {
    long ha = 0, hb = 0;
    for (int k = 0; k < rank; ++k) {
      ha += a[k];
      hb += b[k];
    }
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

using Column = std::map<Coweight, QFrac, BlockOrder>;

bool in_box(const std::vector<int>& v, int radius) {
  return std::all_of(v.begin(), v.end(), [radius](int x) { return x >= -radius && x <= radius; });
}

Column to_column(const HeisElt& a, const Weight& mu, BlockOrder ord) {
  Column c(ord);
  for (const auto& [g, v] : a.weight_block(mu)) c.emplace(g, QFrac::from_laurent(v));
  return c;
}

void axpy(Column& x, const QFrac& s, const Column& y) {
  for (const auto& [k, v] : y) {
    auto [it, fresh] = x.emplace(k, QFrac());
    it->second -= s * v;
    if (it->second.is_zero()) x.erase(it);
  }
}

}  // namespace

Membership Darboux::membership_decompose(const HeisElt& target, const std::vector<int>& Jin, int radius) const {
  if (target.total_rank() != total_rank()) throw DatumMismatch("target over a different datum");
  if (radius < 0) throw BoundError("negative box radius");
  std::vector<int> J = normalize_levi(Jin);
  for (const auto& [k, c] : target.terms()) {
    if (!in_box(k.first.coords(), radius) || !in_box(k.second.coords(), radius))
      throw BoundError("target monomial e^" + k.first.str() + " t^" + k.second.str() + " lies outside the box of radius " +
                       std::to_string(radius));
  }
  BlockOrder ord{d_.rank()};
  Membership m;
  m.feasible = true;
  for (const Weight& mu : target.weight_support()) {
    Weight lambda = -mu;
    Column rest = to_column(target, mu, ord);
    // pivots keyed by leading monomial; columns are added as the reduction needs them
    std::map<Coweight, Column, BlockOrder> pivots(ord);
    while (!rest.empty()) {
      const Coweight lead = rest.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        if (!in_box(lead.coords(), radius)) {
          m.feasible = false;
          m.coefficients.clear();
          m.certificate = "weight " + mu.str() + ": remainder has leading monomial t^" + lead.str() +
                          ", which no family member inside the box of radius " + std::to_string(radius) + " reaches";
          return m;
        }
        Column col = to_column(family_member(J, lambda, lead), mu, ord);
        if (col.empty() || !(col.begin()->first == lead) || !(col.begin()->second == QFrac(1)))
          throw DomainError("family member without unit leading term");
        p = pivots.emplace(lead, std::move(col)).first;
      }
      QFrac s = rest.begin()->second / p->second.begin()->second;
      axpy(rest, s, p->second);
      auto [it, fresh] = m.coefficients.emplace(FamilyIndex{lambda, lead}, s);
      if (!fresh) it->second += s;
    }
  }
  for (auto it = m.coefficients.begin(); it != m.coefficients.end();)
    it = it->second.is_zero() ? m.coefficients.erase(it) : std::next(it);
  return m;
}

std::vector<GenWord> Darboux::level_generators(const std::vector<int>& Jin) const {
  LeviSpec L = make_levi(d_, Jin);
  const int n = total_rank();
  std::vector<GenWord> gens;
  for (int i : d_.nodes()) {
    gens.push_back(GenWord{{Token::phi(i)}});
    gens.push_back(GenWord{{L.contains(i) ? Token::xi(i) : Token::exp(d_.fundamental_weight(i))}});
  }
  for (int k = 0; k < n; ++k) {
    gens.push_back(GenWord{{Token::trans(Coweight::unit(n, k))}});
    gens.push_back(GenWord{{Token::trans(-Coweight::unit(n, k))}});
  }
  for (int k = 1; k <= d_.central_rank(); ++k) {
    gens.push_back(GenWord{{Token::chr(d_.central_weight(k))}});
    gens.push_back(GenWord{{Token::chr(-d_.central_weight(k))}});
  }
  return gens;
}

ChainReport Darboux::levi_chain_check(const std::vector<int>& Jin, const std::vector<int>& Jpin, int samples, int degree,
                                      int radius, std::uint64_t seed) const {
  ChainReport r;
  r.J = normalize_levi(Jin);
  r.Jp = normalize_levi(Jpin);
  r.seed = seed;
  if (!std::includes(r.J.begin(), r.J.end(), r.Jp.begin(), r.Jp.end()))
    throw DomainError("Levi chain needs J' inside J");
  if (degree < 1) throw DomainError("chain degree must be positive");
  auto gens = level_generators(r.J);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, degree);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int s = 0; s < samples; ++s) {
    GenWord w;
    for (int k = len(rng); k > 0; --k) w = w * gens[pick(rng)];
    ++r.samples;
    bool ok = false;
    try {
      ok = membership_decompose(image(w), r.Jp, radius).feasible;
    } catch (const BoundError&) {
      ok = false;
    }
    if (ok) {
      ++r.decomposed;
    } else {
      r.failures.push_back(w.str());
    }
  }
  return r;
}

RankReport Darboux::clag_rank(int lambda_radius, int gamma_radius) const {
  const int r = d_.rank(), n = total_rank();
  RankReport rep;
  BlockOrder ord{r};
  std::vector<int> lam(r, -lambda_radius);
  while (true) {
    Weight lambda(n);
    for (int k = 0; k < r; ++k) lambda[k] = lam[k];
    HeisElt base = c_basis_element(lambda, Coweight(n));
    Weight mu = -lambda;
    std::map<Coweight, Column, BlockOrder> pivots(ord);
    std::vector<int> g(n, -gamma_radius);
    while (true) {
      ++rep.family_size;
      Coweight gamma(g);
      Column col = to_column(base * HeisElt::t(gamma), mu, ord);
      while (!col.empty()) {
        auto p = pivots.find(col.begin()->first);
        if (p == pivots.end()) break;
        QFrac s = col.begin()->second / p->second.begin()->second;
        axpy(col, s, p->second);
      }
      if (!col.empty()) {
        ++rep.rank;
        Coweight key = col.begin()->first;
        pivots.emplace(key, std::move(col));
      }
      int k = 0;
      while (k < n && g[k] == gamma_radius) g[k++] = -gamma_radius;
      if (k == n) break;
      ++g[k];
    }
    int k = 0;
    while (k < r && lam[k] == lambda_radius) lam[k++] = -lambda_radius;
    if (k == r) break;
    ++lam[k];
  }
  return rep;
}

bool is_admissible(const RootDatum& d, const HeisElt& a) {
  for (const auto& g : a.t_support()) {
    for (int k = 0; k < d.rank(); ++k)
      if (g[k] < 0) return false;
    for (int k = d.rank(); k < d.total_rank(); ++k)
      if (g[k] != 0) return false;
  }
  return true;
}

HeisElt levi_specialize(const RootDatum& d, const HeisElt& a, const std::vector<int>& J) {
  LeviSpec L = make_levi(d, J);
  if (a.total_rank() != d.total_rank()) throw DatumMismatch("element over a different datum");
  if (!is_admissible(d, a)) throw DomainError("Levi specialization needs t-support in Q^vee_+");
  HeisElt r(a.total_rank());
  for (const auto& [k, c] : a.terms()) {
    bool keep = true;
    for (int i : d.nodes())
      if (!L.contains(i) && k.second[i - 1] != 0) keep = false;
    if (keep) r.add_term(k.first, k.second, c);
  }
  return r;
}

}  // namespace grk
