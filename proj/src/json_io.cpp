#include "grk/json_io.h"

#include <fstream>
#include <sstream>

#include "grk/toda.h"

namespace grk::io {

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string schema_url(const std::string& name) { return "docs/schemas/" + name + ".schema.json"; }

namespace {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw JsonError(where + ": expected an integer");
}

template <class V>
Json vec_to_json(const V& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::vector<int> ints_from_json(const Json& j, int rank, const std::string& where) {
  if (!j.is_array()) throw JsonError(where + ": expected an integer array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw JsonError(where + ": expected integers");
    v.push_back(x.get<int>());
  }
  if (rank >= 0 && static_cast<int>(v.size()) != rank)
    throw JsonError(where + ": expected " + std::to_string(rank) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw JsonError(where + ": missing key '" + key + "'");
  return j.at(key);
}

Json poly_to_json(const QPoly& p) {
  QLaurent l;
  for (std::size_t k = 0; k < p.size(); ++k) l.add_term(static_cast<int>(k), p[k]);
  return to_json(l);
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw JsonError(where + ": expected [num, den]");
  Rational r(integer_from_json(j[0], where), integer_from_json(j[1], where));
  if (r.get_den() == 0) throw JsonError(where + ": zero denominator");
  r.canonicalize();
  return r;
}

Json to_json(const Weight& w) { return vec_to_json(w); }
Json to_json(const Coweight& g) { return vec_to_json(g); }

Json to_json(const QLaurent& c) {
  Json a = Json::array();
  for (const auto& [k, x] : c.terms()) a.push_back(Json::array({k, integer_to_json(x.get_num()), integer_to_json(x.get_den())}));
  return a;
}

Json to_json(const QFrac& c) { return Json{{"num", poly_to_json(c.num())}, {"den", poly_to_json(c.den())}}; }

QLaurent laurent_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw JsonError(where + ": expected [[exp, num, den], ...]");
  QLaurent c;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
      throw JsonError(where + ": expected [exp, num, den]");
    c.add_term(t[0].get<int>(), rational_from_json(Json::array({t[1], t[2]}), where));
  }
  return c;
}

Weight weight_from_json(const Json& j, int rank, const std::string& where) {
  return Weight(ints_from_json(j, rank, where));
}

Coweight coweight_from_json(const Json& j, int rank, const std::string& where) {
  return Coweight(ints_from_json(j, rank, where));
}

Json to_json(const GroupAlgElt& f) {
  Json terms = Json::array();
  for (const auto& [w, c] : f.by_weight()) terms.push_back(Json{{"wt", to_json(w)}, {"q", to_json(c)}});
  return Json{{"terms", terms}};
}

GroupAlgElt group_alg_from_json(const Json& j, int rank) {
  const Json& terms = field(j, "terms", "group algebra element");
  if (!terms.is_array()) throw JsonError("group algebra element: 'terms' must be an array");
  GroupAlgElt f(rank);
  int k = 0;
  for (const auto& t : terms) {
    std::string where = "terms[" + std::to_string(k++) + "]";
    Weight w = weight_from_json(field(t, "wt", where), rank, where + ".wt");
    for (const auto& [e, c] : laurent_from_json(field(t, "q", where), where + ".q").terms())
      f.add_term(monomial_of(w, e), c);
  }
  return f;
}

Json to_json(const RatFun& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const HeisElt& a) {
  Json terms = Json::array();
  for (const auto& [k, c] : a.terms())
    terms.push_back(Json{{"wt", to_json(k.first)}, {"cwt", to_json(k.second)}, {"q", to_json(c)}});
  return Json{{"terms", terms}};
}

HeisElt heis_from_json(const Json& j, int rank) {
  const Json& terms = field(j, "terms", "Heisenberg element");
  if (!terms.is_array()) throw JsonError("Heisenberg element: 'terms' must be an array");
  if (rank < 0) {
    rank = terms.empty() ? 0 : static_cast<int>(field(terms[0], "wt", "terms[0]").size());
  }
  HeisElt a(rank);
  int k = 0;
  for (const auto& t : terms) {
    std::string where = "terms[" + std::to_string(k++) + "]";
    a.add_term(weight_from_json(field(t, "wt", where), rank, where + ".wt"),
               coweight_from_json(field(t, "cwt", where), rank, where + ".cwt"),
               laurent_from_json(field(t, "q", where), where + ".q"));
  }
  return a;
}

Json to_json(const RootDatum& d, const ExtAffWeylElt& w) {
  return Json{{"u", vec_to_json(reduced_word(d, w.finite_part()))}, {"gamma", to_json(w.translation_part())}};
}

ExtAffWeylElt ext_aff_from_json(const RootDatum& d, const Json& j) {
  std::vector<int> word = ints_from_json(field(j, "u", "element"), -1, "element.u");
  FiniteWeylElt u = FiniteWeylElt::identity(d.rank());
  for (int i : word) {
    if (i < 1 || i > d.rank()) throw JsonError("element.u: letter " + std::to_string(i) + " not in I");
    u = u * FiniteWeylElt::simple(d, i);
  }
  return ExtAffWeylElt(u, coweight_from_json(field(j, "gamma", "element"), d.total_rank(), "element.gamma"));
}

Json to_json(const RootDatum& d, const SmashElt& a) {
  Json terms = Json::array();
  for (const auto& [w, c] : a.terms()) terms.push_back(Json{{"w", to_json(d, w)}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}};
}

Json to_json(const SchubertModule& K, const FlagKElt& x) {
  Json classes = Json::object();
  for (const auto& [w, f] : x.terms()) classes[K.key(w)] = to_json(f);
  return Json{{"J", vec_to_json(K.J())}, {"classes", classes}};
}

Json to_json(const Membership& m) {
  Json coeffs = Json::array();
  for (const auto& [idx, c] : m.coefficients) {
    Json e{{"lambda", to_json(idx.first)}, {"gamma", to_json(idx.second)}};
    if (c.is_laurent()) {
      e["q"] = to_json(c.to_laurent());
    } else {
      e["qfrac"] = to_json(c);
    }
    coeffs.push_back(e);
  }
  Json j{{"feasible", m.feasible}, {"coefficients", coeffs}};
  if (!m.feasible) j["certificate"] = m.certificate;
  return j;
}

Json to_json(const ChainReport& r) {
  return Json{{"J", vec_to_json(r.J)},       {"J_prime", vec_to_json(r.Jp)}, {"seed", r.seed},
              {"samples", r.samples},        {"decomposed", r.decomposed},   {"failures", r.failures},
              {"passed", r.passed()}};
}

Json to_json(const RelationResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"instances", r.instances}, {"witness", r.witness}};
}

Json to_json(const IdentityResult& r) {
  return Json{{"name", r.name}, {"passed", r.passed}, {"instances", r.instances}, {"witness", r.witness}};
}

Json toda_report(int n, const std::vector<int>* levi, const Rational* q) {
  TodaHamiltonian h = toda_ch_v(n);
  HeisElt v = levi ? toda_restrict(n, *levi) : h.value;
  if (q) v = v.q_specialize(*q);
  Json words = Json::array();
  for (const auto& w : h.provenance) words.push_back(w.str());
  Json j{{"$schema", schema_url("toda")}, {"n", n}, {"element", to_json(v)}, {"provenance", words}};
  j["levi"] = levi ? Json(vec_to_json(*levi)) : Json(nullptr);
  j["q"] = q ? rational_to_json(*q) : Json(nullptr);
  return j;
}

}  // namespace grk::io
