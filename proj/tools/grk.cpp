#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grk/checks.h"
#include "grk/json_io.h"
#include "grk/toda.h"

using namespace grk;
using io::Json;

namespace {

constexpr int kPass = 0, kFail = 1, kDomain = 2, kBound = 3, kUsage = 64;

struct DatumOpts {
  std::string type, datum, config;
  int rank = 0;
  int central = -1;
};

// "A2", "A1xA2+T1"
RootDatum parse_label(const std::string& label, int central_override) {
  std::string fam = label;
  int central = 0;
  auto pos = label.find("+T");
  if (pos != std::string::npos) {
    fam = label.substr(0, pos);
    try {
      central = std::stoi(label.substr(pos + 2));
    } catch (const std::exception&) {
      throw ConfigError("malformed central part in '" + label + "'");
    }
  }
  return RootDatum::parse(fam, central_override >= 0 ? central_override : central);
}

// {"factors": ["A1", {"type": "B", "rank": 2}], "central": 1}
RootDatum from_config(const std::string& path, int central_override) {
  Json j = io::parse_file(path);
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    throw ConfigError(path + ": expected an object with a nonempty \"factors\" array");
  std::string fam;
  for (const auto& f : j["factors"]) {
    if (!fam.empty()) fam += "x";
    if (f.is_string()) {
      fam += f.get<std::string>();
    } else if (f.is_object() && f.contains("type") && f.contains("rank") && f["type"].is_string() &&
               f["rank"].is_number_integer()) {
      fam += f["type"].get<std::string>() + std::to_string(f["rank"].get<int>());
    } else {
      throw ConfigError(path + ": factor must be \"A2\" or {\"type\": \"A\", \"rank\": 2}");
    }
  }
  int central = j.value("central", 0);
  return RootDatum::parse(fam, central_override >= 0 ? central_override : central);
}

RootDatum resolve(const DatumOpts& o) {
  if (!o.config.empty()) return from_config(o.config, o.central);
  if (!o.datum.empty()) return parse_label(o.datum, o.central);
  if (!o.type.empty()) {
    if (o.rank <= 0) throw ConfigError("--type needs --rank");
    return RootDatum::parse(o.type + std::to_string(o.rank), std::max(o.central, 0));
  }
  if (const char* env = std::getenv("GRK_DATUM"); env && *env) return parse_label(env, o.central);
  throw ConfigError("no root datum: pass --type/--rank, --datum, --config, or set GRK_DATUM");
}

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<int> v;
  if (s.empty() || s == "-" || s == "e") return v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(what + ": bad integer '" + item + "'");
    }
  }
  return v;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

ExtAffWeylElt parse_affine_word(const RootDatum& d, const std::string& s) {
  auto word = parse_ints(s, "word");
  for (int i : word)
    if (i < 0 || i > d.rank()) throw DomainError("letter " + std::to_string(i) + " not in I_af");
  return from_affine_word(d, word);
}

Json with_schema(Json j, const std::string& schema) {
  j["$schema"] = io::schema_url(schema);
  return j;
}

Json check_json(const CheckResult& c) {
  return Json{{"name", c.name},         {"passed", c.passed},     {"skipped", c.skipped},
              {"instances", c.instances}, {"witness", c.witness}, {"seconds", c.seconds}};
}

void emit(const Json& j, const std::string& path) {
  std::string text = io::dump(j);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

void print_table(const Json& checks) {
  for (const auto& c : checks) {
    std::string status = c.value("skipped", false) ? "SKIP" : c["passed"].get<bool>() ? "ok" : "FAIL";
    std::cout << std::left << std::setw(6) << status << std::setw(50) << c["name"].get<std::string>()
              << std::setw(10) << c["instances"].get<long>() << std::fixed << std::setprecision(2)
              << c.value("seconds", 0.0) << "s\n";
    if (status == "FAIL") std::cout << "      " << c["witness"].get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in K-groups of affine Grassmannians and their Darboux coordinates"};
  app.require_subcommand(1);
  app.fallthrough();
  DatumOpts dopt;
  std::string out_path;
  bool table = false;
  std::uint64_t seed = 0;
  app.add_option("--type", dopt.type, "Dynkin type letter (A, B, C, D, G)");
  app.add_option("--rank", dopt.rank, "rank of the simple factor");
  app.add_option("--central", dopt.central, "rank of the central torus");
  app.add_option("--datum", dopt.datum, "datum label such as A1xA2+T1 (default: $GRK_DATUM)");
  app.add_option("--config", dopt.config, "JSON file listing the simple factors and central rank");
  app.add_option("--json", out_path, "write the JSON report to this file");
  app.add_flag("--table", table, "human-readable table instead of JSON (reports only)");
  app.add_option("--seed", seed, "seed for randomized checks");

  auto* relations = app.add_subcommand("relations", "nil-DAHA and Heisenberg relation suites");
  int radius = 1, max_len = 0;
  std::string algebra = "all";
  relations->add_option("--radius", radius, "weight sample radius");
  relations->add_option("--max-len", max_len, "also check D_w word independence up to this length");
  relations->add_option("--algebra", algebra, "nildaha | darboux | all")->check(CLI::IsMember({"nildaha", "darboux", "all"}));

  auto* character = app.add_subcommand("character", "Weyl character of a dominant weight");
  std::string weight;
  character->add_option("--weight", weight, "weight coordinates, comma separated")->required();

  auto* length_cmd = app.add_subcommand("length", "length of an affine word");
  std::string word;
  length_cmd->add_option("--word", word, "letters of I_af, comma separated")->required();

  auto* order = app.add_subcommand("order", "Bruhat or semi-infinite comparison lhs <= rhs");
  std::string kind, lhs, rhs;
  order->add_option("--kind", kind)->required()->check(CLI::IsMember({"bruhat", "semiinf"}));
  order->add_option("--lhs", lhs, "affine word")->required();
  order->add_option("--rhs", rhs, "affine word")->required();

  auto* mul = app.add_subcommand("mul", "product of two Heisenberg elements");
  std::string lhs_file, rhs_file, qval;
  mul->add_option("--lhs", lhs_file)->required();
  mul->add_option("--rhs", rhs_file)->required();
  mul->add_option("--q", qval, "specialize q");

  auto* image = app.add_subcommand("image", "Darboux image of a generator word");
  std::string gen_word;
  image->add_option("--word", gen_word, "e.g. \"xi1 phi2 t:1,0\"")->required();

  auto* decompose = app.add_subcommand("decompose", "membership in the level-J family");
  std::string target_file, levi;
  int box = 4;
  decompose->add_option("--target", target_file)->required();
  decompose->add_option("--levi", levi, "J, comma separated (empty for none)")->required();
  decompose->add_option("--box", box);

  auto* chain = app.add_subcommand("chain", "Levi chain check J' in J");
  std::string from, to;
  int samples = 20, degree = 3, chain_box = 6;
  chain->add_option("--from", from)->required();
  chain->add_option("--to", to)->required();
  chain->add_option("--samples", samples);
  chain->add_option("--degree", degree);
  chain->add_option("--box", chain_box);

  auto* toda = app.add_subcommand("toda", "relativistic Toda Hamiltonian of SL(n)");
  int n = 0;
  std::string toda_levi, toda_q;
  toda->add_option("--n", n)->required();
  auto* levi_opt = toda->add_option("--levi", toda_levi, "specialize to the Levi J");
  toda->add_option("--q", toda_q, "specialize q");

  auto* suite = app.add_subcommand("suite", "full check battery for one datum");
  bool serial = false;
  suite->add_flag("--serial", serial, "run checks one after another");
  suite->add_option("--samples", samples, "Levi chain samples per chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*toda) {
      std::vector<int> J;
      Rational q;
      if (*levi_opt) J = parse_ints(toda_levi, "--levi");
      if (!toda_q.empty()) q = parse_rational(toda_q);
      emit(io::toda_report(n, *levi_opt ? &J : nullptr, toda_q.empty() ? nullptr : &q), out_path);
      return kPass;
    }
    if (*mul) {
      int r = -1;
      if (!dopt.datum.empty() || !dopt.type.empty() || !dopt.config.empty() || std::getenv("GRK_DATUM")) r = resolve(dopt).total_rank();
      HeisElt a = io::heis_from_json(io::parse_file(lhs_file), r);
      HeisElt b = io::heis_from_json(io::parse_file(rhs_file), a.total_rank());
      HeisElt p = a * b;
      if (!qval.empty()) p = p.q_specialize(parse_rational(qval));
      emit(with_schema(io::to_json(p), "heis_elt"), out_path);
      return kPass;
    }

    RootDatum d = resolve(dopt);
    if (*length_cmd) {
      std::cout << length(d, parse_affine_word(d, word)) << "\n";
      return kPass;
    }
    if (*character) {
      Weight l(parse_ints(weight, "--weight"));
      if (static_cast<int>(l.size()) != d.total_rank())
        throw DomainError("--weight needs " + std::to_string(d.total_rank()) + " coordinates");
      emit(with_schema(io::to_json(NilDaha(d).weyl_character(l)), "group_alg_elt"), out_path);
      return kPass;
    }
    if (*order) {
      AffineOrders o(d);
      ExtAffWeylElt a = parse_affine_word(d, lhs), b = parse_affine_word(d, rhs);
      Json j{{"kind", kind}, {"lhs", io::to_json(d, a)}, {"rhs", io::to_json(d, b)}, {"datum", d.label()}};
      if (kind == "bruhat") {
        j["leq"] = o.bruhat_leq(a, b);
      } else {
        SemiInfiniteTrace t = o.semi_infinite_trace(a, b);
        j["leq"] = t.value;
        j["first_n"] = t.first_n;
        j["answers"] = t.answers;
      }
      emit(with_schema(j, "order"), out_path);
      return kPass;
    }
    if (*image) {
      Darboux D(d);
      emit(with_schema(io::to_json(D.image(parse_word(d, gen_word))), "heis_elt"), out_path);
      return kPass;
    }
    if (*decompose) {
      Darboux D(d);
      HeisElt target = io::heis_from_json(io::parse_file(target_file), d.total_rank());
      Json j = io::to_json(D.membership_decompose(target, parse_ints(levi, "--levi"), box));
      j["levi"] = parse_ints(levi, "--levi");
      j["box"] = box;
      emit(with_schema(j, "membership"), out_path);
      return kPass;
    }

    Json checks = Json::array();
    bool ok = true;
    auto add = [&](Json c) {
      if (!c.contains("skipped")) c["skipped"] = false;
      if (!c.contains("seconds")) c["seconds"] = 0.0;
      if (!c.contains("witness")) c["witness"] = "";
      checks.push_back(c);
      if (!c.value("skipped", false) && !c["passed"].get<bool>()) ok = false;
    };
    std::string command;
    if (*relations) {
      command = "relations";
      if (algebra != "darboux")
        for (const auto& r : NilDaha(d).relation_suite(radius)) add(io::to_json(r));
      if (algebra != "darboux" && max_len > 0) add(check_json(check_word_independence(d, max_len)));
      if (algebra != "nildaha")
        for (const auto& r : Darboux(d).check_relations()) add(io::to_json(r));
    } else if (*chain) {
      command = "chain";
      ChainReport rep = Darboux(d).levi_chain_check(parse_ints(from, "--from"), parse_ints(to, "--to"), samples, degree,
                                                    chain_box, seed);
      Json j = io::to_json(rep);
      j["name"] = "Levi chain";
      j["instances"] = rep.samples;
      j["witness"] = rep.failures.empty() ? "" : rep.failures.front();
      add(j);
    } else if (*suite) {
      command = "suite";
      SuiteConfig cfg;
      cfg.seed = seed;
      cfg.chain_samples = samples;
      cfg.parallel = !serial;
      for (const auto& c : run_suite(d, cfg)) add(check_json(c));
    }
    Json report{{"command", command}, {"datum", d.label()}, {"seed", seed}, {"checks", checks}, {"passed", ok}};
    if (table) {
      print_table(checks);
    } else {
      emit(with_schema(report, "report"), out_path);
    }
    return ok ? kPass : kFail;
  } catch (const UnstableError& e) {
    std::cerr << "unstable: " << e.what() << "\n";
    return kBound;
  } catch (const BoundError& e) {
    std::cerr << "bound: " << e.what() << "\n";
    return kBound;
  } catch (const ConfigError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return kDomain;
  }
}
