#ifndef GRK_JSON_IO_H
#define GRK_JSON_IO_H

#include <string>

#include "json.hpp"
#include "grk/darboux.h"
#include "grk/heisenberg.h"
#include "grk/nildaha.h"
#include "grk/schubert.h"

namespace grk::io {

using Json = nlohmann::json;

// Malformed or ill-typed JSON input; the message carries the location.
struct JsonError : DomainError {
  using DomainError::DomainError;
};

// Canonical text: sorted keys, no insignificant whitespace, trailing newline.
std::string dump(const Json& j);
Json parse(const std::string& text, const std::string& origin);
Json parse_file(const std::string& path);

std::string schema_url(const std::string& name);  // docs/schemas/<name>.schema.json

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const Weight& w);
Json to_json(const Coweight& g);
Json to_json(const QLaurent& c);  // [[exp, num, den], ...]
Json to_json(const QFrac& c);     // {"num": [[exp,num,den]...], "den": ...}
Json to_json(const GroupAlgElt& f);
Json to_json(const RatFun& f);
Json to_json(const HeisElt& a);
Json to_json(const RootDatum& d, const ExtAffWeylElt& w);
Json to_json(const RootDatum& d, const SmashElt& a);
Json to_json(const SchubertModule& K, const FlagKElt& x);
Json to_json(const Membership& m);
Json to_json(const ChainReport& r);
Json to_json(const RelationResult& r);
Json to_json(const IdentityResult& r);

Weight weight_from_json(const Json& j, int rank, const std::string& where);
Coweight coweight_from_json(const Json& j, int rank, const std::string& where);
QLaurent laurent_from_json(const Json& j, const std::string& where);
GroupAlgElt group_alg_from_json(const Json& j, int rank);
HeisElt heis_from_json(const Json& j, int rank);
ExtAffWeylElt ext_aff_from_json(const RootDatum& d, const Json& j);

// Report for the toda command: the element with its parameters.
Json toda_report(int n, const std::vector<int>* levi, const Rational* q);

}  // namespace grk::io

#endif
