#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dcrystal/isomorphism.hpp"

namespace dcrystal {

using nlohmann::json;

inline json root_to_json(const Root& r) {
  return json{{"kind", r.kind == RootKind::Beta ? "beta" : "gamma"}, {"i", r.i}, {"k", r.k}};
}

inline Root root_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int i = j.at("i").get<int>();
  const int k = j.at("k").get<int>();
  if (kind == "beta") return beta(i, k);
  if (kind == "gamma") return gamma(i, k);
  throw std::invalid_argument("root kind must be \"beta\" or \"gamma\"");
}

inline json tableau_to_json(const Tableau& t) {
  return json{{"n", t.n}, {"rows", t.rows}};
}

inline json partition_to_json(const KostantPartition& a) {
  json parts = json::array();
  for (const auto& [r, m] : a.parts) {
    json p = root_to_json(r);
    p["mult"] = m;
    parts.push_back(std::move(p));
  }
  return json{{"n", a.n}, {"parts", std::move(parts)}};
}

/* parse and fully validate; throws invalid_argument on any defect */
inline Tableau tableau_from_json(const json& j) {
  Tableau t;
  t.n = j.at("n").get<int>();
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  const auto faults = validate(t);
  if (!faults.empty()) {
    std::ostringstream msg;
    msg << "invalid tableau:";
    for (const auto& v : faults)
      msg << " [" << v.condition << " row " << v.row << " col " << v.col << ": " << v.detail << "]";
    throw std::invalid_argument(msg.str());
  }
  return t;
}

inline KostantPartition partition_from_json(const json& j) {
  KostantPartition a = empty_partition(Rank(j.at("n").get<int>()));
  for (const json& p : j.at("parts")) {
    const int m = p.at("mult").get<int>();
    if (m <= 0) throw std::invalid_argument("part multiplicity must be positive");
    add_part(a, root_from_json(p), m);
  }
  const auto faults = validate(a);
  if (!faults.empty()) {
    std::ostringstream msg;
    msg << "invalid partition:";
    for (const auto& f : faults) msg << " [" << f << "]";
    throw std::invalid_argument(msg.str());
  }
  return a;
}

/* canonical one-line serializations used for dedup keys and wire output */
inline std::string canonical_dump(const Tableau& t) { return tableau_to_json(t).dump(); }
inline std::string canonical_dump(const KostantPartition& a) { return partition_to_json(a).dump(); }

/* FNV-1a over the canonical dump, printed as 16 hex digits */
inline std::string element_key(const std::string& canonical) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int b = 15; b >= 0; --b) {
    out[b] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace dcrystal
