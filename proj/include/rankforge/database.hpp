#pragma once

#include <string>
#include <vector>

#include "builtin_data.hpp"
#include "identity.hpp"

namespace rankforge {

struct DatabaseEntry {
  std::string id;
  // "group" (one identity per m), "identity", or "skeleton" (coefficients unknown)
  std::string kind;
  std::vector<Identity> identities;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::vector<DatabaseEntry> parse_database(std::string_view text, std::uint64_t checksum) {
  if (fnv1a64(text) != checksum) throw std::runtime_error("embedded identity data failed its checksum");
  const auto j = nlohmann::json::parse(text);
  std::vector<DatabaseEntry> out;
  for (const auto& e : j.at("entries")) {
    DatabaseEntry d{e.at("id").get<std::string>(), e.at("kind").get<std::string>(), {}};
    for (const auto& ji : e.at("identities")) {
      Identity id = identity_from_json(ji);
      id.id = d.kind == "group" ? d.id + ":m" + std::to_string(id.m) : d.id;
      d.identities.push_back(std::move(id));
    }
    out.push_back(std::move(d));
  }
  return out;
}

inline const std::vector<DatabaseEntry>& builtin_database() {
  static const std::vector<DatabaseEntry> db = parse_database(builtin::kJson, builtin::kChecksum);
  return db;
}

// "builtin:rank11id0", "rank11id0", or "rank7:m3" for one slice of a group.
inline std::vector<Identity> find_builtin(std::string name) {
  if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
  for (const auto& e : builtin_database()) {
    if (e.id == name) return e.identities;
    for (const auto& id : e.identities)
      if (id.id == name) return {id};
  }
  throw std::invalid_argument("no built-in identity named '" + name + "'");
}

}  // namespace rankforge
