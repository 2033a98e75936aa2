#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclotomic.hpp"
#include "etaforms.hpp"

namespace rankforge {

// f_{p,num}/f_{p,den}
struct Prefactor {
  std::int64_t num = 1;
  std::int64_t den = 1;
  friend bool operator==(const Prefactor&, const Prefactor&) = default;
};

// coeff * prefactor * j(p, pi_r(vectors[vec])) * (eta(pz)/eta(z))^eta_ratio_pow.
// A missing coeff marks a skeleton term whose coefficient is still unknown.
struct IdentityTerm {
  std::optional<CycNum> coeff;
  std::size_t vec = 0;
  std::int64_t r = 1;
  std::int64_t eta_ratio_pow = 0;
  std::optional<Prefactor> prefactor;
};

struct Identity {
  std::string id;
  std::int64_t p = 5;
  std::int64_t m = 0;
  std::vector<EtaVector> vectors;
  std::vector<IdentityTerm> terms;
  std::string provenance;
  // indices of terms whose coefficient is known to vanish
  std::vector<std::size_t> zero_terms;
  // free-form description of the left side, kept for reports
  nlohmann::json lhs;

  bool complete() const {
    for (const auto& t : terms)
      if (!t.coeff) return false;
    return true;
  }
};

inline void validate(const Identity& id) {
  require_prime(id.p);
  if (id.m < 0 || id.m >= id.p) throw std::invalid_argument("m must satisfy 0 <= m < p");
  for (const auto& v : id.vectors) check_vector(id.p, v);
  const std::int64_t h = (id.p - 1) / 2;
  for (const auto& t : id.terms) {
    if (t.vec >= id.vectors.size()) throw std::invalid_argument("term references a missing vector");
    if (t.r < 1 || t.r > h) throw std::invalid_argument("permutation index r must lie in 1..(p-1)/2");
    if (t.coeff && t.coeff->prime() != id.p) throw MismatchError("coefficient lives in the wrong cyclotomic field");
    if (t.prefactor) {
      reduce_rho(id.p, t.prefactor->num);
      reduce_rho(id.p, t.prefactor->den);
    }
  }
  for (auto z : id.zero_terms)
    if (z >= id.terms.size()) throw std::invalid_argument("zero_terms index out of range");
}

// The term's eta-vector with permutation, eta ratio and prefactor folded in.
inline EtaVector full_vector(const Identity& id, const IdentityTerm& t) {
  EtaVector v = permute_vector(id.p, id.vectors.at(t.vec), t.r) + eta_ratio_vector(id.p, t.eta_ratio_pow);
  if (t.prefactor) {
    v[static_cast<std::size_t>(reduce_rho(id.p, t.prefactor->num))] += 1;
    v[static_cast<std::size_t>(reduce_rho(id.p, t.prefactor->den))] -= 1;
  }
  return v;
}

inline std::string term_label(const Identity& id, const IdentityTerm& t) {
  std::string s;
  if (t.prefactor) s += "f" + std::to_string(t.prefactor->num) + "/f" + std::to_string(t.prefactor->den) + "*";
  s += "j(n" + std::to_string(t.vec + 1) + ",pi" + std::to_string(t.r) + ")";
  if (t.eta_ratio_pow != 0) s += "*(eta" + std::to_string(id.p) + "/eta)^" + std::to_string(t.eta_ratio_pow);
  return s;
}

inline nlohmann::json to_json(const Identity& id) {
  nlohmann::json j;
  if (!id.id.empty()) j["id"] = id.id;
  j["p"] = id.p;
  j["m"] = id.m;
  j["vectors"] = id.vectors;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : id.terms) {
    nlohmann::json jt;
    jt["coeff"] = t.coeff ? to_json(*t.coeff) : nlohmann::json(nullptr);
    jt["vec"] = t.vec;
    jt["r"] = t.r;
    jt["eta_ratio_pow"] = t.eta_ratio_pow;
    jt["prefactor"] = t.prefactor ? nlohmann::json{{"num", t.prefactor->num}, {"den", t.prefactor->den}}
                                  : nlohmann::json(nullptr);
    j["terms"].push_back(jt);
  }
  j["provenance"] = id.provenance;
  if (!id.zero_terms.empty()) j["zero_terms"] = id.zero_terms;
  if (!id.lhs.is_null()) j["lhs"] = id.lhs;
  return j;
}

inline Identity identity_from_json(const nlohmann::json& j) {
  Identity id;
  id.id = j.value("id", std::string());
  id.p = j.at("p").get<std::int64_t>();
  id.m = j.at("m").get<std::int64_t>();
  require_prime(id.p);
  for (const auto& v : j.at("vectors")) id.vectors.push_back(v.get<EtaVector>());
  for (const auto& jt : j.at("terms")) {
    IdentityTerm t;
    if (jt.contains("coeff") && !jt["coeff"].is_null()) t.coeff = cyc_from_json(static_cast<int>(id.p), jt["coeff"]);
    t.vec = jt.at("vec").get<std::size_t>();
    t.r = jt.at("r").get<std::int64_t>();
    t.eta_ratio_pow = jt.value("eta_ratio_pow", std::int64_t{0});
    if (jt.contains("prefactor") && !jt["prefactor"].is_null())
      t.prefactor = Prefactor{jt["prefactor"].at("num").get<std::int64_t>(), jt["prefactor"].at("den").get<std::int64_t>()};
    id.terms.push_back(std::move(t));
  }
  id.provenance = j.value("provenance", std::string());
  if (j.contains("zero_terms")) id.zero_terms = j["zero_terms"].get<std::vector<std::size_t>>();
  if (j.contains("lhs")) id.lhs = j["lhs"];
  validate(id);
  return id;
}

}  // namespace rankforge
