#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dissection.hpp"
#include "etaforms.hpp"

namespace rankforge {

// Cusp a/c of Gamma_1(p). i-infinity is stored as 1/p with infinity set.
struct Cusp {
  std::int64_t a = 1;
  std::int64_t c = 1;
  std::int64_t width = 1;
  bool infinity = false;

  std::string label() const {
    if (infinity) return "i*inf";
    if (a == 0) return "0";
    return std::to_string(a) + "/" + std::to_string(c);
  }
};

// i-inf, 0, 1/n and n/p for 2 <= n <= (p-1)/2.
inline std::vector<Cusp> cusp_set(std::int64_t p) {
  require_prime(p);
  std::vector<Cusp> out;
  out.push_back({1, p, 1, true});
  out.push_back({0, 1, p, false});
  for (std::int64_t n = 2; 2 * n < p; ++n) out.push_back({1, n, p, false});
  for (std::int64_t n = 2; 2 * n < p; ++n) out.push_back({n, p, 1, false});
  return out;
}

// Invariant order of f_{N,rho} at a/c: (g^2/(2N)) ({a rho/g} - 1/2)^2, g = gcd(N, c).
inline Rat ord_f_at_cusp(std::int64_t N, std::int64_t rho, std::int64_t a, std::int64_t c) {
  const std::int64_t g = std::gcd(N, c);
  Rat x = make_rat(a * rho, g);
  Rat frac = x - Rat(floor_rat(x)) - Rat(1, 2);
  return make_rat(g * g, 2 * N) * frac * frac;
}

// Invariant order of eta(Nz) at a/c: g^2/(24N).
inline Rat ord_eta_at_cusp(std::int64_t N, std::int64_t c) {
  const std::int64_t g = std::gcd(N, c);
  return make_rat(g * g, 24 * N);
}

// ORD (width times invariant order) of j(p, n) at a cusp.
inline Rat ord_j(std::int64_t p, const EtaVector& n, const Cusp& s) {
  check_vector(p, n);
  Rat o = ord_eta_at_cusp(p, s.c) * n[0];
  for (std::size_t k = 1; k < n.size(); ++k)
    if (n[k] != 0) o += ord_f_at_cusp(p, static_cast<std::int64_t>(k), s.a, s.c) * n[k];
  return o * s.width;
}

// ORD of j(p, pi_r(n)) at a cusp.
inline Rat ord_j_at_cusp(std::int64_t p, const EtaVector& n, std::int64_t r, const Cusp& s) {
  return ord_j(p, permute_vector(p, n, r), s);
}

// Lower bound for ORD(K_{p,m}(zeta_p, z), s); none at i-infinity.
inline std::optional<Rat> lambda_bound(std::int64_t p, std::int64_t m, const Cusp& s) {
  if (s.infinity) return std::nullopt;
  if (s.a == 0) {
    if (p <= 7) return Rat(0);
    return make_rat(-(p - 5) * (p - 7), 24);
  }
  if (s.a == 1 && s.c != p) {
    const std::int64_t n = s.c;
    // 2 <= n < (p-1)/6
    if (6 * n < p - 1) return Rat(-3, 2) * (make_rat(p - 1, 6) - n) * (make_rat(p + 1, 6) - n);
    return Rat(0);
  }
  if (classify(p, m).kind == ResidueClass::residue) return Rat(1, 2) - make_rat(3, 2 * p);
  return make_rat(p * p - 1, 24 * p);
}

struct ValenceBudget {
  BigInt B = 0;
  std::vector<std::optional<BigInt>> column_min;  // none where the cusp has no bound
  BigInt R = 0;
};

// rows[i][c] is the ORD of term i at cusp c; lambdas[c] the (adjusted) bound there.
// B sums ceil(min(column, lambda)) over the bounded cusps; R = -B + 1 + ceil(mu k/12).
inline ValenceBudget valence_budget(std::int64_t p, std::int64_t weight, const std::vector<std::vector<Rat>>& rows,
                                    const std::vector<std::optional<Rat>>& lambdas) {
  ValenceBudget out;
  for (std::size_t c = 0; c < lambdas.size(); ++c) {
    if (!lambdas[c]) {
      out.column_min.push_back(std::nullopt);
      continue;
    }
    Rat lo = *lambdas[c];
    for (const auto& row : rows) {
      if (row.size() != lambdas.size()) throw std::invalid_argument("ORD row length differs from the cusp count");
      lo = std::min(lo, row[c]);
    }
    const BigInt cm = ceil_rat(lo);
    out.column_min.push_back(cm);
    out.B += cm;
  }
  out.R = -out.B + 1 + ceil_rat(make_rat((p * p - 1) * weight, 24));
  return out;
}

}  // namespace rankforge
