#pragma once

#include <string>

#include "cyclotomic.hpp"
#include "etaforms.hpp"
#include "qseries.hpp"
#include "ranks.hpp"

namespace rankforge {

enum class ResidueClass { zero, residue, nonresidue };

inline std::string to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::zero:
      return "zero";
    case ResidueClass::residue:
      return "residue";
    default:
      return "nonresidue";
  }
}

struct Classification {
  ResidueClass kind = ResidueClass::zero;
  // 1 <= a <= (p-1)/2 with (6a)^2 = -24m mod p, residue class only
  std::int64_t witness = 0;
};

inline Classification classify(std::int64_t p, std::int64_t m) {
  require_prime(p);
  const std::int64_t v = mod_floor(-24 * m, p);
  if (v == 0) return {ResidueClass::zero, 0};
  for (std::int64_t a = 1; 2 * a < p; ++a)
    if ((6 * a) * (6 * a) % p == v) return {ResidueClass::residue, a};
  return {ResidueClass::nonresidue, 0};
}

inline std::int64_t s_p(std::int64_t p) { return (p * p - 1) / 24; }

// chi12(p) (-1)^{a+d+1} 4 sin(d pi/p) sin(6ad pi/p)
inline CycNum correction_coeff(std::int64_t p, std::int64_t a, std::int64_t d) {
  CycNum c = four_sine_product(static_cast<int>(p), d, a);
  int sign = chi12(p) * (((a + d + 1) % 2 == 0) ? 1 : -1);
  return sign > 0 ? c : -c;
}

// Exponent of q in front of Phi_{p,a}(q) inside the bracket of K_{p,m}.
inline Rat correction_shift(std::int64_t p, std::int64_t a, std::int64_t m) {
  return make_rat(a * (p - 3 * a) / 2 - m, p);
}

// K_{p,m}(zeta_p^d, z) exact below q^T, from the residue-class sums directly.
inline CycSeries k_series(std::int64_t p, std::int64_t m, std::int64_t d, const Rat& T) {
  require_prime(p);
  if (m < 0 || m >= p) throw std::invalid_argument("m must satisfy 0 <= m < p");
  if (mod_floor(d, p) == 0) throw std::invalid_argument("d must be prime to p");
  const int ip = static_cast<int>(p);
  const std::int64_t D = lattice_denom(p);
  const std::int64_t sp = s_p(p);
  const Rat Tn = T - make_rat(m, p);
  const std::int64_t n_end = to_i64(ceil_rat(Tn));
  const std::int64_t n_min = ceil_div(sp - m, p);

  std::vector<CycNum> s;
  if (n_end > n_min) {
    const auto table = rank_residues(p, p * (n_end - 1) + m - sp + 1);
    for (std::int64_t n = n_min; n < n_end; ++n) {
      const std::int64_t idx = p * n + m - sp;
      s.push_back(idx < 0 ? CycNum::zero(ip) : residue_to_cyc(p, (*table)[static_cast<std::size_t>(idx)], d));
    }
  }
  CycSeries X(D, n_min * D, D, std::move(s), n_end * D, CycNum::zero(ip));

  const Classification cls = classify(p, m);
  if (cls.kind == ResidueClass::residue) {
    const std::int64_t a = cls.witness;
    const Rat shift = correction_shift(p, a, m);
    IntSeries phi = phi_series(p, a, Tn - shift);
    X -= scale(phi.shifted(to_i64(Rat(shift * D))), correction_coeff(p, a, d));
  }
  const std::int64_t need = to_i64(ceil_rat(Tn * D)) - std::min<std::int64_t>(0, X.order_or_bound());
  IntSeries E = euler_product({{p, p, 1}}).expand(D, need);
  CycSeries K = (X * E).shifted(24 * m);
  return K.truncated(std::min(K.bound(), to_i64(ceil_rat(T * D))));
}

// The same slice as U_{p,m} applied to eta(p^2 z) R_p(zeta_p^d, z).
inline CycSeries k_series_via_u(std::int64_t p, std::int64_t m, std::int64_t d, const Rat& T) {
  require_prime(p);
  const std::int64_t D = lattice_denom(p);
  const std::int64_t sp = s_p(p);
  const Rat W_bound = T * p;  // in units of q
  const std::int64_t r_terms = std::max<std::int64_t>(0, to_i64(ceil_rat(W_bound - sp)));
  CycSeries B = rank_gf(p, d, r_terms).shifted(sp * D);
  for (std::int64_t a = 1; 2 * a < p; ++a) {
    const std::int64_t e = a * (p - 3 * a) / 2;
    IntSeries phi = phi_series(p, a, W_bound - e, p);
    B -= scale(phi.shifted(e * D), correction_coeff(p, a, d));
  }
  const std::int64_t need = to_i64(ceil_rat(W_bound * D)) - std::min<std::int64_t>(0, B.order_or_bound());
  IntSeries E = euler_product({{p * p, p * p, 1}}).expand(D, need);
  CycSeries W = B * E;
  CycSeries K = u_operator(W, p, m);
  return K.truncated(std::min(K.bound(), to_i64(ceil_rat(T * D))));
}

}  // namespace rankforge
