#pragma once

#include <array>
#include <vector>

#include "arith.hpp"
#include "qseries.hpp"

namespace rankforge {

// Exponent lattice denominator used for everything attached to the prime p.
inline std::int64_t lattice_denom(std::int64_t p) { return 24 * p; }

// prod_{j>=0} (1 - q^{scale*(residue + j*modulus)})^power
struct EulerFactor {
  std::int64_t residue;
  std::int64_t modulus;
  std::int64_t scale;
  std::int64_t power;
};

// q^prefactor times a finite product of EulerFactors. Closed under
// multiplication and integer powers, which is all eta quotients need.
class EtaProduct {
 public:
  EtaProduct() = default;
  EtaProduct(Rat prefactor, std::vector<EulerFactor> factors)
      : prefactor_(std::move(prefactor)), factors_(std::move(factors)) {
    for (const auto& f : factors_)
      if (f.residue <= 0 || f.modulus <= 0 || f.scale <= 0)
        throw std::invalid_argument("Euler factor needs positive residue, modulus and scale");
  }

  const Rat& prefactor() const { return prefactor_; }
  const std::vector<EulerFactor>& factors() const { return factors_; }

  EtaProduct& operator*=(const EtaProduct& o) {
    prefactor_ += o.prefactor_;
    factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
    return *this;
  }
  friend EtaProduct operator*(EtaProduct a, const EtaProduct& b) { return a *= b; }

  EtaProduct pow(std::int64_t k) const {
    EtaProduct r;
    r.prefactor_ = prefactor_ * k;
    if (k != 0)
      for (auto f : factors_) {
        f.power *= k;
        r.factors_.push_back(f);
      }
    return r;
  }

  // Expansion exact below bound/D. Uses n f_n = sum_k b_k f_{n-k} with
  // b_k = -sum_{m|k} m e_m where the product is prod_m (1-q^m)^{e_m}.
  IntSeries expand(std::int64_t D, std::int64_t bound) const {
    Rat pre = prefactor_ * D;
    if (pre.get_den() != 1) throw MismatchError("eta product prefactor " + prefactor_.get_str() + " is off the lattice");
    const std::int64_t lead = to_i64(pre);
    const std::int64_t n = bound > lead ? ceil_div(bound - lead, D) : 0;
    if (n == 0) return IntSeries::zero_series(D, bound, BigInt(0));
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::int64_t> e(N, 0);
    for (const auto& f : factors_)
      for (std::int64_t m = f.scale * f.residue; m < n; m += f.scale * f.modulus) e[static_cast<std::size_t>(m)] += f.power;
    std::vector<std::int64_t> b(N, 0);
    for (std::size_t m = 1; m < N; ++m) {
      if (e[m] == 0) continue;
      for (std::size_t k = m; k < N; k += m) b[k] -= static_cast<std::int64_t>(m) * e[m];
    }
    std::vector<BigInt> c(N);
    c[0] = 1;
    BigInt acc;
    for (std::size_t i = 1; i < N; ++i) {
      acc = 0;
      for (std::size_t k = 1; k <= i; ++k) {
        if (b[k] == 0) continue;
        if (b[k] > 0)
          mpz_addmul_ui(acc.get_mpz_t(), c[i - k].get_mpz_t(), static_cast<unsigned long>(b[k]));
        else
          mpz_submul_ui(acc.get_mpz_t(), c[i - k].get_mpz_t(), static_cast<unsigned long>(-b[k]));
      }
      mpz_divexact_ui(c[i].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return IntSeries(D, lead, D, std::move(c), bound, BigInt(0));
  }

  IntSeries expand(std::int64_t D, const Rat& bound) const { return expand(D, to_i64(ceil_rat(bound * D))); }

 private:
  Rat prefactor_ = 0;
  std::vector<EulerFactor> factors_;
};

// Second periodic Bernoulli polynomial {x}^2 - {x} + 1/6.
inline Rat bernoulli_p2(const Rat& x) {
  Rat f = x - Rat(floor_rat(x));
  return f * f - f + Rat(1, 6);
}

// eta(t z) = q^{t/24} prod (1 - q^{tn})
inline EtaProduct eta(std::int64_t t = 1) { return EtaProduct(make_rat(t, 24), {{1, 1, t, 1}}); }

// Generalized eta eta_{N,k}(t z).
inline EtaProduct gen_eta(std::int64_t N, std::int64_t k, std::int64_t t = 1) {
  std::int64_t r = mod_floor(k, N);
  if (r == 0) throw std::domain_error("generalized eta needs k not divisible by N");
  Rat pre = Rat(t) * Rat(N, 2) * bernoulli_p2(make_rat(k, N));
  std::vector<EulerFactor> f{{r, N, t, 1}};
  if (N - r != r) f.push_back({N - r, N, t, 1});
  return EtaProduct(pre, f);
}

// Reduces rho into 1..N/2 using f_{N,rho} = f_{N,N+rho} = f_{N,-rho}.
inline std::int64_t reduce_rho(std::int64_t N, std::int64_t rho) {
  std::int64_t r = fold(rho, N);
  if (r == 0) throw std::domain_error("f_{N,rho} needs rho not divisible by N");
  return r;
}

// f_{N,rho}(t z) = q^{t(N-2rho)^2/(8N)} (q^rho, q^{N-rho}, q^N; q^N)_inf
inline EtaProduct biagioli_f(std::int64_t N, std::int64_t rho, std::int64_t t = 1) {
  std::int64_t r = reduce_rho(N, rho);
  Rat pre = make_rat(t * (N - 2 * r) * (N - 2 * r), 8 * N);
  return EtaProduct(pre, {{r, N, t, 1}, {N - r, N, t, 1}, {N, N, t, 1}});
}

// prod over (r, N, x) of (q^r; q^N)_inf^x
inline EtaProduct euler_product(const std::vector<std::array<std::int64_t, 3>>& pairs) {
  std::vector<EulerFactor> f;
  for (const auto& [r, N, x] : pairs) f.push_back({r, N, 1, x});
  return EtaProduct(0, f);
}

// j-vector (n0, n1, ..., n_{(p-1)/2}) standing for eta(pz)^n0 prod f_{p,k}^{n_k}.
using EtaVector = std::vector<std::int64_t>;

inline void check_vector(std::int64_t p, const EtaVector& n) {
  if (static_cast<std::int64_t>(n.size()) != (p - 1) / 2 + 1)
    throw std::invalid_argument("j-vector for p=" + std::to_string(p) + " needs " + std::to_string((p + 1) / 2) +
                                " entries");
}

// pi_r: the vector of j(p, n) with f_{p,k} replaced by f_{p,rk}.
inline EtaVector permute_vector(std::int64_t p, const EtaVector& n, std::int64_t r) {
  check_vector(p, n);
  if (mod_floor(r, p) == 0) throw std::domain_error("permutation index must be prime to p");
  EtaVector out(n.size(), 0);
  out[0] = n[0];
  for (std::size_t k = 1; k < n.size(); ++k) out[static_cast<std::size_t>(fold(r * static_cast<std::int64_t>(k), p))] += n[k];
  return out;
}

// Vector of (eta(pz)/eta(z))^e.
inline EtaVector eta_ratio_vector(std::int64_t p, std::int64_t e) {
  EtaVector v(static_cast<std::size_t>((p + 1) / 2), -e);
  v[0] = e * (p - 1) / 2;
  return v;
}

inline EtaVector operator+(EtaVector a, const EtaVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("j-vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// j(p, pi_r(n))
inline EtaProduct j_product(std::int64_t p, const EtaVector& n, std::int64_t r = 1) {
  EtaVector v = r == 1 ? n : permute_vector(p, n, r);
  check_vector(p, v);
  EtaProduct out = eta(p).pow(v[0]);
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] != 0) out *= biagioli_f(p, static_cast<std::int64_t>(k)).pow(v[k]);
  return out;
}

inline IntSeries j_quotient(std::int64_t p, const EtaVector& n, std::int64_t r, const Rat& bound) {
  return j_product(p, n, r).expand(lattice_denom(p), bound);
}

// Order at i-infinity of j(p, n).
inline Rat j_order_infinity(std::int64_t p, const EtaVector& n) { return j_product(p, n).prefactor(); }

// Phi_{p,a}(q^t), exact below bound (in units of q).
inline IntSeries phi_series(std::int64_t p, std::int64_t a, const Rat& bound, std::int64_t t = 1) {
  if (a <= 0 || a >= p) throw std::invalid_argument("Phi_{p,a} needs 0 < a < p");
  const std::int64_t D = lattice_denom(p);
  const std::int64_t M = std::max<std::int64_t>(0, to_i64(ceil_rat(bound)));
  const auto N = static_cast<std::size_t>(M);
  std::vector<BigInt> acc(N), cur(N);
  auto divide = [&](std::int64_t s) {
    for (std::size_t i = static_cast<std::size_t>(s); i < N; ++i) cur[i] += cur[i - static_cast<std::size_t>(s)];
  };
  if (M > 0) {
    cur[0] = 1;
    divide(t * a);
    for (std::int64_t n = 0; t * p * n * n < M; ++n) {
      if (n > 0) {
        divide(t * (a + p * n));
        divide(t * (p - a + p * (n - 1)));
      }
      const auto sh = static_cast<std::size_t>(t * p * n * n);
      for (std::size_t i = sh; i < N; ++i) acc[i] += cur[i - sh];
    }
    if (p < 6 * a && 6 * a < 3 * p) acc[0] -= 1;
  }
  return IntSeries(D, 0, D, std::move(acc), M * D, BigInt(0));
}

}  // namespace rankforge
