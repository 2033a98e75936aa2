#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cyclotomic.hpp"
#include "etaforms.hpp"
#include "qseries.hpp"

namespace rankforge {

// rank -> number of partitions of n with that rank, by enumeration.
inline std::map<std::int64_t, std::int64_t> rank_counts_bruteforce(std::int64_t n) {
  if (n < 0 || n > 60) throw std::invalid_argument("brute-force rank enumeration supports 0 <= n <= 60");
  std::map<std::int64_t, std::int64_t> out;
  if (n == 0) {
    out[0] = 1;  // empty partition, rank 0 by convention
    return out;
  }
  std::vector<std::int64_t> parts;
  // parts in non-increasing order
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t maxpart) -> void {
    if (rest == 0) {
      ++out[parts.front() - static_cast<std::int64_t>(parts.size())];
      return;
    }
    for (std::int64_t k = std::min(rest, maxpart); k >= 1; --k) {
      parts.push_back(k);
      self(self, rest - k, k);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Table N(m, n) for 0 <= n <= nmax from R(z,q) = 1 + sum q^{n^2}/((zq;q)_n (q/z;q)_n),
// tracked as Laurent polynomials in z.
struct RankTable {
  std::int64_t nmax = 0;
  // counts[n][m + nmax]
  std::vector<std::vector<BigInt>> counts;

  const BigInt& at(std::int64_t m, std::int64_t n) const {
    static const BigInt zero = 0;
    if (n < 0 || n > nmax || m < -nmax || m > nmax) return zero;
    return counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + nmax)];
  }
};

inline RankTable rank_table(std::int64_t nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
  const auto N = static_cast<std::size_t>(nmax + 1);
  const auto W = static_cast<std::size_t>(2 * nmax + 1);
  const auto off = static_cast<std::size_t>(nmax);
  RankTable t{nmax, std::vector<std::vector<BigInt>>(N, std::vector<BigInt>(W))};
  t.counts[0][off] = 1;
  std::vector<std::vector<BigInt>> cur(N, std::vector<BigInt>(W));
  cur[0][off] = 1;
  for (std::int64_t k = 1; k * k <= nmax; ++k) {
    const auto len = static_cast<std::size_t>(nmax - k * k + 1);
    const auto s = static_cast<std::size_t>(k);
    // divide by (1 - z q^k) then (1 - q^k / z)
    for (std::size_t i = s; i < len; ++i)
      for (std::size_t w = W - 1; w >= 1; --w) cur[i][w] += cur[i - s][w - 1];
    for (std::size_t i = s; i < len; ++i)
      for (std::size_t w = 0; w + 1 < W; ++w) cur[i][w] += cur[i - s][w + 1];
    const auto sh = static_cast<std::size_t>(k * k);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t w = 0; w < W; ++w) t.counts[i + sh][w] += cur[i][w];
  }
  return t;
}

// N(k, p, n) for 0 <= n < limit and 0 <= k < p, from the same sum computed
// in the group ring Z[x]/(x^p - 1).
inline std::vector<std::vector<BigInt>> compute_rank_residues(std::int64_t p, std::int64_t limit) {
  const auto P = static_cast<std::size_t>(p);
  const auto L = static_cast<std::size_t>(std::max<std::int64_t>(limit, 0));
  std::vector<std::vector<BigInt>> total(L, std::vector<BigInt>(P));
  if (L == 0) return total;
  total[0][0] = 1;
  std::vector<std::vector<BigInt>> cur(L, std::vector<BigInt>(P));
  cur[0][0] = 1;
  for (std::int64_t k = 1; k * k < limit; ++k) {
    const auto len = static_cast<std::size_t>(limit - k * k);
    const auto s = static_cast<std::size_t>(k);
    for (std::size_t i = s; i < len; ++i)
      for (std::size_t r = 0; r < P; ++r) cur[i][(r + 1) % P] += cur[i - s][r];
    for (std::size_t i = s; i < len; ++i)
      for (std::size_t r = 0; r < P; ++r) cur[i][(r + P - 1) % P] += cur[i - s][r];
    const auto sh = static_cast<std::size_t>(k * k);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t r = 0; r < P; ++r) total[i + sh][r] += cur[i][r];
  }
  return total;
}

using ResidueTable = std::vector<std::vector<BigInt>>;

namespace detail {
struct ResidueCache {
  std::mutex mu;
  std::map<std::int64_t, std::shared_ptr<const ResidueTable>> data;
};
inline ResidueCache& residue_cache() {
  static ResidueCache c;
  return c;
}
}  // namespace detail

// Cached N(k, p, n) for n < limit; the returned table may be longer.
inline std::shared_ptr<const ResidueTable> rank_residues(std::int64_t p, std::int64_t limit) {
  auto& c = detail::residue_cache();
  {
    std::lock_guard lock(c.mu);
    auto it = c.data.find(p);
    if (it != c.data.end() && static_cast<std::int64_t>(it->second->size()) >= limit) return it->second;
  }
  auto table = std::make_shared<const ResidueTable>(compute_rank_residues(p, limit));
  std::lock_guard lock(c.mu);
  auto& slot = c.data[p];
  if (!slot || slot->size() < table->size()) slot = table;
  return table;
}

// sum_k N(k,p,n) zeta^{kd}
inline CycNum residue_to_cyc(std::int64_t p, const std::vector<BigInt>& counts, std::int64_t d) {
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (sgn(counts[k]) != 0) terms.emplace_back(static_cast<std::int64_t>(k) * d, counts[k]);
  return CycNum::from_powers(static_cast<int>(p), terms);
}

// R(zeta_p^d, q), exact below q^T.
inline CycSeries rank_gf(std::int64_t p, std::int64_t d, std::int64_t T) {
  const auto table = rank_residues(p, T);
  const std::int64_t D = lattice_denom(p);
  std::vector<CycNum> c;
  for (std::int64_t n = 0; n < T; ++n) c.push_back(residue_to_cyc(p, (*table)[static_cast<std::size_t>(n)], d));
  return CycSeries(D, 0, D, std::move(c), T * D, CycNum::zero(static_cast<int>(p)));
}

// R(zeta_p^d, q) from the alternating form
// (1/(q;q)) (1 + sum (-1)^n (1+q^n)(1-z)(1-1/z) q^{n(3n+1)/2} / ((1-zq^n)(1-q^n/z))).
inline CycSeries rank_gf_alt(std::int64_t p, std::int64_t d, std::int64_t T) {
  const int ip = static_cast<int>(p);
  const std::int64_t D = lattice_denom(p);
  const auto N = static_cast<std::size_t>(std::max<std::int64_t>(T, 0));
  std::vector<CycNum> a(N, CycNum::zero(ip));
  if (N > 0) a[0] = CycNum::one(ip);
  const CycNum z = CycNum::zeta_power(ip, d);
  const CycNum front = (CycNum::one(ip) - z) * (CycNum::one(ip) - CycNum::zeta_power(ip, -d));
  for (std::int64_t n = 1; n * (3 * n + 1) / 2 < T; ++n) {
    // g_k = sum_{i+j=k} z^{i-j} = z^k + z^{-1} g_{k-1}
    std::int64_t base = n * (3 * n + 1) / 2;
    CycNum g = CycNum::one(ip);
    CycNum sign = (n % 2 == 0) ? front : -front;
    for (std::int64_t k = 0; base + n * k < T; ++k) {
      if (k > 0) g = CycNum::zeta_power(ip, k * d) + g.mul_zeta_power(-d);
      CycNum t = sign * g;
      a[static_cast<std::size_t>(base + n * k)] += t;
      if (base + n * (k + 1) < T) a[static_cast<std::size_t>(base + n * (k + 1))] += t;
    }
  }
  CycSeries A(D, 0, D, std::move(a), T * D, CycNum::zero(ip));
  IntSeries invq = euler_product({{1, 1, -1}}).expand(D, T * D);
  return A * invq;
}

struct DysonReport {
  bool pass = true;
  std::int64_t p = 0, nmax = 0;
  std::int64_t r = -1;
  // first failing (n, k) when pass is false
  std::int64_t n = -1, k = -1;
};

// N(k, p, pn+r) = p(pn+r)/p for every k and n <= nmax, with 24r = 1 mod p.
inline DysonReport dyson_check(std::int64_t p, std::int64_t nmax) {
  if (p != 5 && p != 7) throw std::invalid_argument("Dyson's equidistribution holds only for p = 5 and 7");
  const std::int64_t r = inverse_mod(24, p);
  DysonReport rep{true, p, nmax, r};
  const auto table = rank_residues(p, p * (nmax + 1));
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const auto& row = (*table)[static_cast<std::size_t>(p * n + r)];
    BigInt total = 0;
    for (const auto& c : row) total += c;
    for (std::int64_t k = 0; k < p; ++k)
      if (row[static_cast<std::size_t>(k)] * p != total) {
        rep.pass = false;
        rep.n = n;
        rep.k = k;
        return rep;
      }
  }
  return rep;
}

}  // namespace rankforge
