#pragma once

// Slow, independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include <rankforge/cyclotomic.hpp>
#include <rankforge/qseries.hpp>

namespace oracle {

using cplx = std::complex<double>;

inline cplx zeta(std::int64_t p, std::int64_t k) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
  return {std::cos(t), std::sin(t)};
}

// Element of Z[x]/(x^p - 1); equal in Z[zeta_p] iff the difference is constant.
using GroupRing = std::vector<std::int64_t>;

inline GroupRing gr_mul(const GroupRing& a, const GroupRing& b) {
  const std::size_t p = a.size();
  GroupRing r(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) r[(i + j) % p] += a[i] * b[j];
  return r;
}

inline GroupRing gr_from_powers(std::int64_t p, const std::vector<std::pair<std::int64_t, std::int64_t>>& t) {
  GroupRing r(static_cast<std::size_t>(p), 0);
  for (auto [k, c] : t) r[static_cast<std::size_t>(((k % p) + p) % p)] += c;
  return r;
}

inline GroupRing gr_galois(const GroupRing& a, std::int64_t d) {
  const auto p = static_cast<std::int64_t>(a.size());
  GroupRing r(a.size(), 0);
  for (std::int64_t i = 0; i < p; ++i) r[static_cast<std::size_t>(((i * d) % p + p) % p)] += a[static_cast<std::size_t>(i)];
  return r;
}

inline cplx gr_embed(const GroupRing& a) {
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * zeta(static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(i));
  return s;
}

// Compares an integral CycNum with a group-ring element without using CycNum's reduction.
inline bool same(const rankforge::CycNum& x, const GroupRing& g) {
  if (x.denominator() != 1) return false;
  const std::size_t p = g.size();
  std::vector<rankforge::BigInt> diff(p);
  for (std::size_t i = 0; i < p; ++i) diff[i] = rankforge::BigInt(g[i]) - (i + 1 < p ? x.numerators()[i] : rankforge::BigInt(0));
  for (std::size_t i = 1; i < p; ++i)
    if (diff[i] != diff[0]) return false;
  return true;
}

// Euler's pentagonal theorem: coefficients of prod (1 - q^n) below T.
inline std::vector<std::int64_t> pentagonal(std::int64_t T) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(T), 0);
  for (std::int64_t k = -T; k <= T; ++k) {
    const std::int64_t e = k * (3 * k - 1) / 2;
    if (e >= 0 && e < T) c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

// p(n) for n < T by the coin-change recurrence.
inline std::vector<rankforge::BigInt> partitions(std::int64_t T) {
  std::vector<rankforge::BigInt> p(static_cast<std::size_t>(T), 0);
  if (T > 0) p[0] = 1;
  for (std::int64_t part = 1; part < T; ++part)
    for (std::int64_t n = part; n < T; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

// Enumerates the partitions of n and tallies largest part minus number of parts.
inline std::map<std::int64_t, std::int64_t> ranks(std::int64_t n) {
  std::map<std::int64_t, std::int64_t> out;
  if (n == 0) {
    out[0] = 1;
    return out;
  }
  std::function<void(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> rec =
      [&](std::int64_t left, std::int64_t maxpart, std::int64_t largest, std::int64_t count) {
        if (left == 0) {
          ++out[largest - count];
          return;
        }
        for (std::int64_t part = std::min(left, maxpart); part >= 1; --part)
          rec(left - part, part, largest == 0 ? part : largest, count + 1);
      };
  rec(n, n, 0, 0);
  return out;
}

// sum_k N(k, p, n) zeta^{k d} as a group-ring element.
inline GroupRing rank_class(std::int64_t p, std::int64_t d, std::int64_t n) {
  GroupRing g(static_cast<std::size_t>(p), 0);
  for (auto [m, c] : ranks(n)) g[static_cast<std::size_t>((((m * d) % p) + p) % p)] += c;
  return g;
}

// Schoolbook product of dense integer coefficient lists, truncated to T.
inline std::vector<rankforge::BigInt> convolve(const std::vector<rankforge::BigInt>& a,
                                               const std::vector<rankforge::BigInt>& b, std::size_t T) {
  std::vector<rankforge::BigInt> r(T, 0);
  for (std::size_t i = 0; i < a.size() && i < T; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < T; ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace oracle
