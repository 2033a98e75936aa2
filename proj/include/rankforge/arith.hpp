#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace rankforge {

using BigInt = mpz_class;
using Rat = mpq_class;

// Raised when a series is read at or beyond its truncation bound.
struct TruncationError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Raised when two objects live over different primes or lattices.
struct MismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

inline BigInt floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline BigInt ceil_rat(const Rat& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return v.get_si();
}

inline std::int64_t to_i64(const Rat& r) {
  if (r.get_den() != 1) throw std::domain_error("rational is not an integer: " + r.get_str());
  return to_i64(BigInt(r.get_num()));
}

// Always "num/den", including integers.
inline std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
    return make_rat(BigInt(std::string(s.substr(0, slash))), BigInt(std::string(s.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + std::string(s));
  }
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::int64_t p, std::int64_t min_value = 5) {
  if (p < min_value || !is_prime(p))
    throw std::invalid_argument("expected a prime >= " + std::to_string(min_value) + ", got " + std::to_string(p));
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  a = mod_floor(a, p);
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("not invertible modulo " + std::to_string(p));
  return mod_floor(t, p);
}

// Representative of +-x mod p in 0..p/2.
inline std::int64_t fold(std::int64_t x, std::int64_t p) {
  std::int64_t r = mod_floor(x, p);
  return std::min(r, p - r);
}

inline int legendre(std::int64_t a, std::int64_t p) {
  a = mod_floor(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

inline int chi12(std::int64_t n) {
  switch (mod_floor(n, 12)) {
    case 1:
    case 11:
      return 1;
    case 5:
    case 7:
      return -1;
    default:
      return 0;
  }
}

}  // namespace rankforge
