#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arith.hpp"

namespace rankforge {

// Element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^(p-2).
// Stored as integer numerators over one positive common denominator kept in
// lowest terms, so equality is coordinate equality.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(int p) : p_(p), num_(static_cast<std::size_t>(p - 1)), den_(1) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("cyclotomic field needs an odd prime, got " + std::to_string(p));
  }

  static CycNum zero(int p) { return CycNum(p); }
  static CycNum one(int p) { return from_integer(p, 1); }

  static CycNum from_integer(int p, const BigInt& v) {
    CycNum x(p);
    x.num_[0] = v;
    return x;
  }

  static CycNum from_rat(int p, const Rat& v) {
    CycNum x(p);
    x.num_[0] = v.get_num();
    x.den_ = v.get_den();
    return x;
  }

  // Sum of c_k zeta^k over arbitrary integer exponents k.
  static CycNum from_powers(int p, const std::vector<std::pair<std::int64_t, BigInt>>& terms) {
    std::vector<BigInt> full(static_cast<std::size_t>(p));
    for (const auto& [k, c] : terms) full[static_cast<std::size_t>(mod_floor(k, p))] += c;
    return reduce_full(p, std::move(full), BigInt(1));
  }

  static CycNum zeta_power(int p, std::int64_t k) { return from_powers(p, {{k, BigInt(1)}}); }

  static CycNum from_coords(int p, const std::vector<Rat>& coords) {
    if (coords.size() != static_cast<std::size_t>(p - 1))
      throw std::invalid_argument("expected " + std::to_string(p - 1) + " coordinates");
    CycNum x(p);
    BigInt den = 1;
    for (const auto& c : coords) den = lcm(den, BigInt(c.get_den()));
    for (std::size_t i = 0; i < coords.size(); ++i) x.num_[i] = coords[i].get_num() * (den / coords[i].get_den());
    x.den_ = den;
    x.normalize();
    return x;
  }

  int prime() const { return p_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  Rat coord(int i) const { return make_rat(num_.at(static_cast<std::size_t>(i)), den_); }

  std::vector<Rat> coords() const {
    std::vector<Rat> out;
    out.reserve(num_.size());
    for (const auto& n : num_) out.push_back(make_rat(n, den_));
    return out;
  }

  bool is_zero() const {
    for (const auto& n : num_)
      if (sgn(n) != 0) return false;
    return true;
  }

  bool is_integral() const { return den_ == 1; }

  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (sgn(num_[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.p_ == b.p_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
  }

  CycNum& operator+=(const CycNum& o) { return add_scaled(o, BigInt(1)); }
  CycNum& operator-=(const CycNum& o) { return add_scaled(o, BigInt(-1)); }

  // *this += s * o
  CycNum& add_scaled(const CycNum& o, const BigInt& s) {
    check_same(o);
    if (den_ == o.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), s.get_mpz_t());
      if (den_ != 1) normalize();
      return *this;
    }
    BigInt l = lcm(den_, o.den_);
    BigInt fa = l / den_, fb = l / o.den_ * s;
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * fa + o.num_[i] * fb;
    den_ = l;
    normalize();
    return *this;
  }

  CycNum& operator*=(const BigInt& s) {
    for (auto& n : num_) n *= s;
    if (den_ != 1) normalize();
    return *this;
  }

  CycNum& operator*=(const Rat& s) {
    for (auto& n : num_) n *= s.get_num();
    den_ *= s.get_den();
    normalize();
    return *this;
  }

  CycNum& operator*=(const CycNum& o) {
    check_same(o);
    const auto p = static_cast<std::size_t>(p_);
    std::vector<BigInt> full(p);
    for (std::size_t i = 0; i + 1 < p; ++i) {
      if (sgn(num_[i]) == 0) continue;
      for (std::size_t j = 0; j + 1 < p; ++j) {
        if (sgn(o.num_[j]) == 0) continue;
        mpz_addmul(full[(i + j) % p].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
      }
    }
    *this = reduce_full(p_, std::move(full), den_ * o.den_);
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const BigInt& s) { return a *= s; }
  friend CycNum operator*(const BigInt& s, CycNum a) { return a *= s; }
  friend CycNum operator*(CycNum a, const Rat& s) { return a *= s; }

  // zeta^k * x, a permutation of the full basis.
  CycNum mul_zeta_power(std::int64_t k) const {
    const auto p = static_cast<std::size_t>(p_);
    std::vector<BigInt> full(p);
    for (std::size_t i = 0; i + 1 < p; ++i) full[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) + k, p_))] = num_[i];
    return reduce_full(p_, std::move(full), den_);
  }

  // sigma_d : zeta -> zeta^d.
  CycNum galois(std::int64_t d) const {
    if (mod_floor(d, p_) == 0) throw std::domain_error("galois exponent must be prime to p");
    const auto p = static_cast<std::size_t>(p_);
    std::vector<BigInt> full(p);
    for (std::size_t i = 0; i + 1 < p; ++i)
      full[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) * d, p_))] = num_[i];
    return reduce_full(p_, std::move(full), den_);
  }

  // Extended Euclid in Q[x] against 1 + x + ... + x^(p-1).
  CycNum inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    using Poly = std::vector<Rat>;
    auto trim = [](Poly& a) {
      while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    };
    auto sub_mul = [&](Poly a, const Poly& b, const Poly& q) {
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (a.size() <= i + j) a.resize(i + j + 1);
          a[i + j] -= q[i] * b[j];
        }
      trim(a);
      return a;
    };
    Poly r0(static_cast<std::size_t>(p_), Rat(1));
    Poly r1 = coords();
    trim(r1);
    Poly s0, s1{Rat(1)};
    while (!r1.empty()) {
      Poly q, rem = r0;
      if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rat(0));
      while (rem.size() >= r1.size()) {
        std::size_t shift = rem.size() - r1.size();
        Rat c = rem.back() / r1.back();
        q[shift] = c;
        for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
        trim(rem);
      }
      r0 = std::exchange(r1, rem);
      Poly ns = sub_mul(s0, s1, q);
      s0 = std::exchange(s1, ns);
    }
    // r0 is a nonzero constant since Phi_p is irreducible.
    std::vector<BigInt> full(static_cast<std::size_t>(p_));
    BigInt den = 1;
    for (auto& c : s0) {
      c /= r0[0];
      den = lcm(den, BigInt(c.get_den()));
    }
    for (std::size_t i = 0; i < s0.size(); ++i)
      full[i % static_cast<std::size_t>(p_)] += s0[i].get_num() * (den / s0[i].get_den());
    return reduce_full(p_, std::move(full), den);
  }

  // Complex embedding zeta -> exp(2 pi i d / p).
  std::complex<double> embed(std::int64_t d = 1) const {
    std::complex<double> z = 0;
    double den = den_.get_d();
    for (std::size_t i = 0; i < num_.size(); ++i) {
      double ang = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(static_cast<std::int64_t>(i) * d, p_)) / p_;
      z += num_[i].get_d() / den * std::polar(1.0, ang);
    }
    return z;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      Rat c = make_rat(num_[i], den_);
      std::string mag = (i == 0 || abs(c) != 1) ? Rat(abs(c)).get_str() : std::string();
      if (out.empty())
        out += sgn(c) < 0 ? "-" : "";
      else
        out += sgn(c) < 0 ? " - " : " + ";
      out += mag;
      if (i > 0) out += (mag.empty() ? "z" : "*z") + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

 private:
  static BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

  // full has p entries over the basis 1..zeta^(p-1); fold zeta^(p-1) away.
  static CycNum reduce_full(int p, std::vector<BigInt> full, BigInt den) {
    CycNum x(p);
    const BigInt& top = full[static_cast<std::size_t>(p - 1)];
    for (std::size_t i = 0; i + 1 < full.size(); ++i) x.num_[i] = full[i] - top;
    x.den_ = std::move(den);
    x.normalize();
    return x;
  }

  void normalize() {
    if (sgn(den_) < 0) {
      den_ = -den_;
      for (auto& n : num_) n = -n;
    }
    if (den_ == 1) return;
    BigInt g = den_;
    for (const auto& n : num_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      if (g == 1) return;
    }
    den_ /= g;
    for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  }

  void check_same(const CycNum& o) const {
    if (p_ != o.p_)
      throw MismatchError("cyclotomic operands over different primes: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
  }

  int p_ = 0;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

// (-1)^k zeta_p^{k(p+1)/2}, the k-th power of exp(i pi / p).
inline CycNum half_root_power(int p, std::int64_t k) {
  CycNum z = CycNum::zeta_power(p, mod_floor(k, p) * ((p + 1) / 2));
  return (k % 2 == 0) ? z : -z;
}

// sin(d pi / p) / sin(pi / p) = e^{-i pi (d-1)/p} (1 + zeta + ... + zeta^(d-1)).
inline CycNum sine_ratio_base(int p, std::int64_t d) {
  std::int64_t r = mod_floor(d, 2 * p);
  if (r == 0 || r == p) throw std::domain_error("sine ratio with vanishing sine");
  if (d < 0) return -sine_ratio_base(p, -d);
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  for (std::int64_t j = 0; j < d; ++j) terms.emplace_back(j, BigInt(1));
  return half_root_power(p, -(d - 1)) * CycNum::from_powers(p, terms);
}

// sin(num pi / p) / sin(den pi / p) as an element of Q(zeta_p).
inline CycNum sine_ratio(int p, std::int64_t num, std::int64_t den) {
  CycNum top = sine_ratio_base(p, num);
  if (mod_floor(den, 2 * p) == 1) return top;
  return top * sine_ratio_base(p, den).inverse();
}

// 2 cos(j pi / p)
inline CycNum two_cos(int p, std::int64_t j) { return half_root_power(p, j) + half_root_power(p, -j); }

// 4 sin(d pi / p) sin(6 a d pi / p)
inline CycNum four_sine_product(int p, std::int64_t d, std::int64_t a) {
  return two_cos(p, (6 * a - 1) * d) - two_cos(p, (6 * a + 1) * d);
}

inline nlohmann::json to_json(const CycNum& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : x.coords()) arr.push_back(rat_to_string(c));
  return arr;
}

inline CycNum cyc_from_json(int p, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("cyclotomic coefficient must be an array");
  std::vector<Rat> coords;
  for (const auto& e : j) {
    if (e.is_number_integer())
      coords.emplace_back(BigInt(e.get<long>()));
    else
      coords.push_back(rat_from_string(e.get<std::string>()));
  }
  return CycNum::from_coords(p, coords);
}

}  // namespace rankforge
