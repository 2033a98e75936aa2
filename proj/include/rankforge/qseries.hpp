#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"

namespace rankforge {

// Coefficient-ring hooks. Specialised for BigInt and CycNum.
inline bool coeff_is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool coeff_is_zero(const CycNum& x) { return x.is_zero(); }

inline void add_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(CycNum& acc, const CycNum& a, const BigInt& b) { acc.add_scaled(a, b); }
inline void add_product(CycNum& acc, const BigInt& a, const CycNum& b) { acc.add_scaled(b, a); }
inline void add_product(CycNum& acc, const CycNum& a, const CycNum& b) { acc += a * b; }

inline BigInt invert_unit(const BigInt& x) {
  if (x != 1 && x != -1) throw std::domain_error("leading coefficient " + x.get_str() + " is not a unit");
  return x;
}
inline CycNum invert_unit(const CycNum& x) { return x.inverse(); }

inline std::string coeff_to_string(const BigInt& x) { return x.get_str(); }
inline std::string coeff_to_string(const CycNum& x) { return to_json(x).dump(); }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Truncated q-series sum c_e q^(e/D). Exponent numerators e lie on the grid
// lead + i*step; the series is exact for every exponent strictly below
// bound/D and unknown from there on.
template <class Coeff>
class QSeries {
 public:
  QSeries() = default;

  QSeries(std::int64_t denom, std::int64_t lead, std::int64_t step, std::vector<Coeff> coeffs, std::int64_t bound,
          Coeff zero)
      : denom_(denom), lead_(lead), step_(step), bound_(bound), coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    if (denom_ <= 0 || step_ <= 0) throw std::invalid_argument("series lattice must be positive");
    std::size_t n = bound_ > lead_ ? static_cast<std::size_t>(ceil_div(bound_ - lead_, step_)) : 0;
    coeffs_.resize(n, zero_);
  }

  // Exactly zero below bound.
  static QSeries zero_series(std::int64_t denom, std::int64_t bound, Coeff zero) {
    return QSeries(denom, bound, 1, {}, bound, std::move(zero));
  }

  static QSeries monomial(std::int64_t denom, std::int64_t e, Coeff c, std::int64_t bound) {
    Coeff z = zero_like(c);
    return QSeries(denom, e, 1, {std::move(c)}, bound, std::move(z));
  }

  std::int64_t denom() const { return denom_; }
  std::int64_t lead() const { return lead_; }
  std::int64_t step() const { return step_; }
  std::int64_t bound() const { return bound_; }
  Rat bound_rat() const { return make_rat(bound_, denom_); }
  std::size_t size() const { return coeffs_.size(); }
  std::int64_t exponent_at(std::size_t i) const { return lead_ + static_cast<std::int64_t>(i) * step_; }
  const Coeff& at_index(std::size_t i) const { return coeffs_[i]; }
  Coeff& at_index(std::size_t i) { return coeffs_[i]; }
  const Coeff& zero() const { return zero_; }

  // Coefficient of q^(e/D).
  const Coeff& coeff(std::int64_t e) const {
    if (e >= bound_)
      throw TruncationError("coefficient of q^(" + std::to_string(e) + "/" + std::to_string(denom_) +
                            ") requested at or beyond truncation bound " + std::to_string(bound_) + "/" +
                            std::to_string(denom_));
    if (e < lead_ || (e - lead_) % step_ != 0) return zero_;
    return coeffs_[static_cast<std::size_t>((e - lead_) / step_)];
  }

  const Coeff& coeff(const Rat& e) const { return coeff(to_i64(Rat(e * denom_))); }

  // Leading exponent numerator; empty when nothing below the bound is nonzero.
  std::optional<std::int64_t> order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeff_is_zero(coeffs_[i])) return exponent_at(i);
    return std::nullopt;
  }

  std::optional<Rat> order_rat() const {
    auto o = order();
    if (!o) return std::nullopt;
    return make_rat(*o, denom_);
  }

  // Lower bound for the true order.
  std::int64_t order_or_bound() const { return order().value_or(bound_); }

  QSeries truncated(std::int64_t new_bound) const {
    if (new_bound > bound_) throw TruncationError("cannot widen truncation bound");
    QSeries r = *this;
    r.bound_ = new_bound;
    std::size_t n = new_bound > lead_ ? static_cast<std::size_t>(ceil_div(new_bound - lead_, step_)) : 0;
    r.coeffs_.resize(n, zero_);
    return r;
  }

  // Multiply by q^(e/D).
  QSeries shifted(std::int64_t e) const {
    QSeries r = *this;
    r.lead_ += e;
    r.bound_ += e;
    return r;
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QSeries& operator+=(const QSeries& o) { return *this = combine(*this, o, false); }
  QSeries& operator-=(const QSeries& o) { return *this = combine(*this, o, true); }
  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, false); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, true); }

  template <class S>
  QSeries& scale_in_place(const S& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  // Nonzero terms as (exponent numerator, coefficient).
  std::vector<std::pair<std::int64_t, Coeff>> terms() const {
    std::vector<std::pair<std::int64_t, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeff_is_zero(coeffs_[i])) out.emplace_back(exponent_at(i), coeffs_[i]);
    return out;
  }

  // One "e/D<TAB>coeff" line per nonzero term, then the O-term.
  void dump(std::ostream& os) const {
    for (const auto& [e, c] : terms()) os << e << "/" << denom_ << "\t" << coeff_to_string(c) << "\n";
    os << "O\t" << bound_ << "/" << denom_ << "\n";
  }

 private:
  static Coeff zero_like(const BigInt&) { return BigInt(0); }
  static Coeff zero_like(const CycNum& c) { return CycNum::zero(c.prime()); }

  static QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
    if (a.denom_ != b.denom_) throw MismatchError("series over different exponent lattices");
    std::int64_t bound = std::min(a.bound_, b.bound_);
    std::int64_t lead = std::min(a.lead_, b.lead_);
    std::int64_t step = gcd64(gcd64(a.step_, b.step_), a.lead_ - b.lead_);
    if (step == 0) step = a.step_;
    QSeries r(a.denom_, lead, step, {}, bound, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      std::int64_t e = a.exponent_at(i);
      if (e >= bound) break;
      r.coeffs_[static_cast<std::size_t>((e - lead) / step)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      std::int64_t e = b.exponent_at(i);
      if (e >= bound) break;
      auto& slot = r.coeffs_[static_cast<std::size_t>((e - lead) / step)];
      if (subtract)
        slot -= b.coeffs_[i];
      else
        slot += b.coeffs_[i];
    }
    return r;
  }

  std::int64_t denom_ = 1;
  std::int64_t lead_ = 0;
  std::int64_t step_ = 1;
  std::int64_t bound_ = 0;
  std::vector<Coeff> coeffs_;
  Coeff zero_{};
};

using IntSeries = QSeries<BigInt>;
using CycSeries = QSeries<CycNum>;

// Product with bound min(A.bound + ord B, B.bound + ord A).
template <class R, class A, class B>
QSeries<R> multiply(const QSeries<A>& x, const QSeries<B>& y, const R& zero) {
  if (x.denom() != y.denom()) throw MismatchError("series over different exponent lattices");
  auto ox = x.order(), oy = y.order();
  std::int64_t bound = std::min(x.bound() + y.order_or_bound(), y.bound() + x.order_or_bound());
  if (!ox || !oy) return QSeries<R>::zero_series(x.denom(), bound, zero);
  std::int64_t lead = *ox + *oy;
  std::int64_t step = gcd64(x.step(), y.step());
  QSeries<R> r(x.denom(), lead, step, {}, bound, zero);
  std::size_t i0 = static_cast<std::size_t>((*ox - x.lead()) / x.step());
  std::size_t j0 = static_cast<std::size_t>((*oy - y.lead()) / y.step());
  for (std::size_t i = i0; i < x.size(); ++i) {
    const A& a = x.at_index(i);
    if (coeff_is_zero(a)) continue;
    std::int64_t ea = x.exponent_at(i);
    if (ea + *oy >= bound) break;
    for (std::size_t j = j0; j < y.size(); ++j) {
      std::int64_t e = ea + y.exponent_at(j);
      if (e >= bound) break;
      const B& b = y.at_index(j);
      if (coeff_is_zero(b)) continue;
      add_product(r.at_index(static_cast<std::size_t>((e - lead) / step)), a, b);
    }
  }
  return r;
}

inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return multiply(a, b, BigInt(0)); }
inline CycSeries operator*(const CycSeries& a, const IntSeries& b) {
  return multiply(a, b, a.zero());
}
inline CycSeries operator*(const IntSeries& a, const CycSeries& b) { return multiply(b, a, b.zero()); }
inline CycSeries operator*(const CycSeries& a, const CycSeries& b) { return multiply(a, b, a.zero()); }

inline CycSeries to_cyc(const IntSeries& s, int p) {
  std::vector<CycNum> c;
  c.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) c.push_back(CycNum::from_integer(p, s.at_index(i)));
  return CycSeries(s.denom(), s.lead(), s.step(), std::move(c), s.bound(), CycNum::zero(p));
}

inline CycSeries scale(const IntSeries& s, const CycNum& k) {
  std::vector<CycNum> c;
  c.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CycNum v = CycNum::zero(k.prime());
    if (!coeff_is_zero(s.at_index(i))) v.add_scaled(k, s.at_index(i));
    c.push_back(std::move(v));
  }
  return CycSeries(s.denom(), s.lead(), s.step(), std::move(c), s.bound(), CycNum::zero(k.prime()));
}

inline CycSeries scale(CycSeries s, const CycNum& k) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s.at_index(i).is_zero()) s.at_index(i) *= k;
  return s;
}

// Multiplicative inverse; relative precision is preserved.
template <class C>
QSeries<C> inverse(const QSeries<C>& x) {
  auto o = x.order();
  if (!o) throw std::domain_error("inverse of a series with no known nonzero coefficient");
  const std::int64_t s = x.step();
  const std::size_t i0 = static_cast<std::size_t>((*o - x.lead()) / s);
  const std::int64_t prec = x.bound() - *o;
  const std::size_t n = static_cast<std::size_t>(ceil_div(prec, s));
  C inv0 = invert_unit(x.at_index(i0));
  std::vector<C> a(n, x.zero()), b(n, x.zero());
  for (std::size_t k = 0; k < n; ++k) a[k] = x.at_index(i0 + k);
  b[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    C acc = x.zero();
    for (std::size_t k = 1; k <= m; ++k)
      if (!coeff_is_zero(a[k]) && !coeff_is_zero(b[m - k])) add_product(acc, a[k], b[m - k]);
    b[m] = -(acc * inv0);
  }
  return QSeries<C>(x.denom(), -*o, s, std::move(b), -*o + prec, x.zero());
}

// q -> q^k for a positive integer k.
template <class C>
QSeries<C> substitute_power(const QSeries<C>& x, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("substitution power must be positive");
  std::vector<C> c;
  c.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c.push_back(x.at_index(i));
  return QSeries<C>(x.denom(), x.lead() * k, x.step() * k, std::move(c), x.bound() * k, x.zero());
}

// q -> q^(1/k); every exponent must stay on the lattice.
template <class C>
QSeries<C> substitute_root(const QSeries<C>& x, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("substitution root must be positive");
  if (x.size() > 0 && (x.lead() % k != 0 || x.step() % k != 0))
    throw std::domain_error("q -> q^(1/" + std::to_string(k) + ") leaves the exponent lattice");
  std::vector<C> c;
  for (std::size_t i = 0; i < x.size(); ++i) c.push_back(x.at_index(i));
  std::int64_t lead = x.size() > 0 ? x.lead() / k : ceil_div(x.bound(), k);
  return QSeries<C>(x.denom(), lead, x.size() > 0 ? x.step() / k : 1, std::move(c), ceil_div(x.bound(), k),
                    x.zero());
}

// U_{p,m}: keep integer exponents pn+m and send them to n + m/p.
template <class C>
QSeries<C> u_operator(const QSeries<C>& x, std::int64_t p, std::int64_t m) {
  const std::int64_t D = x.denom();
  if (D % p != 0) throw MismatchError("lattice denominator is not a multiple of p");
  if (x.size() > 0 && (mod_floor(x.lead(), D) != 0 || x.step() % D != 0))
    throw std::domain_error("U operator needs integral exponents");
  m = mod_floor(m, p);
  std::int64_t new_bound = ceil_div(x.bound(), p);
  // first integer e = pn + m with e*D >= lead
  std::int64_t e_first = x.size() > 0 ? floor_div(x.lead(), D) : ceil_div(x.bound(), D);
  std::int64_t n_first = ceil_div(e_first - m, p);
  std::int64_t lead = (p * n_first + m) * D / p;
  QSeries<C> r(D, lead, D, {}, new_bound, x.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t e = (p * (n_first + static_cast<std::int64_t>(i)) + m) * D;
    r.at_index(i) = x.coeff(e);
  }
  return r;
}

}  // namespace rankforge
