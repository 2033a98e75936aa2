#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cusps.hpp"
#include "dissection.hpp"
#include "identity.hpp"
#include "parallel.hpp"

namespace rankforge {

// Requested truncation is below what the valence bound needs.
struct InsufficientDepth : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Modularity gate

struct ModularityReport {
  std::int64_t weight_sum = 0;  // n0 + sum n_k, must be 2
  std::int64_t square_sum = 0;  // sum k^2 n_k, must be 2m mod p
  std::int64_t order_sum = 0;   // n0 + 3 sum n_k, must be 0 mod 24
  bool weight_ok = false, square_ok = false, order_ok = false;
  bool pass() const { return weight_ok && square_ok && order_ok; }
};

inline ModularityReport modularity_check(std::int64_t p, std::int64_t m, const EtaVector& n) {
  check_vector(p, n);
  ModularityReport r;
  std::int64_t s = 0;
  for (std::size_t k = 1; k < n.size(); ++k) {
    s += n[k];
    r.square_sum += static_cast<std::int64_t>(k * k) * n[k];
  }
  r.weight_sum = n[0] + s;
  r.order_sum = n[0] + 3 * s;
  r.weight_ok = r.weight_sum == 2;
  r.square_ok = mod_floor(r.square_sum - 2 * m, p) == 0;
  r.order_ok = mod_floor(r.order_sum, 24) == 0;
  return r;
}

// j(p, pi_r(n)) lies in the class r^2 m when j(p, n) lies in class m.
inline std::int64_t permuted_class(std::int64_t p, std::int64_t m, std::int64_t r) { return mod_floor(r * r * m, p); }

// ---------------------------------------------------------------------------
// Expansion

inline IntSeries expand_term(const Identity& id, const IdentityTerm& t, std::int64_t bound) {
  return j_product(id.p, full_vector(id, t)).expand(lattice_denom(id.p), bound);
}

// RHS exact below q^T.
inline CycSeries expand_identity_rhs(const Identity& id, const Rat& T) {
  if (!id.complete()) throw std::invalid_argument("identity has terms with unknown coefficients");
  const int ip = static_cast<int>(id.p);
  const std::int64_t D = lattice_denom(id.p);
  const std::int64_t bound = to_i64(ceil_rat(T * D));
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < id.terms.size(); ++i)
    if (!id.terms[i].coeff->is_zero()) live.push_back(i);
  auto parts = parallel_map<CycSeries>(live.size(), [&](std::size_t k) {
    const auto& t = id.terms[live[k]];
    return scale(expand_term(id, t, bound), *t.coeff);
  });
  CycSeries out = CycSeries::zero_series(D, bound, CycNum::zero(ip));
  for (auto& s : parts) out += s;
  return out;
}

// ---------------------------------------------------------------------------
// Cusp tables and the valence budget

struct CuspRow {
  std::size_t term = 0;
  std::string label;
  std::vector<Rat> ord;  // one per cusp, cusps[0] is i-infinity
};

struct CuspReport {
  std::int64_t p = 0, m = 0;
  std::vector<Cusp> cusps;
  std::optional<std::size_t> j0;
  std::vector<Rat> j0_ord;
  std::vector<CuspRow> rows;
  std::vector<std::optional<Rat>> lambda;      // bound for K itself
  std::vector<std::optional<Rat>> lambda_adj;  // bound after division by j0
  std::vector<std::optional<BigInt>> column_min;
  BigInt B = 0;
  std::int64_t weight = 1;
  Rat mu_k_12 = 0;
  BigInt R = 0;
  // LHS - RHS must vanish strictly below q^depth
  Rat depth = 0;
};

inline bool term_active(const Identity& id, std::size_t i) {
  const auto& t = id.terms[i];
  if (t.coeff) return !t.coeff->is_zero();
  return std::find(id.zero_terms.begin(), id.zero_terms.end(), i) == id.zero_terms.end();
}

// j0 is the term of lowest order at i-infinity over all terms of the identity,
// zero coefficients included, ties to the lowest index.
inline CuspReport cusp_report(const Identity& id) {
  validate(id);
  CuspReport rep;
  rep.p = id.p;
  rep.m = id.m;
  rep.cusps = cusp_set(id.p);
  const std::size_t nc = rep.cusps.size();

  std::vector<std::vector<Rat>> ords(id.terms.size());
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    const EtaVector v = full_vector(id, id.terms[i]);
    for (const auto& s : rep.cusps) ords[i].push_back(ord_j(id.p, v, s));
  }

  rep.j0_ord.assign(nc, Rat(0));
  if (id.m != 0) {
    if (id.terms.empty()) throw std::invalid_argument("an identity with m != 0 needs at least one term");
    std::size_t best = 0;
    for (std::size_t i = 1; i < id.terms.size(); ++i)
      if (ords[i][0] < ords[best][0]) best = i;
    rep.j0 = best;
    rep.j0_ord = ords[best];
    rep.weight = 0;
  }
  rep.mu_k_12 = make_rat((id.p * id.p - 1) * rep.weight, 24);

  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    if (!term_active(id, i)) continue;
    CuspRow row{i, term_label(id, id.terms[i]), {}};
    for (std::size_t c = 0; c < nc; ++c) row.ord.push_back(ords[i][c] - rep.j0_ord[c]);
    rep.rows.push_back(std::move(row));
  }

  std::vector<std::vector<Rat>> table;
  for (const auto& row : rep.rows) table.push_back(row.ord);
  for (std::size_t c = 0; c < nc; ++c) {
    auto lam = lambda_bound(id.p, id.m, rep.cusps[c]);
    rep.lambda.push_back(lam);
    rep.lambda_adj.push_back(lam ? std::optional<Rat>(*lam - rep.j0_ord[c]) : std::nullopt);
  }
  const ValenceBudget vb = valence_budget(id.p, rep.weight, table, rep.lambda_adj);
  rep.column_min = vb.column_min;
  rep.B = vb.B;
  rep.R = vb.R;
  rep.depth = Rat(rep.R) + rep.j0_ord[0];
  return rep;
}

// ---------------------------------------------------------------------------
// Verification

enum class Verdict { proved, matched_to_depth, mismatch, gate_failed };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::proved:
      return "proved";
    case Verdict::matched_to_depth:
      return "matched_to_depth";
    case Verdict::mismatch:
      return "mismatch";
    default:
      return "gate_failed";
  }
}

struct VerifyOptions {
  bool valence = true;
  // compare coefficients strictly below q^terms; default is the valence depth + 8
  std::optional<std::int64_t> terms;
  bool unsafe = false;
};

struct Mismatch {
  Rat exponent;
  CycNum lhs, rhs;
};

struct Certificate {
  std::string id;
  std::int64_t p = 0, m = 0;
  bool valence = true;
  std::vector<ModularityReport> gate;
  std::optional<CuspReport> report;
  std::int64_t terms = 0;
  std::size_t compared = 0;
  std::optional<Mismatch> mismatch;
  Verdict verdict = Verdict::gate_failed;
};

inline constexpr std::int64_t kSafetyMargin = 8;

// First exponent below q^T where the two sides differ, and how many were compared.
inline std::pair<std::optional<Mismatch>, std::size_t> compare_sides(const CycSeries& lhs, const CycSeries& rhs,
                                                                     const Rat& T) {
  const std::int64_t D = lhs.denom();
  const std::int64_t bound = to_i64(ceil_rat(T * D));
  if (lhs.bound() < bound || rhs.bound() < bound) throw TruncationError("series too short for the comparison");
  std::set<std::int64_t> exps;
  for (const auto* s : {&lhs, &rhs})
    for (std::size_t i = 0; i < s->size(); ++i)
      if (s->exponent_at(i) < bound) exps.insert(s->exponent_at(i));
  std::size_t compared = 0;
  if (!exps.empty()) compared = static_cast<std::size_t>(ceil_div(bound - *exps.begin(), D));
  for (auto e : exps) {
    const CycNum& a = lhs.coeff(e);
    const CycNum& b = rhs.coeff(e);
    if (!(a == b)) return {Mismatch{make_rat(e, D), a, b}, compared};
  }
  return {std::nullopt, compared};
}

inline Certificate verify_identity(const Identity& id, const VerifyOptions& opt = {}) {
  validate(id);
  if (!id.complete()) throw std::invalid_argument("identity " + id.id + " has unknown coefficients; solve it first");
  Certificate cert;
  cert.id = id.id;
  cert.p = id.p;
  cert.m = id.m;
  cert.valence = opt.valence;

  bool gate_ok = true;
  for (const auto& t : id.terms) {
    cert.gate.push_back(modularity_check(id.p, id.m, full_vector(id, t)));
    gate_ok = gate_ok && cert.gate.back().pass();
  }

  std::int64_t need = 0;
  if (opt.valence) {
    cert.report = cusp_report(id);
    need = to_i64(ceil_rat(cert.report->depth));
  }
  cert.terms = opt.terms ? *opt.terms : std::max<std::int64_t>(need, 1) + kSafetyMargin;
  if (opt.valence && cert.terms < need && !opt.unsafe)
    throw InsufficientDepth("valence bound needs coefficients below q^" + std::to_string(need) + ", got " +
                            std::to_string(cert.terms) + " (pass --unsafe to override)");
  if (!gate_ok) {
    cert.verdict = Verdict::gate_failed;
    return cert;
  }

  const Rat T(cert.terms);
  const CycSeries lhs = k_series(id.p, id.m, 1, T);
  const CycSeries rhs = expand_identity_rhs(id, T);
  auto [mm, compared] = compare_sides(lhs, rhs, T);
  cert.compared = compared;
  cert.mismatch = mm;
  if (mm)
    cert.verdict = Verdict::mismatch;
  else if (opt.valence && cert.terms >= need)
    cert.verdict = Verdict::proved;
  else
    cert.verdict = Verdict::matched_to_depth;
  return cert;
}

// ---------------------------------------------------------------------------
// Symmetry

// L(n, a, b, p) = b (a+1) sum k n_k + sum floor(k a / p) n_k
inline std::int64_t transform_exponent(std::int64_t p, const EtaVector& n, std::int64_t a, std::int64_t b) {
  std::int64_t s1 = 0, s2 = 0;
  for (std::size_t k = 1; k < n.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    s1 += kk * n[k];
    s2 += floor_div(kk * a, p) * n[k];
  }
  return b * (a + 1) * s1 + s2;
}

// From an identity for K_{p,m} build the one for K_{p, m a^2}.
inline Identity symmetry_generate(const Identity& id, std::int64_t a) {
  validate(id);
  if (!id.complete()) throw std::invalid_argument("symmetry needs a complete identity");
  const std::int64_t p = id.p;
  const int ip = static_cast<int>(p);
  if (a < 1 || 2 * a > p - 1) throw std::invalid_argument("a must satisfy 1 <= a <= (p-1)/2");
  const std::int64_t d = inverse_mod(a, p);
  const std::int64_t b = (a * d - 1) / p;
  const CycNum ratio = sine_ratio(ip, 1, a);

  Identity out;
  out.id = id.id + "^a" + std::to_string(a);
  out.p = p;
  out.m = mod_floor(id.m * a * a, p);
  out.vectors = id.vectors;
  out.provenance = "image of " + (id.id.empty() ? std::string("identity") : id.id) + " under zeta -> zeta^" +
                   std::to_string(a);
  for (const auto& t : id.terms) {
    IdentityTerm nt = t;
    const std::int64_t L = transform_exponent(p, full_vector(id, t), a, b);
    // sigma_a sends sin(d pi/p)/sin(pi/p) to (-1)^{a+d} sin(pi/p)/sin(a pi/p), so the
    // sign is (-1)^{L+a+1}; (-1)^{L+d(a+1)} differs when a and d are both even
    const bool neg = mod_floor(L + a + 1, 2) == 1;
    CycNum c = ratio * t.coeff->galois(a);
    nt.coeff = neg ? -c : c;
    nt.r = fold(a * t.r, p);
    if (t.prefactor) nt.prefactor = Prefactor{fold(a * t.prefactor->num, p), fold(a * t.prefactor->den, p)};
    out.terms.push_back(std::move(nt));
  }
  return out;
}

// L(n, d) = b d (1+a) sum k n_k + sum (floor(d k a / p) + floor(d k / p)) n_k, a d - b p = 1
inline std::int64_t kp0_exponent(std::int64_t p, const EtaVector& n, std::int64_t d) {
  const std::int64_t a = inverse_mod(d, p);
  const std::int64_t b = (a * d - 1) / p;
  std::int64_t s1 = 0, s2 = 0;
  for (std::size_t k = 1; k < n.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    s1 += kk * n[k];
    s2 += (floor_div(d * kk * a, p) + floor_div(d * kk, p)) * n[k];
  }
  return b * d * (1 + a) * s1 + s2;
}

struct Kp0SymmetryRow {
  std::size_t group = 0;
  std::string label;
  std::int64_t d = 1;
  // c_d / (sin(pi/p)/sin(d pi/p) * sigma_d(c_1)); nullopt when that is not +-1
  std::optional<int> extracted;
  int predicted = 1;
  bool pass = false;
};

struct Kp0SymmetryReport {
  std::int64_t p = 0;
  std::vector<Kp0SymmetryRow> rows;
  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  // extracted signs of one group, d = 1..(p-1)/2
  std::vector<int> w(std::size_t group) const {
    std::vector<int> out;
    for (const auto& r : rows)
      if (r.group == group) out.push_back(r.extracted.value_or(0));
    return out;
  }
};

inline Kp0SymmetryReport kp0_coefficient_symmetry(const Identity& id) {
  validate(id);
  if (id.m != 0) throw std::invalid_argument("coefficient symmetry applies to m = 0 identities");
  if (!id.complete()) throw std::invalid_argument("coefficient symmetry needs a complete identity");
  const std::int64_t p = id.p;
  const int ip = static_cast<int>(p);
  const std::int64_t h = (p - 1) / 2;

  // group terms sharing vector, eta power and prefactor; each group must hold r = 1..h once
  struct Key {
    std::size_t vec;
    std::int64_t pow;
    std::int64_t num, den;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::vector<std::optional<std::size_t>>> groups;
  std::vector<Key> order;
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    const auto& t = id.terms[i];
    if (t.prefactor) throw std::invalid_argument("coefficient symmetry expects terms without prefactors");
    Key k{t.vec, t.eta_ratio_pow, 0, 0};
    auto [it, fresh] = groups.try_emplace(k, std::vector<std::optional<std::size_t>>(static_cast<std::size_t>(h)));
    if (fresh) order.push_back(k);
    auto& slot = it->second[static_cast<std::size_t>(t.r - 1)];
    if (slot) throw std::invalid_argument("malformed arrangement: repeated permutation index");
    slot = i;
  }

  Kp0SymmetryReport rep;
  rep.p = p;
  for (std::size_t g = 0; g < order.size(); ++g) {
    const auto& slots = groups[order[g]];
    for (const auto& s : slots)
      if (!s) throw std::invalid_argument("malformed arrangement: every r in 1..(p-1)/2 must appear");
    const IdentityTerm& first = id.terms[*slots[0]];
    const EtaVector n = full_vector(id, first);
    for (std::int64_t d = 1; d <= h; ++d) {
      Kp0SymmetryRow row;
      row.group = g;
      row.label = "n" + std::to_string(order[g].vec + 1) +
                  (order[g].pow != 0 ? "*ratio^" + std::to_string(order[g].pow) : std::string());
      row.d = d;
      row.predicted = mod_floor(d + 1 + kp0_exponent(p, n, d), 2) == 0 ? 1 : -1;
      const CycNum base = sine_ratio(ip, 1, d) * first.coeff->galois(d);
      const CycNum& cd = *id.terms[*slots[static_cast<std::size_t>(d - 1)]].coeff;
      if (cd == base)
        row.extracted = 1;
      else if (cd == -base)
        row.extracted = -1;
      // both zero: the sign is not determined by the data, accept the prediction
      if (base.is_zero() && cd.is_zero()) row.extracted = row.predicted;
      row.pass = row.extracted && *row.extracted == row.predicted;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Coefficient solver

struct SolveOptions {
  std::optional<std::int64_t> terms;
  bool allow_underdetermined = false;
  // treat the identity's zero_terms as known zeros rather than unknowns
  bool use_zero_terms = true;
};

struct SolveResult {
  Identity identity;
  std::int64_t terms = 0;
  std::size_t equations = 0, unknowns = 0, rank = 0;
};

namespace detail {

// Fraction-free elimination of the first n columns; returns pivot columns.
inline std::vector<std::size_t> bareiss(std::vector<std::vector<BigInt>>& M, std::size_t n) {
  std::vector<std::size_t> pivots;
  if (M.empty()) return pivots;
  const std::size_t rows = M.size(), cols = M[0].size();
  BigInt prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(M[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        mpz_divexact(M[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline SolveResult solve_coefficients(const Identity& skeleton, const SolveOptions& opt = {}) {
  validate(skeleton);
  const std::int64_t p = skeleton.p;
  const int ip = static_cast<int>(p);
  const std::int64_t D = lattice_denom(p);

  Identity work = skeleton;
  for (auto& t : work.terms) t.coeff.reset();
  if (!opt.use_zero_terms) work.zero_terms.clear();
  std::vector<std::size_t> unknown;
  for (std::size_t i = 0; i < work.terms.size(); ++i)
    if (term_active(work, i)) unknown.push_back(i);

  SolveResult res;
  res.unknowns = unknown.size();
  if (opt.terms) {
    res.terms = *opt.terms;
  } else {
    const CuspReport rep = cusp_report(work);
    Rat lowest = rep.depth;
    for (auto i : unknown) lowest = std::min(lowest, j_order_infinity(p, full_vector(work, work.terms[i])));
    const BigInt need = std::max<BigInt>(ceil_rat(rep.depth), floor_rat(lowest) + static_cast<long>(unknown.size()));
    res.terms = to_i64(need) + kSafetyMargin;
  }
  const std::int64_t bound = res.terms * D;

  const CycSeries lhs = k_series(p, skeleton.m, 1, Rat(res.terms));
  auto cols = parallel_map<IntSeries>(unknown.size(), [&](std::size_t k) {
    return expand_term(work, work.terms[unknown[k]], bound);
  });

  std::set<std::int64_t> exps;
  for (std::size_t i = 0; i < lhs.size(); ++i) exps.insert(lhs.exponent_at(i));
  for (const auto& s : cols)
    for (std::size_t i = 0; i < s.size(); ++i) exps.insert(s.exponent_at(i));

  const std::size_t n = unknown.size(), w = static_cast<std::size_t>(p - 1);
  std::vector<std::vector<BigInt>> M;
  for (auto e : exps) {
    if (e >= bound) continue;
    const CycNum& k = lhs.coeff(e);
    std::vector<BigInt> row(n + w);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = cols[j].coeff(e) * k.denominator();
      any = any || sgn(row[j]) != 0;
    }
    for (std::size_t i = 0; i < w; ++i) {
      row[n + i] = k.numerators()[i];
      any = any || sgn(row[n + i]) != 0;
    }
    if (any) M.push_back(std::move(row));
  }
  res.equations = M.size();

  const auto pivots = detail::bareiss(M, n);
  res.rank = pivots.size();
  for (std::size_t i = pivots.size(); i < M.size(); ++i)
    for (std::size_t j = n; j < n + w; ++j)
      if (sgn(M[i][j]) != 0)
        throw SolveError("inconsistent system: K_{" + std::to_string(p) + "," + std::to_string(skeleton.m) +
                         "} is not in the span of the basis");
  if (res.rank < n && !opt.allow_underdetermined)
    throw SolveError("singular system: rank " + std::to_string(res.rank) + " for " + std::to_string(n) +
                     " unknowns (deficiency " + std::to_string(n - res.rank) + "); raise --terms or shrink the basis");

  std::vector<std::vector<Rat>> x(n, std::vector<Rat>(w, Rat(0)));
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    for (std::size_t i = 0; i < w; ++i) {
      Rat acc(M[k][n + i]);
      for (std::size_t j = c + 1; j < n; ++j)
        if (sgn(M[k][j]) != 0) acc -= Rat(M[k][j]) * x[j][i];
      acc /= Rat(M[k][c]);
      acc.canonicalize();
      x[c][i] = acc;
    }
  }

  res.identity = skeleton;
  res.identity.zero_terms.clear();
  for (auto& t : res.identity.terms) t.coeff = CycNum::zero(ip);
  for (std::size_t j = 0; j < n; ++j) res.identity.terms[unknown[j]].coeff = CycNum::from_coords(ip, x[j]);
  return res;
}

// ---------------------------------------------------------------------------
// The 5-dissection of R(zeta_5, q) written with eta quotients

// q^{-1/24} (R(z5,q) - (z5+z5^4-2) phi(q^5) + (1+2 z5+2 z5^4) q^{-2} psi(q^5)), exact below q^T
inline CycSeries ramanujan5_lhs(std::int64_t T) {
  const int p = 5;
  const std::int64_t D = lattice_denom(p);
  const std::int64_t Tq = T + 1;
  CycSeries s = rank_gf(p, 1, Tq);
  const CycNum z1 = CycNum::zeta_power(p, 1) + CycNum::zeta_power(p, 4);
  s -= scale(phi_series(p, 1, Rat(Tq), 5), z1 - CycNum::from_integer(p, 2));
  s += scale(phi_series(p, 2, Rat(Tq + 2), 5).shifted(-2 * D), CycNum::one(p) + z1 * BigInt(2));
  CycSeries out = s.shifted(-D / 24);
  return out.truncated(std::min(out.bound(), T * D));
}

inline CycSeries ramanujan5_rhs(std::int64_t T) {
  const int p = 5;
  const std::int64_t D = lattice_denom(p);
  const std::int64_t bound = T * D;
  const CycNum z1 = CycNum::zeta_power(p, 1) + CycNum::zeta_power(p, 4);
  const EtaProduct e25 = eta(25);
  const EtaProduct g1 = gen_eta(5, 1, 5), g2 = gen_eta(5, 2, 5);
  CycSeries out = to_cyc((e25 * g2 * g1.pow(-2)).expand(D, bound), p);
  out += to_cyc((e25 * g1.pow(-1)).expand(D, bound), p);
  out += scale((e25 * g2.pow(-1)).expand(D, bound), z1);
  out -= scale((e25 * g1 * g2.pow(-2)).expand(D, bound), z1);
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json rat_json(const Rat& r) { return rat_to_string(r); }

inline nlohmann::json to_json(const ModularityReport& g) {
  return {{"weight_sum", g.weight_sum}, {"square_sum", g.square_sum}, {"order_sum", g.order_sum},
          {"pass", g.pass()}};
}

inline nlohmann::json to_json(const CuspReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["m"] = r.m;
  j["cusps"] = nlohmann::json::array();
  for (std::size_t c = 0; c < r.cusps.size(); ++c) {
    nlohmann::json jc{{"cusp", r.cusps[c].label()}, {"width", r.cusps[c].width}};
    jc["lambda"] = r.lambda[c] ? rat_json(*r.lambda[c]) : nlohmann::json(nullptr);
    jc["lambda_adjusted"] = r.lambda_adj[c] ? rat_json(*r.lambda_adj[c]) : nlohmann::json(nullptr);
    jc["column_min"] = r.column_min[c] ? nlohmann::json(r.column_min[c]->get_str()) : nlohmann::json(nullptr);
    j["cusps"].push_back(jc);
  }
  j["j0"] = r.j0 ? nlohmann::json(*r.j0) : nlohmann::json(nullptr);
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json ords = nlohmann::json::array();
    for (const auto& o : row.ord) ords.push_back(rat_json(o));
    j["rows"].push_back({{"term", row.term}, {"label", row.label}, {"ord", ords}});
  }
  j["B"] = r.B.get_str();
  j["weight"] = r.weight;
  j["mu_k_over_12"] = rat_json(r.mu_k_12);
  j["R"] = r.R.get_str();
  j["depth"] = rat_json(r.depth);
  return j;
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["p"] = c.p;
  j["m"] = c.m;
  j["mode"] = c.valence ? "valence" : "expansion";
  j["verdict"] = to_string(c.verdict);
  j["terms"] = c.terms;
  j["compared"] = c.compared;
  j["gate"] = nlohmann::json::array();
  for (const auto& g : c.gate) j["gate"].push_back(to_json(g));
  j["cusp_report"] = c.report ? to_json(*c.report) : nlohmann::json(nullptr);
  if (c.mismatch)
    j["mismatch"] = {{"exponent", rat_json(c.mismatch->exponent)},
                     {"lhs", to_json(c.mismatch->lhs)},
                     {"rhs", to_json(c.mismatch->rhs)}};
  else
    j["mismatch"] = nullptr;
  return j;
}

}  // namespace rankforge
