// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// blocking criterion fails; criterion 9 is reported but never fails the run.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <rankforge/database.hpp>
#include <rankforge/dissection.hpp>
#include <rankforge/prover.hpp>
#include <rankforge/ranks.hpp>

#include "oracles.hpp"

using namespace rankforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int n, const std::string& title, double budget_s, bool blocking, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && s > budget_s) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS" : (blocking ? "FAIL" : "FAIL (non-blocking)")) << " " << n << " " << title << " [" << s << " s]";
  if (!o.detail.empty()) line << " - " << o.detail;
  std::cout << line.str() << std::endl;
  return o.pass || !blocking;
}

const Identity& stored(const std::string& name) {
  static std::map<std::string, Identity> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, find_builtin(name).at(0)).first;
  return it->second;
}

// forget the coefficients, remembering which ones vanish
Identity strip(Identity id) {
  id.zero_terms.clear();
  for (std::size_t i = 0; i < id.terms.size(); ++i) {
    if (id.terms[i].coeff->is_zero()) id.zero_terms.push_back(i);
    id.terms[i].coeff.reset();
  }
  return id;
}

bool same_to(const CycSeries& a, const CycSeries& b, std::int64_t T, std::string& where) {
  auto [mm, compared] = compare_sides(a, b, Rat(T));
  if (mm) where = "q^" + rat_to_string(mm->exponent);
  return !mm;
}

CycNum zp(std::int64_t k) { return CycNum::zeta_power(7, k); }

// ---- 5: expected cusp tables for K_{11,0}, K_{11,1}, K_{11,2} ----
// columns: i*inf, 0, 1/n (n = 2..5), 2/11, 3/11, 4/11, 5/11

struct ExpectedRow {
  std::string shown;  // label as it appears in the source table
  std::string term;   // term of the identity it belongs to
  std::array<int, 7> ord;
};

struct ExpectedTable {
  std::string id;
  std::vector<ExpectedRow> rows;
  std::array<Rat, 6> lambda;       // 0, 1/n, 2/11 .. 5/11, before rounding
  std::array<int, 6> lambda_ceil;  // as listed
  std::array<int, 6> lower;        // bound on ORD(LHS - RHS)
};

// A cell known not to reconcile under any convention: the value given is 1,
// the cusp-order formula gives -1 (10/11 - 21/11).
struct KnownErratum {
  std::string id, term, cusp;
  int shown, computed;
};

const std::vector<KnownErratum> kErrata{{"rank11id2", "f4/f1*j(n1,pi3)", "4/11", 1, -1}};

std::vector<ExpectedTable> expected_tables() {
  const Rat f(5, 11);
  return {
      {"rank11id0",
       {{"pi1", "j(n1,pi1)", {1, -1, -1, 2, 2, 2, 3}},
        {"pi2", "j(n1,pi2)", {2, -1, -1, 2, 3, 2, 1}},
        {"pi3", "j(n1,pi3)", {2, -1, -1, 3, 2, 1, 2}},
        {"pi4", "j(n1,pi4)", {2, -1, -1, 2, 1, 3, 2}},
        {"pi5", "j(n1,pi5)", {3, -1, -1, 1, 2, 2, 2}}},
       {Rat(-1), Rat(0), f, f, f, f},
       {-1, 0, 1, 1, 1, 1},
       {-1, -1, 1, 1, 1, 1}},
      {"rank11id1",
       {{"f5/f1 pi2", "f5/f1*j(n1,pi2)", {1, 0, 0, 0, 1, 0, -2}},
        {"f5/f1 pi3", "f5/f1*j(n1,pi3)", {1, 0, 0, 1, 0, -1, -1}},
        {"f5/f1 pi4", "f5/f1*j(n1,pi4)", {1, 0, 0, 0, -1, 1, -1}},
        {"f5/f1 pi5", "f5/f1*j(n1,pi5)", {2, 0, 0, -1, 0, 0, -1}},
        {"f4/f5 pi1", "f4/f5*j(n1,pi3)", {2, 0, 0, 0, 1, -2, -1}},
        {"f4/f5 pi2", "f4/f5*j(n1,pi5)", {3, 0, 0, -2, 1, -1, -1}}},
       {Rat(0), Rat(1), Rat(-2), Rat(-16, 11), Rat(-23, 11), Rat(-32, 11)},
       {0, 1, -2, -1, -2, -2},
       {0, 0, -2, -1, -2, -2}},
      {"rank11id2",
       {{"f4/f1 pi2", "f4/f1*j(n1,pi2)", {1, 0, 0, 0, 1, 0, -2}},
        {"f4/f1 pi3", "f4/f1*j(n1,pi3)", {1, 0, 0, 1, 0, 1, -1}},
        {"f4/f1 pi4", "f4/f1*j(n1,pi4)", {1, 0, 0, 0, -1, 1, -1}},
        {"f4/f1 pi5", "f4/f1*j(n1,pi5)", {2, 0, 0, -1, 0, 0, -1}},
        {"f3/f4 pi1", "f3/f4*j(n1,pi2)", {2, 0, 0, 0, 0, 1, -3}},
        {"f3/f4 pi2", "f3/f4*j(n1,pi4)", {2, 0, 0, 0, -2, 2, -2}}},
       {Rat(0), Rat(1), Rat(-14, 11), Rat(-24, 11), Rat(-16, 11), Rat(-34, 11)},
       {0, 1, -1, -2, -1, -3},
       {0, 0, -1, -2, -1, -3}},
  };
}

// computed cusp indices behind each expected column
std::vector<std::vector<std::size_t>> column_map() { return {{0}, {1}, {2, 3, 4, 5}, {6}, {7}, {8}, {9}}; }

Outcome cusp_tables() {
  const auto cols = column_map();
  std::vector<std::string> errata, problems;
  std::size_t cells = 0, relabeled = 0;
  for (const auto& t : expected_tables()) {
    const CuspReport rep = cusp_report(stored(t.id));
    if (rep.cusps.size() != 10) return {false, t.id + ": unexpected cusp count"};
    if (rep.rows.size() != t.rows.size()) problems.push_back(t.id + ": row count");
    for (std::size_t i = 0; i < t.rows.size() && i < rep.rows.size(); ++i) {
      const auto& want = t.rows[i];
      const auto& got = rep.rows[i];
      if (got.label != want.term) {
        problems.push_back(t.id + " row " + std::to_string(i) + ": term " + got.label);
        continue;
      }
      const std::string perm = got.label.substr(got.label.find("pi"), 3);
      if (want.shown.substr(want.shown.size() - 3) != perm) ++relabeled;
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k : cols[c]) {
          ++cells;
          if (got.ord[k] == Rat(want.ord[c])) continue;
          const std::string cusp = rep.cusps[k].label();
          bool known = false;
          for (const auto& e : kErrata)
            known |= e.id == t.id && e.term == got.label && e.cusp == cusp && e.shown == want.ord[c] && got.ord[k] == Rat(e.computed);
          const std::string cell = t.id + " " + got.label + " @" + cusp + ": expected " + std::to_string(want.ord[c]) +
                                   ", computed " + rat_to_string(got.ord[k]);
          (known ? errata : problems).push_back(cell);
        }
    }
    for (std::size_t c = 1; c < cols.size(); ++c)
      for (std::size_t k : cols[c]) {
        const auto& lam = rep.lambda_adj[k];
        if (!lam || *lam != t.lambda[c - 1] || ceil_rat(*lam) != t.lambda_ceil[c - 1])
          problems.push_back(t.id + " lambda @" + rep.cusps[k].label());
        if (!rep.column_min[k] || *rep.column_min[k] != t.lower[c - 1]) problems.push_back(t.id + " lower bound @" + rep.cusps[k].label());
      }
  }
  std::ostringstream d;
  d << cells << " cells, " << relabeled << " rows matched under corrected labels, " << errata.size() << " itemized errata";
  for (const auto& e : errata) d << " [" << e << "]";
  for (const auto& p : problems) d << " {" << p << "}";
  return {problems.empty() && errata.size() <= 2, d.str()};
}

// ---- 9: skeletons ----

std::string describe(const Identity& id, std::size_t i) {
  const auto& t = id.terms[i];
  return "v" + std::to_string(t.vec + 1) + ",r" + std::to_string(t.r) + ",k" + std::to_string(t.eta_ratio_pow);
}

Outcome skeletons() {
  std::vector<std::string> failed, notes;
  for (auto name : {"rank17id1", "rank17id2", "rank17id3", "rank19id1", "rank19id2", "rank19id3"}) {
    const Identity& skel = stored(name);
    std::optional<SolveResult> solved;
    try {
      solved = solve_coefficients(skel);
    } catch (const SolveError&) {
    }
    if (!solved) {
      // the listed zeros are inconsistent; solve on the full basis and report which of them are nonzero
      SolveOptions free;
      free.use_zero_terms = false;
      const SolveResult r = solve_coefficients(skel, free);
      std::vector<std::string> nonzero;
      for (auto z : skel.zero_terms)
        if (!r.identity.terms[z].coeff->is_zero()) nonzero.push_back(describe(skel, z));
      const auto v = verify_identity(r.identity).verdict;
      std::ostringstream s;
      s << name << ": listed zeros inconsistent; unconstrained solve " << (v == Verdict::proved ? "proved" : to_string(v)) << ", "
        << nonzero.size() << " of " << skel.zero_terms.size() << " listed zeros nonzero";
      failed.push_back(s.str());
      continue;
    }
    const auto cert = verify_identity(solved->identity);
    if (cert.verdict != Verdict::proved) {
      failed.push_back(std::string(name) + ": " + to_string(cert.verdict));
      continue;
    }
    // with a unique solution on the full basis the listed zeros must come out on their own
    std::string zeros = "zeros imposed, full basis dependent";
    try {
      SolveOptions free;
      free.use_zero_terms = false;
      const SolveResult r = solve_coefficients(skel, free);
      std::size_t vanish = 0;
      for (auto z : skel.zero_terms) vanish += r.identity.terms[z].coeff->is_zero();
      zeros = std::to_string(vanish) + "/" + std::to_string(skel.zero_terms.size()) + " listed zeros vanish unconstrained";
      if (vanish != skel.zero_terms.size()) failed.push_back(std::string(name) + ": " + zeros);
    } catch (const SolveError&) {
    }
    notes.push_back(std::string(name) + " proved (R=" + cert.report->R.get_str() + ", " + zeros + ")");
  }
  std::ostringstream d;
  for (const auto& n : notes) d << n << "; ";
  for (const auto& f : failed) d << f << "; ";
  return {failed.empty(), d.str()};
}

}  // namespace

int main() {
  bool ok = true;

  ok &= run(1, "Dyson rank equidistribution for 5n+4 and 7n+5, n <= 20", 5, true, [] {
    const auto a = dyson_check(5, 20), b = dyson_check(7, 20);
    // independent check by partition enumeration
    bool brute = true;
    for (std::int64_t p : {5, 7}) {
      const std::int64_t r = p == 5 ? 4 : 5;
      for (std::int64_t n = 0; p * n + r <= 40; ++n) {
        std::map<std::int64_t, std::int64_t> cls;
        std::int64_t total = 0;
        for (auto [m, c] : oracle::ranks(p * n + r)) {
          cls[((m % p) + p) % p] += c;
          total += c;
        }
        for (std::int64_t k = 0; k < p; ++k) brute &= cls[k] * p == total;
      }
    }
    return Outcome{a.pass && b.pass && a.r == 4 && b.r == 5 && brute, ""};
  });

  ok &= run(2, "5-dissection of R(zeta_5, q) to q^200", 30, true, [] {
    std::string where;
    const bool eq = same_to(ramanujan5_lhs(200), ramanujan5_rhs(200), 200, where);
    return Outcome{eq, eq ? "" : "first difference at " + where};
  });

  ok &= run(3, "seven K_{7,m} slices equal their eta quotients to q^150", 0, true, [] {
    const std::int64_t T = 150, D = lattice_denom(7);
    const EtaProduct pre = eta(7).pow(2);
    const EtaProduct e1 = gen_eta(7, 1), e2 = gen_eta(7, 2), e3 = gen_eta(7, 3);
    const CycNum one = CycNum::one(7);
    const std::vector<std::pair<CycNum, EtaProduct>> want{
        {CycNum::zero(7), pre},
        {-(one + zp(3) + zp(4)), pre * e1 * e2.pow(-1) * e3.pow(-1)},
        {-one + zp(1) + zp(6), pre * e3 * e1.pow(-1) * e2.pow(-1)},
        {one, pre * e1.pow(-1)},
        {zp(1) + zp(6), pre * e2 * e1.pow(-1) * e3.pow(-1)},
        {one + zp(2) + zp(5), pre * e2.pow(-1)},
        {-(zp(2) + zp(5)), pre * e3.pow(-1)},
    };
    std::string bad;
    for (std::int64_t m = 0; m < 7; ++m) {
      const auto& [c, f] = want[static_cast<std::size_t>(m)];
      const CycSeries rhs = scale(f.expand(D, T * D), c);
      std::string where;
      if (!same_to(k_series(7, m, 1, Rat(T)), rhs, T, where)) bad += " m=" + std::to_string(m) + "@" + where;
    }
    return Outcome{bad.empty(), bad};
  });

  ok &= run(4, "p = 11 valence certificates", 120, true, [] {
    const auto c0 = verify_identity(stored("rank11id0"));
    const auto c1 = verify_identity(stored("rank11id1"));
    const auto c2 = verify_identity(stored("rank11id2"));
    std::ostringstream d;
    d << "m=0 B=" << c0.report->B << " mu k/12=" << rat_to_string(c0.report->mu_k_12) << " R=" << c0.report->R << "; m=1 B=" << c1.report->B
      << " R=" << c1.report->R << "; m=2 B=" << c2.report->B << " R=" << c2.report->R;
    const bool pass = c0.report->B == -1 && c0.report->mu_k_12 == 5 && c0.report->R == 7 && c1.report->B == -7 && c1.report->R == 8 &&
                      c2.report->B == -7 && c2.report->R == 8 && c0.verdict == Verdict::proved && c1.verdict == Verdict::proved &&
                      c2.verdict == Verdict::proved;
    return Outcome{pass, d.str()};
  });

  ok &= run(5, "p = 11 cusp order and lambda tables", 0, true, cusp_tables);

  ok &= run(6, "p = 13 valence certificates", 300, true, [] {
    std::ostringstream d;
    bool pass = true;
    for (auto name : {"rank13id1", "rank13id2", "rank13id3"}) {
      const auto c = verify_identity(stored(name));
      pass &= c.verdict == Verdict::proved;
      d << name << " " << to_string(c.verdict) << " (B=" << c.report->B << ", R=" << c.report->R << ") ";
    }
    return Outcome{pass, d.str()};
  });

  ok &= run(7, "symmetry generation covers K_{11,m} for every m; w(r, 11)", 0, true, [] {
    std::set<std::int64_t> covered;
    std::string bad;
    for (auto name : {"rank11id0", "rank11id1", "rank11id2"})
      for (std::int64_t a = 1; a <= 5; ++a) {
        const Identity g = symmetry_generate(stored(name), a);
        VerifyOptions o;
        o.valence = false;
        o.terms = 60;
        const auto c = verify_identity(g, o);
        if (c.verdict == Verdict::matched_to_depth && c.terms == 60)
          covered.insert(g.m);
        else
          bad += " " + g.id;
      }
    const auto w = kp0_coefficient_symmetry(stored("rank11id0_alt"));
    const bool wok = w.pass() && w.w(0) == std::vector<int>{1, -1, -1, 1, -1};
    std::ostringstream d;
    d << covered.size() << " of 11 slices" << bad << (wok ? "" : "; w mismatch");
    return Outcome{covered.size() == 11 && bad.empty() && wok, d.str()};
  });

  ok &= run(8, "solver recovers the p = 11 and p = 13 m = 0 coefficients", 0, true, [] {
    std::ostringstream d;
    bool pass = true;
    for (auto [name, count] : {std::pair{"rank11id0", 5}, std::pair{"rank13id1", 12}}) {
      const Identity& id = stored(name);
      const SolveResult r = solve_coefficients(strip(id));
      int same = 0;
      for (std::size_t i = 0; i < id.terms.size(); ++i) same += *r.identity.terms[i].coeff == *id.terms[i].coeff;
      pass &= same == count && static_cast<int>(id.terms.size()) == count;
      d << name << " " << same << "/" << count << " ";
    }
    return Outcome{pass, d.str()};
  });

  ok &= run(9, "p = 17 and p = 19 skeletons solved and certified", 0, false, skeletons);

  ok &= run(10, "property suites", 180, true, [] {
    std::string bad;
    for (std::int64_t p : {5, 7, 11, 13})
      for (std::int64_t d = 1; d < p; ++d) {
        const CycSeries a = rank_gf(p, d, 200), b = rank_gf_alt(p, d, 200);
        for (std::int64_t n = 0; n < 200; ++n)
          if (!(a.coeff(n * a.denom()) == b.coeff(n * b.denom()))) {
            bad += " rank_gf p=" + std::to_string(p);
            break;
          }
      }
    for (std::int64_t p : {5, 7, 11, 13})
      for (std::int64_t m = 0; m < p; ++m) {
        std::string where;
        if (!same_to(k_series(p, m, 1, Rat(60)), k_series_via_u(p, m, 1, Rat(60)), 60, where))
          bad += " k_series p=" + std::to_string(p) + " m=" + std::to_string(m);
      }
    for (std::int64_t n = 0; n <= 30; ++n)
      if (rank_counts_bruteforce(n) != oracle::ranks(n)) bad += " ranks n=" + std::to_string(n);

    std::mt19937_64 rng(7019);
    std::uniform_int_distribution<long> coef(-6, 6);
    const std::array<int, 4> primes{5, 7, 11, 13};
    for (int i = 0; i < 1000; ++i) {
      const int p = primes[static_cast<std::size_t>(i) % primes.size()];
      std::array<std::pair<CycNum, oracle::GroupRing>, 3> e;
      for (auto& [x, g] : e) {
        std::vector<std::pair<std::int64_t, BigInt>> t;
        std::vector<std::pair<std::int64_t, std::int64_t>> tg;
        for (int k = 0; k < p; ++k) {
          const long c = coef(rng);
          t.emplace_back(k, BigInt(c));
          tg.emplace_back(k, c);
        }
        x = CycNum::from_powers(p, t);
        g = oracle::gr_from_powers(p, tg);
      }
      const auto& [x, gx] = e[0];
      const auto& [y, gy] = e[1];
      const auto& w = e[2].first;
      const std::int64_t d1 = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(p - 1));
      const std::int64_t d2 = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(p - 1));
      bool good = (x * y) * w == x * (y * w) && x * (y + w) == x * y + x * w && x * y == y * x && (x + y) - y == x &&
                  oracle::same(x * y, oracle::gr_mul(gx, gy)) && x.galois(d1).galois(d2) == x.galois(d1 * d2 % p) &&
                  (x * y).galois(d1) == x.galois(d1) * y.galois(d1) && (x + y).galois(d1) == x.galois(d1) + y.galois(d1);
      if (!x.is_zero()) good &= x * x.inverse() == CycNum::one(p);
      if (!good) {
        bad += " cyclotomic case " + std::to_string(i);
        break;
      }
    }
    return Outcome{bad.empty(), bad};
  });

  return ok ? 0 : 1;
}
