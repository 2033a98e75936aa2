#include <set>

#include <catch_amalgamated.hpp>

#include <rankforge/database.hpp>
#include <rankforge/prover.hpp>

using namespace rankforge;

namespace {

const Identity& stored(const std::string& name) {
  static std::map<std::string, Identity> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, find_builtin(name).at(0)).first;
  return it->second;
}

void require_equal(const CycSeries& a, const CycSeries& b, std::int64_t T) {
  auto [mm, compared] = compare_sides(a, b, Rat(T));
  if (mm) FAIL("first difference at q^" << rat_to_string(mm->exponent));
  CHECK((compared > 0 || a.terms().empty()));
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

}  // namespace

TEST_CASE("modularity gate", "[prover]") {
  const auto g = modularity_check(11, 0, {15, -4, -2, -3, -2, -2});
  CHECK(g.weight_sum == 2);
  CHECK(g.order_sum == -24);
  CHECK(g.square_sum == -121);
  CHECK(g.pass());

  const auto bad = modularity_check(11, 0, {2, 0, 0, 0, 0, 0});
  CHECK(bad.weight_ok);
  CHECK(bad.square_ok);
  CHECK(!bad.order_ok);
  CHECK(!bad.pass());
  CHECK(!modularity_check(11, 0, {3, 0, 0, 0, 0, 0}).weight_ok);
  CHECK(!modularity_check(11, 1, {15, -4, -2, -3, -2, -2}).square_ok);
  CHECK(permuted_class(11, 1, 2) == 4);
}

TEST_CASE("prefactored p = 11 terms sit in their class", "[prover]") {
  const std::vector<std::int64_t> want1{-119, -108, -119, -152, -141, -185};
  const std::vector<std::int64_t> want2{-128, -117, -128, -161, -150, -150};
  for (auto [name, want] : {std::pair{"rank11id1", want1}, std::pair{"rank11id2", want2}}) {
    const Identity& id = stored(name);
    std::vector<std::int64_t> got;
    for (std::size_t i = 0; i < id.terms.size(); ++i) {
      const auto g = modularity_check(11, id.m, full_vector(id, id.terms[i]));
      CHECK(g.pass());
      CHECK(mod_floor(g.square_sum, 11) == 2 * id.m);
      if (!id.terms[i].coeff->is_zero()) got.push_back(g.square_sum);
    }
    CHECK(got == want);
  }
}

TEST_CASE("p = 7 slices are single eta quotients", "[prover]") {
  for (const auto& id : find_builtin("rank7")) {
    INFO(id.id);
    require_equal(k_series(7, id.m, 1, Rat(60)), expand_identity_rhs(id, Rat(60)), 60);
  }
  for (const auto& id : find_builtin("rank5")) require_equal(k_series(5, id.m, 1, Rat(60)), expand_identity_rhs(id, Rat(60)), 60);
}

TEST_CASE("the 5-dissection written with eta quotients", "[prover]") {
  require_equal(ramanujan5_lhs(100), ramanujan5_rhs(100), 100);
}

TEST_CASE("empty identity expands to zero", "[prover]") {
  Identity id;
  id.p = 7;
  const CycSeries s = expand_identity_rhs(id, Rat(10));
  CHECK(s.terms().empty());
  CHECK(s.bound() == 10 * lattice_denom(7));
}

TEST_CASE("valence certificates for p = 11", "[prover]") {
  const auto c0 = verify_identity(stored("rank11id0"));
  CHECK(c0.verdict == Verdict::proved);
  CHECK(c0.report->B == -1);
  CHECK(c0.report->R == 7);
  CHECK(c0.terms == 7 + kSafetyMargin);

  const auto c1 = verify_identity(stored("rank11id1"));
  CHECK(c1.verdict == Verdict::proved);
  CHECK(c1.report->B == -7);
  CHECK(c1.report->R == 8);
  // the lowest order at i-infinity belongs to the first prefactored term, whose coefficient vanishes
  REQUIRE(c1.report->j0);
  CHECK(*c1.report->j0 == 0);
  CHECK(stored("rank11id1").terms[0].coeff->is_zero());
  CHECK(c1.report->j0_ord[0] == Rat(1, 11));
  CHECK(c1.report->depth == Rat(8) + Rat(1, 11));
}

TEST_CASE("depth below the valence requirement", "[prover]") {
  VerifyOptions o;
  o.terms = 3;
  CHECK_THROWS_AS(verify_identity(stored("rank11id0"), o), InsufficientDepth);
  o.unsafe = true;
  CHECK(verify_identity(stored("rank11id0"), o).verdict == Verdict::matched_to_depth);
  VerifyOptions e;
  e.valence = false;
  e.terms = 20;
  const auto c = verify_identity(stored("rank11id0"), e);
  CHECK(c.verdict == Verdict::matched_to_depth);
  CHECK(!c.report);
}

TEST_CASE("a perturbed coefficient is caught", "[prover]") {
  Identity id = stored("rank11id0");
  *id.terms[2].coeff += CycNum::zeta_power(11, 3);
  const auto c = verify_identity(id);
  CHECK(c.verdict == Verdict::mismatch);
  REQUIRE(c.mismatch);
  CHECK(c.mismatch->exponent >= 0);
  CHECK(!(c.mismatch->lhs == c.mismatch->rhs));
}

TEST_CASE("a term outside the class fails the gate", "[prover]") {
  Identity id = stored("rank7:m3");
  id.vectors[0] = {2, 0, 0, 0};
  CHECK(verify_identity(id).verdict == Verdict::gate_failed);
}

TEST_CASE("symmetry generation", "[prover]") {
  const Identity& k71 = stored("rank7:m1");
  const Identity k74 = symmetry_generate(k71, 2);
  CHECK(k74.m == 4);
  REQUIRE(k74.terms.size() == 1);
  CHECK(*k74.terms[0].coeff == CycNum::zeta_power(7, 1) + CycNum::zeta_power(7, 6));
  CHECK(full_vector(k74, k74.terms[0]) == EtaVector{3, -1, 1, -1});
  require_equal(k_series(7, 4, 1, Rat(60)), expand_identity_rhs(k74, Rat(60)), 60);

  const Identity same = symmetry_generate(k71, 1);
  CHECK(to_json(same)["terms"] == to_json(k71)["terms"]);
  CHECK_THROWS(symmetry_generate(k71, 4));

  for (std::int64_t a = 1; a <= 5; ++a) {
    const Identity g = symmetry_generate(stored("rank11id1"), a);
    CHECK(g.m == mod_floor(a * a, 11));
    VerifyOptions o;
    o.valence = false;
    o.terms = 50;
    CHECK(verify_identity(g, o).verdict == Verdict::matched_to_depth);
  }
}

TEST_CASE("coefficient symmetry of K_{11,0}", "[prover]") {
  const Identity& alt = stored("rank11id0_alt");
  const auto rep = kp0_coefficient_symmetry(alt);
  CHECK(rep.pass());
  CHECK(rep.w(0) == std::vector<int>{1, -1, -1, 1, -1});
  const CycNum& c1 = *alt.terms[0].coeff;
  CHECK(*alt.terms[1].coeff == -(sine_ratio(11, 1, 2) * c1.galois(2)));

  const Identity& id = stored("rank11id0");
  CHECK(kp0_coefficient_symmetry(id).pass());

  Identity broken = id;
  broken.terms[3].r = 2;
  CHECK_THROWS(kp0_coefficient_symmetry(broken));
  CHECK_THROWS(kp0_coefficient_symmetry(stored("rank11id1")));
}

TEST_CASE("solver recovers the p = 11 coefficients", "[prover]") {
  const Identity& id = stored("rank11id0");
  const SolveResult r = solve_coefficients(strip(id));
  CHECK(r.rank == 5);
  for (std::size_t i = 0; i < id.terms.size(); ++i) CHECK(*r.identity.terms[i].coeff == *id.terms[i].coeff);

  SolveOptions wide;
  wide.terms = 2 * r.terms;
  const SolveResult w = solve_coefficients(strip(id), wide);
  for (std::size_t i = 0; i < id.terms.size(); ++i) CHECK(*w.identity.terms[i].coeff == *id.terms[i].coeff);
  CHECK(verify_identity(r.identity).verdict == Verdict::proved);

  Identity all = strip(stored("rank11id1"));
  all.zero_terms.clear();
  SolveOptions o;
  o.terms = 30;
  CHECK_THROWS_AS(solve_coefficients(all, o), SolveError);
  const SolveResult r1 = solve_coefficients(strip(stored("rank11id1")));
  for (std::size_t i = 0; i < r1.identity.terms.size(); ++i)
    CHECK(*r1.identity.terms[i].coeff == *stored("rank11id1").terms[i].coeff);
}

TEST_CASE("solver rejects bases that cannot work", "[prover]") {
  // K_{11,1} is not a combination of m = 0 quotients
  Identity wrong = strip(stored("rank11id0"));
  wrong.m = 1;
  SolveOptions o;
  o.terms = 20;
  CHECK_THROWS_AS(solve_coefficients(wrong, o), SolveError);
  // the same quotient twice leaves a singular system
  Identity twice = strip(stored("rank11id0"));
  twice.terms.push_back(twice.terms[0]);
  CHECK_THROWS_AS(solve_coefficients(twice, o), SolveError);
  o.allow_underdetermined = true;
  CHECK_NOTHROW(solve_coefficients(twice, o));
}

TEST_CASE("stored identities survive a json round trip", "[prover]") {
  std::size_t n = 0;
  for (const auto& e : builtin_database())
    for (const auto& id : e.identities) {
      const auto j = to_json(id);
      CHECK(to_json(identity_from_json(j)) == j);
      ++n;
    }
  CHECK(n == 5 + 7 + 13 - 12 + 12);
  CHECK(builtin_database().size() == 15);
  CHECK_THROWS(find_builtin("rank23id1"));
  const auto cj = to_json(verify_identity(stored("rank11id0")));
  CHECK(cj["verdict"] == "proved");
  CHECK(cj["cusp_report"]["B"] == "-1");
  CHECK(cj["cusp_report"]["rows"].size() == 5);
}

TEST_CASE("three p = 11 identities generate every slice", "[prover][property]") {
  std::set<std::int64_t> covered;
  for (auto name : {"rank11id0", "rank11id1", "rank11id2"})
    for (std::int64_t a = 1; a <= 5; ++a) {
      const Identity g = symmetry_generate(stored(name), a);
      INFO(g.id);
      require_equal(k_series(11, g.m, 1, Rat(30)), expand_identity_rhs(g, Rat(30)), 30);
      covered.insert(g.m);
    }
  CHECK(covered.size() == 11);
  // both parities of a and its inverse occur for p = 7
  for (const auto& id : find_builtin("rank7"))
    for (std::int64_t a = 1; a <= 3; ++a) {
      const Identity g = symmetry_generate(id, a);
      require_equal(k_series(7, g.m, 1, Rat(40)), expand_identity_rhs(g, Rat(40)), 40);
    }
}
