#include <set>

#include <catch_amalgamated.hpp>

#include <rankforge/cusps.hpp>
#include <rankforge/database.hpp>
#include <rankforge/prover.hpp>

using namespace rankforge;

namespace {

const EtaVector kN1{15, -4, -2, -3, -2, -2};

const Cusp& find(const std::vector<Cusp>& cs, const std::string& label) {
  for (const auto& c : cs)
    if (c.label() == label) return c;
  throw std::invalid_argument(label);
}

}  // namespace

TEST_CASE("cusp set of Gamma_1(11)", "[cusps]") {
  const auto cs = cusp_set(11);
  std::vector<std::string> labels;
  std::vector<std::int64_t> widths;
  for (const auto& c : cs) {
    labels.push_back(c.label());
    widths.push_back(c.width);
  }
  CHECK(labels == std::vector<std::string>{"i*inf", "0", "1/2", "1/3", "1/4", "1/5", "2/11", "3/11", "4/11", "5/11"});
  CHECK(widths == std::vector<std::int64_t>{1, 11, 11, 11, 11, 11, 1, 1, 1, 1});
}

TEST_CASE("fan widths add up to the index", "[cusps]") {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19}) {
    const auto cs = cusp_set(p);
    CHECK(static_cast<std::int64_t>(cs.size()) == p - 1);
    std::int64_t w = 0;
    for (const auto& c : cs) w += c.width;
    CHECK(w == (p * p - 1) / 2);
  }
  CHECK_THROWS(cusp_set(15));
}

TEST_CASE("orders of the building blocks", "[cusps]") {
  CHECK(ord_f_at_cusp(11, 1, 0, 1) == Rat(1, 88));
  CHECK(ord_f_at_cusp(11, 3, 0, 1) == Rat(1, 88));
  CHECK(ord_eta_at_cusp(11, 11) == Rat(11, 24));
  CHECK(ord_eta_at_cusp(11, 1) == Rat(1, 264));
  // at a/p the f-order is (p/2)({a rho/p} - 1/2)^2
  CHECK(ord_f_at_cusp(11, 1, 2, 11) == Rat(11, 2) * Rat(-7, 22) * Rat(-7, 22));
  // equivalent representatives give the same order
  for (std::int64_t rho = 1; rho <= 5; ++rho) {
    CHECK(ord_f_at_cusp(11, rho, 2, 11) == ord_f_at_cusp(11, rho, 13, 11));
    CHECK(ord_f_at_cusp(11, rho, 2, 11) == ord_f_at_cusp(11, rho, -9, 11));
    CHECK(ord_f_at_cusp(11, rho, 1, 3) == ord_f_at_cusp(11, rho, 4, 3));
  }
}

TEST_CASE("ORD of j(11, n1) at the cusps", "[cusps]") {
  const auto cs = cusp_set(11);
  CHECK(ord_j_at_cusp(11, kN1, 1, find(cs, "0")) == -1);
  CHECK(ord_j_at_cusp(11, kN1, 1, find(cs, "i*inf")) == 1);
  CHECK(ord_j_at_cusp(11, kN1, 1, find(cs, "5/11")) == 3);
  CHECK(ord_j_at_cusp(11, kN1, 5, find(cs, "2/11")) == 1);
  // at cusps prime to p the value does not depend on the permutation
  for (const auto& c : cs) {
    if (c.infinity || c.c == 11) continue;
    for (std::int64_t r = 2; r <= 5; ++r) CHECK(ord_j_at_cusp(11, kN1, r, c) == ord_j_at_cusp(11, kN1, 1, c));
  }
  // the order at i-infinity agrees with the q-expansion
  for (std::int64_t r = 1; r <= 5; ++r)
    CHECK(ord_j_at_cusp(11, kN1, r, cs[0]) == *j_quotient(11, kN1, r, Rat(10)).order_rat());
}

TEST_CASE("lambda bounds", "[cusps]") {
  const auto cs = cusp_set(11);
  CHECK(!lambda_bound(11, 0, cs[0]));
  CHECK(*lambda_bound(11, 0, find(cs, "0")) == -1);
  CHECK(ceil_rat(*lambda_bound(11, 0, find(cs, "2/11"))) == 1);
  CHECK(*lambda_bound(11, 0, find(cs, "2/11")) == Rat(5, 11));
  CHECK(*lambda_bound(11, 1, find(cs, "2/11")) == Rat(4, 11));
  CHECK(*lambda_bound(11, 0, find(cs, "1/3")) == 0);
  for (std::int64_t p : {5, 7}) CHECK(*lambda_bound(p, 0, cusp_set(p)[1]) == 0);
  // 2 <= n < (p - 1)/6 only happens from p = 19 on
  const auto c19 = cusp_set(19);
  CHECK(*lambda_bound(19, 0, find(c19, "1/2")) == Rat(-3, 2) * (Rat(3) - 2) * (Rat(10, 3) - 2));
  CHECK(*lambda_bound(19, 0, find(c19, "1/3")) == 0);
  CHECK(*lambda_bound(19, 0, find(c19, "0")) == -7);
}

TEST_CASE("valence budget", "[cusps]") {
  const std::vector<std::optional<Rat>> lam{std::nullopt, Rat(-1), Rat(5, 11)};
  const auto vb = valence_budget(11, 1, {{Rat(1), Rat(-2), Rat(2)}, {Rat(2), Rat(0), Rat(1, 2)}}, lam);
  CHECK(vb.B == -2 + 1);
  CHECK(!vb.column_min[0]);
  CHECK(vb.R == 1 + 1 + 5);
  CHECK(valence_budget(11, 0, {}, lam).R == 1);
  CHECK_THROWS(valence_budget(11, 0, {{Rat(1)}}, lam));
}

TEST_CASE("budgets of the p = 11 identities", "[cusps]") {
  const auto r0 = cusp_report(find_builtin("rank11id0")[0]);
  CHECK(r0.B == -1);
  CHECK(r0.mu_k_12 == 5);
  CHECK(r0.R == 7);
  for (auto name : {"rank11id1", "rank11id2"}) {
    const auto r = cusp_report(find_builtin(name)[0]);
    CHECK(r.B == -7);
    CHECK(r.R == 8);
  }
}

TEST_CASE("column minima bound both lambda and every term", "[cusps][property]") {
  // lambda bounds the sum, not each summand: at 1/n every j-quotient has ORD -1
  // while lambda is 0, so the budget takes the minimum over both.
  std::set<std::string> below;
  for (auto name : {"rank11id0", "rank11id0_alt", "rank11id1", "rank11id2", "rank13id1", "rank13id2", "rank13id3"}) {
    const auto rep = cusp_report(find_builtin(name)[0]);
    for (std::size_t c = 0; c < rep.cusps.size(); ++c) {
      if (!rep.lambda_adj[c]) {
        CHECK(rep.cusps[c].infinity);
        continue;
      }
      const Rat cm(*rep.column_min[c]);
      CHECK(cm <= ceil_rat(*rep.lambda_adj[c]));
      for (const auto& row : rep.rows) {
        CHECK(cm <= ceil_rat(row.ord[c]));
        if (row.ord[c] < *rep.lambda_adj[c] && rep.cusps[c].c == rep.p) below.insert(std::string(name) + "@" + rep.cusps[c].label());
      }
    }
  }
  // at the n/p cusps only one term of one identity sits below lambda
  CHECK(below == std::set<std::string>{"rank13id3@5/13"});
}
