#include <catch_amalgamated.hpp>

#include <rankforge/etaforms.hpp>

#include "oracles.hpp"

using namespace rankforge;

namespace {

void require_equal(const IntSeries& a, const IntSeries& b) {
  REQUIRE(a.denom() == b.denom());
  const std::int64_t bound = std::min(a.bound(), b.bound());
  REQUIRE(bound > std::min(a.lead(), b.lead()));
  std::int64_t bad = 0;
  for (std::int64_t e = std::min(a.lead(), b.lead()); e < bound; ++e)
    if (a.coeff(e) != b.coeff(e)) ++bad;
  REQUIRE(bad == 0);
}

// (q^a; q^N)_k as a dense integer series exact below q^T
IntSeries pochhammer(std::int64_t D, std::int64_t a, std::int64_t N, std::int64_t k, std::int64_t T) {
  IntSeries s = IntSeries::monomial(D, 0, BigInt(1), T * D);
  for (std::int64_t j = 0; j < k; ++j) {
    const std::int64_t e = a + j * N;
    if (e >= T) break;
    s = s - s.shifted(e * D).truncated(T * D);
  }
  return s;
}

// Phi_{p,a} straight from its defining sum, one term at a time
IntSeries phi_oracle(std::int64_t p, std::int64_t a, std::int64_t T) {
  const std::int64_t D = lattice_denom(p);
  IntSeries acc = IntSeries::zero_series(D, T * D, BigInt(0));
  for (std::int64_t n = 0; p * n * n < T; ++n) {
    const IntSeries den = pochhammer(D, a, p, n + 1, T) * pochhammer(D, p - a, p, n, T);
    acc += inverse(den).shifted(p * n * n * D).truncated(T * D);
  }
  if (p < 6 * a && 6 * a < 3 * p) acc -= IntSeries::monomial(D, 0, BigInt(1), T * D);
  return acc;
}

}  // namespace

TEST_CASE("eta expansions", "[etaforms]") {
  const std::int64_t D = lattice_denom(5);
  CHECK(eta().prefactor() == Rat(1, 24));
  CHECK(eta(25).prefactor() == Rat(25, 24));
  const IntSeries e = eta().expand(D, 80 * D + D / 24);
  const auto pent = oracle::pentagonal(80);
  for (std::int64_t n = 0; n < 80; ++n) CHECK(e.coeff(n * D + D / 24) == pent[static_cast<std::size_t>(n)]);
}

TEST_CASE("generalized eta prefactors", "[etaforms]") {
  CHECK(bernoulli_p2(Rat(1, 5)) == Rat(1, 150));
  CHECK(gen_eta(5, 1).prefactor() == Rat(1, 60));
  for (std::int64_t N : {5, 7, 11, 13, 17, 19})
    for (std::int64_t k = 1; k < N; ++k) {
      const std::int64_t D = lattice_denom(N);
      require_equal(gen_eta(N, k).expand(D, 40 * D), gen_eta(N, N - k).expand(D, 40 * D));
      for (std::int64_t t : {std::int64_t{1}, N}) {
        const Rat scaled = gen_eta(N, k, t).prefactor() * D;
        CHECK(scaled.get_den() == 1);
      }
    }
  CHECK(Rat(gen_eta(5, 1, 5).prefactor() * lattice_denom(5)).get_den() == 1);
  CHECK_THROWS(gen_eta(7, 14));
}

TEST_CASE("f_{N,rho} = eta(Nz) eta_{N,rho}(z)", "[etaforms]") {
  for (std::int64_t N : {5, 7, 11, 13, 17, 19}) {
    const std::int64_t D = lattice_denom(N);
    for (std::int64_t rho = 1; 2 * rho < N; ++rho)
      require_equal(biagioli_f(N, rho).expand(D, 120 * D), (eta(N) * gen_eta(N, rho)).expand(D, 120 * D));
  }
}

TEST_CASE("Biagioli theta functions", "[etaforms]") {
  CHECK(biagioli_f(7, 1).prefactor() == Rat(25, 56));
  const std::int64_t D = lattice_denom(7);
  require_equal(biagioli_f(7, 8).expand(D, 50 * D), biagioli_f(7, 1).expand(D, 50 * D));
  require_equal(biagioli_f(7, -1).expand(D, 50 * D), biagioli_f(7, 1).expand(D, 50 * D));
  CHECK_THROWS(biagioli_f(7, 7));
}

TEST_CASE("j quotients under the permutations", "[etaforms]") {
  const std::int64_t p = 11, D = lattice_denom(p);
  const EtaVector n{15, -2, -2, -2, -3, -4};
  for (std::int64_t r = 1; r <= 5; ++r) {
    const EtaProduct direct = eta(11).pow(15) * biagioli_f(11, r).pow(-2) * biagioli_f(11, 2 * r).pow(-2) *
                              biagioli_f(11, 3 * r).pow(-2) * biagioli_f(11, 4 * r).pow(-3) *
                              biagioli_f(11, 5 * r).pow(-4);
    require_equal(j_quotient(p, n, r, Rat(60)), direct.expand(D, 60 * D));
    // the order at infinity depends on r, the weight does not
    const EtaVector v = permute_vector(p, n, r);
    std::int64_t w = 0;
    for (auto x : v) w += x;
    CHECK(w == 2);
  }
  require_equal(j_quotient(p, n, 1, Rat(40)), j_product(p, n).expand(D, 40 * D));
  CHECK_THROWS(permute_vector(p, {1, 2}, 1));
}

TEST_CASE("eta(z) as a product of eta(pz) and the f_{p,k}", "[etaforms]") {
  for (std::int64_t p : {5, 7, 11}) {
    const std::int64_t D = lattice_denom(p);
    EtaProduct rhs = eta(p).pow(1 - (p - 1) / 2);
    for (std::int64_t k = 1; 2 * k < p; ++k) rhs *= biagioli_f(p, k);
    require_equal(eta().expand(D, 150 * D), rhs.expand(D, 150 * D));
  }
}

TEST_CASE("Phi_{p,a} and its branches", "[etaforms]") {
  const std::int64_t D5 = lattice_denom(5);
  const IntSeries phi = phi_series(5, 1, Rat(60));
  CHECK(phi.coeff(0) == 0);
  CHECK(phi.coeff(D5) == 1);
  CHECK(phi_series(7, 1, Rat(10)).coeff(0) == 1);
  CHECK(phi_series(11, 5, Rat(10)).coeff(0) == 0);
  for (auto [p, a] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 1}, {5, 2}, {7, 1}, {7, 3}, {11, 5}, {13, 4}})
    require_equal(phi_series(p, a, Rat(80)), phi_oracle(p, a, 80));
}
