#include <doctest.h>

#include <random>

#include "dilemma/fixtures.hpp"
#include "dilemma/game.hpp"
#include "oracles.hpp"

using namespace dilemma;
using doctest::Approx;

namespace {

GameParams fig1() { return GameParams(fixtures::kFig1N, fixtures::kFig1C, fixtures::kFig1D); }

ErrorKind kind_of(int n, double c, double d) {
  try {
    GameParams g(n, c, d);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected construction to fail");
  return ErrorKind::InvalidType;
}

// Valid games drawn from a grid, used by the property-style loops below.
std::vector<GameParams> random_games(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(3, 400);
  std::uniform_real_distribution<double> d_dist(0.05, 20.0);
  std::uniform_real_distribution<double> c_gap(0.001, 10.0);
  std::vector<GameParams> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = n_dist(rng);
    const double d = d_dist(rng);
    try {
      out.emplace_back(n, d + 1.0 + c_gap(rng), d);
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("new_game derives phi and alpha") {
  const auto g = fig1();
  CHECK(g.e() == Approx(3.2827));
  CHECK(g.phi() == Approx(0.131308).epsilon(1e-12));
  CHECK(g.alpha() == Approx(2.151392).epsilon(1e-12));
}

TEST_CASE("new_game rejects each constraint") {
  CHECK(kind_of(2, 10.0, 5.0) == ErrorKind::RejectsNTooSmall);
  CHECK(kind_of(-1, 10.0, 5.0) == ErrorKind::RejectsNTooSmall);
  CHECK(kind_of(3, 10.0, 1.0) == ErrorKind::RejectsDConstraint);
  CHECK(kind_of(4, 10.0, 1.0) == ErrorKind::RejectsDConstraint);  // d(n-2) = 2 exactly
  CHECK(kind_of(25, 3.2827, 2.2827) == ErrorKind::RejectsCostOrder);  // c == d+1
  CHECK(kind_of(4, 10.0, 3.0) == ErrorKind::RejectsIntegerRatio);
  CHECK(kind_of(6, 10.0, 5.0) == ErrorKind::RejectsIntegerRatio);
  CHECK_NOTHROW(GameParams(3, 3.2, 2.1));
}

TEST_CASE("payoff matches Eq. (1) values for the figure game") {
  const auto g = fig1();
  CHECK(payoff(g, Strategy::C, 0) == Approx(3.2827).epsilon(1e-12));
  CHECK(payoff(g, Strategy::NC, 24) == Approx(4.2827).epsilon(1e-12));
  CHECK(payoff(g, Strategy::NC, 17) == Approx(3.363544).epsilon(1e-12));
  CHECK(payoff(g, Strategy::NC, 16) == Approx(3.232236).epsilon(1e-12));
  CHECK_THROWS_AS(payoff(g, Strategy::NC, 25), Error);
  CHECK_THROWS_AS(payoff(g, Strategy::C, -1), Error);
}

TEST_CASE("payoff agrees with the long double oracle on random games") {
  for (const auto& g : random_games(200, 7)) {
    const oracle::Game o{g.n(), g.c(), g.d()};
    for (int k = 0; k < g.n(); ++k) {
      REQUIRE(payoff(g, Strategy::NC, k) == Approx(static_cast<double>(o.f_nc(k))).epsilon(1e-12));
      REQUIRE(payoff(g, Strategy::C, k) == Approx(static_cast<double>(o.f_c(k))).epsilon(1e-12));
    }
  }
}

TEST_CASE("payoff difference is constant in k") {
  const auto g = fig1();
  CHECK(payoff_difference(g) == Approx(2.151392).epsilon(1e-12));
  for (const auto& h : random_games(100, 11)) {
    for (int k = 0; k < h.n(); ++k) {
      REQUIRE(std::abs(payoff(h, Strategy::C, k) - payoff(h, Strategy::NC, k) -
                       payoff_difference(h)) < 1e-12);
    }
  }
  // alpha -> d as n grows
  const GameParams big(1'000'001, 5.0, 3.0);
  CHECK(payoff_difference(big) == Approx(3.0).epsilon(1e-5));
}

TEST_CASE("social welfare") {
  const auto g = fig1();
  CHECK(social_welfare(g, 0) == Approx(82.0675).epsilon(1e-12));
  // n f(C,n) - n alpha = n (c + phi); the +(1+phi) step from 82.0675 lands here too.
  CHECK(social_welfare(g, 25) == Approx(110.3502).epsilon(1e-12));
  CHECK_THROWS_AS(social_welfare(g, 26), Error);
  CHECK_THROWS_AS(social_welfare(g, -1), Error);
  for (const auto& h : random_games(100, 13)) {
    for (int m = 0; m < h.n(); ++m) {
      REQUIRE(social_welfare(h, m + 1) - social_welfare(h, m) ==
              Approx(1.0 + h.phi()).epsilon(1e-9));
    }
  }
}

TEST_CASE("k_star") {
  CHECK(k_star(fig1()) == 18);
  CHECK(k_star(GameParams(5, fixtures::kTable1D0 + 2, fixtures::kTable1D0)) == 4);
  CHECK(k_star(GameParams(50, fixtures::kTable1D0 + 2, fixtures::kTable1D0)) == 34);

  const auto g = fig1();
  const int ks = k_star(g);
  CHECK(payoff(g, Strategy::NC, ks - 2) < payoff(g, Strategy::C, 0));
  CHECK(payoff(g, Strategy::C, 0) < payoff(g, Strategy::NC, ks - 1));

  for (const auto& h : random_games(300, 17)) {
    const oracle::Game o{h.n(), h.c(), h.d()};
    const double ratio = h.n() * h.d() / (h.d() + 1);
    const int k = k_star(h);
    REQUIRE(k == o.k_star());
    REQUIRE(ratio < k);
    REQUIRE(k < ratio + 1);
    REQUIRE(k >= 2);
    REQUIRE(k <= h.n());
  }
}

TEST_CASE("check_structure holds on examples and random games") {
  CHECK(check_structure(fig1()).all());
  // n = 1000, d = 3 has n d/(d+1) = 750 and is not a valid game; n = 1001 is.
  CHECK(kind_of(1000, 5.0, 3.0) == ErrorKind::RejectsIntegerRatio);
  CHECK(check_structure(GameParams(1001, 5.0, 3.0)).all());
  CHECK(check_structure(GameParams(3, 3.2, 2.1)).all());
  for (const auto& g : random_games(200, 19)) {
    const auto r = check_structure(g);
    REQUIRE(r.dominance);
    REQUIRE(r.monotonicity);
    REQUIRE(r.nonnegativity);
    REQUIRE(r.pareto_relation);
    REQUIRE(r.desirability);
    REQUIRE(r.k_star_sandwich);
  }
}

TEST_CASE("pareto_dominates") {
  const auto g = fig1();
  const int n = g.n();
  const int ks = k_star(g);
  const auto all_nc = OutcomeProfile::uniform(n, Strategy::NC);
  const auto all_c = OutcomeProfile::uniform(n, Strategy::C);

  CHECK(pareto_dominates(g, all_nc, all_c));
  CHECK_FALSE(pareto_dominates(g, all_c, all_nc));
  CHECK_FALSE(pareto_dominates(g, all_nc, all_nc));

  // With m NC players each of them sees m-1 others, so m = k* is the first
  // count where the NC players beat f(C, 0).
  CHECK(pareto_dominates(g, OutcomeProfile::with_nc_prefix(n, ks), all_c));
  CHECK_FALSE(pareto_dominates(g, OutcomeProfile::with_nc_prefix(n, ks - 1), all_c));
  CHECK_FALSE(pareto_dominates(g, OutcomeProfile::with_nc_prefix(n, ks - 2), all_c));

  CHECK_THROWS_AS(pareto_dominates(g, OutcomeProfile::uniform(n - 1, Strategy::C), all_c), Error);
}

TEST_CASE("pareto_dominates is irreflexive and antisymmetric") {
  const GameParams g(8, 5.0, 2.5);
  std::mt19937_64 rng(3);
  std::vector<OutcomeProfile> profiles;
  for (int i = 0; i < 40; ++i) {
    std::vector<Strategy> s(8);
    for (auto& x : s) x = (rng() & 1u) ? Strategy::NC : Strategy::C;
    profiles.emplace_back(s);
  }
  for (const auto& a : profiles) {
    REQUIRE_FALSE(pareto_dominates(g, a, a));
    for (const auto& b : profiles) {
      REQUIRE_FALSE((pareto_dominates(g, a, b) && pareto_dominates(g, b, a)));
    }
  }
}
