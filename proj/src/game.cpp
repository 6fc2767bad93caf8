#include "dilemma/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dilemma {

namespace {

std::string describe(int n, double c, double d) {
  return "(n=" + std::to_string(n) + ", c=" + std::to_string(c) + ", d=" + std::to_string(d) + ")";
}

}  // namespace

GameParams::GameParams(int n, double c, double d) : n_(n), c_(c), d_(d) {
  if (n <= 2) {
    throw Error(ErrorKind::RejectsNTooSmall, "need n > 2 " + describe(n, c, d));
  }
  if (!(d * (n - 2) > 2.0)) {
    throw Error(ErrorKind::RejectsDConstraint, "need d*(n-2) > 2 " + describe(n, c, d));
  }
  if (!(c > d + 1.0)) {
    throw Error(ErrorKind::RejectsCostOrder, "need c > d+1 " + describe(n, c, d));
  }
  const double ratio = n * d / (d + 1.0);
  if (std::abs(ratio - std::round(ratio)) < kIntegerRatioTolerance) {
    throw Error(ErrorKind::RejectsIntegerRatio,
                "n*d/(d+1) = " + std::to_string(ratio) + " is integral " + describe(n, c, d));
  }
  e_ = d + 1.0;
  phi_ = e_ / n;
  alpha_ = d - phi_;
  if (!(alpha_ > 0.0)) {
    // Unreachable when the checks above pass.
    throw Error(ErrorKind::RejectsDConstraint, "alpha <= 0 " + describe(n, c, d));
  }
}

OutcomeProfile OutcomeProfile::with_nc_prefix(int n, int m) {
  std::vector<Strategy> s(static_cast<std::size_t>(n), Strategy::C);
  std::fill_n(s.begin(), std::clamp(m, 0, n), Strategy::NC);
  return OutcomeProfile(std::move(s));
}

int OutcomeProfile::nc_count() const noexcept {
  return static_cast<int>(std::count(strategies_.begin(), strategies_.end(), Strategy::NC));
}

double payoff_formula(const GameParams& g, Strategy s, int k) noexcept {
  if (s == Strategy::NC) return g.c() - (g.n() - k - 1) * g.phi();
  return g.c() + g.d() - (g.n() - k) * g.phi();
}

double payoff(const GameParams& g, Strategy s, int k) {
  if (k < 0 || k > g.n() - 1) {
    throw Error(ErrorKind::OutOfRangeK,
                "k=" + std::to_string(k) + " outside [0, " + std::to_string(g.n() - 1) + "]");
  }
  return payoff_formula(g, s, k);
}

double payoff_difference(const GameParams& g) noexcept { return g.d() - g.phi(); }

double social_welfare(const GameParams& g, int m) {
  if (m < 0 || m > g.n()) {
    throw Error(ErrorKind::OutOfRangeM,
                "m=" + std::to_string(m) + " outside [0, " + std::to_string(g.n()) + "]");
  }
  return g.n() * payoff_formula(g, Strategy::C, m) - m * g.alpha();
}

int k_star(const GameParams& g) noexcept {
  return static_cast<int>(std::floor(g.n() * g.d() / (g.d() + 1.0))) + 1;
}

StructureReport check_structure(const GameParams& g) {
  const int n = g.n();
  const int ks = k_star(g);
  const double f_c0 = payoff(g, Strategy::C, 0);

  StructureReport r;
  r.dominance = true;
  r.monotonicity = true;
  r.nonnegativity = true;
  r.desirability = true;
  r.k_star_sandwich = true;

  for (int k = 0; k < n; ++k) {
    const double nc = payoff(g, Strategy::NC, k);
    const double cv = payoff(g, Strategy::C, k);
    r.dominance = r.dominance && cv > nc;
    r.nonnegativity = r.nonnegativity && nc >= 0.0 && cv >= 0.0;
    if (k + 1 < n) {
      r.monotonicity = r.monotonicity && payoff(g, Strategy::NC, k + 1) > nc &&
                       payoff(g, Strategy::C, k + 1) > cv;
      r.desirability = r.desirability && payoff(g, Strategy::NC, k + 1) > nc;
    }
    // Social desirability runs up to k+1 = n, i.e. everyone NC.
    r.desirability = r.desirability && social_welfare(g, k + 1) > social_welfare(g, k);
    if (k >= ks - 1) {
      r.k_star_sandwich = r.k_star_sandwich && nc > f_c0;
    } else {
      r.k_star_sandwich = r.k_star_sandwich && nc < f_c0;
    }
  }
  r.pareto_relation = payoff(g, Strategy::NC, n - 1) > f_c0;
  return r;
}

double player_payoff(const GameParams& g, const OutcomeProfile& profile, std::size_t i) {
  const Strategy own = profile[i];
  const int others_nc = profile.nc_count() - (own == Strategy::NC ? 1 : 0);
  return payoff(g, own, others_nc);
}

bool pareto_dominates(const GameParams& g, const OutcomeProfile& a, const OutcomeProfile& b) {
  const auto n = static_cast<std::size_t>(g.n());
  if (a.size() != n || b.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "profiles must have length n=" + std::to_string(n));
  }
  bool strict = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double ua = player_payoff(g, a, i);
    const double ub = player_payoff(g, b, i);
    if (ua < ub) return false;
    if (ua > ub) strict = true;
  }
  return strict;
}

}  // namespace dilemma
