#include "dilemma/institutions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dilemma/binomial.hpp"

namespace dilemma {

double beta(const GameParams& g) noexcept {
  const double d = g.d();
  return (k_star(g) * (d + 1.0) - g.n() * d) / (d * (g.n() - 1) - 1.0);
}

double beta_from_payoffs(const GameParams& g) {
  const int ks = k_star(g);
  const double gain = payoff(g, Strategy::NC, ks - 1) - payoff(g, Strategy::C, 0);
  const double temptation = payoff(g, Strategy::C, ks - 1) - payoff(g, Strategy::NC, ks - 1);
  return gain / temptation;
}

double beta_bound(const GameParams& g) noexcept {
  return (g.d() + 1.0) / (g.d() * (g.n() - 1) - 1.0);
}

ParticipationEquation::ParticipationEquation(const GameParams& g)
    : ParticipationEquation(g.n(), k_star(g)) {}

ParticipationEquation::ParticipationEquation(int n, int k_star) : log_space_(n > kLogSpaceAbove) {
  double c = 0.0;
  for (int k = k_star; k <= n - 1; ++k) {
    if (log_space_) {
      c += std::log(static_cast<double>(n - k)) - std::log(static_cast<double>(k));
    } else {
      c = (k == k_star ? 1.0 : c) * (n - k) / k;
    }
    coeffs_.push_back(c);
  }
}

double ParticipationEquation::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  double sum = 0.0;
  if (log_space_) {
    const double lx = std::log(x);
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
      sum += std::exp(coeffs_[m] + static_cast<double>(m + 1) * lx);
    }
    return sum;
  }
  // Horner in x: sum_m C_m x^(m+1) = x (C_0 + x (C_1 + ...)).
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * x + *it;
  return sum * x;
}

ParticipationProbabilities participation_probabilities(int n, int k_star, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorKind::OutOfRangeT, "t=" + std::to_string(t) + " outside [0, 1]");
  }
  return {
      binomial_upper_tail(n, t, k_star),
      t * binomial_upper_tail(n - 1, t, k_star - 1),
      (1.0 - t) * binomial_upper_tail(n - 1, t, k_star),
  };
}

ParticipationProbabilities participation_probabilities(const GameParams& g, double t) {
  return participation_probabilities(g.n(), k_star(g), t);
}

InstitutionSolution solve_t(const GameParams& g, const SolveOptions& options) {
  InstitutionSolution sol;
  sol.n = g.n();
  sol.k_star = k_star(g);
  sol.beta = beta(g);

  if (sol.k_star == g.n()) {
    sol.regime = Regime::FullParticipation;
    sol.t = 1.0;
    sol.p_agree = 1.0;
    sol.p_insider = 1.0;
    sol.p_freerider = 0.0;
    return sol;
  }

  sol.regime = Regime::Mixed;
  const ParticipationEquation lhs(g);
  const auto to_t = [](double x) { return std::isinf(x) ? 1.0 : x / (1.0 + x); };

  double lo = 0.0;
  double hi = options.initial_x_hi > 0.0 ? options.initial_x_hi : 1.0;
  int iter = 0;
  while (!(lhs(hi) > sol.beta)) {
    lo = hi;
    hi *= 2.0;
    if (++iter > options.max_iterations || std::isinf(hi)) {
      throw Error(ErrorKind::NonConvergence, "could not bracket root, x in [" +
                                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
  while (to_t(hi) - to_t(lo) >= options.t_tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || ++iter > options.max_iterations) {
      throw Error(ErrorKind::NonConvergence, "bisection stalled, t in [" +
                                                 std::to_string(to_t(lo)) + ", " +
                                                 std::to_string(to_t(hi)) + "]");
    }
    if (lhs(mid) < sol.beta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  sol.t = to_t(0.5 * (lo + hi));
  sol.bracket_width = to_t(hi) - to_t(lo);
  sol.iterations = iter;
  const auto p = participation_probabilities(g, sol.t);
  sol.p_agree = p.p_agree;
  sol.p_insider = p.p_insider;
  sol.p_freerider = p.p_freerider;
  return sol;
}

BetaLimitProfile beta_limit_profile(double d, const std::vector<int>& n_values) {
  BetaLimitProfile profile;
  for (int n : n_values) {
    try {
      const GameParams g(n, d + 2.0, d);
      profile.entries.push_back({n, beta(g), beta_bound(g)});
    } catch (const Error& e) {
      profile.skipped.push_back({n, e.kind()});
    }
  }
  return profile;
}

}  // namespace dilemma
