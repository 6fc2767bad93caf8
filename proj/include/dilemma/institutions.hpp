#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dilemma/game.hpp"

namespace dilemma {

enum class Regime { FullParticipation, Mixed };

constexpr std::string_view to_string(Regime r) {
  return r == Regime::FullParticipation ? "FullParticipation" : "Mixed";
}

/// Participation-stage solution of the institutional arrangement for one game.
struct InstitutionSolution {
  int n = 0;
  int k_star = 0;
  double beta = 0.0;
  Regime regime = Regime::FullParticipation;
  double t = 1.0;            // probability of joining the bargaining
  double p_agree = 1.0;      // some group of size >= k* forms
  double p_insider = 1.0;    // a given player is inside such a group
  double p_freerider = 0.0;  // a given player stays out while one forms
  double bracket_width = 0.0;  // final bisection bracket, in t
  int iterations = 0;
};

/// Incentive ratio (k*(d+1) - n d) / (d(n-1) - 1).
double beta(const GameParams& g) noexcept;

/// The same ratio built from payoffs:
/// (f(NC,k*-1) - f(C,0)) / (f(C,k*-1) - f(NC,k*-1)).
double beta_from_payoffs(const GameParams& g);

/// Upper envelope (d+1) / (d(n-1) - 1) of beta, which goes to zero in n.
double beta_bound(const GameParams& g) noexcept;

/// Left-hand side G(x) = sum_{k=k*}^{n-1} C_k x^{k-k*+1} of the mixed
/// participation equation G(t/(1-t)) = beta, with C_{k*} = (n-k*)/k* and
/// C_k = C_{k-1} (n-k)/k. Coefficients are kept in log space when n is large.
class ParticipationEquation {
 public:
  static constexpr int kLogSpaceAbove = 300;

  explicit ParticipationEquation(const GameParams& g);
  ParticipationEquation(int n, int k_star);

  double operator()(double x) const;
  std::size_t terms() const noexcept { return coeffs_.size(); }
  bool log_space() const noexcept { return log_space_; }

 private:
  bool log_space_;
  std::vector<double> coeffs_;  // C_k, or log C_k in log space
};

struct SolveOptions {
  double initial_x_hi = 1.0;
  double t_tolerance = 1e-12;
  int max_iterations = 5000;
};

/// Solves the participation stage. k* = n gives full participation; otherwise
/// t = x/(1+x) with x the unique positive root of G(x) = beta, found by
/// bisection after doubling x_hi until G(x_hi) > beta.
InstitutionSolution solve_t(const GameParams& g, const SolveOptions& options = {});

struct ParticipationProbabilities {
  double p_agree;
  double p_insider;
  double p_freerider;
};

/// Agreement, insider and free-rider probabilities when each player joins
/// independently with probability t.
ParticipationProbabilities participation_probabilities(int n, int k_star, double t);
ParticipationProbabilities participation_probabilities(const GameParams& g, double t);

struct BetaLimitEntry {
  int n;
  double beta;
  double bound;
};

struct BetaLimitProfile {
  std::vector<BetaLimitEntry> entries;
  struct Skipped {
    int n;
    ErrorKind reason;
  };
  std::vector<Skipped> skipped;
};

/// beta(n) at fixed d over the given n values, in input order. beta does not
/// depend on c, so each game is built with c = d + 2. Invalid n are skipped
/// and reported.
BetaLimitProfile beta_limit_profile(double d, const std::vector<int>& n_values);

}  // namespace dilemma
