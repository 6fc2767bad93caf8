#pragma once

#include <cstddef>
#include <vector>

#include "dilemma/error.hpp"

namespace dilemma {

/// Binary action of a traveller: NC (no CAV, the cooperative move) or C.
enum class Strategy { NC, C };

/// Validated parameters (n, c, d) of the n-player CAV dilemma plus the
/// quantities derived from them. Construction is the only validation point;
/// every other function may assume a well-formed game.
class GameParams {
 public:
  /// Tolerance used to decide that n*d/(d+1) is an integer.
  static constexpr double kIntegerRatioTolerance = 1e-9;

  GameParams(int n, double c, double d);

  int n() const noexcept { return n_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  /// Cost imposed on society by one CAV traveller, d + 1.
  double e() const noexcept { return e_; }
  /// Per-player damage share e / n.
  double phi() const noexcept { return phi_; }
  /// Constant advantage of C over NC, d - phi.
  double alpha() const noexcept { return alpha_; }

 private:
  int n_;
  double c_;
  double d_;
  double e_;
  double phi_;
  double alpha_;
};

inline GameParams new_game(int n, double c, double d) { return GameParams(n, c, d); }

/// A pure strategy for each player; index i is player i (0-based).
class OutcomeProfile {
 public:
  OutcomeProfile() = default;
  explicit OutcomeProfile(std::vector<Strategy> strategies) : strategies_(std::move(strategies)) {}

  static OutcomeProfile uniform(int n, Strategy s) {
    return OutcomeProfile(std::vector<Strategy>(static_cast<std::size_t>(n), s));
  }
  /// First m players NC, the rest C.
  static OutcomeProfile with_nc_prefix(int n, int m);

  std::size_t size() const noexcept { return strategies_.size(); }
  Strategy operator[](std::size_t i) const { return strategies_[i]; }
  Strategy& operator[](std::size_t i) { return strategies_[i]; }
  const std::vector<Strategy>& strategies() const noexcept { return strategies_; }

  /// Number of NC players.
  int nc_count() const noexcept;

  bool operator==(const OutcomeProfile&) const = default;

 private:
  std::vector<Strategy> strategies_;
};

// Payoff f(s, k) where k counts the OTHER players choosing NC, 0 <= k <= n-1.
double payoff(const GameParams& g, Strategy s, int k);

// Same formula without the range check. The welfare aggregate and the delta
// ratio evaluate the payoff at argument n, one past the game's own range.
double payoff_formula(const GameParams& g, Strategy s, int k) noexcept;

/// payoff(C, k) - payoff(NC, k); identical for every k.
double payoff_difference(const GameParams& g) noexcept;

/// Total pecuniary payout n*f(C, m) - m*alpha for m NC players, 0 <= m <= n.
double social_welfare(const GameParams& g, int m);

/// Minimally effective number of NC travellers, floor(n d / (d+1)) + 1.
int k_star(const GameParams& g) noexcept;

struct StructureReport {
  bool dominance = false;        // C strictly better than NC at every k
  bool monotonicity = false;     // both payoff curves strictly increasing in k
  bool nonnegativity = false;    // every payoff >= 0
  bool pareto_relation = false;  // f(NC, n-1) > f(C, 0)
  bool desirability = false;     // social and individual desirability at every k
  bool k_star_sandwich = false;  // f(NC, k') vs f(C, 0) splits exactly at k' = k*-1

  bool all() const noexcept {
    return dominance && monotonicity && nonnegativity && pareto_relation && desirability &&
           k_star_sandwich;
  }
};

/// Evaluates every structural claim by looping over all k. Deliberately avoids
/// the closed forms so it can serve as an oracle for them.
StructureReport check_structure(const GameParams& g);

/// Player i's payoff in a profile, with k = number of other NC players.
double player_payoff(const GameParams& g, const OutcomeProfile& profile, std::size_t i);

/// True iff every player does at least as well under a as under b and someone
/// strictly better.
bool pareto_dominates(const GameParams& g, const OutcomeProfile& a, const OutcomeProfile& b);

}  // namespace dilemma
