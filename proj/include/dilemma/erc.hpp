#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "dilemma/game.hpp"

namespace dilemma {

/// Weights of an ERC player on pecuniary payoff (a) and relative standing (b).
class ErcType {
 public:
  ErcType(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  /// a / b, or +infinity for a purely selfish player (b == 0).
  double ratio() const noexcept;

  bool operator==(const ErcType&) const = default;

 private:
  double a_;
  double b_;
};

/// One ERC type per player of a game.
class Population {
 public:
  Population(const GameParams& g, std::vector<ErcType> types);

  /// Everyone purely pecuniary (a = 1, b = 0).
  static Population selfish(const GameParams& g);

  std::size_t size() const noexcept { return types_.size(); }
  const ErcType& operator[](std::size_t i) const { return types_[i]; }
  const std::vector<ErcType>& types() const noexcept { return types_; }

 private:
  std::vector<ErcType> types_;
};

/// Player's share f / gamma of the total payout; 1/n when nothing is paid out.
double relative_share(double f, double gamma, int n);

/// a*q(f) + b*r(sigma) with q(f) = f and r(sigma) = -(sigma - 1/n)^2 / 2.
double adjusted_utility(const ErcType& t, double f, double sigma, int n) noexcept;

/// Critical ratio a/b at or below which a player prefers being one of k+1 NC
/// travellers to being a C traveller next to k of them. Defined for
/// 0 <= k <= n-1; at k = n-1 the payoff formula is evaluated one past its
/// range, as the welfare aggregate already does.
double delta(const GameParams& g, int k);

/// Left-hand side of the necessary condition for an NC coalition of size k,
///   n[(k-1) f(C,k) - k f(C,k-1)] + [n f(C,k-1) - (k-1) alpha][2k - n],
/// for 2 <= k <= n. Positive exactly when delta(k-1) is.
double necessary_condition_value(const GameParams& g, int k);

/// Adjusted utilities of the two options for a player who sees others_nc
/// other NC travellers, valued in the same convention as delta().
struct OptionUtilities {
  double nc;
  double c;
};
OptionUtilities option_utilities(const GameParams& g, const ErcType& t, int others_nc);

/// Slack applied toward acceptance in the equilibrium inequalities.
inline constexpr double kEquilibriumSlack = 1e-12;

/// Nash test for the NC coalition given by 0-based player indices.
bool is_equilibrium(const GameParams& g, const Population& pop, const std::set<int>& coalition);

/// All coalition sizes k for which the k lowest-ratio players (ties by index)
/// form an equilibrium. Any equilibrium coalition can be swapped for that
/// prefix without breaking the inequalities, so no size is missed.
std::vector<int> equilibrium_coalition_sizes(const GameParams& g, const Population& pop);

/// Brute force over all 2^n coalitions; only for cross-checking the prefix
/// search. Throws IndexOutOfRange for n > kMaxExhaustivePlayers.
inline constexpr int kMaxExhaustivePlayers = 15;
std::vector<int> equilibrium_coalition_sizes_exhaustive(const GameParams& g, const Population& pop);

}  // namespace dilemma
