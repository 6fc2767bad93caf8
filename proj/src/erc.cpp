#include "dilemma/erc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace dilemma {

ErcType::ErcType(double a, double b) : a_(a), b_(b) {
  if (!(a >= 0.0) || !(b >= 0.0) || (a == 0.0 && b == 0.0) || !std::isfinite(a) ||
      !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidType,
                "ERC weights must be finite, non-negative and not both zero (a=" +
                    std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
}

double ErcType::ratio() const noexcept {
  if (b_ == 0.0) return std::numeric_limits<double>::infinity();
  return a_ / b_;
}

Population::Population(const GameParams& g, std::vector<ErcType> types) : types_(std::move(types)) {
  if (types_.size() != static_cast<std::size_t>(g.n())) {
    throw Error(ErrorKind::LengthMismatch, "population has " + std::to_string(types_.size()) +
                                               " types for n=" + std::to_string(g.n()));
  }
}

Population Population::selfish(const GameParams& g) {
  return Population(g, std::vector<ErcType>(static_cast<std::size_t>(g.n()), ErcType(1.0, 0.0)));
}

double relative_share(double f, double gamma, int n) {
  if (gamma < 0.0) throw Error(ErrorKind::NegativeGamma, "gamma=" + std::to_string(gamma));
  if (gamma == 0.0) return 1.0 / n;
  return f / gamma;
}

namespace {

double comparative(double sigma, int n) noexcept {
  const double dev = sigma - 1.0 / n;
  return -0.5 * dev * dev;
}

// Relative shares of the two options at k other NC travellers.
double share_nc(const GameParams& g, int k) {
  return relative_share(payoff_formula(g, Strategy::NC, k + 1), social_welfare(g, k + 1), g.n());
}

double share_c(const GameParams& g, int k) {
  return relative_share(payoff_formula(g, Strategy::C, k), social_welfare(g, k), g.n());
}

}  // namespace

double adjusted_utility(const ErcType& t, double f, double sigma, int n) noexcept {
  return t.a() * f + t.b() * comparative(sigma, n);
}

double delta(const GameParams& g, int k) {
  const int n = g.n();
  if (k < 0 || k > n - 1) {
    throw Error(ErrorKind::OutOfRangeK,
                "delta needs 0 <= k <= n-1, got k=" + std::to_string(k));
  }
  const double denom = payoff_formula(g, Strategy::C, k) - payoff_formula(g, Strategy::NC, k + 1);
  if (!(denom > 0.0)) {
    throw Error(ErrorKind::DegenerateDenominator, "q(f(C,k)) - q(f(NC,k+1)) = " +
                                                      std::to_string(denom));
  }
  return (comparative(share_nc(g, k), n) - comparative(share_c(g, k), n)) / denom;
}

double necessary_condition_value(const GameParams& g, int k) {
  const int n = g.n();
  if (k < 2 || k > n) {
    throw Error(ErrorKind::OutOfRangeK,
                "necessary condition needs 2 <= k <= n, got k=" + std::to_string(k));
  }
  const double fc_k = payoff_formula(g, Strategy::C, k);
  const double fc_km1 = payoff_formula(g, Strategy::C, k - 1);
  return n * ((k - 1) * fc_k - k * fc_km1) +
         (n * fc_km1 - (k - 1) * g.alpha()) * static_cast<double>(2 * k - n);
}

OptionUtilities option_utilities(const GameParams& g, const ErcType& t, int others_nc) {
  if (others_nc < 0 || others_nc > g.n() - 1) {
    throw Error(ErrorKind::OutOfRangeK, "others_nc=" + std::to_string(others_nc));
  }
  const int n = g.n();
  return {
      adjusted_utility(t, payoff_formula(g, Strategy::NC, others_nc + 1), share_nc(g, others_nc), n),
      adjusted_utility(t, payoff_formula(g, Strategy::C, others_nc), share_c(g, others_nc), n),
  };
}

bool is_equilibrium(const GameParams& g, const Population& pop, const std::set<int>& coalition) {
  const int n = g.n();
  for (int i : coalition) {
    if (i < 0 || i >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "player index " + std::to_string(i));
    }
  }
  const int k = static_cast<int>(coalition.size());
  const double join_bound = k > 0 ? delta(g, k - 1) : 0.0;
  const double stay_bound = k < n ? delta(g, k) : 0.0;
  for (int i = 0; i < n; ++i) {
    const double ratio = pop[static_cast<std::size_t>(i)].ratio();
    if (coalition.contains(i)) {
      if (!(ratio <= join_bound + kEquilibriumSlack)) return false;
    } else {
      if (!(ratio >= stay_bound - kEquilibriumSlack)) return false;
    }
  }
  return true;
}

std::vector<int> equilibrium_coalition_sizes(const GameParams& g, const Population& pop) {
  const int n = g.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return pop[static_cast<std::size_t>(x)].ratio() < pop[static_cast<std::size_t>(y)].ratio();
  });

  std::vector<int> sizes;
  std::set<int> coalition;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) coalition.insert(order[static_cast<std::size_t>(k - 1)]);
    if (is_equilibrium(g, pop, coalition)) sizes.push_back(k);
  }
  return sizes;
}

std::vector<int> equilibrium_coalition_sizes_exhaustive(const GameParams& g, const Population& pop) {
  const int n = g.n();
  if (n > kMaxExhaustivePlayers) {
    throw Error(ErrorKind::IndexOutOfRange,
                "exhaustive search limited to n <= " + std::to_string(kMaxExhaustivePlayers));
  }
  std::set<int> found;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> coalition;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) coalition.insert(i);
    }
    if (is_equilibrium(g, pop, coalition)) found.insert(static_cast<int>(coalition.size()));
  }
  return {found.begin(), found.end()};
}

}  // namespace dilemma
