#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dilemma/erc.hpp"
#include "dilemma/game.hpp"

namespace dilemma {

struct SimConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  int shards = 1;
};

/// Trials are cut into fixed blocks; block b draws from its own stream seeded
/// with seed + b. Shards only decide which thread runs which blocks, so the
/// counts do not depend on the shard count.
inline constexpr std::uint64_t kTrialsPerStream = 65536;
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64/block65536";

/// 64-bit generator for stream `index` of a run seeded with `seed`.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Estimate {
  std::string quantity;
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t count = 0;
};

struct SimReport {
  Estimate p_agree;
  Estimate p_insider;
  Estimate p_freerider;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int shards = 1;
  std::string rng_algorithm{kRngAlgorithm};

  bool operator==(const SimReport& o) const {
    const auto same = [](const Estimate& a, const Estimate& b) {
      return a.quantity == b.quantity && a.count == b.count && a.estimate == b.estimate &&
             a.stderr_ == b.stderr_;
    };
    return same(p_agree, o.p_agree) && same(p_insider, o.p_insider) &&
           same(p_freerider, o.p_freerider) && trials == o.trials && seed == o.seed &&
           rng_algorithm == o.rng_algorithm;
  }
};

/// Monte Carlo of the participation stage: each trial draws n independent
/// Bernoulli(t) participation decisions. Player 0 is the tagged player for the
/// insider and free-rider counts.
SimReport mc_participation(const GameParams& g, double t, const SimConfig& cfg);

struct DynamicsTrace {
  std::vector<int> nc_counts;          // NC count before round 1, then after each round
  std::vector<int> switches;           // players that changed strategy in each round
  OutcomeProfile final_profile;
  int rounds = 0;
  bool fixed_point = false;
};

/// Synchronous best-response rounds under the ERC adjusted utility. Every
/// player best-responds to the previous round's profile and keeps its current
/// strategy on a tie. Stops at the first round with no switch or after
/// max_rounds.
DynamicsTrace best_response_dynamics(const GameParams& g, const Population& pop,
                                     const OutcomeProfile& initial, int max_rounds);

/// Profile with each player NC with probability 1/2, from the given engine.
OutcomeProfile random_profile(int n, std::mt19937_64& rng);

}  // namespace dilemma
