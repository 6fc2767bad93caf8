#include "dilemma/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace dilemma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Counts {
  std::uint64_t agree = 0;
  std::uint64_t insider = 0;
  std::uint64_t freerider = 0;
};

Counts run_block(int n, int ks, double t, std::uint64_t seed, std::uint64_t block,
                 std::uint64_t trials) {
  auto rng = make_stream(seed, block);
  Counts c;
  for (std::uint64_t i = 0; i < trials; ++i) {
    int joined = 0;
    bool tagged = false;
    for (int p = 0; p < n; ++p) {
      const bool in = unit_uniform(rng) < t;
      joined += in ? 1 : 0;
      if (p == 0) tagged = in;
    }
    if (joined >= ks) {
      ++c.agree;
      if (tagged) {
        ++c.insider;
      } else {
        ++c.freerider;
      }
    }
  }
  return c;
}

Estimate make_estimate(std::string name, std::uint64_t count, std::uint64_t trials) {
  Estimate e;
  e.quantity = std::move(name);
  e.count = count;
  e.estimate = static_cast<double>(count) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
  return e;
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed + index));
}

SimReport mc_participation(const GameParams& g, double t, const SimConfig& cfg) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorKind::OutOfRangeT, "t=" + std::to_string(t) + " outside [0, 1]");
  }
  const std::uint64_t trials = std::max<std::uint64_t>(cfg.trials, 1);
  const int shards = std::max(cfg.shards, 1);
  const int n = g.n();
  const int ks = k_star(g);

  const std::uint64_t blocks = (trials + kTrialsPerStream - 1) / kTrialsPerStream;
  std::vector<Counts> per_block(blocks);
  const auto work = [&](int shard) {
    for (std::uint64_t b = static_cast<std::uint64_t>(shard); b < blocks;
         b += static_cast<std::uint64_t>(shards)) {
      const std::uint64_t len = std::min(kTrialsPerStream, trials - b * kTrialsPerStream);
      per_block[b] = run_block(n, ks, t, cfg.seed, b, len);
    }
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s) pool.emplace_back(work, s);
  }

  Counts total;
  for (const auto& c : per_block) {
    total.agree += c.agree;
    total.insider += c.insider;
    total.freerider += c.freerider;
  }

  SimReport r;
  r.p_agree = make_estimate("p_agree", total.agree, trials);
  r.p_insider = make_estimate("p_insider", total.insider, trials);
  r.p_freerider = make_estimate("p_freerider", total.freerider, trials);
  r.trials = trials;
  r.seed = cfg.seed;
  r.shards = shards;
  return r;
}

DynamicsTrace best_response_dynamics(const GameParams& g, const Population& pop,
                                     const OutcomeProfile& initial, int max_rounds) {
  const auto n = static_cast<std::size_t>(g.n());
  if (initial.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "initial profile must have length n");
  }
  DynamicsTrace trace;
  OutcomeProfile current = initial;
  trace.nc_counts.push_back(current.nc_count());

  for (int round = 1; round <= std::max(max_rounds, 1); ++round) {
    const int nc_total = current.nc_count();
    OutcomeProfile next = current;
    int switched = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int others = nc_total - (current[i] == Strategy::NC ? 1 : 0);
      const auto u = option_utilities(g, pop[i], others);
      Strategy best = current[i];
      if (u.nc > u.c) best = Strategy::NC;
      if (u.c > u.nc) best = Strategy::C;
      if (best != current[i]) {
        next[i] = best;
        ++switched;
      }
    }
    current = std::move(next);
    trace.rounds = round;
    trace.switches.push_back(switched);
    trace.nc_counts.push_back(current.nc_count());
    if (switched == 0) {
      trace.fixed_point = true;
      break;
    }
  }
  trace.final_profile = std::move(current);
  return trace;
}

OutcomeProfile random_profile(int n, std::mt19937_64& rng) {
  std::vector<Strategy> s(static_cast<std::size_t>(n));
  for (auto& x : s) x = (rng() >> 63) != 0 ? Strategy::NC : Strategy::C;
  return OutcomeProfile(std::move(s));
}

}  // namespace dilemma
