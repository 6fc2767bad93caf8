#include "dilemma/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dilemma {

double binomial_log_pmf(int n, double p, int j) {
  return std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) +
         j * std::log(p) + (n - j) * std::log1p(-p);
}

namespace {

// Sum of pmf(j) for j in [lo, hi].
double pmf_sum(int n, double p, int lo, int hi) {
  if (lo > hi) return 0.0;
  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int j = lo; j <= hi; ++j) logs.push_back(binomial_log_pmf(n, p, j));
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - top);
  return std::exp(top) * acc;
}

}  // namespace

double binomial_upper_tail(int n, double p, int k) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  double tail;
  if (k > n * p) {
    tail = pmf_sum(n, p, k, n);
  } else {
    tail = 1.0 - pmf_sum(n, p, 0, k - 1);
  }
  return std::clamp(tail, 0.0, 1.0);
}

}  // namespace dilemma
