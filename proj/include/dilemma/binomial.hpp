#pragma once

namespace dilemma {

/// P(X >= k) for X ~ Binomial(n, p). Sums whichever tail is lighter, with each
/// term formed in log space, so tiny tails at large n keep their relative
/// accuracy instead of cancelling against 1.
double binomial_upper_tail(int n, double p, int k);

/// log P(X = j) for X ~ Binomial(n, p), 0 < p < 1.
double binomial_log_pmf(int n, double p, int j);

}  // namespace dilemma
