#pragma once

#include <cstdint>
#include <span>

namespace hybridrng {

// Two-sided normal p-value from a z statistic: erfc(|z| / sqrt(2)).
double normal_two_sided_p(double z);

// Upper tail of the chi-square distribution, Q(df/2, x/2) via the
// regularized incomplete gamma function.
double chisq_upper_p(double chi2, double df);

// Upper-tail mid-p for a Poisson(mean) count: P(X > observed) + pmf/2.
// The half-mass term keeps the p-value near-uniform despite discreteness.
double poisson_mid_p_upper(uint64_t observed, double mean);

// Asymptotic Kolmogorov tail: P(sqrt(n) * D_n > t) for large n.
double kolmogorov_q(double t);

// One-sample Kolmogorov-Smirnov p-value of `samples` against U(0,1).
double ks_uniform_p(std::span<const double> samples);

}  // namespace hybridrng
