#pragma once

namespace pptest {

// Standard normal density f.
double norm_pdf(double x);

// Standard normal distribution function F, computed through erfc so the
// tails keep full relative accuracy.
double norm_cdf(double x);

// Inverse of norm_cdf for p in (0,1). Wichura's AS 241 rational
// approximation polished with one Newton step; absolute error well below
// 1e-13 across the range.
double norm_quantile(double p);

// Upper quantile z_eps with P(N(0,1) > z_eps) = eps, eps in (0,1).
// Throws std::domain_error outside the open interval.
double z_quantile(double eps);

} // namespace pptest
