#pragma once

namespace hdsnr {

/// Standard normal CDF, Phi(x) = P(Z <= x).
double normal_cdf(double x);

/// Standard normal quantile Phi^{-1}(p) for p in (0,1).
///
/// Uses Wichura's AS 241 (PPND16) rational approximation, accurate to
/// roughly 1e-16 relative over the full open interval.  Throws DomainError
/// for p outside (0,1).
double normal_quantile(double p);

}  // namespace hdsnr
