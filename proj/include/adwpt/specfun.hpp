#pragma once

namespace adwpt::specfun {

/// Largest shape parameter accepted by the incomplete gamma kernels.
inline constexpr double kMaxShape = 1e4;
/// Largest argument accepted by the incomplete gamma kernels.
inline constexpr double kMaxArgument = 1e6;

struct SpecFunResult {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Gamma function for k > 0 (Lanczos, g = 7). Throws RangeError on overflow (k > ~171.6).
double gamma_function(double k);

/// Natural log of the gamma function for k > 0.
double log_gamma(double k);

/// Lower incomplete gamma integral of t^(s-1) e^-t over [0, x].
///
/// Uses the power series below x = s + 1 and the Lentz continued fraction for
/// the upper tail above it. Never throws on non-convergence; check the flag.
SpecFunResult lower_incomplete_gamma_ex(double s, double x);

/// Same as lower_incomplete_gamma_ex but throws RangeError when not converged.
double lower_incomplete_gamma(double s, double x);

/// Upper incomplete gamma Gamma(s, x) = Gamma(s) - gamma(s, x).
double upper_incomplete_gamma(double s, double x);

/// Regularized lower incomplete gamma P(k, x) = gamma(k, x) / Gamma(k), in [0, 1].
double regularized_gamma_p(double k, double x);

/// Upper complement Q(k, x) = 1 - P(k, x), computed without cancellation.
double regularized_gamma_q(double k, double x);

}  // namespace adwpt::specfun
