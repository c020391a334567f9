#pragma once

#include <functional>
#include <string_view>

#include "adwpt/scenario.hpp"

namespace adwpt::radopt {

/// Regime of the mean-power optimum (first three) or shape of the
/// active-probability curve (last three).
enum class CaseLabel { LowDensity, MediumDensity, HighDensity, Case1, Case2, Case3Boundary };

std::string_view to_string(CaseLabel label) noexcept;

struct RadiusOptimum {
    double radius = 0.0;     // m
    double objective = 0.0;  // W for the mean, probability for the active optimum
    CaseLabel case_label = CaseLabel::LowDensity;
    // Mean: derivative over 2 P_p lambda_p pi sigma. Active: rho F'(rho) / F(rho).
    double derivative_residual = 0.0;
    int evaluations = 0;
    int stationary_points = 0;  // sign changes of the derivative found by the scan
};

/// Bisection on [lo, hi]; f(lo) and f(hi) must differ in sign (a zero end is returned).
double find_root_bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Radius maximizing the mean received power.
RadiusOptimum optimal_radius_mean(const ScenarioParams& params);

/// Relative size of the mean derivative at rho = 1 below which the regime counts as medium.
inline constexpr double kMediumBand = 0.01;

/// An interior maximum of the active probability that beats the omni value by
/// less than this is reported as the omni-equivalent boundary case.
inline constexpr double kNegligibleGain = 1e-3;

/// Numerical d/drho of the Gamma-approximated active probability.
double d_gamma_ccdf_d_rho(const ScenarioParams& params, double threshold);

/// Radius where the sector-empty probability falls below 1e-8.
double active_radius_max(const ScenarioParams& params);

/// Radius maximizing the Gamma-approximated active probability.
RadiusOptimum optimal_radius_active(const ScenarioParams& params, double threshold);

}  // namespace adwpt::radopt
