#pragma once

#include <utility>

#include "adwpt/scenario.hpp"

namespace adwpt::analytic {

/// Which closed-form branch of the non-singular path-loss model applies.
enum class Branch { RhoAtMostOne, RhoAboveOne };

Branch branch_of(double charging_radius) noexcept;

/// Shape/scale pair of the moment-matched Gamma law.
struct GammaApprox {
    double shape = 0.0;  // k
    double scale = 0.0;  // theta, W
};

/// Probability that one sector of a charging region holds no SN: exp(-lambda_s pi rho^2 / N).
double sector_empty_prob(const ScenarioParams& params);

/// Complement 1 - p, computed with expm1.
double sector_active_prob(const ScenarioParams& params);

/// Beam gain with M of N sectors active: 1 when M = 0, N / M otherwise.
double gain(int active_sectors, int sectors);

/// Probability that a PB within rho of SN0 reaches it with gain G_M, M in [1, N].
double reception_prob_near(int active_sectors, const ScenarioParams& params);

/// Probability that a PB beyond rho reaches SN0 with gain G_M, M in [0, N].
double reception_prob_far(int active_sectors, const ScenarioParams& params);

/// Factors of reception_prob_far: alignment probability M / N (1 for M = 0) ...
double alignment_prob_far(int active_sectors, int sectors);
/// ... and the probability that a far PB has exactly M active sectors.
double activity_prob_far(int active_sectors, const ScenarioParams& params);

/// Laplace transform of the power from near PBs with gain G_M.
double laplace_near(double s, int active_sectors, const ScenarioParams& params);
double laplace_near(double s, int active_sectors, const ScenarioParams& params, Branch branch);

/// Laplace transform of the power from far PBs with gain G_M.
double laplace_far(double s, int active_sectors, const ScenarioParams& params);
double laplace_far(double s, int active_sectors, const ScenarioParams& params, Branch branch);

/// Laplace transform of the aggregate received power under adaptive beamforming.
double laplace_total(double s, const ScenarioParams& params);
double laplace_total(double s, const ScenarioParams& params, Branch branch);

/// log of laplace_total; finite even where the transform underflows.
double log_laplace_total(double s, const ScenarioParams& params);
double log_laplace_total(double s, const ScenarioParams& params, Branch branch);

/// Laplace transform under omnidirectional transfer.
double laplace_omni(double s, const ScenarioParams& params);

/// Mean received power at the typical SN, W.
double mean_power(const ScenarioParams& params);
double mean_power(const ScenarioParams& params, Branch branch);

/// Mean received power under omnidirectional transfer, W.
double mean_power_omni(const ScenarioParams& params);

/// mean_power - mean_power_omni, evaluated directly (never negative).
double mean_power_excess(const ScenarioParams& params);
double mean_power_excess(const ScenarioParams& params, Branch branch);

/// Natural log of mean_power_excess, stays finite when the excess underflows.
double log_mean_power_excess(const ScenarioParams& params);

/// Variance of the received power at the typical SN, W^2.
double variance_power(const ScenarioParams& params);
double variance_power(const ScenarioParams& params, Branch branch);

/// Variance under omnidirectional transfer, W^2.
double variance_omni(const ScenarioParams& params);

/// variance_power - variance_omni, evaluated directly (never negative).
double variance_power_excess(const ScenarioParams& params);
double variance_power_excess(const ScenarioParams& params, Branch branch);

/// Natural log of variance_power_excess.
double log_variance_power_excess(const ScenarioParams& params);

/// Near-PB and far-PB mean power ratios against omnidirectional transfer.
std::pair<double, double> near_far_mean_ratios(const ScenarioParams& params);

/// Sum over M of eta_n^M G_M, equal to (1 - p^N) / (1 - p).
double near_gain_moment(const ScenarioParams& params);
/// Sum over M of eta_f^M G_M, equal to 1.
double far_gain_moment(const ScenarioParams& params);

/// Moment-matched Gamma parameters; throws DomainError for zero variance.
GammaApprox gamma_approx(const ScenarioParams& params);
GammaApprox gamma_approx_omni(const ScenarioParams& params);

/// Gamma-approximated probability that the received power reaches threshold.
double gamma_ccdf(double threshold, const ScenarioParams& params);
double gamma_ccdf(double threshold, const GammaApprox& approx);
double gamma_ccdf_omni(double threshold, const ScenarioParams& params);

/// Analytic derivative of mean_power with respect to rho, W/m.
double d_mean_d_rho(const ScenarioParams& params);
double d_mean_d_rho(const ScenarioParams& params, Branch branch);

/// Natural scale 2 P_p lambda_p pi sigma of d_mean_d_rho.
double derivative_scale(const ScenarioParams& params);

}  // namespace adwpt::analytic
