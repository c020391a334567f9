#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adwpt/rng.hpp"
#include "adwpt/scenario.hpp"

namespace adwpt::mcsim {

/// Per-sector power split used by every PB.
enum class Allocation { Uniform, Greedy, Robust, ForcedOmni };

std::string_view to_string(Allocation allocation) noexcept;
/// Case-insensitive; throws DomainError on unknown names.
Allocation parse_allocation(std::string_view name);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// One PPP realization around the typical SN at the origin.
struct NetworkSample {
    std::vector<Point> pb_points;
    std::vector<Point> sn_points;  // sn_points[0] is the origin SN
    std::vector<double> pb_orientations;  // [0, 2pi/N)
    double pb_window_radius = 0.0;
    double sn_window_radius = 0.0;
};

struct SimConfig {
    std::int64_t trials = 20000;
    std::uint64_t master_seed = 12345;
    std::optional<double> window_radius;  // empty: AUTO
    Allocation allocation = Allocation::Uniform;
    double tail_epsilon = 1e-3;
    // Radius of the exactly simulated core; PBs beyond it use their exact
    // per-PB gain law without cross-PB correlation. Empty: auto_core_radius.
    std::optional<double> core_radius;
    // PBs beyond this radius enter through their expected power only.
    // Empty: auto_explicit_radius.
    std::optional<double> explicit_radius;
    int threads = 0;  // 0: OpenMP default
    std::vector<double> ccdf_thresholds;  // W
};

struct TrialSummary {
    std::vector<double> samples;  // W, indexed by trial
    double mean = 0.0;
    double variance = 0.0;   // unbiased sample variance, W^2
    double mean_ci95 = 0.0;  // half-width
    std::vector<std::pair<double, double>> ccdf;  // (threshold W, probability)
};

/// Homogeneous PPP on a centered disk.
std::vector<Point> sample_disk_ppp(double density, double radius, rng::Stream& stream);

/// Sector of pb's charging region that contains target; half-open sectors.
int sector_of(Point pb, Point target, double orientation, int sectors);

/// Intensity gain per sector for the given occupancy counts (size N).
/// Greedy ties are broken with tie_break.
std::vector<double> pb_beam_state(std::span<const int> counts, Allocation allocation,
                                  rng::Stream& tie_break);

/// Draws PBs in pb_window_radius and SNs in pb_window_radius + rho for one trial.
NetworkSample sample_network(const ScenarioParams& params, double pb_window_radius,
                             std::uint64_t seed, std::uint64_t trial);

/// Total power at the origin SN, W.
double received_power_origin(const NetworkSample& sample, const ScenarioParams& params,
                             Allocation allocation, rng::Stream& tie_break);

/// Smallest window whose truncated tail is below tail_epsilon of the omni mean.
double auto_window_radius(const ScenarioParams& params, double tail_epsilon);

/// Core radius beyond which PBs carry under 1e-6 of the omni variance (at least 4 rho).
double auto_core_radius(const ScenarioParams& params, double window_radius);

/// Radius beyond which the random part of the PB field has relative standard
/// deviation below 1e-4 of the omni mean; clamped to [core, window].
double auto_explicit_radius(const ScenarioParams& params, double core_radius,
                            double window_radius);

/// Expected power from PBs with distance in [inner, outer], any allocation, W.
double ring_mean_power(const ScenarioParams& params, double inner, double outer);

/// Sampled power of trial `trial`; identical in serial and parallel runs.
double trial_power(const ScenarioParams& params, const SimConfig& config, std::int64_t trial);

/// OpenMP-parallel trial loop.
TrialSummary run_trials(const ScenarioParams& params, const SimConfig& config);

/// Single-threaded reference of run_trials; same samples bit for bit.
TrialSummary run_trials_serial(const ScenarioParams& params, const SimConfig& config);

/// Fraction of samples >= each threshold, thresholds sorted ascending.
std::vector<std::pair<double, double>> empirical_ccdf(std::span<const double> samples,
                                                      std::span<const double> thresholds);

/// Mean, variance, CI and CCDF of a sample list.
TrialSummary summarize(std::vector<double> samples, std::span<const double> thresholds);

/// n points evenly spaced on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int n);
/// n points log-spaced on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

/// Uniform-allocation trials evaluated at every radius of a grid with common
/// random numbers. Powers are stored for P_p = 1 W; they scale linearly.
struct RadiusSweep {
    std::vector<double> radii;
    std::int64_t trials = 0;
    std::vector<double> unit_power;  // trial-major, trials x radii.size()

    double at(std::int64_t trial, std::size_t radius_index) const {
        return unit_power[static_cast<std::size_t>(trial) * radii.size() + radius_index];
    }
    /// Mean power per radius for PB power pb_power.
    std::vector<double> mean(double pb_power) const;
    /// Fraction of trials with power >= threshold per radius.
    std::vector<double> active_probability(double pb_power, double threshold) const;
};

RadiusSweep sweep_radius(const ScenarioParams& params, std::vector<double> radii,
                         const SimConfig& config);

/// CSV text "trial_index,power_w" for a summary.
std::string samples_csv(const TrialSummary& summary);

}  // namespace adwpt::mcsim
