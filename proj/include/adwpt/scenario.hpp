#pragma once

#include <optional>
#include <string>
#include <vector>

namespace adwpt {

/// Reference distance of the non-singular path-loss model, meters.
inline constexpr double kRefDistance = 1.0;

/// Largest sector count accepted by the analytic kernels.
inline constexpr int kMaxSectors = 64;

/// Physical and network constants of one scenario, SI units throughout.
struct ScenarioParams {
    double pb_power = 5.0;          // P_p, W
    double pb_density = 0.1;        // lambda_p, PB per m^2
    double sn_density = 0.2;        // lambda_s, SN per m^2
    int sectors = 4;                // N
    double charging_radius = 2.0;   // rho, m
    double path_loss_exp = 3.0;     // alpha
    double attenuation = 6.332573977646111e-05;  // sigma, linear; (0.1 / 4pi)^2
    double power_threshold = 1e-4;  // P_s^th, W
    std::optional<double> wavelength = 0.1;  // nu, m; only used to derive sigma

    bool operator==(const ScenarioParams&) const = default;
};

/// Result of validate(): the params are usable iff errors is empty.
struct ValidationResult {
    ScenarioParams params;
    std::vector<std::string> errors;

    bool ok() const noexcept { return errors.empty(); }
};

/// Free-space attenuation (nu / (4 pi d0))^2 in linear scale.
double sigma_from_wavelength(double wavelength);

/// 10 log10 of a linear power ratio.
double to_db(double linear);

/// Checks every scenario invariant and names each violation.
ValidationResult validate(const ScenarioParams& params);

/// Returns params unchanged or throws ValidationError listing every problem.
const ScenarioParams& require_valid(const ScenarioParams& params);

/// Sets the wavelength and the attenuation derived from it.
ScenarioParams with_wavelength(ScenarioParams params, double wavelength);

/// Sets the attenuation directly and forgets any wavelength.
ScenarioParams with_attenuation(ScenarioParams params, double sigma);

/// Human-readable one-line summary.
std::string describe(const ScenarioParams& params);

}  // namespace adwpt
