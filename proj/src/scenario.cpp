#include "adwpt/scenario.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "adwpt/error.hpp"

namespace adwpt {

double sigma_from_wavelength(double wavelength) {
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw DomainError("wavelength must be positive and finite");
    }
    const double ratio = wavelength / (4.0 * std::numbers::pi * kRefDistance);
    return ratio * ratio;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

ValidationResult validate(const ScenarioParams& params) {
    ValidationResult result{params, {}};
    auto& errors = result.errors;

    auto positive = [&](double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0) {
            errors.push_back(std::string("nonpositive ") + name);
        }
    };

    if (!std::isfinite(params.path_loss_exp) || params.path_loss_exp <= 2.0) {
        errors.emplace_back("mean diverges (path_loss_exp must exceed 2)");
    }
    if (params.sectors < 1) {
        errors.emplace_back("invalid sector count");
    } else if (params.sectors > kMaxSectors) {
        errors.emplace_back("invalid sector count (more than 64 sectors)");
    }
    positive(params.pb_power, "pb_power");
    positive(params.pb_density, "pb_density");
    positive(params.sn_density, "sn_density");
    positive(params.charging_radius, "charging_radius");
    positive(params.attenuation, "attenuation");
    if (!std::isfinite(params.power_threshold) || params.power_threshold < 0.0) {
        errors.emplace_back("negative power_threshold");
    }
    if (params.wavelength) {
        const double nu = *params.wavelength;
        if (!std::isfinite(nu) || nu <= 0.0) {
            errors.emplace_back("nonpositive wavelength");
        } else if (std::isfinite(params.attenuation) && params.attenuation > 0.0) {
            const double derived = sigma_from_wavelength(nu);
            if (std::abs(derived - params.attenuation) > 1e-9 * derived) {
                errors.emplace_back("attenuation inconsistent with wavelength");
            }
        }
    }
    return result;
}

const ScenarioParams& require_valid(const ScenarioParams& params) {
    auto result = validate(params);
    if (!result.ok()) {
        throw ValidationError(std::move(result.errors));
    }
    return params;
}

ScenarioParams with_wavelength(ScenarioParams params, double wavelength) {
    params.attenuation = sigma_from_wavelength(wavelength);
    params.wavelength = wavelength;
    return params;
}

ScenarioParams with_attenuation(ScenarioParams params, double sigma) {
    params.attenuation = sigma;
    params.wavelength.reset();
    return params;
}

std::string describe(const ScenarioParams& p) {
    std::ostringstream os;
    os.precision(6);
    os << "P_p=" << p.pb_power << " W, lambda_p=" << p.pb_density
       << " /m^2, lambda_s=" << p.sn_density << " /m^2, N=" << p.sectors
       << ", rho=" << p.charging_radius << " m, alpha=" << p.path_loss_exp
       << ", sigma=" << to_db(p.attenuation) << " dB, P_th=" << p.power_threshold << " W";
    return os.str();
}

}  // namespace adwpt
