#include "adwpt/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "adwpt/error.hpp"
#include "adwpt/specfun.hpp"

namespace adwpt::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Largest s * P_p * sigma * G_M accepted by the Laplace kernels.
constexpr double kMaxLaplaceArgument = 1e6;

// log(n!) for n in [0, kMaxSectors].
const std::array<double, kMaxSectors + 1>& log_factorials() {
    static const auto table = [] {
        std::array<double, kMaxSectors + 1> t{};
        for (int n = 1; n <= kMaxSectors; ++n) {
            t[n] = t[n - 1] + std::log(static_cast<double>(n));
        }
        return t;
    }();
    return table;
}

double log_binomial(int n, int k) {
    const auto& lf = log_factorials();
    return lf[n] - lf[k] - lf[n - k];
}

// count * log_base with the convention 0 * log(0) = 0.
double log_power(int count, double log_base) {
    return count == 0 ? 0.0 : count * log_base;
}

double log_sum_exp(const std::vector<double>& logs) {
    double peak = kNegInf;
    for (double v : logs) peak = std::max(peak, v);
    if (peak == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

struct SectorStats {
    double x;  // lambda_s pi rho^2 / N
    double p;
    double q;
    double log_p;
    double log_q;
};

SectorStats sector_stats(const ScenarioParams& params) {
    const double x = params.sn_density * kPi * params.charging_radius * params.charging_radius /
                     params.sectors;
    const double q = -std::expm1(-x);
    return {x, std::exp(-x), q, -x, std::log(q)};
}

double log_eta_near(int m, int n, const SectorStats& st) {
    return log_binomial(n - 1, m - 1) + log_power(n - m, st.log_p) + log_power(m - 1, st.log_q);
}

double log_eta_far(int m, int n, const SectorStats& st) {
    if (m == 0) return log_power(n, st.log_p);
    return log_binomial(n - 1, m - 1) + log_power(n - m, st.log_p) + log_power(m, st.log_q);
}

void check_sectors_index(int m, int lo, int n, const char* what) {
    if (m < lo || m > n) {
        throw DomainError(std::string(what) + ": active sector count outside the valid range");
    }
}

// Sum_{j=1}^{N-1} p^j, the excess of the near gain moment over one.
double geometric_excess(double p, int n) {
    double term = 1.0;
    double sum = 0.0;
    for (int j = 1; j < n; ++j) {
        term *= p;
        sum += term;
    }
    return sum;
}

// Sum_{j=1}^{N-1} j p^j.
double geometric_first_moment(double p, int n) {
    double term = 1.0;
    double sum = 0.0;
    for (int j = 1; j < n; ++j) {
        term *= p;
        sum += j * term;
    }
    return sum;
}

// log of geometric_excess, finite whenever p > 0 in exact arithmetic.
double log_geometric_excess(const SectorStats& st, int n) {
    if (n < 2) return kNegInf;
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= n - 2; ++j) {
        term *= st.p;
        sum += term;
    }
    return st.log_p + std::log(sum);
}

double base_scale(const ScenarioParams& params) {
    return params.pb_power * params.pb_density * params.attenuation * kPi;
}

double check_laplace_argument(double s, double g, const ScenarioParams& params) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw DomainError("laplace: s must be nonnegative and finite");
    }
    const double c = s * params.pb_power * params.attenuation * g;
    if (c > kMaxLaplaceArgument) {
        throw RangeError("laplace: s * P_p * sigma * G_M above supported range");
    }
    return c;
}

// c^(2/alpha) gamma(1 - 2/alpha, y) with c = 0 handled.
double scaled_lower_gamma(double c, double y, double alpha) {
    if (c == 0.0 || y == 0.0) return 0.0;
    return std::pow(c, 2.0 / alpha) * specfun::lower_incomplete_gamma(1.0 - 2.0 / alpha, y);
}

// Exponent of the near-PB Laplace transform divided by -lambda_p pi eta.
double near_integral(double c, double rho, double alpha, Branch branch) {
    if (branch == Branch::RhoAtMostOne) {
        return rho * rho * -std::expm1(-c);
    }
    const double tail = c * std::pow(rho, -alpha);
    return rho * rho * -std::expm1(-tail) +
           (scaled_lower_gamma(c, c, alpha) - scaled_lower_gamma(c, tail, alpha));
}

// Exponent of the far-PB Laplace transform divided by +lambda_p pi eta.
double far_integral(double c, double rho, double alpha, Branch branch) {
    if (branch == Branch::RhoAtMostOne) {
        return rho * rho * -std::expm1(-c) - scaled_lower_gamma(c, c, alpha);
    }
    const double tail = c * std::pow(rho, -alpha);
    return rho * rho * -std::expm1(-tail) - scaled_lower_gamma(c, tail, alpha);
}

double log_laplace_near(double s, int m, const ScenarioParams& params, const SectorStats& st,
                        Branch branch) {
    const double c = check_laplace_argument(s, gain(m, params.sectors), params);
    const double eta = std::exp(log_eta_near(m, params.sectors, st));
    if (eta == 0.0 || c == 0.0) return 0.0;
    return -params.pb_density * kPi * eta *
           near_integral(c, params.charging_radius, params.path_loss_exp, branch);
}

double log_laplace_far(double s, int m, const ScenarioParams& params, const SectorStats& st,
                       Branch branch) {
    const double c = check_laplace_argument(s, gain(m, params.sectors), params);
    const double eta = std::exp(log_eta_far(m, params.sectors, st));
    if (eta == 0.0 || c == 0.0) return 0.0;
    return params.pb_density * kPi * eta *
           far_integral(c, params.charging_radius, params.path_loss_exp, branch);
}

// Sum_M eta_n^M (G_M^2 - 1) and Sum_M eta_f^M (G_M^2 - G_M), both nonnegative.
struct GainExcess {
    double near;
    double far;
};

std::vector<double> log_near_excess_terms(int n, const SectorStats& st) {
    std::vector<double> logs;
    for (int m = 1; m < n; ++m) {
        const double g = static_cast<double>(n) / m;
        logs.push_back(log_eta_near(m, n, st) + std::log(g * g - 1.0));
    }
    return logs;
}

std::vector<double> log_far_excess_terms(int n, const SectorStats& st) {
    std::vector<double> logs;
    for (int m = 1; m < n; ++m) {
        const double g = static_cast<double>(n) / m;
        logs.push_back(log_eta_far(m, n, st) + std::log(g * g - g));
    }
    return logs;
}

GainExcess gain_excess(int n, const SectorStats& st) {
    GainExcess out{0.0, 0.0};
    for (int m = 1; m < n; ++m) {
        const double g = static_cast<double>(n) / m;
        out.near += std::exp(log_eta_near(m, n, st)) * (g * g - 1.0);
        out.far += std::exp(log_eta_far(m, n, st)) * (g * g - g);
    }
    return out;
}

struct VarianceWeights {
    double near;
    double far;
};

VarianceWeights variance_weights(double rho, double alpha, Branch branch) {
    if (branch == Branch::RhoAtMostOne) {
        return {rho * rho, alpha / (alpha - 1.0) - rho * rho};
    }
    const double tail = std::pow(rho, 2.0 - 2.0 * alpha);
    return {(alpha - tail) / (alpha - 1.0), tail / (alpha - 1.0)};
}

double mean_weight(double rho, double alpha, Branch branch) {
    if (branch == Branch::RhoAtMostOne) return rho * rho;
    return (alpha - 2.0 * std::pow(rho, 2.0 - alpha)) / (alpha - 2.0);
}

void require_alpha(const ScenarioParams& params) {
    if (!(params.path_loss_exp > 2.0)) {
        throw ValidationError({"mean diverges (path_loss_exp must exceed 2)"});
    }
}

}  // namespace

Branch branch_of(double charging_radius) noexcept {
    return charging_radius <= 1.0 ? Branch::RhoAtMostOne : Branch::RhoAboveOne;
}

double sector_empty_prob(const ScenarioParams& params) {
    require_valid(params);
    return sector_stats(params).p;
}

double sector_active_prob(const ScenarioParams& params) {
    require_valid(params);
    return sector_stats(params).q;
}

double gain(int active_sectors, int sectors) {
    if (sectors < 1) throw DomainError("gain: sector count must be at least 1");
    check_sectors_index(active_sectors, 0, sectors, "gain");
    if (active_sectors == 0) return 1.0;
    return static_cast<double>(sectors) / active_sectors;
}

double reception_prob_near(int active_sectors, const ScenarioParams& params) {
    require_valid(params);
    check_sectors_index(active_sectors, 1, params.sectors, "reception_prob_near");
    return std::exp(log_eta_near(active_sectors, params.sectors, sector_stats(params)));
}

double reception_prob_far(int active_sectors, const ScenarioParams& params) {
    require_valid(params);
    check_sectors_index(active_sectors, 0, params.sectors, "reception_prob_far");
    return std::exp(log_eta_far(active_sectors, params.sectors, sector_stats(params)));
}

double alignment_prob_far(int active_sectors, int sectors) {
    check_sectors_index(active_sectors, 0, sectors, "alignment_prob_far");
    if (active_sectors == 0) return 1.0;
    return static_cast<double>(active_sectors) / sectors;
}

double activity_prob_far(int active_sectors, const ScenarioParams& params) {
    require_valid(params);
    const int n = params.sectors;
    check_sectors_index(active_sectors, 0, n, "activity_prob_far");
    const auto st = sector_stats(params);
    return std::exp(log_binomial(n, active_sectors) + log_power(n - active_sectors, st.log_p) +
                    log_power(active_sectors, st.log_q));
}

double laplace_near(double s, int active_sectors, const ScenarioParams& params) {
    return laplace_near(s, active_sectors, params, branch_of(params.charging_radius));
}

double laplace_near(double s, int active_sectors, const ScenarioParams& params, Branch branch) {
    require_valid(params);
    check_sectors_index(active_sectors, 1, params.sectors, "laplace_near");
    return std::exp(log_laplace_near(s, active_sectors, params, sector_stats(params), branch));
}

double laplace_far(double s, int active_sectors, const ScenarioParams& params) {
    return laplace_far(s, active_sectors, params, branch_of(params.charging_radius));
}

double laplace_far(double s, int active_sectors, const ScenarioParams& params, Branch branch) {
    require_valid(params);
    check_sectors_index(active_sectors, 0, params.sectors, "laplace_far");
    return std::exp(log_laplace_far(s, active_sectors, params, sector_stats(params), branch));
}

double log_laplace_total(double s, const ScenarioParams& params) {
    return log_laplace_total(s, params, branch_of(params.charging_radius));
}

double log_laplace_total(double s, const ScenarioParams& params, Branch branch) {
    require_valid(params);
    const auto st = sector_stats(params);
    double total = 0.0;
    for (int m = 1; m <= params.sectors; ++m) {
        total += log_laplace_near(s, m, params, st, branch);
    }
    for (int m = 0; m <= params.sectors; ++m) {
        total += log_laplace_far(s, m, params, st, branch);
    }
    return total;
}

double laplace_total(double s, const ScenarioParams& params) {
    return std::exp(log_laplace_total(s, params));
}

double laplace_total(double s, const ScenarioParams& params, Branch branch) {
    return std::exp(log_laplace_total(s, params, branch));
}

double laplace_omni(double s, const ScenarioParams& params) {
    require_valid(params);
    const double c = check_laplace_argument(s, 1.0, params);
    return std::exp(-params.pb_density * kPi * scaled_lower_gamma(c, c, params.path_loss_exp));
}

double mean_power_omni(const ScenarioParams& params) {
    require_alpha(params);
    const double alpha = params.path_loss_exp;
    return base_scale(params) * alpha / (alpha - 2.0);
}

double mean_power_excess(const ScenarioParams& params) {
    return mean_power_excess(params, branch_of(params.charging_radius));
}

double mean_power_excess(const ScenarioParams& params, Branch branch) {
    require_valid(params);
    const auto st = sector_stats(params);
    return base_scale(params) * mean_weight(params.charging_radius, params.path_loss_exp, branch) *
           geometric_excess(st.p, params.sectors);
}

double log_mean_power_excess(const ScenarioParams& params) {
    require_valid(params);
    const auto st = sector_stats(params);
    const auto branch = branch_of(params.charging_radius);
    return std::log(base_scale(params)) +
           std::log(mean_weight(params.charging_radius, params.path_loss_exp, branch)) +
           log_geometric_excess(st, params.sectors);
}

double mean_power(const ScenarioParams& params) {
    return mean_power(params, branch_of(params.charging_radius));
}

double mean_power(const ScenarioParams& params, Branch branch) {
    return mean_power_omni(params) + mean_power_excess(params, branch);
}

double variance_omni(const ScenarioParams& params) {
    require_alpha(params);
    const double alpha = params.path_loss_exp;
    const double a = params.pb_power * params.attenuation;
    return params.pb_density * a * a * kPi * alpha / (alpha - 1.0);
}

double variance_power_excess(const ScenarioParams& params) {
    return variance_power_excess(params, branch_of(params.charging_radius));
}

double variance_power_excess(const ScenarioParams& params, Branch branch) {
    require_valid(params);
    const auto st = sector_stats(params);
    const auto excess = gain_excess(params.sectors, st);
    const auto w = variance_weights(params.charging_radius, params.path_loss_exp, branch);
    const double a = params.pb_power * params.attenuation;
    return params.pb_density * a * a * kPi * (w.near * excess.near + w.far * excess.far);
}

double log_variance_power_excess(const ScenarioParams& params) {
    require_valid(params);
    const auto st = sector_stats(params);
    const int n = params.sectors;
    const auto w = variance_weights(params.charging_radius, params.path_loss_exp,
                                    branch_of(params.charging_radius));
    std::vector<double> logs;
    for (double v : log_near_excess_terms(n, st)) logs.push_back(v + std::log(w.near));
    for (double v : log_far_excess_terms(n, st)) logs.push_back(v + std::log(w.far));
    const double a = params.pb_power * params.attenuation;
    return std::log(params.pb_density * a * a * kPi) + log_sum_exp(logs);
}

double variance_power(const ScenarioParams& params) {
    return variance_power(params, branch_of(params.charging_radius));
}

double variance_power(const ScenarioParams& params, Branch branch) {
    return variance_omni(params) + variance_power_excess(params, branch);
}

double near_gain_moment(const ScenarioParams& params) {
    require_valid(params);
    return 1.0 + geometric_excess(sector_stats(params).p, params.sectors);
}

double far_gain_moment(const ScenarioParams& params) {
    require_valid(params);
    return 1.0;
}

std::pair<double, double> near_far_mean_ratios(const ScenarioParams& params) {
    return {near_gain_moment(params), far_gain_moment(params)};
}

GammaApprox gamma_approx(const ScenarioParams& params) {
    const double mean = mean_power(params);
    const double var = variance_power(params);
    if (!(mean > 0.0) || !(var > 0.0)) {
        throw DomainError("gamma_approx: mean and variance must be positive");
    }
    return {mean * mean / var, var / mean};
}

GammaApprox gamma_approx_omni(const ScenarioParams& params) {
    const double mean = mean_power_omni(params);
    const double var = variance_omni(params);
    if (!(mean > 0.0) || !(var > 0.0)) {
        throw DomainError("gamma_approx_omni: mean and variance must be positive");
    }
    return {mean * mean / var, var / mean};
}

double gamma_ccdf(double threshold, const GammaApprox& approx) {
    if (!(threshold >= 0.0)) {
        throw DomainError("gamma_ccdf: threshold must be nonnegative");
    }
    if (threshold == 0.0) return 1.0;
    const double x = threshold / approx.scale;
    // Beyond the kernel range the upper tail is far below double resolution.
    if (x > specfun::kMaxArgument) return 0.0;
    return specfun::regularized_gamma_q(approx.shape, x);
}

double gamma_ccdf(double threshold, const ScenarioParams& params) {
    return gamma_ccdf(threshold, gamma_approx(params));
}

double gamma_ccdf_omni(double threshold, const ScenarioParams& params) {
    return gamma_ccdf(threshold, gamma_approx_omni(params));
}

double derivative_scale(const ScenarioParams& params) { return 2.0 * base_scale(params); }

double d_mean_d_rho(const ScenarioParams& params) {
    return d_mean_d_rho(params, branch_of(params.charging_radius));
}

double d_mean_d_rho(const ScenarioParams& params, Branch branch) {
    require_valid(params);
    const auto st = sector_stats(params);
    const int n = params.sectors;
    const double rho = params.charging_radius;
    const double alpha = params.path_loss_exp;
    const double g = geometric_excess(st.p, n);
    const double m1 = geometric_first_moment(st.p, n);
    // d x / d rho, where p = exp(-x).
    const double dx = 2.0 * params.sn_density * kPi * rho / n;
    double bracket;
    if (branch == Branch::RhoAtMostOne) {
        bracket = rho * g - 0.5 * rho * rho * dx * m1;
    } else {
        bracket = std::pow(rho, 1.0 - alpha) * g - 0.5 * mean_weight(rho, alpha, branch) * dx * m1;
    }
    return derivative_scale(params) * bracket;
}

}  // namespace adwpt::analytic
