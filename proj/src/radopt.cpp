#include "adwpt/radopt.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "adwpt/analytic.hpp"
#include "adwpt/error.hpp"

namespace adwpt::radopt {

namespace {

constexpr double kZeroDerivative = 1e-8;
constexpr double kRhoFloor = 1e-6;
constexpr double kRhoCeiling = 1e3;
constexpr double kGridLow = 1e-3;
constexpr int kGridPoints = 400;
constexpr int kRefine = 10;
// |rho F'/F| below this is numerical noise of the difference quotient.
constexpr double kFlat = 1e-8;

ScenarioParams at_radius(ScenarioParams params, double rho) {
    params.charging_radius = rho;
    return params;
}

std::vector<double> log_points(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

struct ActiveObjective {
    const ScenarioParams& params;
    double threshold;
    int evaluations = 0;

    double value(double rho) {
        ++evaluations;
        return analytic::gamma_ccdf(threshold, at_radius(params, rho));
    }
    double derivative(double rho) {
        const double h = 1e-5 * std::max(rho, 1.0);
        const double d1 = (value(rho + h) - value(rho - h)) / (2.0 * h);
        const double d2 = (value(rho + h / 2) - value(rho - h / 2)) / h;
        return (4.0 * d2 - d1) / 3.0;
    }
    // Sign of the derivative with noise-level slopes mapped to 0.
    int slope_sign(double rho) {
        const double d = derivative(rho);
        const double f = value(rho);
        const double rel = f > 0.0 ? rho * d / f : d;
        if (std::abs(rel) < kFlat) return 0;
        return rel > 0.0 ? 1 : -1;
    }
};

struct Stationary {
    double lo;
    double hi;
    bool is_max;
};

}  // namespace

std::string_view to_string(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::LowDensity: return "LowDensity";
        case CaseLabel::MediumDensity: return "MediumDensity";
        case CaseLabel::HighDensity: return "HighDensity";
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3Boundary: return "Case3Boundary";
    }
    return "";
}

double find_root_bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw BracketError("find_root_bisect: need lo < hi");
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw BracketError("find_root_bisect: no sign change on the bracket");
    }
    for (int i = 0; i < 400 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

RadiusOptimum optimal_radius_mean(const ScenarioParams& params) {
    require_valid(params);
    const double scale = analytic::derivative_scale(params);
    RadiusOptimum out;
    auto branch_derivative = [&](analytic::Branch branch) {
        return [&, branch](double rho) {
            ++out.evaluations;
            return analytic::d_mean_d_rho(at_radius(params, rho), branch) / scale;
        };
    };
    auto below = branch_derivative(analytic::Branch::RhoAtMostOne);
    auto above = branch_derivative(analytic::Branch::RhoAboveOne);
    const double d1 = below(1.0);

    if (std::abs(d1) <= kZeroDerivative) {
        out.radius = 1.0;
        out.case_label = CaseLabel::MediumDensity;
    } else if (d1 < 0.0) {
        out.radius = find_root_bisect(below, kRhoFloor, 1.0, 1e-15);
        out.case_label = CaseLabel::HighDensity;
    } else {
        double hi = 2.0;
        while (above(hi) >= 0.0) {
            hi *= 2.0;
            if (hi > kRhoCeiling) {
                throw ClassificationError("optimal_radius_mean: derivative stays positive up to 1e3 m");
            }
        }
        out.radius = find_root_bisect(above, 1.0, hi, 1e-14 * hi);
        out.case_label = CaseLabel::LowDensity;
    }
    if (out.case_label != CaseLabel::MediumDensity && std::abs(d1) <= kMediumBand) {
        out.case_label = CaseLabel::MediumDensity;
    }
    const auto best = at_radius(params, out.radius);
    out.objective = analytic::mean_power(best);
    out.derivative_residual = analytic::d_mean_d_rho(best) / scale;
    ++out.evaluations;
    return out;
}

double d_gamma_ccdf_d_rho(const ScenarioParams& params, double threshold) {
    require_valid(params);
    ActiveObjective obj{params, threshold};
    return obj.derivative(params.charging_radius);
}

double active_radius_max(const ScenarioParams& params) {
    require_valid(params);
    return std::sqrt(params.sectors * std::log(1e8) / (params.sn_density * std::numbers::pi));
}

RadiusOptimum optimal_radius_active(const ScenarioParams& params, double threshold) {
    require_valid(params);
    if (!(threshold > 0.0)) throw DomainError("optimal_radius_active: threshold must be positive");
    ActiveObjective obj{params, threshold};
    const double rho_max = active_radius_max(params);
    if (!(rho_max > kGridLow)) {
        throw ClassificationError("optimal_radius_active: search interval is empty");
    }
    const auto grid = log_points(kGridLow, rho_max, kGridPoints);

    std::vector<int> sign(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) sign[i] = obj.slope_sign(grid[i]);

    std::vector<Stationary> points;
    int last = -1;  // index of the previous nonflat probe
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
        if (sign[i] == 0) continue;
        if (last >= 0 && sign[i] != sign[last]) {
            // Refine the bracket to catch pairs of sign changes inside it.
            const auto sub = log_points(grid[last], grid[i], kRefine + 1);
            std::vector<int> s(sub.size());
            s.front() = sign[last];
            s.back() = sign[i];
            for (int k = 1; k < kRefine; ++k) s[k] = obj.slope_sign(sub[k]);
            int prev = 0;
            int prev_flip = -10;
            for (int k = 1; k <= kRefine; ++k) {
                if (s[k] == 0) continue;
                if (s[k] != s[prev]) {
                    if (k - prev_flip <= 1) {
                        throw ClassificationError(
                            "optimal_radius_active: stationary points closer than the grid resolves");
                    }
                    points.push_back({sub[prev], sub[k], s[prev] > 0});
                    prev_flip = k;
                }
                prev = k;
            }
        }
        last = i;
    }

    const double omni = analytic::gamma_ccdf_omni(threshold, params);
    const bool one_max = points.size() == 1 && points[0].is_max;
    const bool min_then_max = points.size() == 2 && !points[0].is_max && points[1].is_max;
    const bool one_min = points.size() == 1 && !points[0].is_max;
    if (!(points.empty() || one_max || min_then_max || one_min)) {
        throw ClassificationError("optimal_radius_active: unexpected pattern of " +
                                  std::to_string(points.size()) + " stationary points");
    }

    RadiusOptimum out;
    out.stationary_points = static_cast<int>(points.size());
    if (one_max || min_then_max) {
        const auto& sp = points.back();
        auto slope = [&](double rho) { return obj.derivative(rho); };
        const double rho = find_root_bisect(slope, sp.lo, sp.hi, 1e-12 * sp.hi);
        const double f = obj.value(rho);
        if (f - omni >= kNegligibleGain) {
            out.radius = rho;
            out.objective = f;
            out.derivative_residual = rho * obj.derivative(rho) / f;
            out.case_label = one_max ? CaseLabel::Case1 : CaseLabel::Case2;
            out.evaluations = obj.evaluations;
            return out;
        }
    }
    out.case_label = CaseLabel::Case3Boundary;
    out.objective = omni;
    out.radius = obj.value(grid.back()) >= obj.value(grid.front()) ? grid.back() : grid.front();
    out.evaluations = obj.evaluations;
    return out;
}

}  // namespace adwpt::radopt
