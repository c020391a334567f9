// adwpt: closed forms, Monte Carlo and figure data for adaptive directional WPT.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "adwpt/analytic.hpp"
#include "adwpt/config.hpp"
#include "adwpt/error.hpp"
#include "adwpt/experiments.hpp"
#include "adwpt/mcsim.hpp"
#include "adwpt/radopt.hpp"

namespace {

using namespace adwpt;

struct Common {
    std::string config_path;
    std::vector<std::string> sets;
    std::uint64_t seed = experiments::kDefaultSeed;
    std::optional<std::int64_t> trials;
    std::string out_dir;
    std::string scheme = "uniform";
    int threads = 0;
};

ScenarioParams load_params(const Common& c) {
    config::Entries entries;
    if (!c.config_path.empty()) entries = config::read_file(c.config_path);
    for (const auto& s : c.sets) config::apply_override(entries, s);
    return config::to_params(entries);
}

nlohmann::ordered_json params_json(const ScenarioParams& p) {
    nlohmann::ordered_json j;
    j["pb_power_w"] = p.pb_power;
    j["pb_density_per_m2"] = p.pb_density;
    j["sn_density_per_m2"] = p.sn_density;
    j["sectors"] = p.sectors;
    j["charging_radius_m"] = p.charging_radius;
    j["path_loss_exp"] = p.path_loss_exp;
    if (p.wavelength) j["wavelength_m"] = *p.wavelength;
    j["sigma_linear"] = p.attenuation;
    j["power_threshold_w"] = p.power_threshold;
    return j;
}

int cmd_analytic(const Common& c) {
    const auto p = load_params(c);
    const auto g = analytic::gamma_approx(p);
    const auto [near_ratio, far_ratio] = analytic::near_far_mean_ratios(p);
    std::printf("%s\n", describe(p).c_str());
    std::printf("sigma_db               %.6f\n", to_db(p.attenuation));
    std::printf("mean_power_w           %.10e\n", analytic::mean_power(p));
    std::printf("mean_power_omni_w      %.10e\n", analytic::mean_power_omni(p));
    std::printf("variance_w2            %.10e\n", analytic::variance_power(p));
    std::printf("variance_omni_w2       %.10e\n", analytic::variance_omni(p));
    std::printf("near_mean_ratio        %.10e\n", near_ratio);
    std::printf("far_mean_ratio         %.10e\n", far_ratio);
    std::printf("gamma_shape            %.10e\n", g.shape);
    std::printf("gamma_scale_w          %.10e\n", g.scale);
    std::printf("active_probability     %.10e\n", analytic::gamma_ccdf(p.power_threshold, g));
    std::printf("active_probability_omni %.10e\n", analytic::gamma_ccdf_omni(p.power_threshold, p));
    std::printf("d_mean_d_rho_w_per_m   %.10e\n", analytic::d_mean_d_rho(p));
    return 0;
}

int cmd_simulate(const Common& c) {
    const auto p = load_params(c);
    mcsim::SimConfig cfg;
    cfg.trials = c.trials.value_or(20000);
    cfg.master_seed = c.seed;
    cfg.threads = c.threads;
    cfg.allocation = mcsim::parse_allocation(c.scheme);
    cfg.ccdf_thresholds = mcsim::linear_grid(1e-5, 1e-3, 50);
    const auto s = mcsim::run_trials(p, cfg);

    nlohmann::ordered_json j;
    j["seed"] = cfg.master_seed;
    j["trials"] = cfg.trials;
    j["allocation"] = std::string(mcsim::to_string(cfg.allocation));
    j["params"] = params_json(p);
    j["mean_w"] = s.mean;
    j["variance_w2"] = s.variance;
    j["mean_ci95_w"] = s.mean_ci95;
    j["mean_analytic_w"] = analytic::mean_power(p);
    j["variance_analytic_w2"] = analytic::variance_power(p);
    auto ccdf = nlohmann::ordered_json::array();
    for (const auto& [t, prob] : s.ccdf) ccdf.push_back({t, prob});
    j["ccdf"] = ccdf;
    const auto text = j.dump(2) + "\n";
    if (c.out_dir.empty()) {
        std::cout << text;
        return 0;
    }
    std::filesystem::create_directories(c.out_dir);
    std::ofstream(std::filesystem::path(c.out_dir) / "summary.json", std::ios::binary) << text;
    std::ofstream(std::filesystem::path(c.out_dir) / "samples.csv", std::ios::binary)
        << mcsim::samples_csv(s);
    std::printf("mean %.6e W  ci95 %.2e  variance %.6e W^2  (%lld trials)\n", s.mean, s.mean_ci95,
                s.variance, static_cast<long long>(cfg.trials));
    return 0;
}

int cmd_optimize_mean(const Common& c) {
    const auto p = load_params(c);
    const auto r = radopt::optimal_radius_mean(p);
    std::printf("rho_star_m       %.10f\n", r.radius);
    std::printf("mean_power_w     %.10e\n", r.objective);
    std::printf("case             %s\n", std::string(radopt::to_string(r.case_label)).c_str());
    std::printf("residual         %.3e\n", r.derivative_residual);
    std::printf("evaluations      %d\n", r.evaluations);
    return 0;
}

int cmd_optimize_active(const Common& c) {
    const auto p = load_params(c);
    const auto r = radopt::optimal_radius_active(p, p.power_threshold);
    std::printf("rho_star_m           %.10f\n", r.radius);
    std::printf("active_probability   %.10e\n", r.objective);
    std::printf("omni_probability     %.10e\n", analytic::gamma_ccdf_omni(p.power_threshold, p));
    std::printf("case                 %s\n", std::string(radopt::to_string(r.case_label)).c_str());
    std::printf("stationary_points    %d\n", r.stationary_points);
    std::printf("residual             %.3e\n", r.derivative_residual);
    std::printf("evaluations          %d\n", r.evaluations);
    return 0;
}

int cmd_figure(const Common& c, const std::string& id) {
    experiments::ExperimentSpec spec;
    spec.figure = experiments::parse_figure(id);
    spec.overrides = c.sets;
    spec.output_dir = c.out_dir.empty() ? std::string(".") : c.out_dir;
    spec.seed = c.seed;
    spec.trials = c.trials;
    spec.threads = c.threads;
    if (!c.config_path.empty()) {
        // File values first, --set after.
        auto entries = config::read_file(c.config_path);
        std::vector<std::string> merged;
        for (const auto& [k, v] : entries.values) merged.push_back(k + "=" + v.text);
        merged.insert(merged.end(), c.sets.begin(), c.sets.end());
        spec.overrides = merged;
    }
    const auto m = experiments::run_figure(spec);
    for (const auto& f : m.files) std::printf("%s\n", f.string().c_str());
    std::printf("%s\n", m.manifest.string().c_str());
    return 0;
}

// Quick invariant checks on one scenario.
int cmd_validate(const Common& c) {
    const auto p = load_params(c);
    int failures = 0;
    auto check = [&](const char* name, bool ok, double detail) {
        std::printf("%s %-34s %.3e\n", ok ? "PASS" : "FAIL", name, detail);
        failures += !ok;
    };
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };

    auto at_one = p;
    at_one.charging_radius = 1.0;
    using analytic::Branch;
    const double m_gap = rel(analytic::mean_power(at_one, Branch::RhoAtMostOne),
                             analytic::mean_power(at_one, Branch::RhoAboveOne));
    check("mean branch continuity", m_gap <= 1e-9, m_gap);
    const double v_gap = rel(analytic::variance_power(at_one, Branch::RhoAtMostOne),
                             analytic::variance_power(at_one, Branch::RhoAboveOne));
    check("variance branch continuity", v_gap <= 1e-9, v_gap);

    const double s = 1.0 / analytic::mean_power(p);
    const double l_gap = rel(analytic::laplace_total(s, at_one, Branch::RhoAtMostOne),
                             analytic::laplace_total(s, at_one, Branch::RhoAboveOne));
    check("laplace branch continuity", l_gap <= 1e-9, l_gap);

    if (p.sectors > 1) {
        check("mean exceeds omni", std::isfinite(analytic::log_mean_power_excess(p)),
              analytic::mean_power_excess(p));
        check("variance exceeds omni", std::isfinite(analytic::log_variance_power_excess(p)),
              analytic::variance_power_excess(p));
    }
    const double far = analytic::far_gain_moment(p);
    check("far gain moment is one", std::abs(far - 1.0) <= 1e-12, far - 1.0);
    double eta_n = 0.0;
    double eta_f = std::pow(analytic::sector_empty_prob(p), p.sectors);
    for (int m = 1; m <= p.sectors; ++m) {
        eta_n += analytic::reception_prob_near(m, p);
        eta_f += analytic::activity_prob_far(m, p);
    }
    check("near reception sums to one", std::abs(eta_n - 1.0) <= 1e-12, eta_n - 1.0);
    check("far activity sums to one", std::abs(eta_f - 1.0) <= 1e-12, eta_f - 1.0);
    auto up = p;
    auto down = p;
    up.charging_radius *= 1.0 + 1e-6;
    down.charging_radius *= 1.0 - 1e-6;
    const double d_num =
        (analytic::mean_power(up) - analytic::mean_power(down)) / (2e-6 * p.charging_radius);
    const double d_gap = std::abs(d_num - analytic::d_mean_d_rho(p)) / analytic::derivative_scale(p);
    check("mean derivative matches difference", d_gap <= 1e-6, d_gap);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive directional wireless power transfer: closed forms, simulation, optimization"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub, bool sim) {
        sub->add_option("--config", c.config_path, "key=value scenario file")->check(CLI::ExistingFile);
        sub->add_option("--set", c.sets, "override key=value (repeatable)");
        if (sim) {
            sub->add_option("--seed", c.seed, "master seed");
            sub->add_option("--trials", c.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
            sub->add_option("--out", c.out_dir, "output directory");
            sub->add_option("--threads", c.threads, "worker threads (0: all)")->check(CLI::NonNegativeNumber);
        }
    };
    auto* analytic_cmd = app.add_subcommand("analytic", "print closed-form metrics");
    add_common(analytic_cmd, false);
    auto* simulate_cmd = app.add_subcommand("simulate", "run Monte Carlo trials");
    add_common(simulate_cmd, true);
    simulate_cmd->add_option("--scheme", c.scheme, "uniform|greedy|robust|omni");
    auto* opt_mean = app.add_subcommand("optimize-mean", "radius maximizing the mean power");
    add_common(opt_mean, false);
    auto* opt_active = app.add_subcommand("optimize-active", "radius maximizing the active probability");
    add_common(opt_active, false);
    auto* figure_cmd = app.add_subcommand("figure", "write CSV data and manifest for a figure");
    std::string figure_id;
    figure_cmd->add_option("id", figure_id, "Fig2..Fig8")->required();
    add_common(figure_cmd, true);
    auto* validate_cmd = app.add_subcommand("validate", "run the invariant checks for a scenario");
    add_common(validate_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analytic_cmd) return cmd_analytic(c);
        if (*simulate_cmd) return cmd_simulate(c);
        if (*opt_mean) return cmd_optimize_mean(c);
        if (*opt_active) return cmd_optimize_active(c);
        if (*figure_cmd) return cmd_figure(c, figure_id);
        if (*validate_cmd) return cmd_validate(c);
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
