#include "adwpt/experiments.hpp"

#include <boost/uuid/detail/sha1.hpp>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "adwpt/analytic.hpp"
#include "adwpt/config.hpp"
#include "adwpt/error.hpp"
#include "adwpt/radopt.hpp"

namespace adwpt::experiments {

namespace {

using mcsim::Allocation;

const std::vector<double> kFig3SnDensities = {0.2, 0.8, 1.6};
const std::vector<double> kFig4Powers = {1.0, 3.0, 10.0};
const std::vector<double> kSweepPowers = {2.0, 4.0, 6.0, 8.0};
const std::vector<double> kFig8Powers = {2.0, 4.0, 6.0, 8.0, 10.0};
constexpr int kMaxSectorsSwept = 8;

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> sn_density_sweep() {
    std::vector<double> out;
    for (int i = 1; i <= 16; ++i) out.push_back(0.1 * i);
    return out;
}

double proportion_ci(double p, std::int64_t n) {
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

ScenarioParams with_rho(ScenarioParams p, double rho) {
    p.charging_radius = rho;
    return p;
}

mcsim::SimConfig sim_config(const ExperimentSpec& spec, std::int64_t trials) {
    mcsim::SimConfig c;
    c.trials = trials;
    c.master_seed = spec.seed;
    c.threads = spec.threads;
    return c;
}

void fig2(FigureData& d, const ExperimentSpec& spec) {
    const auto thresholds = mcsim::linear_grid(1e-5, 1e-3, 50);
    Curve gamma{"fig2_gamma_ccdf", {"threshold_w", "probability"}, {}};
    const auto approx = analytic::gamma_approx(d.params);
    for (double t : thresholds) gamma.rows.push_back({t, analytic::gamma_ccdf(t, approx)});
    auto cfg = sim_config(spec, d.trials);
    cfg.ccdf_thresholds = thresholds;
    const auto summary = mcsim::run_trials(d.params, cfg);
    Curve mc{"fig2_empirical_ccdf", {"threshold_w", "probability", "ci95"}, {}};
    for (const auto& [t, p] : summary.ccdf) mc.rows.push_back({t, p, proportion_ci(p, d.trials)});
    d.curves.push_back(std::move(gamma));
    d.curves.push_back(std::move(mc));
}

void fig3(FigureData& d) {
    const auto radii = mcsim::log_grid(0.05, 10.0, 80);
    for (double ls : kFig3SnDensities) {
        auto p = d.params;
        p.sn_density = ls;
        Curve c{"fig3_mean_ls" + fmt_g(ls), {"rho_m", "mean_power_w"}, {}};
        for (double rho : radii) c.rows.push_back({rho, analytic::mean_power(with_rho(p, rho))});
        d.curves.push_back(std::move(c));
    }
    Curve omni{"fig3_omni", {"rho_m", "mean_power_w"}, {}};
    const double e_omni = analytic::mean_power_omni(d.params);
    for (double rho : radii) omni.rows.push_back({rho, e_omni});
    d.curves.push_back(std::move(omni));
}

void fig4(FigureData& d, const ExperimentSpec& spec) {
    const double rho_max = radopt::active_radius_max(d.params);
    const auto radii = mcsim::log_grid(1e-3, rho_max, 400);
    const double th = d.params.power_threshold;
    auto unit = d.params;
    unit.pb_power = 1.0;
    const auto sweep = mcsim::sweep_radius(unit, radii, sim_config(spec, d.trials));
    for (double pp : kFig4Powers) {
        auto p = d.params;
        p.pb_power = pp;
        const std::string tag = "_pp" + fmt_g(pp);
        Curve gamma{"fig4_gamma" + tag, {"rho_m", "active_probability"}, {}};
        for (double rho : radii) gamma.rows.push_back({rho, analytic::gamma_ccdf(th, with_rho(p, rho))});
        Curve mc{"fig4_mc" + tag, {"rho_m", "active_probability", "ci95"}, {}};
        const auto prob = sweep.active_probability(pp, th);
        for (std::size_t j = 0; j < radii.size(); ++j) {
            mc.rows.push_back({radii[j], prob[j], proportion_ci(prob[j], d.trials)});
        }
        Curve omni{"fig4_omni" + tag, {"rho_m", "active_probability"}, {}};
        const double f_omni = analytic::gamma_ccdf_omni(th, p);
        for (double rho : radii) omni.rows.push_back({rho, f_omni});
        d.curves.push_back(std::move(gamma));
        d.curves.push_back(std::move(mc));
        d.curves.push_back(std::move(omni));
    }
}

// Figs. 5 and 6: mean-optimal radius and maximized mean against a swept variable.
void mean_optimum_sweep(FigureData& d, const std::string& prefix, const std::string& x_name,
                        const std::vector<double>& xs, void (*set)(ScenarioParams&, double)) {
    Curve rho{prefix + "a_rho_star", {x_name, "rho_star_m"}, {}};
    std::vector<Curve> means;
    for (double pp : kSweepPowers) {
        means.push_back({prefix + "b_mean_star_pp" + fmt_g(pp), {x_name, "mean_power_w"}, {}});
    }
    for (double x : xs) {
        auto p = d.params;
        set(p, x);
        p.pb_power = 1.0;
        const auto opt = radopt::optimal_radius_mean(p);
        rho.rows.push_back({x, opt.radius});
        for (std::size_t i = 0; i < kSweepPowers.size(); ++i) {
            auto q = with_rho(p, opt.radius);
            q.pb_power = kSweepPowers[i];
            means[i].rows.push_back({x, analytic::mean_power(q)});
        }
    }
    d.curves.push_back(std::move(rho));
    for (auto& c : means) d.curves.push_back(std::move(c));
}

// Fig. 7: maximized Gamma-approximated active probability.
void active_optimum_sweep(FigureData& d, const std::string& name, const std::string& x_name,
                          const std::vector<double>& xs, void (*set)(ScenarioParams&, double)) {
    for (double pp : kSweepPowers) {
        Curve c{name + "_pp" + fmt_g(pp), {x_name, "active_probability"}, {}};
        for (double x : xs) {
            auto p = d.params;
            set(p, x);
            p.pb_power = pp;
            const auto opt = radopt::optimal_radius_active(p, p.power_threshold);
            c.rows.push_back({x, opt.objective});
        }
        d.curves.push_back(std::move(c));
    }
}

void set_sectors(ScenarioParams& p, double x) { p.sectors = static_cast<int>(x); }
void set_sn_density(ScenarioParams& p, double x) { p.sn_density = x; }

std::vector<double> sector_sweep() {
    std::vector<double> out;
    for (int n = 1; n <= kMaxSectorsSwept; ++n) out.push_back(n);
    return out;
}

void fig8(FigureData& d, const ExperimentSpec& spec) {
    const auto opt = radopt::optimal_radius_mean(d.params);
    const auto report =
        compare_schemes(with_rho(d.params, opt.radius), kFig8Powers, sim_config(spec, d.trials));
    const Allocation order[] = {Allocation::Uniform, Allocation::Greedy, Allocation::Robust};
    for (int s = 0; s < 3; ++s) {
        const std::string tag(mcsim::to_string(order[s]));
        Curve mean{"fig8_mean_" + tag, {"pb_power_w", "mean_power_w", "ci95_w"}, {}};
        Curve active{"fig8_active_" + tag, {"pb_power_w", "active_probability", "ci95"}, {}};
        for (const auto& pt : report.points) {
            const auto& st = pt.stats[s];
            mean.rows.push_back({pt.pb_power, st.mean, st.mean_ci95});
            active.rows.push_back({pt.pb_power, st.active, st.active_ci95});
        }
        d.curves.push_back(std::move(mean));
        d.curves.push_back(std::move(active));
    }
}

std::string input_text(const ExperimentSpec& spec, const FigureData& d) {
    std::string text = "figure=" + std::string(to_string(spec.figure)) + "\n";
    text += "seed=" + std::to_string(spec.seed) + "\n";
    text += "trials=" + std::to_string(d.trials) + "\n";
    text += config::to_text(d.params);
    return text;
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
    j["ref_distance_m"] = kRefDistance;
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << content;
    if (!out) throw ConfigError("write failed for " + path.string());
}

}  // namespace

FigureId parse_figure(std::string_view name) {
    std::string s(name);
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s.rfind("fig", 0) == 0) s = s.substr(3);
    if (s.size() == 1 && s[0] >= '2' && s[0] <= '8') return static_cast<FigureId>(s[0] - '2');
    throw ConfigError("unknown figure id '" + std::string(name) + "'");
}

std::string_view to_string(FigureId id) noexcept {
    static constexpr std::string_view names[] = {"Fig2", "Fig3", "Fig4", "Fig5",
                                                 "Fig6", "Fig7", "Fig8"};
    return names[static_cast<int>(id)];
}

ScenarioParams figure_defaults(FigureId id) {
    ScenarioParams p;  // P_p 5 W, rho 2 m, lambda_p 0.1, lambda_s 0.2, alpha 3, N 4, nu 0.1 m
    switch (id) {
        case FigureId::Fig2:
            break;
        case FigureId::Fig3:
            p.pb_power = 10.0;
            break;
        case FigureId::Fig4:
        case FigureId::Fig7:
        case FigureId::Fig8:
            p.power_threshold = 1e-4;
            break;
        case FigureId::Fig5:
        case FigureId::Fig6:
            break;
    }
    return p;
}

std::int64_t default_trials(FigureId id) {
    switch (id) {
        case FigureId::Fig2: return 50000;
        case FigureId::Fig4:
        case FigureId::Fig8: return 20000;
        default: return 0;
    }
}

FigureData compute_figure(const ExperimentSpec& spec) {
    FigureData d;
    d.figure = spec.figure;
    config::Entries entries;
    for (const auto& o : spec.overrides) config::apply_override(entries, o);
    d.params = config::to_params(entries, figure_defaults(spec.figure));
    d.trials = default_trials(spec.figure);
    if (d.trials > 0 && spec.trials) {
        if (*spec.trials < 1) throw ConfigError("trials must be at least 1");
        d.trials = *spec.trials;
    }
    switch (spec.figure) {
        case FigureId::Fig2: fig2(d, spec); break;
        case FigureId::Fig3: fig3(d); break;
        case FigureId::Fig4: fig4(d, spec); break;
        case FigureId::Fig5:
            mean_optimum_sweep(d, "fig5", "sectors", sector_sweep(), set_sectors);
            break;
        case FigureId::Fig6:
            mean_optimum_sweep(d, "fig6", "sn_density_per_m2", sn_density_sweep(), set_sn_density);
            break;
        case FigureId::Fig7:
            active_optimum_sweep(d, "fig7a_active_star", "sectors", sector_sweep(), set_sectors);
            active_optimum_sweep(d, "fig7b_active_star", "sn_density_per_m2", sn_density_sweep(),
                                 set_sn_density);
            break;
        case FigureId::Fig8: fig8(d, spec); break;
    }
    return d;
}

std::string to_csv(const Curve& curve) {
    std::string out;
    for (std::size_t i = 0; i < curve.columns.size(); ++i) {
        if (i) out += ',';
        out += curve.columns[i];
    }
    out += '\n';
    char buf[40];
    for (const auto& row : curve.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::snprintf(buf, sizeof buf, "%.10e", row[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string git_blob_sha1(std::string_view content) {
    boost::uuids::detail::sha1 h;
    const std::string header = "blob " + std::to_string(content.size()) + '\0';
    h.process_bytes(header.data(), header.size());
    h.process_bytes(content.data(), content.size());
    boost::uuids::detail::sha1::digest_type digest;
    h.get_digest(digest);
    char buf[41];
    for (int i = 0; i < 5; ++i) std::snprintf(buf + 8 * i, 9, "%08x", digest[i]);
    return std::string(buf, 40);
}

FileManifest run_figure(const ExperimentSpec& spec) {
    std::error_code ec;
    std::filesystem::create_directories(spec.output_dir, ec);
    if (ec || !std::filesystem::is_directory(spec.output_dir)) {
        throw ConfigError("cannot create output directory " + spec.output_dir.string());
    }
    const auto data = compute_figure(spec);
    FileManifest out;
    out.input_hash = git_blob_sha1(input_text(spec, data));

    nlohmann::ordered_json m;
    m["figure"] = std::string(to_string(spec.figure));
    m["version"] = std::string(kVersion);
    m["modules"] = {{"scenario", std::string(kVersion)}, {"specfun", std::string(kVersion)},
                    {"analytic", std::string(kVersion)}, {"mcsim", std::string(kVersion)},
                    {"radopt", std::string(kVersion)},   {"benchcli", std::string(kVersion)}};
    m["seed"] = spec.seed;
    m["trials"] = data.trials;
    m["overrides"] = spec.overrides;
    m["params"] = params_json(data.params);
    m["input_hash"] = out.input_hash;
    auto files = nlohmann::ordered_json::array();
    for (const auto& curve : data.curves) {
        const auto csv = to_csv(curve);
        const auto path = spec.output_dir / (curve.name + ".csv");
        write_file(path, csv);
        out.files.push_back(path);
        files.push_back({{"name", curve.name + ".csv"}, {"sha1", git_blob_sha1(csv)}});
    }
    m["files"] = files;
    out.manifest = spec.output_dir / "manifest.json";
    write_file(out.manifest, m.dump(2) + "\n");
    return out;
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Greater: return "greater";
        case Verdict::Less: return "less";
        case Verdict::Tie: return "tie";
    }
    return "tie";
}

PairedComparison compare_paired(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw DomainError("compare_paired: need two equally sized samples of length >= 2");
    }
    const auto n = static_cast<double>(a.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] - b[i];
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i] - mean;
        ss += d * d;
    }
    PairedComparison out;
    out.difference = mean;
    out.ci95 = 1.96 * std::sqrt(ss / (n - 1.0) / n);
    if (mean - out.ci95 > 0.0) {
        out.verdict = Verdict::Greater;
    } else if (mean + out.ci95 < 0.0) {
        out.verdict = Verdict::Less;
    }
    return out;
}

bool SchemePoint::mean_order_holds() const {
    return mean_greedy_vs_robust.verdict != Verdict::Less &&
           mean_robust_vs_uniform.verdict != Verdict::Less;
}

bool SchemePoint::active_order_holds() const {
    return active_robust_vs_uniform.verdict != Verdict::Less &&
           active_uniform_vs_greedy.verdict != Verdict::Less;
}

SchemeReport compare_schemes(const ScenarioParams& params, const std::vector<double>& pb_powers,
                             const mcsim::SimConfig& config) {
    require_valid(params);
    auto unit = params;
    unit.pb_power = 1.0;
    const Allocation order[] = {Allocation::Uniform, Allocation::Greedy, Allocation::Robust};
    std::vector<std::vector<double>> unit_samples;
    for (Allocation a : order) {
        auto cfg = config;
        cfg.allocation = a;
        cfg.ccdf_thresholds.clear();
        unit_samples.push_back(mcsim::run_trials(unit, cfg).samples);
    }
    SchemeReport report;
    report.radius = params.charging_radius;
    const double th = params.power_threshold;
    for (double pp : pb_powers) {
        if (!(pp > 0.0)) throw DomainError("compare_schemes: P_p must be positive");
        SchemePoint pt;
        pt.pb_power = pp;
        std::vector<std::vector<double>> power(3), active(3);
        for (int s = 0; s < 3; ++s) {
            for (double v : unit_samples[s]) {
                power[s].push_back(v * pp);
                active[s].push_back(v * pp >= th ? 1.0 : 0.0);
            }
            const auto sp = mcsim::summarize(power[s], {});
            const auto sa = mcsim::summarize(active[s], {});
            pt.stats.push_back({order[s], sp.mean, sp.mean_ci95, sa.mean, sa.mean_ci95});
        }
        pt.mean_greedy_vs_robust = compare_paired(power[1], power[2]);
        pt.mean_robust_vs_uniform = compare_paired(power[2], power[0]);
        pt.active_robust_vs_uniform = compare_paired(active[2], active[0]);
        pt.active_uniform_vs_greedy = compare_paired(active[0], active[1]);
        report.points.push_back(std::move(pt));
    }
    return report;
}

}  // namespace adwpt::experiments
