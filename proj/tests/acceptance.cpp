// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adwpt/analytic.hpp"
#include "adwpt/experiments.hpp"
#include "adwpt/mcsim.hpp"
#include "adwpt/radopt.hpp"
#include "oracles.hpp"

using namespace adwpt;
namespace an = adwpt::analytic;

namespace {

constexpr std::uint64_t kSeed = 12345;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!pass) return;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

ScenarioParams fig3(double rho, double ls) {
    ScenarioParams p;
    p.pb_power = 10.0;
    p.charging_radius = rho;
    p.sn_density = ls;
    return p;
}

// Random scenario in the ranges of the dominance sweep.
ScenarioParams random_params(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> alpha(2.1, 5.0);
    std::uniform_int_distribution<int> sectors(2, 8);
    std::uniform_real_distribution<double> log_density(std::log(0.01), std::log(2.0));
    std::uniform_real_distribution<double> log_rho(std::log(0.05), std::log(20.0));
    std::uniform_real_distribution<double> power(0.5, 20.0);
    ScenarioParams p;
    p.path_loss_exp = alpha(gen);
    p.sectors = sectors(gen);
    p.pb_density = std::exp(log_density(gen));
    p.sn_density = std::exp(log_density(gen));
    p.charging_radius = std::exp(log_rho(gen));
    p.pb_power = power(gen);
    return p;
}

Outcome laplace_vs_quadrature() {
    Outcome o;
    ScenarioParams p = experiments::figure_defaults(experiments::FigureId::Fig2);
    double worst = 0.0;
    for (double s : {1e1, 1e2, 1e3, 1e4}) {
        for (int m = 1; m <= p.sectors; ++m) {
            worst = std::max(worst, rel(an::laplace_near(s, m, p),
                                        std::exp(oracle::log_laplace_near(s, m, p))));
        }
        for (int m = 0; m <= p.sectors; ++m) {
            worst = std::max(worst, rel(an::laplace_far(s, m, p),
                                        std::exp(oracle::log_laplace_far(s, m, p))));
        }
        worst = std::max(worst, rel(an::laplace_total(s, p), std::exp(oracle::log_laplace_total(s, p))));
        worst = std::max(worst, rel(an::laplace_omni(s, p), std::exp(oracle::log_laplace_omni(s, p))));
    }
    if (worst > 1e-8) o.fail(fmt("max relative error %.3e > 1e-8", worst));
    o.note(fmt("max relative error %.3e", worst));
    return o;
}

struct MomentRun {
    double rho, ls;
    double mc_mean, mc_var, se;
    double mean, var;
};

// Shared by the mean and variance criteria.
const std::vector<MomentRun>& moment_runs(std::int64_t trials) {
    static std::vector<MomentRun> runs;
    if (!runs.empty()) return runs;
    mcsim::SimConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = kSeed;
    for (double ls : {0.2, 0.8, 1.6}) {
        for (double rho : {0.5, 1.0, 2.0, 4.0}) {
            const auto p = fig3(rho, ls);
            const auto s = mcsim::run_trials(p, cfg);
            runs.push_back({rho, ls, s.mean, s.variance,
                            std::sqrt(s.variance / static_cast<double>(trials)), an::mean_power(p),
                            an::variance_power(p)});
        }
    }
    return runs;
}

Outcome mean_validation(std::int64_t trials) {
    Outcome o;
    double worst = 0.0;
    for (const auto& r : moment_runs(trials)) {
        const double e = rel(r.mc_mean, r.mean);
        worst = std::max(worst, e);
        if (e > 0.02) o.fail(fmt("rho=%.1f ls=%.1f: relative error %.4f", r.rho, r.ls, e));
    }
    mcsim::SimConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = kSeed;
    cfg.allocation = mcsim::Allocation::ForcedOmni;
    const auto s = mcsim::run_trials(fig3(1.0, 0.2), cfg);
    const double se = std::sqrt(s.variance / static_cast<double>(trials));
    const double z = (s.mean - 5.9675e-4) / se;
    if (std::abs(z) > 3.0) o.fail(fmt("omni MC %.6e off 5.9675e-4 by %.2f SE", s.mean, z));
    o.note(fmt("max relative mean error %.4f; omni MC %.5e (%.2f SE from 5.9675e-4)", worst, s.mean, z));
    return o;
}

Outcome variance_validation(std::int64_t trials) {
    Outcome o;
    double worst = 0.0;
    std::string at;
    for (const auto& r : moment_runs(trials)) {
        const double e = rel(r.mc_var, r.var);
        if (e > worst) {
            worst = e;
            at = fmt(" at rho=%.1f ls=%.1f", r.rho, r.ls);
        }
        if (e > 0.05) o.fail(fmt("rho=%.1f ls=%.1f: relative error %.4f", r.rho, r.ls, e));
    }
    o.note(fmt("max relative variance error %.4f", worst) + at);
    return o;
}

Outcome gamma_fit(std::int64_t trials) {
    Outcome o;
    const auto p = experiments::figure_defaults(experiments::FigureId::Fig2);
    mcsim::SimConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = kSeed;
    cfg.ccdf_thresholds = mcsim::linear_grid(1e-5, 1e-3, 50);
    const auto s = mcsim::run_trials(p, cfg);
    const auto approx = an::gamma_approx(p);
    double worst = 0.0;
    double at = 0.0;
    for (const auto& [t, prob] : s.ccdf) {
        const double d = std::abs(an::gamma_ccdf(t, approx) - prob);
        if (d > worst) {
            worst = d;
            at = t;
        }
    }
    if (worst > 0.05) o.fail(fmt("max |gamma - empirical| %.4f > 0.05 at %.3e W", worst, at));
    o.note(fmt("max |gamma - empirical| %.4f at %.3e W", worst, at));
    return o;
}

Outcome branch_continuity() {
    Outcome o;
    std::mt19937_64 gen(kSeed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        auto p = random_params(gen);
        p.charging_radius = 1.0;
        const auto a = an::Branch::RhoAtMostOne;
        const auto b = an::Branch::RhoAboveOne;
        const double s = 1.0 / an::mean_power(p);
        worst = std::max({worst, rel(an::mean_power(p, a), an::mean_power(p, b)),
                          rel(an::variance_power(p, a), an::variance_power(p, b)),
                          rel(an::laplace_total(s, p, a), an::laplace_total(s, p, b))});
    }
    if (worst > 1e-9) o.fail(fmt("max relative branch gap %.3e > 1e-9", worst));
    o.note(fmt("max relative branch gap %.3e", worst));
    return o;
}

Outcome degeneracy() {
    Outcome o;
    double worst = 0.0;
    for (double rho : mcsim::linear_grid(0.1, 10.0, 100)) {
        auto p = fig3(rho, 0.8);
        p.sectors = 1;
        const double mean = an::mean_power_omni(p);
        worst = std::max({worst, rel(an::mean_power(p), mean),
                          rel(an::variance_power(p), an::variance_omni(p))});
        for (double s : {1.0 / mean, 10.0 / mean}) {
            worst = std::max(worst, rel(an::laplace_total(s, p), an::laplace_omni(s, p)));
        }
        for (double th : {0.5 * mean, 2.0 * mean}) {
            worst = std::max(worst, rel(an::gamma_ccdf(th, p), an::gamma_ccdf_omni(th, p)));
        }
    }
    if (worst > 1e-12) o.fail(fmt("N=1 deviates from omni by %.3e > 1e-12", worst));
    double limit = 0.0;
    for (double ls : {0.2, 0.8, 1.6}) {
        for (double rho : {0.01, 1e3}) {
            const auto p = fig3(rho, ls);
            const double e = rel(an::mean_power(p), an::mean_power_omni(p));
            limit = std::max(limit, e);
            if (e > 0.005) o.fail(fmt("rho=%g ls=%.1f: mean %.4f off omni", rho, ls, e));
        }
    }
    o.note(fmt("N=1 max deviation %.3e; rho limits within %.2e of omni", worst, limit));
    return o;
}

Outcome dominance() {
    Outcome o;
    std::mt19937_64 gen(kSeed + 1);
    double identity = 0.0;
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        const auto p = random_params(gen);
        if (!(an::mean_power_excess(p) > 0.0) || an::mean_power(p) < an::mean_power_omni(p) ||
            !(an::variance_power_excess(p) > 0.0) || an::variance_power(p) < an::variance_omni(p)) {
            ++bad;
        }
        const double e = oracle::empty_prob(p);
        const double pn = std::pow(e, p.sectors);
        double sum_near = 0.0;
        double sum_far = 0.0;
        double g_near = 0.0;
        double g_far = 0.0;
        for (int m = 1; m <= p.sectors; ++m) {
            sum_near += an::reception_prob_near(m, p);
            g_near += an::reception_prob_near(m, p) * an::gain(m, p.sectors);
        }
        for (int m = 0; m <= p.sectors; ++m) {
            sum_far += an::activity_prob_far(m, p);
            g_far += an::reception_prob_far(m, p) * an::gain(m, p.sectors);
        }
        identity = std::max({identity, std::abs(sum_near - 1.0), std::abs(sum_far - 1.0),
                             rel(g_near, -std::expm1(p.sectors * std::log(e)) / -std::expm1(std::log(e))),
                             std::abs(g_far - 1.0),
                             rel(an::near_gain_moment(p), (1.0 - pn) / (1.0 - e)),
                             std::abs(an::far_gain_moment(p) - 1.0)});
    }
    if (bad > 0) o.fail(std::to_string(bad) + " of 200 scenarios not strictly above omni");
    if (identity > 1e-12) o.fail(fmt("identity residual %.3e > 1e-12", identity));
    o.note(fmt("200/200 strictly above omni; identity residual %.3e", identity));
    return o;
}

Outcome mean_optimum_cases() {
    Outcome o;
    const double densities[] = {0.2, 0.8, 1.6};
    std::string summary;
    for (int i = 0; i < 3; ++i) {
        auto p = fig3(1.0, densities[i]);
        const auto opt = radopt::optimal_radius_mean(p);
        const bool in = i == 0 ? opt.radius > 1.0 : i == 1 ? std::abs(opt.radius - 1.0) <= 0.05
                                                           : opt.radius < 1.0;
        if (!in) o.fail(fmt("ls=%.1f: rho*=%.6f outside the expected regime", densities[i], opt.radius));
        double worst = 0.0;
        for (double rho : mcsim::log_grid(0.01, 100.0, 1000)) {
            p.charging_radius = rho;
            worst = std::max(worst, (an::mean_power(p) - opt.objective) / opt.objective);
        }
        if (worst > 1e-9) o.fail(fmt("ls=%.1f: grid beats E* by %.3e", densities[i], worst));
        for (double pp : {2.0, 4.0, 6.0, 8.0}) {
            auto q = fig3(1.0, densities[i]);
            q.pb_power = pp;
            const auto r = radopt::optimal_radius_mean(q);
            if (rel(r.radius, opt.radius) > 1e-9) {
                o.fail(fmt("ls=%.1f P_p=%g: rho* moved to %.9f", densities[i], pp, r.radius));
            }
            if (rel(r.objective, opt.objective * pp / 10.0) > 1e-9) {
                o.fail(fmt("ls=%.1f P_p=%g: E* not linear in P_p", densities[i], pp));
            }
        }
        if (!summary.empty()) summary += ", ";
        summary += fmt("ls=%.1f rho*=%.4f", densities[i], opt.radius);
        summary += " " + std::string(radopt::to_string(opt.case_label));
    }
    o.note(summary);
    return o;
}

Outcome active_optimum_cases(std::int64_t trials) {
    Outcome o;
    ScenarioParams base = experiments::figure_defaults(experiments::FigureId::Fig4);
    const double th = 1e-4;
    const double rho_max = radopt::active_radius_max(base);
    const auto radii = mcsim::log_grid(1e-3, rho_max, 400);
    auto unit = base;
    unit.pb_power = 1.0;
    mcsim::SimConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = kSeed;
    const auto sweep = mcsim::sweep_radius(unit, radii, cfg);
    std::string summary;
    for (double pp : {1.0, 3.0, 10.0}) {
        auto p = base;
        p.pb_power = pp;
        const auto opt = radopt::optimal_radius_active(p, th);
        const double omni = an::gamma_ccdf_omni(th, p);
        if (pp == 1.0) {
            if (opt.case_label != radopt::CaseLabel::Case1 || opt.radius < 1.0 || opt.radius > 2.0 ||
                !(opt.objective > omni)) {
                o.fail(fmt("P_p=1: rho=%.4f F=%.4f omni=%.4f", opt.radius, opt.objective, omni) + " " +
                       std::string(radopt::to_string(opt.case_label)));
            }
        } else if (pp == 3.0) {
            if (opt.radius < 1.75 || opt.radius > 2.75) o.fail(fmt("P_p=3: rho=%.4f", opt.radius));
        } else if (opt.case_label != radopt::CaseLabel::Case3Boundary) {
            o.fail("P_p=10: label " + std::string(radopt::to_string(opt.case_label)));
        }
        const auto prob = sweep.active_probability(pp, th);
        const auto best = std::max_element(prob.begin(), prob.end()) - prob.begin();
        const double mc_rho = radii[static_cast<std::size_t>(best)];
        const double mc_max = prob[static_cast<std::size_t>(best)];
        if (opt.case_label == radopt::CaseLabel::Case3Boundary) {
            // No interior radius should beat both grid ends significantly.
            const double ends = std::max(prob.front(), prob.back());
            const double se = std::sqrt(ends * (1.0 - ends) / static_cast<double>(trials));
            if (mc_max > ends + 3.0 * se) {
                o.fail(fmt("P_p=10: MC interior max %.4f at %.3f beats the ends", mc_max, mc_rho));
            }
            summary += fmt(", P_p=%g boundary (MC interior gain %.4f, 3SE %.4f)", pp, mc_max - ends,
                           3.0 * se);
        } else {
            if (std::abs(mc_rho - opt.radius) > 0.5) {
                o.fail(fmt("P_p=%g: MC argmax %.3f vs %.3f", pp, mc_rho, opt.radius));
            }
            if (!summary.empty()) summary += ", ";
            summary += fmt("P_p=%g rho=%.3f (MC %.3f)", pp, opt.radius, mc_rho);
        }
    }
    o.note(summary);
    return o;
}

// True when xs never drops (or never rises, sign = -1) by more than tol relative.
bool monotone(const std::vector<double>& xs, double sign, double tol = 1e-9) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (sign * (xs[i] - xs[i - 1]) < -tol * std::max(std::abs(xs[i]), std::abs(xs[i - 1]))) {
            return false;
        }
    }
    return true;
}

Outcome trends() {
    Outcome o;
    const double th = 1e-4;
    const std::vector<double> powers = {1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 10.0};
    // Mean optimum against N and lambda_s.
    std::vector<double> rho_n, e_n, rho_s, e_s;
    for (int n = 2; n <= 8; ++n) {
        auto p = fig3(1.0, 0.2);
        p.sectors = n;
        const auto r = radopt::optimal_radius_mean(p);
        rho_n.push_back(r.radius);
        e_n.push_back(r.objective);
    }
    for (int i = 1; i <= 16; ++i) {
        const auto r = radopt::optimal_radius_mean(fig3(1.0, 0.1 * i));
        rho_s.push_back(r.radius);
        e_s.push_back(r.objective);
    }
    if (!monotone(rho_n, 1.0)) o.fail("rho* decreases with N");
    if (!monotone(e_n, 1.0)) o.fail("E* decreases with N");
    if (!monotone(rho_s, -1.0)) o.fail("rho* increases with lambda_s");
    if (!monotone(e_s, -1.0)) o.fail("E* increases with lambda_s");
    // Maximized active probability against N, lambda_s and P_p.
    for (double pp : powers) {
        std::vector<double> f_n, f_s;
        for (int n = 2; n <= 8; ++n) {
            ScenarioParams p;
            p.pb_power = pp;
            p.sectors = n;
            f_n.push_back(radopt::optimal_radius_active(p, th).objective);
        }
        for (int i = 1; i <= 16; ++i) {
            ScenarioParams p;
            p.pb_power = pp;
            p.sn_density = 0.1 * i;
            f_s.push_back(radopt::optimal_radius_active(p, th).objective);
        }
        if (!monotone(f_n, 1.0)) o.fail(fmt("P_p=%g: max active probability decreases with N", pp));
        if (!monotone(f_s, -1.0)) o.fail(fmt("P_p=%g: max active probability increases with lambda_s", pp));
    }
    for (int n = 2; n <= 8; n += 2) {
        for (double ls : {0.1, 0.4, 1.6}) {
            std::vector<double> f_p;
            for (double pp : powers) {
                ScenarioParams p;
                p.pb_power = pp;
                p.sectors = n;
                p.sn_density = ls;
                f_p.push_back(radopt::optimal_radius_active(p, th).objective);
            }
            if (!monotone(f_p, 1.0)) o.fail(fmt("N=%g ls=%.1f: max active probability decreases with P_p", double(n), ls));
        }
    }
    o.note(fmt("rho*(N) %.3f..%.3f, rho*(lambda_s) %.3f..", rho_n.front(), rho_n.back(), rho_s.front()) +
           fmt("%.3f; all trends hold", rho_s.back()));
    return o;
}

Outcome scheme_ordering(std::int64_t trials) {
    Outcome o;
    auto p = experiments::figure_defaults(experiments::FigureId::Fig8);
    const auto opt = radopt::optimal_radius_mean(p);
    p.charging_radius = opt.radius;
    mcsim::SimConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = kSeed;
    const auto report = experiments::compare_schemes(p, {2.0, 6.0, 10.0}, cfg);
    std::string summary = fmt("rho*=%.4f", opt.radius);
    for (const auto& pt : report.points) {
        using experiments::to_string;
        const std::string verdicts = std::string(to_string(pt.mean_greedy_vs_robust.verdict)) + "/" +
                                     std::string(to_string(pt.mean_robust_vs_uniform.verdict)) + " " +
                                     std::string(to_string(pt.active_robust_vs_uniform.verdict)) + "/" +
                                     std::string(to_string(pt.active_uniform_vs_greedy.verdict));
        if (!pt.mean_order_holds()) {
            o.fail(fmt("P_p=%g: mean order reversed (G-R %.3e, R-U %.3e)", pt.pb_power,
                       pt.mean_greedy_vs_robust.difference, pt.mean_robust_vs_uniform.difference));
        }
        if (!pt.active_order_holds()) {
            o.fail(fmt("P_p=%g: active order reversed (R-U %.4f, U-G %.4f)", pt.pb_power,
                       pt.active_robust_vs_uniform.difference, pt.active_uniform_vs_greedy.difference));
        }
        summary += fmt(", P_p=%g ", pt.pb_power) + verdicts;
    }
    o.note(summary);
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    Outcome o;
    const auto root = std::filesystem::temp_directory_path() / "adwpt_acceptance_det";
    std::filesystem::remove_all(root);
    int compared = 0;
    for (auto fig : {experiments::FigureId::Fig2, experiments::FigureId::Fig4, experiments::FigureId::Fig8}) {
        std::vector<std::vector<std::string>> runs;
        for (int threads : {1, 2, 4}) {
            experiments::ExperimentSpec spec;
            spec.figure = fig;
            spec.trials = 2000;
            spec.threads = threads;
            spec.output_dir = root / (std::string(experiments::to_string(fig)) + "_t" + std::to_string(threads));
            const auto out = experiments::run_figure(spec);
            std::vector<std::string> texts;
            for (const auto& f : out.files) texts.push_back(slurp(f));
            texts.push_back(slurp(out.manifest));
            runs.push_back(std::move(texts));
        }
        for (std::size_t i = 1; i < runs.size(); ++i) {
            if (runs[i] != runs[0]) o.fail(std::string(experiments::to_string(fig)) + " differs across threads");
        }
        compared += static_cast<int>(runs[0].size());
    }
    for (auto alloc : {mcsim::Allocation::Uniform, mcsim::Allocation::Greedy, mcsim::Allocation::Robust}) {
        mcsim::SimConfig cfg;
        cfg.trials = 2000;
        cfg.master_seed = kSeed;
        cfg.allocation = alloc;
        std::string first;
        for (int threads : {1, 3}) {
            cfg.threads = threads;
            const auto csv = mcsim::samples_csv(mcsim::run_trials(ScenarioParams{}, cfg));
            if (first.empty()) {
                first = csv;
            } else if (csv != first) {
                o.fail("simulate " + std::string(mcsim::to_string(alloc)) + " differs across threads");
            }
        }
        ++compared;
    }
    std::filesystem::remove_all(root);
    o.note(std::to_string(compared) + " outputs byte-identical for 1, 2, 3 and 4 threads");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> only;
    double scale = 1.0;
    app.add_option("--only", only, "Criterion numbers to run")->delimiter(',');
    app.add_option("--scale", scale, "Multiplier on Monte Carlo trial counts")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    const std::set<int> selected(only.begin(), only.end());
    auto trials = [&](std::int64_t n) {
        return std::max<std::int64_t>(100, static_cast<std::int64_t>(static_cast<double>(n) * scale));
    };

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"laplace transforms vs PGFL quadrature", laplace_vs_quadrature},
        {"MC mean vs closed form", [&] { return mean_validation(trials(20000)); }},
        {"MC variance vs closed form", [&] { return variance_validation(trials(20000)); }},
        {"gamma CCDF vs empirical CCDF", [&] { return gamma_fit(trials(50000)); }},
        {"branch continuity at rho = 1", branch_continuity},
        {"degenerate limits", degeneracy},
        {"dominance over omni and identities", dominance},
        {"mean-optimal radius regimes", mean_optimum_cases},
        {"active-probability optimum cases", [&] { return active_optimum_cases(trials(10000)); }},
        {"optimum trends", trends},
        {"allocation scheme ordering", [&] { return scheme_ordering(trials(20000)); }},
        {"thread-count determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !out.pass;
        std::printf("[%s] criterion %2d  %-38s %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id,
                    criteria[i].first.c_str(), out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
