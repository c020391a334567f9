#include "adwpt/mcsim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "adwpt/analytic.hpp"
#include "adwpt/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adwpt::mcsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Refuse windows that would hold more PBs than this on average.
constexpr double kMaxWindowPbs = 5e7;
// Share of the omni variance allowed to come from beyond the core.
constexpr double kCoreVarianceShare = 1e-6;
// Relative standard deviation left out by the mean-field tail.
constexpr double kFarFieldStd = 1e-4;

// Non-singular path gain max(d, 1)^-alpha from the squared distance.
inline double path_gain(double d2, double alpha) {
    if (d2 <= kRefDistance * kRefDistance) return 1.0;
    if (alpha == 3.0) return 1.0 / (d2 * std::sqrt(d2));
    if (alpha == 4.0) return 1.0 / (d2 * d2);
    return std::pow(d2, -0.5 * alpha);
}

// Points bucketed by counting sort on a square grid.
class SnGrid {
public:
    void build(const std::vector<Point>& points, double half_width, double min_cell) {
        half_ = half_width;
        side_ = static_cast<int>(std::clamp(std::floor(2.0 * half_width / min_cell), 1.0, 256.0));
        cell_ = 2.0 * half_width / side_;
        inv_cell_ = 1.0 / cell_;
        const std::size_t cells = static_cast<std::size_t>(side_) * side_;
        start_.assign(cells + 1, 0);
        slot_.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            slot_[i] = cell_index(points[i]);
            ++start_[slot_[i] + 1];
        }
        for (std::size_t c = 0; c < cells; ++c) start_[c + 1] += start_[c];
        sorted_.resize(points.size());
        fill_ = start_;
        for (std::size_t i = 0; i < points.size(); ++i) {
            sorted_[fill_[slot_[i]]++] = points[i];
        }
    }

    template <class F>
    void for_each_within(Point center, double radius, F&& f) const {
        const double r2 = radius * radius;
        const int x0 = clamp_cell(center.x - radius);
        const int x1 = clamp_cell(center.x + radius);
        const int y0 = clamp_cell(center.y - radius);
        const int y1 = clamp_cell(center.y + radius);
        for (int cy = y0; cy <= y1; ++cy) {
            for (int cx = x0; cx <= x1; ++cx) {
                const std::size_t c = static_cast<std::size_t>(cy) * side_ + cx;
                for (int k = start_[c]; k < start_[c + 1]; ++k) {
                    const Point& p = sorted_[k];
                    const double dx = p.x - center.x;
                    const double dy = p.y - center.y;
                    const double d2 = dx * dx + dy * dy;
                    if (d2 <= r2) f(p, d2);
                }
            }
        }
    }

private:
    int clamp_cell(double v) const {
        const double c = std::floor((v + half_) * inv_cell_);
        return static_cast<int>(std::clamp(c, 0.0, static_cast<double>(side_ - 1)));
    }
    std::size_t cell_index(Point p) const {
        return static_cast<std::size_t>(clamp_cell(p.y)) * side_ + clamp_cell(p.x);
    }

    double half_ = 0.0;
    double cell_ = 1.0;
    double inv_cell_ = 1.0;
    int side_ = 1;
    std::vector<int> start_;
    std::vector<int> fill_;
    std::vector<std::size_t> slot_;
    std::vector<Point> sorted_;
};

// Sector index without the coincidence check; coincident points map to 0.
inline int sector_unchecked(Point pb, Point target, double orientation, int sectors) {
    const double dx = target.x - pb.x;
    const double dy = target.y - pb.y;
    if (dx == 0.0 && dy == 0.0) return 0;
    double angle = std::atan2(dy, dx) - orientation;
    angle = std::fmod(angle, kTwoPi);
    if (angle < 0.0) angle += kTwoPi;
    const int k = static_cast<int>(angle / (kTwoPi / sectors));
    return std::min(k, sectors - 1);
}

// Gain of the sector `target` only; same rules and stream use as pb_beam_state.
double beam_gain_toward(std::span<const int> counts, int target, Allocation allocation,
                        rng::Stream& tie_break) {
    const int n = static_cast<int>(counts.size());
    if (allocation == Allocation::ForcedOmni) return 1.0;
    int occupied = 0;
    long total = 0;
    int best = 0;
    int ties = 0;
    for (int k = 0; k < n; ++k) {
        if (counts[k] > 0) ++occupied;
        total += counts[k];
        if (counts[k] > best) {
            best = counts[k];
            ties = 1;
        } else if (counts[k] == best) {
            ++ties;
        }
    }
    if (occupied == 0) return 1.0;
    switch (allocation) {
        case Allocation::Uniform:
            return counts[target] > 0 ? static_cast<double>(n) / occupied : 0.0;
        case Allocation::Robust:
            return static_cast<double>(n) * counts[target] / static_cast<double>(total);
        case Allocation::Greedy: {
            if (counts[target] != best) return 0.0;
            if (ties == 1) return n;
            const auto pick = static_cast<int>(tie_break.below(static_cast<std::uint32_t>(ties)));
            int seen = 0;
            for (int k = 0; k < n; ++k) {
                if (counts[k] == best) {
                    if (seen == pick) return k == target ? static_cast<double>(n) : 0.0;
                    ++seen;
                }
            }
            return 0.0;
        }
        case Allocation::ForcedOmni:
            break;
    }
    return 1.0;
}

// Gain law of a PB beyond the core: exact marginal, PBs independent.
class OuterField {
public:
    OuterField(const ScenarioParams& params, Allocation allocation) : allocation_(allocation) {
        const int n = params.sectors;
        const double p = analytic::sector_empty_prob(params);
        const double q = analytic::sector_active_prob(params);
        const double all_empty = std::pow(p, n);
        switch (allocation) {
            case Allocation::ForcedOmni:
                push(1.0, 1.0);
                break;
            case Allocation::Uniform:
                push(1.0, all_empty);
                for (int m = 1; m <= n; ++m) {
                    push(analytic::gain(m, n), analytic::reception_prob_far(m, params));
                }
                break;
            case Allocation::Greedy:
                push(1.0, all_empty);
                push(n, -std::expm1(n * std::log(p)) / n);
                break;
            case Allocation::Robust: {
                push(1.0, all_empty);
                push(0.0, q);  // gain drawn from the sector counts
                const double x = params.sn_density * std::numbers::pi * params.charging_radius *
                                 params.charging_radius / n;
                own_.emplace(x);
                others_.emplace(x * (n - 1));
                sectors_ = n;
                break;
            }
        }
        keep_ = 0.0;
        for (double w : weight_) keep_ += w;
        double acc = 0.0;
        for (double& w : weight_) {
            acc += w / keep_;
            w = acc;
        }
        weight_.back() = 1.0;
    }

    double keep() const noexcept { return keep_; }

    double draw_gain(rng::Stream& stream) const {
        const double u = stream.uniform();
        std::size_t i = 0;
        while (i + 1 < weight_.size() && u >= weight_[i]) ++i;
        if (allocation_ == Allocation::Robust && i == 1) {
            const int own = own_->positive(stream);
            const int rest = (*others_)(stream);
            return static_cast<double>(sectors_) * own / static_cast<double>(own + rest);
        }
        return gain_[i];
    }

private:
    void push(double gain, double weight) {
        gain_.push_back(gain);
        weight_.push_back(weight);
    }

    Allocation allocation_;
    std::vector<double> gain_;
    std::vector<double> weight_;  // cumulative after construction
    double keep_ = 0.0;
    std::optional<rng::PoissonTable> own_;
    std::optional<rng::PoissonTable> others_;
    int sectors_ = 1;
};

double resolve_window(const ScenarioParams& params, const SimConfig& config, double rho) {
    double window = 0.0;
    if (config.window_radius) {
        window = *config.window_radius;
        if (!(window > 0.0) || !std::isfinite(window)) {
            throw ConfigError("window_radius must be positive");
        }
    } else {
        window = auto_window_radius(params, config.tail_epsilon);
    }
    if (window < rho) {
        throw ConfigError("window radius smaller than the charging radius");
    }
    if (params.pb_density * std::numbers::pi * window * window > kMaxWindowPbs) {
        throw ConfigError("window holds too many PBs; raise tail_epsilon or set window_radius");
    }
    return window;
}

double resolve_core(const ScenarioParams& params, const SimConfig& config, double window) {
    if (config.core_radius) {
        if (!(*config.core_radius > 0.0)) throw ConfigError("core_radius must be positive");
        return std::min(window, *config.core_radius);
    }
    return auto_core_radius(params, window);
}

double resolve_explicit(const ScenarioParams& params, const SimConfig& config, double core,
                        double window) {
    if (config.explicit_radius) {
        if (!(*config.explicit_radius > 0.0)) throw ConfigError("explicit_radius must be positive");
        return std::clamp(*config.explicit_radius, core, window);
    }
    return auto_explicit_radius(params, core, window);
}

void check_config(const SimConfig& config) {
    if (config.trials < 1) throw DomainError("trials must be at least 1");
    if (!(config.tail_epsilon > 0.0 && config.tail_epsilon < 1.0)) {
        throw ConfigError("tail_epsilon must lie in (0, 1)");
    }
}

struct TrialContext {
    ScenarioParams params;
    SimConfig config;
    double window = 0.0;
    double core = 0.0;
    double explicit_r = 0.0;
    double far_mean = 0.0;
    std::optional<OuterField> outer;
};

TrialContext make_context(const ScenarioParams& params, const SimConfig& config) {
    require_valid(params);
    check_config(config);
    TrialContext ctx{params, config, 0.0, 0.0, 0.0, 0.0, std::nullopt};
    ctx.window = resolve_window(params, config, params.charging_radius);
    ctx.core = resolve_core(params, config, ctx.window);
    ctx.explicit_r = resolve_explicit(params, config, ctx.core, ctx.window);
    ctx.far_mean = ring_mean_power(params, ctx.explicit_r, ctx.window);
    if (ctx.core < ctx.explicit_r) ctx.outer.emplace(params, config.allocation);
    return ctx;
}

struct Workspace {
    SnGrid grid;
    std::vector<int> counts;
};

double core_power(const NetworkSample& sample, const ScenarioParams& params,
                  Allocation allocation, rng::Stream& tie_break, Workspace& ws) {
    const int n = params.sectors;
    const double rho = params.charging_radius;
    const double scale = params.pb_power * params.attenuation;
    const Point origin{};
    if (allocation != Allocation::ForcedOmni) {
        ws.grid.build(sample.sn_points, sample.sn_window_radius, rho);
    }
    ws.counts.assign(n, 0);
    double total = 0.0;
    for (std::size_t i = 0; i < sample.pb_points.size(); ++i) {
        const Point pb = sample.pb_points[i];
        const double d2 = pb.x * pb.x + pb.y * pb.y;
        double g = 1.0;
        if (allocation != Allocation::ForcedOmni) {
            const double orient = sample.pb_orientations[i];
            std::fill(ws.counts.begin(), ws.counts.end(), 0);
            ws.grid.for_each_within(pb, rho, [&](const Point& sn, double) {
                ++ws.counts[sector_unchecked(pb, sn, orient, n)];
            });
            const int target = sector_unchecked(pb, origin, orient, n);
            g = beam_gain_toward(ws.counts, target, allocation, tie_break);
        }
        if (g > 0.0) total += scale * g * path_gain(d2, params.path_loss_exp);
    }
    return total;
}

double outer_power(const TrialContext& ctx, std::int64_t trial) {
    if (!ctx.outer) return 0.0;
    const auto& params = ctx.params;
    rng::Stream stream(ctx.config.master_seed, static_cast<std::uint64_t>(trial),
                       rng::kOuterField);
    const double inner2 = ctx.core * ctx.core;
    const double span2 = ctx.explicit_r * ctx.explicit_r - inner2;
    const double mean = params.pb_density * std::numbers::pi * span2 * ctx.outer->keep();
    const std::int64_t count = rng::poisson(stream, mean);
    const double scale = params.pb_power * params.attenuation;
    double total = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        const double r2 = inner2 + stream.uniform() * span2;
        const double g = ctx.outer->draw_gain(stream);
        total += scale * g * path_gain(r2, params.path_loss_exp);
    }
    return total;
}

double run_one(const TrialContext& ctx, std::int64_t trial, Workspace& ws) {
    const auto sample = sample_network(ctx.params, ctx.core, ctx.config.master_seed,
                                       static_cast<std::uint64_t>(trial));
    rng::Stream tie(ctx.config.master_seed, static_cast<std::uint64_t>(trial), rng::kTieBreak);
    return core_power(sample, ctx.params, ctx.config.allocation, tie, ws) + outer_power(ctx, trial) +
           ctx.far_mean;
}

template <class Body>
void parallel_trials(std::int64_t trials, int threads, Body&& body) {
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
    bool failed = false;
    std::string message;
#pragma omp parallel num_threads(team)
    {
        Workspace ws;
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t t = 0; t < trials; ++t) {
            try {
                body(t, ws);
            } catch (const std::exception& e) {
#pragma omp critical(adwpt_mcsim_error)
                {
                    failed = true;
                    message = e.what();
                }
            }
        }
    }
    if (failed) throw std::runtime_error(message);
#else
    (void)threads;
    Workspace ws;
    for (std::int64_t t = 0; t < trials; ++t) body(t, ws);
#endif
}

}  // namespace

std::string_view to_string(Allocation allocation) noexcept {
    switch (allocation) {
        case Allocation::Uniform: return "uniform";
        case Allocation::Greedy: return "greedy";
        case Allocation::Robust: return "robust";
        case Allocation::ForcedOmni: return "omni";
    }
    return "uniform";
}

Allocation parse_allocation(std::string_view name) {
    std::string lower(name);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "uniform") return Allocation::Uniform;
    if (lower == "greedy") return Allocation::Greedy;
    if (lower == "robust") return Allocation::Robust;
    if (lower == "omni" || lower == "forcedomni" || lower == "forced_omni") {
        return Allocation::ForcedOmni;
    }
    throw DomainError("unknown allocation scheme: " + std::string(name));
}

std::vector<Point> sample_disk_ppp(double density, double radius, rng::Stream& stream) {
    if (!(density >= 0.0) || !std::isfinite(density)) {
        throw DomainError("sample_disk_ppp: density must be nonnegative");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("sample_disk_ppp: radius must be positive");
    }
    const std::int64_t count = rng::poisson(stream, density * std::numbers::pi * radius * radius);
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(stream.uniform());
        const double theta = kTwoPi * stream.uniform();
        points.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return points;
}

int sector_of(Point pb, Point target, double orientation, int sectors) {
    if (sectors < 1) throw DomainError("sector_of: sector count must be positive");
    if (pb.x == target.x && pb.y == target.y) {
        throw DomainError("sector_of: target coincides with the PB");
    }
    return sector_unchecked(pb, target, orientation, sectors);
}

std::vector<double> pb_beam_state(std::span<const int> counts, Allocation allocation,
                                  rng::Stream& tie_break) {
    const int n = static_cast<int>(counts.size());
    if (n < 1) throw DomainError("pb_beam_state: need at least one sector");
    for (int c : counts) {
        if (c < 0) throw DomainError("pb_beam_state: negative count");
    }
    std::vector<double> gains(n, 1.0);
    if (allocation == Allocation::ForcedOmni) return gains;
    int occupied = 0;
    long total = 0;
    int best = 0;
    for (int c : counts) {
        occupied += c > 0;
        total += c;
        best = std::max(best, c);
    }
    if (occupied == 0) return gains;
    switch (allocation) {
        case Allocation::Uniform:
            for (int k = 0; k < n; ++k) gains[k] = counts[k] > 0 ? static_cast<double>(n) / occupied : 0.0;
            break;
        case Allocation::Robust:
            for (int k = 0; k < n; ++k) gains[k] = static_cast<double>(n) * counts[k] / total;
            break;
        case Allocation::Greedy: {
            std::vector<int> tied;
            for (int k = 0; k < n; ++k) {
                if (counts[k] == best) tied.push_back(k);
            }
            int pick = tied[0];
            if (tied.size() > 1) {
                pick = tied[tie_break.below(static_cast<std::uint32_t>(tied.size()))];
            }
            std::fill(gains.begin(), gains.end(), 0.0);
            gains[pick] = n;
            break;
        }
        case Allocation::ForcedOmni:
            break;
    }
    return gains;
}

NetworkSample sample_network(const ScenarioParams& params, double pb_window_radius,
                             std::uint64_t seed, std::uint64_t trial) {
    NetworkSample s;
    s.pb_window_radius = pb_window_radius;
    s.sn_window_radius = pb_window_radius + params.charging_radius;
    rng::Stream pb_stream(seed, trial, rng::kPbCore);
    rng::Stream sn_stream(seed, trial, rng::kSnCore);
    rng::Stream orient_stream(seed, trial, rng::kOrientation);
    s.pb_points = sample_disk_ppp(params.pb_density, pb_window_radius, pb_stream);
    auto sns = sample_disk_ppp(params.sn_density, s.sn_window_radius, sn_stream);
    s.sn_points.reserve(sns.size() + 1);
    s.sn_points.push_back({0.0, 0.0});
    s.sn_points.insert(s.sn_points.end(), sns.begin(), sns.end());
    const double width = kTwoPi / params.sectors;
    s.pb_orientations.resize(s.pb_points.size());
    for (double& o : s.pb_orientations) o = width * orient_stream.uniform();
    return s;
}

double received_power_origin(const NetworkSample& sample, const ScenarioParams& params,
                             Allocation allocation, rng::Stream& tie_break) {
    require_valid(params);
    Workspace ws;
    return core_power(sample, params, allocation, tie_break, ws);
}

double auto_window_radius(const ScenarioParams& params, double tail_epsilon) {
    require_valid(params);
    if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) {
        throw ConfigError("tail_epsilon must lie in (0, 1)");
    }
    const double alpha = params.path_loss_exp;
    // 2 pi lambda P sigma R^(2-a) / (a-2) <= eps * pi lambda P sigma a / (a-2)
    return std::max(kRefDistance, std::pow(2.0 / (tail_epsilon * alpha), 1.0 / (alpha - 2.0)));
}

double auto_core_radius(const ScenarioParams& params, double window_radius) {
    const double alpha = params.path_loss_exp;
    // Variance share of PBs beyond R is R^(2-2a) / a of the omni variance.
    const double r_var = std::pow(kCoreVarianceShare * alpha, 1.0 / (2.0 - 2.0 * alpha));
    return std::min(window_radius, std::max({4.0 * params.charging_radius, r_var, kRefDistance}));
}

double auto_explicit_radius(const ScenarioParams& params, double core_radius,
                            double window_radius) {
    const double alpha = params.path_loss_exp;
    // Std of the field beyond R over the omni mean, with E[g^2] <= N:
    // sqrt(N R^(2-2a) / (lambda_p pi (a-1))) (a-2) / a.
    const double ratio = kFarFieldStd * alpha / (alpha - 2.0);
    const double r = std::pow(ratio * ratio * params.pb_density * std::numbers::pi * (alpha - 1.0) /
                                  params.sectors,
                              1.0 / (2.0 - 2.0 * alpha));
    return std::clamp(r, core_radius, window_radius);
}

double ring_mean_power(const ScenarioParams& params, double inner, double outer) {
    if (!(outer > inner)) return 0.0;
    const double alpha = params.path_loss_exp;
    // Far-PB gain has mean one under every allocation.
    return 2.0 * std::numbers::pi * params.pb_density * params.pb_power * params.attenuation *
           (std::pow(inner, 2.0 - alpha) - std::pow(outer, 2.0 - alpha)) / (alpha - 2.0);
}

double trial_power(const ScenarioParams& params, const SimConfig& config, std::int64_t trial) {
    const auto ctx = make_context(params, config);
    Workspace ws;
    return run_one(ctx, trial, ws);
}

TrialSummary run_trials(const ScenarioParams& params, const SimConfig& config) {
    const auto ctx = make_context(params, config);
    std::vector<double> samples(static_cast<std::size_t>(config.trials));
    parallel_trials(config.trials, config.threads, [&](std::int64_t t, Workspace& ws) {
        samples[static_cast<std::size_t>(t)] = run_one(ctx, t, ws);
    });
    return summarize(std::move(samples), config.ccdf_thresholds);
}

TrialSummary run_trials_serial(const ScenarioParams& params, const SimConfig& config) {
    const auto ctx = make_context(params, config);
    std::vector<double> samples(static_cast<std::size_t>(config.trials));
    Workspace ws;
    for (std::int64_t t = 0; t < config.trials; ++t) {
        samples[static_cast<std::size_t>(t)] = run_one(ctx, t, ws);
    }
    return summarize(std::move(samples), config.ccdf_thresholds);
}

std::vector<std::pair<double, double>> empirical_ccdf(std::span<const double> samples,
                                                      std::span<const double> thresholds) {
    if (samples.empty()) throw DomainError("empirical_ccdf: no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> th(thresholds.begin(), thresholds.end());
    std::sort(th.begin(), th.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(th.size());
    const auto n = static_cast<double>(sorted.size());
    for (double t : th) {
        const auto below = std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
        out.emplace_back(t, static_cast<double>(static_cast<std::ptrdiff_t>(sorted.size()) - below) / n);
    }
    return out;
}

TrialSummary summarize(std::vector<double> samples, std::span<const double> thresholds) {
    if (samples.empty()) throw DomainError("summarize: no samples");
    TrialSummary s;
    const auto n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double v : samples) sum += v;
    s.mean = sum / n;
    double ss = 0.0;
    for (double v : samples) ss += (v - s.mean) * (v - s.mean);
    s.variance = samples.size() > 1 ? ss / (n - 1.0) : 0.0;
    s.mean_ci95 = 1.96 * std::sqrt(s.variance / n);
    if (!thresholds.empty()) s.ccdf = empirical_ccdf(samples, thresholds);
    s.samples = std::move(samples);
    return s;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (n < 1) throw DomainError("linear_grid: need at least one point");
    if (n == 1) return {lo};
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("log_grid: need 0 < lo <= hi");
    if (n < 1) throw DomainError("log_grid: need at least one point");
    if (n == 1) return {lo};
    std::vector<double> g(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> RadiusSweep::mean(double pb_power) const {
    const std::size_t j_count = radii.size();
    std::vector<double> out(j_count, 0.0);
    for (std::int64_t t = 0; t < trials; ++t) {
        for (std::size_t j = 0; j < j_count; ++j) out[j] += at(t, j);
    }
    for (double& v : out) v = v * pb_power / static_cast<double>(trials);
    return out;
}

std::vector<double> RadiusSweep::active_probability(double pb_power, double threshold) const {
    const std::size_t j_count = radii.size();
    std::vector<double> out(j_count, 0.0);
    for (std::int64_t t = 0; t < trials; ++t) {
        for (std::size_t j = 0; j < j_count; ++j) out[j] += (at(t, j) * pb_power >= threshold);
    }
    for (double& v : out) v /= static_cast<double>(trials);
    return out;
}

namespace {

// Adds a PB's gain schedule over the radius grid to a difference array.
// first[k] is the first grid index at which sector k holds an SN; sector
// `target` faces the origin.
void add_schedule(std::vector<double>& diff, std::span<int> first, int target, double weight) {
    const int n = static_cast<int>(first.size());
    const int j_count = static_cast<int>(diff.size()) - 1;
    const int origin_first = first[target];
    std::sort(first.begin(), first.end());
    diff[0] += weight;
    double prev = 1.0;
    for (int m = 1; m <= n; ++m) {
        const int start = first[m - 1];
        if (start >= j_count) break;
        if (m < n && first[m] == start) continue;
        const double g = origin_first <= start ? static_cast<double>(n) / m : 0.0;
        if (g != prev) {
            diff[start] += weight * (g - prev);
            prev = g;
        }
    }
}

}  // namespace

RadiusSweep sweep_radius(const ScenarioParams& params, std::vector<double> radii,
                         const SimConfig& config) {
    require_valid(params);
    check_config(config);
    if (config.allocation != Allocation::Uniform) {
        throw DomainError("sweep_radius: only the uniform allocation is supported");
    }
    if (radii.empty()) throw DomainError("sweep_radius: empty radius grid");
    for (std::size_t j = 0; j < radii.size(); ++j) {
        if (!(radii[j] > 0.0) || (j > 0 && !(radii[j] > radii[j - 1]))) {
            throw DomainError("sweep_radius: radii must be positive and increasing");
        }
    }
    const double rho_max = radii.back();
    ScenarioParams wide = params;
    wide.charging_radius = rho_max;
    const double window = resolve_window(params, config, rho_max);
    const double core = resolve_core(wide, config, window);
    const double explicit_r = resolve_explicit(params, config, core, window);
    const double far_unit = ring_mean_power(params, explicit_r, window) / params.pb_power;
    const int n = params.sectors;
    const std::size_t j_count = radii.size();

    std::vector<double> radii2(j_count);
    std::vector<double> active_q(j_count);
    for (std::size_t j = 0; j < j_count; ++j) {
        radii2[j] = radii[j] * radii[j];
        active_q[j] = -std::expm1(-params.sn_density * std::numbers::pi * radii2[j] / n);
    }
    const double unit = params.attenuation;
    const double alpha = params.path_loss_exp;

    RadiusSweep out;
    out.radii = radii;
    out.trials = config.trials;
    out.unit_power.assign(static_cast<std::size_t>(config.trials) * j_count, 0.0);

    parallel_trials(config.trials, config.threads, [&](std::int64_t t, Workspace& ws) {
        std::vector<double> diff(j_count + 1, 0.0);
        std::vector<int> first(n);
        std::vector<double> best(n);
        const auto trial = static_cast<std::uint64_t>(t);
        const auto sample = sample_network(wide, core, config.master_seed, trial);
        ws.grid.build(sample.sn_points, sample.sn_window_radius, rho_max);
        const Point origin{};
        for (std::size_t i = 0; i < sample.pb_points.size(); ++i) {
            const Point pb = sample.pb_points[i];
            const double orient = sample.pb_orientations[i];
            std::fill(best.begin(), best.end(), std::numeric_limits<double>::infinity());
            ws.grid.for_each_within(pb, rho_max, [&](const Point& sn, double d2) {
                const int k = sector_unchecked(pb, sn, orient, n);
                best[k] = std::min(best[k], d2);
            });
            for (int k = 0; k < n; ++k) {
                first[k] = static_cast<int>(
                    std::lower_bound(radii2.begin(), radii2.end(), best[k]) - radii2.begin());
            }
            const int target = sector_unchecked(pb, origin, orient, n);
            add_schedule(diff, first, target, unit * path_gain(pb.x * pb.x + pb.y * pb.y, alpha));
        }
        diff[0] += far_unit;
        if (core < explicit_r) {
            rng::Stream stream(config.master_seed, trial, rng::kOuterField);
            const double inner2 = core * core;
            const double span2 = explicit_r * explicit_r - inner2;
            const std::int64_t count =
                rng::poisson(stream, params.pb_density * std::numbers::pi * span2);
            for (std::int64_t i = 0; i < count; ++i) {
                const double r2 = inner2 + stream.uniform() * span2;
                // Sector k holds an SN within rho_j iff V_k <= 1 - exp(-lambda_s pi rho_j^2 / N).
                for (int k = 0; k < n; ++k) {
                    const double v = stream.uniform();
                    first[k] = static_cast<int>(
                        std::lower_bound(active_q.begin(), active_q.end(), v) - active_q.begin());
                }
                add_schedule(diff, first, 0, unit * path_gain(r2, alpha));
            }
        }
        double acc = 0.0;
        double* row = out.unit_power.data() + static_cast<std::size_t>(t) * j_count;
        for (std::size_t j = 0; j < j_count; ++j) {
            acc += diff[j];
            row[j] = std::max(acc, 0.0);
        }
    });
    return out;
}

std::string samples_csv(const TrialSummary& summary) {
    std::string out = "trial_index,power_w\n";
    char buf[64];
    for (std::size_t i = 0; i < summary.samples.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.10e\n", i, summary.samples[i]);
        out += buf;
    }
    return out;
}

}  // namespace adwpt::mcsim
