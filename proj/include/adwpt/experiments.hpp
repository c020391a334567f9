#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adwpt/mcsim.hpp"
#include "adwpt/scenario.hpp"

namespace adwpt::experiments {

inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr std::string_view kVersion = "1.0.0";

enum class FigureId { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Fig8 };

/// Accepts "Fig2", "fig2" or "2".
FigureId parse_figure(std::string_view name);
std::string_view to_string(FigureId id) noexcept;

/// Scenario behind each figure before overrides.
ScenarioParams figure_defaults(FigureId id);
/// Monte Carlo trials per point (0 when the figure is purely analytic).
std::int64_t default_trials(FigureId id);

struct ExperimentSpec {
    FigureId figure = FigureId::Fig2;
    std::vector<std::string> overrides;  // key=value, scenario keys
    std::filesystem::path output_dir = ".";
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::int64_t> trials;
    int threads = 0;
};

/// One output table; the first column is x.
struct Curve {
    std::string name;
    std::vector<std::string> columns;  // header names with units
    std::vector<std::vector<double>> rows;
};

struct FigureData {
    FigureId figure = FigureId::Fig2;
    ScenarioParams params;
    std::int64_t trials = 0;
    std::vector<Curve> curves;
};

/// Computes every curve of a figure without touching the file system.
FigureData compute_figure(const ExperimentSpec& spec);

/// CSV text with a header row; values in %.10e.
std::string to_csv(const Curve& curve);

/// Hash git gives the blob with this content.
std::string git_blob_sha1(std::string_view content);

struct FileManifest {
    std::vector<std::filesystem::path> files;  // CSVs
    std::filesystem::path manifest;            // JSON
    std::string input_hash;
};

/// compute_figure, then one CSV per curve plus manifest.json in output_dir.
FileManifest run_figure(const ExperimentSpec& spec);

enum class Verdict { Greater, Less, Tie };
std::string_view to_string(Verdict v) noexcept;

/// Mean of a - b over paired samples with a 95% interval.
struct PairedComparison {
    double difference = 0.0;
    double ci95 = 0.0;
    Verdict verdict = Verdict::Tie;
};

PairedComparison compare_paired(std::span<const double> a, std::span<const double> b);

struct SchemeStats {
    mcsim::Allocation scheme = mcsim::Allocation::Uniform;
    double mean = 0.0;
    double mean_ci95 = 0.0;
    double active = 0.0;
    double active_ci95 = 0.0;
};

struct SchemePoint {
    double pb_power = 0.0;
    std::vector<SchemeStats> stats;  // uniform, greedy, robust
    PairedComparison mean_greedy_vs_robust;
    PairedComparison mean_robust_vs_uniform;
    PairedComparison active_robust_vs_uniform;
    PairedComparison active_uniform_vs_greedy;

    /// No ordering of the expected chains is significantly reversed.
    bool mean_order_holds() const;
    bool active_order_holds() const;
};

struct SchemeReport {
    double radius = 0.0;
    std::vector<SchemePoint> points;
};

/// Runs the three schemes once at P_p = 1 W with shared seeds and scales the
/// samples to every P_p; the charging radius is taken from params.
SchemeReport compare_schemes(const ScenarioParams& params, const std::vector<double>& pb_powers,
                             const mcsim::SimConfig& config);

}  // namespace adwpt::experiments
