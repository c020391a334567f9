#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "adwpt/error.hpp"
#include "adwpt/experiments.hpp"

using namespace adwpt;
using namespace adwpt::experiments;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("git blob hash") {
    CHECK(git_blob_sha1("") == "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
    CHECK(git_blob_sha1("hello\n") == "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST_CASE("figure names") {
    CHECK(parse_figure("Fig4") == FigureId::Fig4);
    CHECK(parse_figure("fig7") == FigureId::Fig7);
    CHECK(parse_figure("2") == FigureId::Fig2);
    CHECK(to_string(FigureId::Fig8) == "Fig8");
    CHECK_THROWS(parse_figure("Fig9"));
}

TEST_CASE("csv layout") {
    Curve c{"x", {"a_m", "b_w"}, {{1.0, 2.5e-4}}};
    CHECK(to_csv(c) == "a_m,b_w\n1.0000000000e+00,2.5000000000e-04\n");
}

TEST_CASE("analytic figure is deterministic and complete") {
    ExperimentSpec spec;
    spec.figure = FigureId::Fig3;
    const auto a = compute_figure(spec);
    const auto b = compute_figure(spec);
    REQUIRE(a.curves.size() == 4);
    for (std::size_t i = 0; i < a.curves.size(); ++i) CHECK(to_csv(a.curves[i]) == to_csv(b.curves[i]));
    CHECK(a.curves[0].name == "fig3_mean_ls0.2");
}

TEST_CASE("figure files and manifest") {
    ExperimentSpec spec;
    spec.figure = FigureId::Fig2;
    spec.trials = 200;
    spec.output_dir = std::filesystem::temp_directory_path() / "adwpt_test_fig2";
    std::filesystem::remove_all(spec.output_dir);
    const auto out = run_figure(spec);
    REQUIRE(out.files.size() == 2);
    const auto m = nlohmann::json::parse(slurp(out.manifest));
    CHECK(m["seed"] == 12345);
    CHECK(m["trials"] == 200);
    for (const auto& f : m["files"]) {
        CHECK(f["sha1"] == git_blob_sha1(slurp(spec.output_dir / f["name"].get<std::string>())));
    }
    spec.threads = 2;
    const auto again = run_figure(spec);
    CHECK(slurp(again.manifest) == slurp(out.manifest));
    std::filesystem::remove_all(spec.output_dir);
}

TEST_CASE("overrides reach the scenario") {
    ExperimentSpec spec;
    spec.figure = FigureId::Fig3;
    spec.overrides = {"pb_density_per_m2=0.2"};
    CHECK(compute_figure(spec).params.pb_density == 0.2);
    spec.overrides = {"nope=1"};
    CHECK_THROWS_AS(compute_figure(spec), ConfigError);
}

TEST_CASE("paired comparison") {
    const std::vector<double> a{2.0, 3.0, 4.0, 5.0};
    const std::vector<double> b{1.0, 2.1, 2.9, 4.0};
    CHECK(compare_paired(a, b).verdict == Verdict::Greater);
    CHECK(compare_paired(b, a).verdict == Verdict::Less);
    CHECK(compare_paired(a, a).verdict == Verdict::Tie);
    CHECK_THROWS_AS(compare_paired(a, std::vector<double>{1.0}), DomainError);
}
