#include "adwpt/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "adwpt/error.hpp"

namespace adwpt::config {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool is_known(std::string_view key) {
    const auto& keys = known_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

std::pair<std::string, std::string> split_pair(std::string_view text, int line) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("expected key=value, got '" + std::string(text) + "'", line);
    }
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line);
    if (!is_known(key)) throw ConfigError("unknown key '" + std::string(key) + "'", line);
    if (value.empty()) throw ConfigError("missing value for '" + std::string(key) + "'", line);
    return {std::string(key), std::string(value)};
}

double to_double(const std::string& key, const Entries::Value& v) {
    double out = 0.0;
    const char* first = v.text.data();
    const char* last = first + v.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("value of '" + key + "' is not a number: '" + v.text + "'", v.line);
    }
    return out;
}

int to_int(const std::string& key, const Entries::Value& v) {
    int out = 0;
    const char* first = v.text.data();
    const char* last = first + v.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("value of '" + key + "' is not an integer: '" + v.text + "'", v.line);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "pb_power_w",       "pb_density_per_m2", "sn_density_per_m2",
        "sectors",          "charging_radius_m", "path_loss_exp",
        "wavelength_m",     "sigma_linear",      "power_threshold_w"};
    return keys;
}

Entries parse(std::string_view text) {
    Entries out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        auto [key, value] = split_pair(line, line_no);
        if (out.values.count(key)) {
            throw ConfigError("duplicate key '" + key + "'", line_no);
        }
        out.values[key] = {value, line_no};
    }
    return out;
}

Entries read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void apply_override(Entries& entries, std::string_view key_value) {
    auto [key, value] = split_pair(trim(key_value), 0);
    entries.values[key] = {value, 0};
}

ScenarioParams to_params(const Entries& entries, ScenarioParams base) {
    const auto& v = entries.values;
    auto get = [&](const char* key) -> const Entries::Value* {
        const auto it = v.find(key);
        return it == v.end() ? nullptr : &it->second;
    };
    if (auto e = get("pb_power_w")) base.pb_power = to_double("pb_power_w", *e);
    if (auto e = get("pb_density_per_m2")) base.pb_density = to_double("pb_density_per_m2", *e);
    if (auto e = get("sn_density_per_m2")) base.sn_density = to_double("sn_density_per_m2", *e);
    if (auto e = get("sectors")) base.sectors = to_int("sectors", *e);
    if (auto e = get("charging_radius_m")) base.charging_radius = to_double("charging_radius_m", *e);
    if (auto e = get("path_loss_exp")) base.path_loss_exp = to_double("path_loss_exp", *e);
    if (auto e = get("power_threshold_w")) base.power_threshold = to_double("power_threshold_w", *e);

    const auto* wave = get("wavelength_m");
    const auto* sigma = get("sigma_linear");
    if (wave && sigma) {
        // Both given: keep both and let validation check they agree.
        base.wavelength = to_double("wavelength_m", *wave);
        base.attenuation = to_double("sigma_linear", *sigma);
    } else if (wave) {
        const double nu = to_double("wavelength_m", *wave);
        if (!(nu > 0.0)) throw ValidationError({"nonpositive wavelength"});
        base = with_wavelength(base, nu);
    } else if (sigma) {
        base = with_attenuation(base, to_double("sigma_linear", *sigma));
    }
    require_valid(base);
    return base;
}

ScenarioParams load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides) {
    auto entries = read_file(path);
    for (const auto& o : overrides) apply_override(entries, o);
    return to_params(entries);
}

std::string to_text(const ScenarioParams& p) {
    std::string out;
    char buf[96];
    auto line = [&](const char* key, double value) {
        std::snprintf(buf, sizeof buf, "%s=%.17g\n", key, value);
        out += buf;
    };
    line("pb_power_w", p.pb_power);
    line("pb_density_per_m2", p.pb_density);
    line("sn_density_per_m2", p.sn_density);
    std::snprintf(buf, sizeof buf, "sectors=%d\n", p.sectors);
    out += buf;
    line("charging_radius_m", p.charging_radius);
    line("path_loss_exp", p.path_loss_exp);
    if (p.wavelength) line("wavelength_m", *p.wavelength);
    line("sigma_linear", p.attenuation);
    line("power_threshold_w", p.power_threshold);
    return out;
}

}  // namespace adwpt::config
