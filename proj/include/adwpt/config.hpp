#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "adwpt/scenario.hpp"

namespace adwpt::config {

/// Raw key=value entries with the line each came from (0 for overrides).
struct Entries {
    struct Value {
        std::string text;
        int line = 0;
    };
    std::map<std::string, Value> values;
};

/// Accepted keys, in the order they are applied.
const std::vector<std::string>& known_keys();

/// Parses config text; '#' starts a comment. Throws ConfigError with the line.
Entries parse(std::string_view text);

/// Reads and parses a file; throws ConfigError when it cannot be read.
Entries read_file(const std::filesystem::path& path);

/// Applies one "key=value" override on top of the entries.
void apply_override(Entries& entries, std::string_view key_value);

/// Builds validated params from entries over `base` (defaults when omitted).
/// Throws ConfigError for unparsable values, ValidationError for invalid params.
ScenarioParams to_params(const Entries& entries, ScenarioParams base = {});

/// read_file + overrides + to_params.
ScenarioParams load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides = {});

/// Canonical config text for params (sigma_linear always, wavelength_m if known).
std::string to_text(const ScenarioParams& params);

}  // namespace adwpt::config
