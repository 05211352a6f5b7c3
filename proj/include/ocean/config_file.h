#ifndef OCEAN_CONFIG_FILE_H
#define OCEAN_CONFIG_FILE_H

#include "ocean/scenario.h"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ocean
{

/// One `key = value` assignment with its 1-based source line.
struct ConfigEntry
{
    std::string key;
    std::string value;
    int line = 0;
};

/**
 * Splits flat key/value text into entries. `#` starts a comment; blank lines
 * are ignored. Throws ConfigError on lines without `=`.
 */
std::vector<ConfigEntry> ParseKeyValueText(std::string_view text);

/// Sets one ScenarioConfig field by key. Throws ConfigError for unknown keys
/// or unparsable values.
void ApplyConfigKey(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Current value of a key, formatted so that ApplyConfigKey reads it back.
std::string FormatConfigKey(const ScenarioConfig& cfg, std::string_view key);

const std::vector<std::string>& ConfigKeys();

bool IsConfigKey(std::string_view key);

/// Applies every entry of a scenario file on top of the defaults and validates.
ScenarioConfig LoadScenarioText(std::string_view text);

ScenarioConfig LoadScenarioFile(const std::string& path);

std::string ReadFile(const std::string& path);

/// Every key and value, one `key = value` line each, in registry order.
std::string DumpConfig(const ScenarioConfig& cfg);

} // namespace ocean

#endif // OCEAN_CONFIG_FILE_H
