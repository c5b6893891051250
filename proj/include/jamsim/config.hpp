#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jamsim/scenario.hpp"

namespace jamsim {

class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Flat dotted keys ("jammer.power_dbm") to raw values.
using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. A `[section]` header prefixes the following
/// keys with "section."; `#` and `;` start comments.
KeyValues parse_config_text(const std::string& text);
KeyValues read_config_file(const std::filesystem::path& path);

/// Splits "k=v".
std::pair<std::string, std::string> parse_override(const std::string& text);

/// Applies `values` on top of `base` (or on top of the preset named by the
/// "preset" key when present). Unknown keys and malformed values throw
/// ConfigError. The result is validated.
ScenarioConfig apply_config(const ScenarioConfig& base, const KeyValues& values);

/// Every key with its resolved value; apply_config(any, to_key_values(c))
/// reproduces c.
KeyValues to_key_values(const ScenarioConfig& config);

/// All recognised keys.
std::vector<std::string> known_config_keys();

}  // namespace jamsim
