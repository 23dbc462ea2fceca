#ifndef WCO_CONFIG_HPP
#define WCO_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "wco/criteria.hpp"
#include "wco/symbol_io.hpp"

namespace wco {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string name = "run";
  RadialWeight nu;
  RadialWeight mu;
  SymbolPair pair;
  int n = 1;
  int m = 0;
  std::optional<int> n0;
  GridSpec grid;
};

// Parses the structured config document; throws ConfigError with a
// line/column diagnostic on malformed input.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_json(const json& j);

// Built-in configurations addressable by name from the command line.
bool is_builtin_config(const std::string& name);
json builtin_config(const std::string& name);
std::vector<std::string> builtin_config_names();

}  // namespace wco

#endif  // WCO_CONFIG_HPP
