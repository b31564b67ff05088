#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vortex/configuration.hpp"

namespace vortex::cli {

using json = nlohmann::json;

// Malformed input: bad JSON, missing or mistyped fields, bad flag values.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigFile {
  VortexConfiguration config;
  std::string label;
};

// {"vortices": [{"x": .., "y": .., "d": ..}, ...], "label": ".."}
// Throws ParseError on schema problems and InvalidConfiguration when the
// vortices violate the model invariants.
ConfigFile config_from_json(const json& doc);
json config_to_json(const VortexConfiguration& config, const std::string& label = {});

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

json complex_to_json(Complex z);

// "1.5", "-2", "1+2i", "0.5-1e-3i", "3i"
Complex parse_complex(const std::string& text);
// "x,y"
Complex parse_point(const std::string& text);

}  // namespace vortex::cli
