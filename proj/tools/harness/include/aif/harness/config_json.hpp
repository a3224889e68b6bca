#pragma once

#include <string>

#include "aif/config.hpp"

namespace aif::harness {

// Stable JSON text for a config; config_from_json(config_to_json(c)) == c.
std::string config_to_json(const Config& cfg);
Config config_from_json(const std::string& text);

}  // namespace aif::harness
