#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cirldp/ext_real.hpp"

namespace cirldp {

/// Shortest text that round-trips the double exactly.
std::string format_double(double v);

/// +inf as the string "inf", finite values as numbers.
nlohmann::json ext_to_json(ExtReal v);

/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cirldp
