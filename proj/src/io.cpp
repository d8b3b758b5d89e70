#include "cirldp/io.hpp"

#include <charconv>
#include <fstream>

#include "cirldp/errors.hpp"

namespace cirldp {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json ext_to_json(ExtReal v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("out", "cannot open " + path.string() + " for writing");
  out << text;
}

}  // namespace cirldp
