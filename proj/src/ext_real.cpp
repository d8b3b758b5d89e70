#include "cirldp/ext_real.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace cirldp {

std::string to_string(ExtReal v) {
  if (v.is_infinite()) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v.value());
  return std::string(buf, res.ptr);
}

ExtReal parse_ext_real(const std::string& text) {
  if (text == "inf" || text == "+inf") return ExtReal::infinity();
  double out = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not an extended real: " + text);
  return ExtReal(out);
}

}  // namespace cirldp
