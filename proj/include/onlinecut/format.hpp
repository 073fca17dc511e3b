#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace onlinecut {

/// Shortest decimal text that parses back to exactly `x`; "inf" for
/// infinity. Locale independent, so output files are byte-stable.
inline std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace onlinecut
