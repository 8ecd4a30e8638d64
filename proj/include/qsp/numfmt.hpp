#pragma once

#include <charconv>
#include <string>

namespace qsp {

/// Locale-independent shortest "%.{precision}g"-style rendering.
inline std::string format_double(double value, int precision = 12) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                                 precision);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace qsp
