#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "widthlab/errors.hpp"

namespace widthlab::detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-negative decimal integer; ParseError otherwise.
inline long parse_count(const std::string& token, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

}  // namespace widthlab::detail
