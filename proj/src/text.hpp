#pragma once

// Helpers shared by the delimited-text readers. Internal to the library.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "exsim/error.hpp"

namespace exsim::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Drops a trailing '#' comment and surrounding blanks.
inline std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return trim(line);
}

/// Splits on ',', ';', tabs or runs of spaces. Empty fields between two
/// explicit separators are kept so ragged rows can be reported.
inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  const bool has_explicit = line.find_first_of(",;") != std::string_view::npos;
  std::size_t i = 0;
  while (i <= line.size()) {
    std::size_t j = i;
    if (has_explicit) {
      while (j < line.size() && line[j] != ',' && line[j] != ';') ++j;
      out.push_back(trim(line.substr(i, j - i)));
      i = j + 1;
    } else {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

inline bool try_parse_double(std::string_view token, double& value) {
  token = trim(token);
  if (token.empty()) return false;
  // strtod accepts the exponent forms the data files use ("1.5E+02", "-4e-3").
  std::string buf(token);
  char* end = nullptr;
  value = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

inline double parse_double(std::string_view token, std::size_t line_no) {
  double v = 0.0;
  if (!try_parse_double(token, v)) {
    throw ParseError("not a number: '" + std::string(token) + "'", line_no);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite value: '" + std::string(token) + "'", line_no);
  return v;
}

}  // namespace exsim::detail
