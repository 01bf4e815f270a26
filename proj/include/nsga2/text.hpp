#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nsga2::text {

/// Shortest general-format rendering with 17 significant digits, '.' decimal.
std::string format_double(double value);

/// Parses a full token as a double; throws UserError on trailing garbage.
double parse_double(std::string_view token);

std::vector<std::string_view> split(std::string_view line, char separator);

std::string_view trim(std::string_view s);

} // namespace nsga2::text
