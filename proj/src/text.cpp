#include "nsga2/text.hpp"

#include "nsga2/core.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace nsga2::text {

std::string format_double(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
    require(ec == std::errc{}, "failed to format a double");
    return std::string(buffer.data(), end);
}

double parse_double(std::string_view token)
{
    token = trim(token);
    if (token.empty()) {
        throw UserError("expected a number, found an empty field");
    }
    // from_chars rejects a leading '+', which front archives sometimes carry.
    std::string_view digits = token.front() == '+' ? token.substr(1) : token;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw UserError("'" + std::string(token) + "' is not a number");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char separator)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(separator, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace nsga2::text
