#pragma once

#include "nsga2/core.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nsga2 {

inline constexpr std::size_t kDefaultFrontPoints = 1000;

/// Names accepted by make_problem, in benchmark order.
const std::vector<std::string>& problem_names();

/// Builds one of zdt1, zdt2, zdt3, zdt6, fon2. Throws UserError otherwise.
ProblemDefinition make_problem(std::string_view name);

/// Analytic Pareto-optimal front of a named problem, sorted by the first
/// objective and free of dominated points.
ReferenceFront sample_reference_front(std::string_view name, std::size_t count = kDefaultFrontPoints);

/// Keeps the points no other point dominates; duplicates collapse to one.
std::vector<Objectives> nondominated_filter(std::vector<Objectives> points);

/// Front files: one point per line, objectives separated by single spaces,
/// '#' starts a comment line, blank lines ignored.
ReferenceFront parse_front(std::string_view text);
ReferenceFront read_front_file(const std::filesystem::path& path);
std::string format_front(const std::vector<Objectives>& points);
void write_front_file(const std::vector<Objectives>& points, const std::filesystem::path& path);
void write_front_file(const ReferenceFront& front, const std::filesystem::path& path);

} // namespace nsga2
