#include "nsga2/problems.hpp"

#include "nsga2/text.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace nsga2 {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// Dense sweep resolution for fronts that need filtering before thinning.
constexpr std::size_t kSweepFactor = 200;

double zdt_g(std::span<const double> x)
{
    double sum = 0.0;
    for (std::size_t j = 1; j < x.size(); ++j) {
        sum += x[j];
    }
    return 1.0 + 9.0 * sum / static_cast<double>(x.size() - 1);
}

Objectives zdt1(std::span<const double> x)
{
    const double f1 = x[0];
    const double g = zdt_g(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

Objectives zdt2(std::span<const double> x)
{
    const double f1 = x[0];
    const double g = zdt_g(x);
    const double r = f1 / g;
    return {f1, g * (1.0 - r * r)};
}

Objectives zdt3(std::span<const double> x)
{
    const double f1 = x[0];
    const double g = zdt_g(x);
    const double r = f1 / g;
    return {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))};
}

double zdt6_f1(double x1)
{
    return 1.0 - std::exp(-4.0 * x1) * std::pow(std::sin(6.0 * kPi * x1), 6.0);
}

Objectives zdt6(std::span<const double> x)
{
    const double f1 = zdt6_f1(x[0]);
    double sum = 0.0;
    for (std::size_t j = 1; j < x.size(); ++j) {
        sum += x[j];
    }
    const double g = 1.0 + 9.0 * std::pow(sum / static_cast<double>(x.size() - 1), 0.25);
    const double r = f1 / g;
    return {f1, g * (1.0 - r * r)};
}

Objectives fon2(std::span<const double> x)
{
    double s1 = 0.0;
    double s2 = 0.0;
    for (double xj : x) {
        s1 += (xj - kInvSqrt3) * (xj - kInvSqrt3);
        s2 += (xj + kInvSqrt3) * (xj + kInvSqrt3);
    }
    return {1.0 - std::exp(-s1), 1.0 - std::exp(-s2)};
}

double grid(std::size_t i, std::size_t count)
{
    return static_cast<double>(i) / static_cast<double>(count - 1);
}

// Picks `count` evenly indexed points, always keeping both ends.
std::vector<Objectives> thin(std::vector<Objectives> points, std::size_t count)
{
    if (points.size() <= count) {
        return points;
    }
    std::vector<Objectives> out;
    out.reserve(count);
    const double stride = static_cast<double>(points.size() - 1) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(points[static_cast<std::size_t>(std::llround(stride * static_cast<double>(i)))]);
    }
    return out;
}

ProblemDefinition zdt(std::string name, std::size_t dimension, Objectives (*f)(std::span<const double>))
{
    std::string frontName = name;
    return ProblemDefinition{std::move(name), dimension, 2, Bounds::uniform(dimension, 0.0, 1.0), f,
                             [frontName](std::size_t n) { return sample_reference_front(frontName, n); }};
}

} // namespace

const std::vector<std::string>& problem_names()
{
    static const std::vector<std::string> names{"zdt1", "zdt2", "zdt3", "zdt6", "fon2"};
    return names;
}

namespace {

[[noreturn]] void unknown_problem(std::string_view name)
{
    std::string valid;
    for (const auto& n : problem_names()) {
        valid += (valid.empty() ? "" : ", ") + n;
    }
    throw UserError("unknown problem '" + std::string(name) + "'; valid names: " + valid);
}

} // namespace

ProblemDefinition make_problem(std::string_view name)
{
    if (name == "zdt1") {
        return zdt("zdt1", 30, zdt1);
    }
    if (name == "zdt2") {
        return zdt("zdt2", 30, zdt2);
    }
    if (name == "zdt3") {
        return zdt("zdt3", 30, zdt3);
    }
    if (name == "zdt6") {
        return zdt("zdt6", 10, zdt6);
    }
    if (name == "fon2") {
        return ProblemDefinition{"fon2", 3, 2, Bounds::uniform(3, -4.0, 4.0), fon2,
                                 [](std::size_t n) { return sample_reference_front("fon2", n); }};
    }
    unknown_problem(name);
}

std::vector<Objectives> nondominated_filter(std::vector<Objectives> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) {
        return points;
    }
    std::vector<Objectives> kept;
    if (points.front().size() == 2) {
        // Lexicographic order: a point survives iff its f2 beats every earlier f2.
        double bestSecond = kInfinity;
        for (auto& p : points) {
            if (p[1] < bestSecond) {
                bestSecond = p[1];
                kept.push_back(std::move(p));
            }
        }
        return kept;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < points.size() && !dominated; ++k) {
            dominated = k != i && std::equal(points[k].begin(), points[k].end(), points[i].begin(),
                                              [](double a, double b) { return a <= b; }) &&
                        points[k] != points[i];
        }
        if (!dominated) {
            kept.push_back(points[i]);
        }
    }
    return kept;
}

ReferenceFront sample_reference_front(std::string_view name, std::size_t count)
{
    require(count >= 2, "a reference front needs at least 2 points");
    std::vector<Objectives> points;
    points.reserve(count);

    if (name == "zdt1" || name == "zdt2") {
        const bool convex = name == "zdt1";
        for (std::size_t i = 0; i < count; ++i) {
            const double f1 = grid(i, count);
            points.push_back({f1, convex ? 1.0 - std::sqrt(f1) : 1.0 - f1 * f1});
        }
    } else if (name == "zdt3") {
        const std::size_t sweep = count * kSweepFactor;
        for (std::size_t i = 0; i < sweep; ++i) {
            const double f1 = grid(i, sweep);
            points.push_back({f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1)});
        }
        points = thin(nondominated_filter(std::move(points)), count);
    } else if (name == "zdt6") {
        const std::size_t sweep = count * kSweepFactor;
        for (std::size_t i = 0; i < sweep; ++i) {
            const double f1 = zdt6_f1(grid(i, sweep));
            points.push_back({f1, 1.0 - f1 * f1});
        }
        points = thin(nondominated_filter(std::move(points)), count);
    } else if (name == "fon2") {
        for (std::size_t i = 0; i < count; ++i) {
            const double s = -kInvSqrt3 + 2.0 * kInvSqrt3 * grid(i, count);
            points.push_back(fon2(std::vector<double>{s, s, s}));
        }
        points = nondominated_filter(std::move(points));
    } else {
        unknown_problem(name);
    }
    return ReferenceFront(std::move(points));
}

ReferenceFront parse_front(std::string_view content)
{
    std::vector<Objectives> points;
    std::size_t columns = 0;
    std::size_t lineNumber = 0;
    for (std::string_view raw : text::split(content, '\n')) {
        ++lineNumber;
        const std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        Objectives point;
        std::istringstream tokens{std::string(line)};
        std::string token;
        while (tokens >> token) {
            try {
                point.push_back(text::parse_double(token));
            } catch (const UserError& e) {
                throw UserError("line " + std::to_string(lineNumber) + ": " + e.what());
            }
        }
        if (columns == 0) {
            columns = point.size();
        } else if (point.size() != columns) {
            throw UserError("line " + std::to_string(lineNumber) + ": expected " + std::to_string(columns) +
                            " objectives, found " + std::to_string(point.size()));
        }
        points.push_back(std::move(point));
    }
    return ReferenceFront(std::move(points));
}

ReferenceFront read_front_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UserError("cannot open front file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_front(buffer.str());
    } catch (const UserError& e) {
        throw UserError(path.string() + ": " + e.what());
    }
}

std::string format_front(const std::vector<Objectives>& points)
{
    std::string out;
    for (const auto& p : points) {
        for (std::size_t m = 0; m < p.size(); ++m) {
            if (m > 0) {
                out += ' ';
            }
            out += text::format_double(p[m]);
        }
        out += '\n';
    }
    return out;
}

void write_front_file(const std::vector<Objectives>& points, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UserError("cannot write front file " + path.string());
    }
    out << format_front(points);
    if (!out) {
        throw UserError("failed writing front file " + path.string());
    }
}

void write_front_file(const ReferenceFront& front, const std::filesystem::path& path)
{
    write_front_file(front.points(), path);
}

} // namespace nsga2
