#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsga2 {

/// Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown for bad user input: unknown names, malformed files, invalid flags.
class UserError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw ContractViolation(message);
    }
}

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

using Genome = std::vector<double>;
using Objectives = std::vector<double>;

/// Box constraints of a real-coded decision space.
class Bounds {
public:
    Bounds(std::vector<double> lower, std::vector<double> upper);

    static Bounds uniform(std::size_t dimension, double lower, double upper);

    std::size_t dimension() const noexcept { return lower_.size(); }
    double lower(std::size_t j) const { return lower_.at(j); }
    double upper(std::size_t j) const { return upper_.at(j); }
    /// Maximum disturbance for variable j (upper minus lower).
    double range(std::size_t j) const { return upper_.at(j) - lower_.at(j); }

    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }

    bool contains(std::span<const double> genome) const noexcept;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Projects each component into [lower, upper].
Genome clamp_to_bounds(std::span<const double> genome, const Bounds& bounds);

struct Individual {
    static constexpr std::size_t kUnranked = std::numeric_limits<std::size_t>::max();

    Genome genome;
    Objectives objectives;
    std::size_t rank = kUnranked;
    double crowding = std::numeric_limits<double>::quiet_NaN();

    bool evaluated() const noexcept { return !objectives.empty(); }
    bool ranked() const noexcept { return rank != kUnranked && crowding == crowding; }
};

struct Population {
    std::size_t capacity = 0;
    std::vector<Individual> members;

    std::size_t size() const noexcept { return members.size(); }
    Individual& operator[](std::size_t i) { return members[i]; }
    const Individual& operator[](std::size_t i) const { return members[i]; }
    auto begin() noexcept { return members.begin(); }
    auto end() noexcept { return members.end(); }
    auto begin() const noexcept { return members.begin(); }
    auto end() const noexcept { return members.end(); }
};

/// Sampled Pareto-optimal objective vectors with their per-objective extent.
class ReferenceFront {
public:
    /// Computes per-objective ranges from the points; requires at least two
    /// points of equal length and a non-degenerate range in every objective.
    explicit ReferenceFront(std::vector<Objectives> points);

    const std::vector<Objectives>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t objective_count() const noexcept { return minimum_.size(); }
    double minimum(std::size_t m) const { return minimum_.at(m); }
    double maximum(std::size_t m) const { return maximum_.at(m); }

private:
    std::vector<Objectives> points_;
    std::vector<double> minimum_;
    std::vector<double> maximum_;
};

struct ProblemDefinition {
    std::string name;
    std::size_t dimension = 0;
    std::size_t objectiveCount = 0;
    Bounds bounds;
    std::function<Objectives(std::span<const double>)> evaluate;
    std::function<ReferenceFront(std::size_t)> referenceFront;
};

/// Evaluates a genome after checking its length and bounds.
Objectives evaluate_individual(const ProblemDefinition& problem, std::span<const double> genome);

/// Deterministic random stream backed by std::mt19937_64.
///
/// The engine algorithm is fixed by the C++ standard, and the conversions
/// below avoid the implementation-defined standard distributions, so a seed
/// produces the same draws on every conforming platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lower, double upper) { return lower + (upper - lower) * uniform(); }

    /// Uniform integer in [0, n), unbiased.
    std::size_t index(std::size_t n);

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace nsga2
