#include "nsga2/core.hpp"

#include <algorithm>
#include <cmath>

namespace nsga2 {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    require(!lower_.empty(), "bounds must have at least one variable");
    require(lower_.size() == upper_.size(), "lower and upper bounds differ in length");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        require(std::isfinite(lower_[j]) && std::isfinite(upper_[j]), "bounds must be finite");
        require(lower_[j] < upper_[j], "lower bound must be below upper bound for every variable");
    }
}

Bounds Bounds::uniform(std::size_t dimension, double lower, double upper)
{
    return Bounds(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

bool Bounds::contains(std::span<const double> genome) const noexcept
{
    if (genome.size() != lower_.size()) {
        return false;
    }
    for (std::size_t j = 0; j < genome.size(); ++j) {
        if (!(genome[j] >= lower_[j] && genome[j] <= upper_[j])) {
            return false;
        }
    }
    return true;
}

Genome clamp_to_bounds(std::span<const double> genome, const Bounds& bounds)
{
    require(genome.size() == bounds.dimension(), "genome length does not match bounds");
    Genome out(genome.begin(), genome.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = std::clamp(out[j], bounds.lower(j), bounds.upper(j));
    }
    return out;
}

ReferenceFront::ReferenceFront(std::vector<Objectives> points) : points_(std::move(points))
{
    if (points_.size() < 2) {
        throw UserError("front must contain at least 2 points");
    }
    const std::size_t m = points_.front().size();
    require(m >= 1, "front points need at least one objective");
    minimum_.assign(m, kInfinity);
    maximum_.assign(m, -kInfinity);
    for (const auto& p : points_) {
        require(p.size() == m, "front points differ in objective count");
        for (std::size_t k = 0; k < m; ++k) {
            require(std::isfinite(p[k]), "front points must be finite");
            minimum_[k] = std::min(minimum_[k], p[k]);
            maximum_[k] = std::max(maximum_[k], p[k]);
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        require(minimum_[k] < maximum_[k], "front has a degenerate range in objective " + std::to_string(k));
    }
}

Objectives evaluate_individual(const ProblemDefinition& problem, std::span<const double> genome)
{
    require(genome.size() == problem.dimension,
            "genome has length " + std::to_string(genome.size()) + ", problem " + problem.name + " expects " +
                std::to_string(problem.dimension));
    require(problem.bounds.contains(genome), "genome lies outside the bounds of problem " + problem.name);
    Objectives f = problem.evaluate(genome);
    require(f.size() == problem.objectiveCount, "evaluator returned the wrong number of objectives");
    return f;
}

std::size_t RandomSource::index(std::size_t n)
{
    require(n > 0, "index range must be non-empty");
    const std::uint64_t bound = n;
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return static_cast<std::size_t>(x % bound);
}

} // namespace nsga2
