#include "nsga2/operators.hpp"

#include "nsga2/ranking.hpp"

#include <algorithm>
#include <cmath>

namespace nsga2 {

void AdaptiveControl::validate() const
{
    require(std::isfinite(sigmoidRate), "sigmoid rate must be finite");
    require(deltaFloor > 0.0 && std::isfinite(deltaFloor), "crowding gap floor must be positive");
    require(minIndex > 0.0 && minIndex <= maxIndex && std::isfinite(maxIndex),
            "distribution index clamp must be a positive interval");
}

void OperatorSettings::validate() const
{
    require(crossoverProbability >= 0.0 && crossoverProbability <= 1.0, "crossover probability must be in [0, 1]");
    require(mutationProbability >= 0.0 && mutationProbability <= 1.0, "mutation probability must be in [0, 1]");
    require(crossoverDistributionIndex > 0.0, "crossover distribution index must be positive");
    if (const auto* fixed = std::get_if<StaticMutation>(&mutation)) {
        require(fixed->distributionIndex > 0.0, "mutation distribution index must be positive");
    }
    adaptive.validate();
}

double sbx_spread_factor(double u, double distributionIndex)
{
    require(u >= 0.0 && u < 1.0, "SBX draw must lie in [0, 1)");
    require(distributionIndex > 0.0, "SBX distribution index must be positive");
    const double exponent = 1.0 / (distributionIndex + 1.0);
    if (u <= 0.5) {
        return std::pow(2.0 * u, exponent);
    }
    return std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
}

std::pair<double, double> sbx_blend(double p1, double p2, double beta)
{
    return {0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2), 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)};
}

std::pair<Genome, Genome> sbx_crossover(std::span<const double> parent1, std::span<const double> parent2,
                                        const Bounds& bounds, double distributionIndex,
                                        double crossoverProbability, RandomSource& rng)
{
    require(bounds.contains(parent1) && bounds.contains(parent2), "SBX parents must lie within bounds");
    Genome child1(parent1.begin(), parent1.end());
    Genome child2(parent2.begin(), parent2.end());
    if (!rng.bernoulli(crossoverProbability)) {
        return {std::move(child1), std::move(child2)};
    }
    for (std::size_t j = 0; j < child1.size(); ++j) {
        if (!rng.bernoulli(0.5)) {
            continue;
        }
        const double beta = sbx_spread_factor(rng.uniform(), distributionIndex);
        auto [c1, c2] = sbx_blend(parent1[j], parent2[j], beta);
        if (rng.bernoulli(0.5)) {
            std::swap(c1, c2);
        }
        child1[j] = std::clamp(c1, bounds.lower(j), bounds.upper(j));
        child2[j] = std::clamp(c2, bounds.lower(j), bounds.upper(j));
    }
    return {std::move(child1), std::move(child2)};
}

double polynomial_delta(double u, double distributionIndex)
{
    require(u >= 0.0 && u <= 1.0, "mutation draw must lie in [0, 1]");
    require(distributionIndex > 0.0, "mutation distribution index must be positive");
    const double exponent = 1.0 / (distributionIndex + 1.0);
    if (u < 0.5) {
        return std::pow(2.0 * u, exponent) - 1.0;
    }
    return 1.0 - std::pow(2.0 * (1.0 - u), exponent);
}

double apply_disturbance(double value, double delta, double lower, double upper)
{
    return std::clamp(value + delta * (upper - lower), lower, upper);
}

Genome polynomial_mutate(std::span<const double> genome, const Bounds& bounds, double distributionIndex,
                         double mutationProbability, RandomSource& rng)
{
    require(bounds.contains(genome), "mutation input must lie within bounds");
    Genome out(genome.begin(), genome.end());
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (!rng.bernoulli(mutationProbability)) {
            continue;
        }
        const double delta = polynomial_delta(rng.uniform(), distributionIndex);
        out[j] = apply_disturbance(out[j], delta, bounds.lower(j), bounds.upper(j));
    }
    return out;
}

double compute_crowding_gap(std::span<const double> crowdings, double floor)
{
    require(!crowdings.empty(), "crowding gap needs at least one distance");
    double largestFinite = 0.0;
    double smallest = kInfinity;
    for (double d : crowdings) {
        require(d >= 0.0, "crowding distances must be non-negative");
        largestFinite = std::max(largestFinite, std::isinf(d) ? 0.0 : d);
        smallest = std::min(smallest, d);
    }
    const double gap = largestFinite - smallest;
    if (!std::isfinite(gap) || !(gap > 0.0)) {
        return floor;
    }
    return gap;
}

double sigmoid_weight(std::size_t generation, double rate)
{
    return 1.0 / (1.0 + std::exp(-rate * static_cast<double>(generation)));
}

double adaptive_distribution_index(const AdaptiveState& state)
{
    const auto& c = state.control;
    const double gap = std::max(state.crowdingGap, c.deltaFloor);
    return std::clamp(sigmoid_weight(state.generation, c.sigmoidRate) / gap, c.minIndex, c.maxIndex);
}

std::size_t binary_tournament_index(std::span<const Individual> members, RandomSource& rng)
{
    require(members.size() >= 2, "binary tournament needs at least two individuals");
    const std::size_t first = rng.index(members.size());
    std::size_t second = rng.index(members.size() - 1);
    if (second >= first) {
        ++second;
    }
    return crowded_less(members[second], members[first]) ? second : first;
}

const Individual& binary_tournament(std::span<const Individual> members, RandomSource& rng)
{
    return members[binary_tournament_index(members, rng)];
}

} // namespace nsga2
