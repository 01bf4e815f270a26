#pragma once

#include "nsga2/core.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <variant>

namespace nsga2 {

/// Polynomial mutation with a fixed distribution index.
struct StaticMutation {
    double distributionIndex = 20.0;
};

/// Polynomial mutation whose distribution index follows the population's
/// crowding gap and the generation count.
struct AdaptiveMutation {};

using MutationMode = std::variant<StaticMutation, AdaptiveMutation>;

/// Constants of the adaptive controller.
struct AdaptiveControl {
    double sigmoidRate = 0.07;
    /// Replaces a crowding gap that is zero, negative or undefined.
    double deltaFloor = 1e-6;
    double minIndex = 0.01;
    double maxIndex = 1000.0;

    void validate() const;
};

struct OperatorSettings {
    double crossoverProbability = 0.9;
    double mutationProbability = 0.0;
    double crossoverDistributionIndex = 20.0;
    MutationMode mutation = AdaptiveMutation{};
    AdaptiveControl adaptive;

    bool is_adaptive() const noexcept { return std::holds_alternative<AdaptiveMutation>(mutation); }
    void validate() const;
};

struct AdaptiveState {
    std::size_t generation = 0;
    double crowdingGap = 0.0;
    AdaptiveControl control;
};

// --- simulated binary crossover ---------------------------------------------

/// Spread factor beta for a uniform draw u in [0, 1).
double sbx_spread_factor(double u, double distributionIndex);

/// Recombines one variable pair with spread factor beta (no clamping).
std::pair<double, double> sbx_blend(double p1, double p2, double beta);

/// SBX over whole genomes.
///
/// With probability `crossoverProbability` the pair recombines; each variable
/// is then recombined with probability 0.5 using a fresh draw. Children are
/// clamped to the bounds. Otherwise the children are copies of the parents.
std::pair<Genome, Genome> sbx_crossover(std::span<const double> parent1, std::span<const double> parent2,
                                        const Bounds& bounds, double distributionIndex,
                                        double crossoverProbability, RandomSource& rng);

// --- polynomial mutation -------------------------------------------------------

/// Inverse-CDF sample of the polynomial density 0.5(n+1)(1-|d|)^n on [-1, 1].
double polynomial_delta(double u, double distributionIndex);

/// value + delta * (upper - lower), clamped to [lower, upper].
double apply_disturbance(double value, double delta, double lower, double upper);

/// Mutates each variable with probability `mutationProbability`:
/// c = p + delta * (upper - lower), clamped to the bounds.
Genome polynomial_mutate(std::span<const double> genome, const Bounds& bounds, double distributionIndex,
                         double mutationProbability, RandomSource& rng);

// --- adaptive controller ---------------------------------------------------------

/// Largest finite crowding distance minus the smallest crowding distance,
/// with infinite values counted as zero on the maximum side. Falls back to
/// `floor` when the result is not a finite positive number.
double compute_crowding_gap(std::span<const double> crowdings, double floor = 1e-6);

/// Logistic weight 1 / (1 + exp(-rate * t)).
double sigmoid_weight(std::size_t generation, double rate = 0.07);

/// sigm(t) / max(gap, floor), clamped to [minIndex, maxIndex].
double adaptive_distribution_index(const AdaptiveState& state);

// --- selection -----------------------------------------------------------------

/// Index of the winner of a binary tournament under the crowded comparison.
/// The two contestants are distinct members; a full tie goes to the first.
std::size_t binary_tournament_index(std::span<const Individual> members, RandomSource& rng);

const Individual& binary_tournament(std::span<const Individual> members, RandomSource& rng);

} // namespace nsga2
