#pragma once

#include "nsga2/core.hpp"
#include "nsga2/operators.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nsga2 {

struct EngineConfig {
    std::size_t populationSize = 20;
    std::size_t generations = 100;
    OperatorSettings operators;
    std::uint64_t seed = 0;

    void validate() const;
};

/// What the mutation stage used in one generation.
struct GenerationTrace {
    std::size_t generation = 0;
    double crowdingGap = 0.0;
    double distributionIndex = 0.0;
    /// Size of the first front of the population produced by the step.
    std::size_t rank0Size = 0;
};

struct StepResult {
    Population population;
    GenerationTrace trace;
};

struct RunResult {
    Population population;
    std::vector<GenerationTrace> traces;
};

/// Uniform random genomes within bounds, evaluated, ranked and crowded.
Population initialize(const ProblemDefinition& problem, const EngineConfig& config, RandomSource& rng);

/// Distribution index the mutation stage uses for this population and generation.
GenerationTrace plan_mutation(const Population& parents, const OperatorSettings& settings, std::size_t generation);

/// Elitist survival: fills `capacity` slots front by front and truncates the
/// split front by descending crowding computed within that front. Survivors
/// keep the rank and crowding they were given in the pool.
Population select_survivors(std::vector<Individual> pool, std::size_t capacity);

/// One NSGA-II generation: tournament mating, SBX, polynomial mutation with
/// the static or adaptive index, then survival over parents and offspring.
StepResult step(const Population& parents, const ProblemDefinition& problem, const EngineConfig& config,
                std::size_t generation, RandomSource& rng);

/// Initializes from `config.seed` and applies `config.generations` steps.
RunResult run(const ProblemDefinition& problem, const EngineConfig& config);

/// Objective vectors of the rank-0 members.
std::vector<Objectives> first_front(const Population& population);

} // namespace nsga2
