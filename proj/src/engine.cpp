#include "nsga2/engine.hpp"

#include "nsga2/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace nsga2 {

void EngineConfig::validate() const
{
    require(populationSize >= 4 && populationSize % 2 == 0, "population size must be even and at least 4");
    require(generations >= 1, "at least one generation is required");
    operators.validate();
}

Population initialize(const ProblemDefinition& problem, const EngineConfig& config, RandomSource& rng)
{
    config.validate();
    Population pop{config.populationSize, {}};
    pop.members.reserve(config.populationSize);
    for (std::size_t i = 0; i < config.populationSize; ++i) {
        Individual ind;
        ind.genome.resize(problem.dimension);
        for (std::size_t j = 0; j < problem.dimension; ++j) {
            ind.genome[j] = rng.uniform(problem.bounds.lower(j), problem.bounds.upper(j));
        }
        ind.objectives = evaluate_individual(problem, ind.genome);
        pop.members.push_back(std::move(ind));
    }
    rank_and_crowd(pop.members);
    return pop;
}

GenerationTrace plan_mutation(const Population& parents, const OperatorSettings& settings, std::size_t generation)
{
    std::vector<double> crowdings;
    crowdings.reserve(parents.size());
    for (const auto& ind : parents) {
        require(ind.ranked(), "parents must be ranked and crowded before variation");
        crowdings.push_back(ind.crowding);
    }
    GenerationTrace trace;
    trace.generation = generation;
    trace.crowdingGap = compute_crowding_gap(crowdings, settings.adaptive.deltaFloor);
    if (const auto* fixed = std::get_if<StaticMutation>(&settings.mutation)) {
        trace.distributionIndex = fixed->distributionIndex;
    } else {
        trace.distributionIndex = adaptive_distribution_index({generation, trace.crowdingGap, settings.adaptive});
    }
    return trace;
}

Population select_survivors(std::vector<Individual> pool, std::size_t capacity)
{
    require(pool.size() >= capacity, "survival pool is smaller than the population");
    const FrontPartition partition = rank_and_crowd(pool);

    Population next{capacity, {}};
    next.members.reserve(capacity);
    for (const auto& front : partition.fronts) {
        if (next.size() + front.size() <= capacity) {
            for (std::size_t i : front) {
                next.members.push_back(pool[i]);
            }
            if (next.size() == capacity) {
                break;
            }
            continue;
        }
        std::vector<std::size_t> order(front.begin(), front.end());
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return pool[a].crowding > pool[b].crowding; });
        order.resize(capacity - next.size());
        std::sort(order.begin(), order.end());
        for (std::size_t i : order) {
            next.members.push_back(pool[i]);
        }
        break;
    }
    // Survivors keep the rank and crowding assigned in the pool; the next
    // generation's controller reads them without recomputation.
    return next;
}

StepResult step(const Population& parents, const ProblemDefinition& problem, const EngineConfig& config,
                std::size_t generation, RandomSource& rng)
{
    const std::size_t n = config.populationSize;
    require(parents.size() == n, "parent population has the wrong size");
    const OperatorSettings& ops = config.operators;
    GenerationTrace trace = plan_mutation(parents, ops, generation);

    std::vector<Individual> pool(parents.begin(), parents.end());
    pool.reserve(2 * n);
    const std::span<const Individual> mating(parents.members);
    while (pool.size() < 2 * n) {
        const Individual& a = binary_tournament(mating, rng);
        const Individual& b = binary_tournament(mating, rng);
        auto [g1, g2] =
            sbx_crossover(a.genome, b.genome, problem.bounds, ops.crossoverDistributionIndex, ops.crossoverProbability, rng);
        for (Genome* g : {&g1, &g2}) {
            Individual child;
            child.genome = polynomial_mutate(*g, problem.bounds, trace.distributionIndex, ops.mutationProbability, rng);
            child.objectives = evaluate_individual(problem, child.genome);
            pool.push_back(std::move(child));
        }
    }

    StepResult result{select_survivors(std::move(pool), n), trace};
    result.trace.rank0Size = static_cast<std::size_t>(std::count_if(
        result.population.begin(), result.population.end(), [](const Individual& ind) { return ind.rank == 0; }));
    return result;
}

RunResult run(const ProblemDefinition& problem, const EngineConfig& config)
{
    RandomSource rng(config.seed);
    RunResult result{initialize(problem, config, rng), {}};
    result.traces.reserve(config.generations);
    for (std::size_t t = 0; t < config.generations; ++t) {
        StepResult next = step(result.population, problem, config, t, rng);
        result.population = std::move(next.population);
        result.traces.push_back(next.trace);
    }
    return result;
}

std::vector<Objectives> first_front(const Population& population)
{
    std::vector<Objectives> out;
    for (const auto& ind : population) {
        if (ind.rank == 0) {
            out.push_back(ind.objectives);
        }
    }
    return out;
}

} // namespace nsga2
