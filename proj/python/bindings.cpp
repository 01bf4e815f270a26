#include "nsga2/engine.hpp"
#include "nsga2/evaluation.hpp"
#include "nsga2/harness.hpp"
#include "nsga2/operators.hpp"
#include "nsga2/problems.hpp"
#include "nsga2/ranking.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace nsga2;

namespace {

std::vector<Individual> individuals(const std::vector<Objectives>& points)
{
    std::vector<Individual> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i].objectives = points[i];
    }
    return out;
}

py::dict trace_dict(const GenerationTrace& t)
{
    py::dict d;
    d["generation"] = t.generation;
    d["crowding_gap"] = t.crowdingGap;
    d["distribution_index"] = t.distributionIndex;
    d["rank0_size"] = t.rank0Size;
    return d;
}

py::dict run_problem(const std::string& name, const std::string& mutation, std::size_t popSize,
                     std::size_t generations, std::uint64_t seed, double crossoverProb,
                     std::optional<double> mutationProb)
{
    const ProblemDefinition problem = make_problem(name);
    EngineConfig config;
    config.populationSize = popSize;
    config.generations = generations;
    config.seed = seed;
    config.operators.crossoverProbability = crossoverProb;
    config.operators.mutationProbability = mutationProb.value_or(1.0 / static_cast<double>(problem.dimension));
    config.operators.mutation = parse_setting(mutation).mutation;
    config.validate();

    RunResult result;
    {
        py::gil_scoped_release release;
        result = run(problem, config);
    }
    py::list traces;
    for (const auto& t : result.traces) {
        traces.append(trace_dict(t));
    }
    py::list genomes;
    py::list objectives;
    py::list ranks;
    for (const auto& ind : result.population) {
        genomes.append(py::cast(ind.genome));
        objectives.append(py::cast(ind.objectives));
        ranks.append(ind.rank);
    }
    py::dict out;
    out["front"] = first_front(result.population);
    out["genomes"] = genomes;
    out["objectives"] = objectives;
    out["ranks"] = ranks;
    out["traces"] = traces;
    return out;
}

py::dict run_benchmark(std::size_t runs, std::uint64_t baseSeed, std::optional<std::vector<std::string>> problems,
                       std::optional<std::vector<std::string>> settings, std::size_t popSize, std::size_t generations,
                       std::size_t workers, const std::string& format)
{
    ExperimentPlan plan = ExperimentPlan::standard();
    plan.runs = runs;
    plan.baseSeed = baseSeed;
    if (problems) {
        plan.problems = *problems;
    }
    if (settings) {
        plan.settings.clear();
        for (const auto& s : *settings) {
            plan.settings.push_back(parse_setting(s));
        }
    }
    plan.populationSize = popSize;
    plan.generations = generations;
    plan.workers = workers;
    const ReportFormat reportFormat = parse_report_format(format);
    plan.validate();

    ExperimentResult result;
    {
        py::gil_scoped_release release;
        result = execute_plan(plan);
    }
    py::dict out;
    out["runs_csv"] = format_run_records(result.records);
    out["report"] = render_report(result.report, reportFormat);
    return out;
}

} // namespace

PYBIND11_MODULE(_nsga2, m)
{
    m.doc() = "NSGA-II with static and adaptive polynomial mutation";

    py::register_exception<UserError>(m, "UserError", PyExc_ValueError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

    m.def("problem_names", &problem_names);
    m.def(
        "evaluate",
        [](const std::string& name, const Genome& genome) { return evaluate_individual(make_problem(name), genome); },
        py::arg("problem"), py::arg("genome"));
    m.def(
        "problem_info",
        [](const std::string& name) {
            const auto p = make_problem(name);
            py::dict d;
            d["name"] = p.name;
            d["dimension"] = p.dimension;
            d["objectives"] = p.objectiveCount;
            d["lower"] = std::vector<double>(p.bounds.lower().begin(), p.bounds.lower().end());
            d["upper"] = std::vector<double>(p.bounds.upper().begin(), p.bounds.upper().end());
            return d;
        },
        py::arg("problem"));
    m.def(
        "reference_front", [](const std::string& name, std::size_t points) {
            return sample_reference_front(name, points).points();
        },
        py::arg("problem"), py::arg("points") = kDefaultFrontPoints);

    m.def("run", &run_problem, py::arg("problem"), py::arg("mutation") = "adaptive", py::arg("pop_size") = 20,
          py::arg("generations") = 100, py::arg("seed") = 0, py::arg("crossover_prob") = 0.9,
          py::arg("mutation_prob") = py::none());
    m.def("benchmark", &run_benchmark, py::arg("runs") = 100, py::arg("base_seed") = 0,
          py::arg("problems") = py::none(), py::arg("settings") = py::none(), py::arg("pop_size") = 20,
          py::arg("generations") = 100, py::arg("workers") = 1, py::arg("format") = "markdown");

    m.def(
        "generational_distance",
        [](const std::vector<Objectives>& obtained, const std::vector<Objectives>& reference) {
            return generational_distance(obtained, ReferenceFront(reference));
        },
        py::arg("obtained"), py::arg("reference"));
    m.def(
        "spread",
        [](const std::vector<Objectives>& obtained, const std::vector<Objectives>& reference) {
            return spread(obtained, ReferenceFront(reference));
        },
        py::arg("obtained"), py::arg("reference"));
    m.def(
        "sample_stats",
        [](const std::vector<double>& values) {
            const auto s = sample_stats(values);
            return py::make_tuple(s.mean, s.std, s.count);
        },
        py::arg("values"));
    m.def(
        "welch_t_test",
        [](double baselineMean, double baselineStd, std::size_t baselineCount, double candidateMean,
           double candidateStd, std::size_t candidateCount, double alpha) {
            const auto r = welch_t_test({baselineMean, baselineStd, baselineCount},
                                        {candidateMean, candidateStd, candidateCount}, alpha);
            py::dict d;
            d["mark"] = std::string(mark_token(r.mark));
            d["t"] = r.tStatistic;
            d["df"] = r.degreesOfFreedom;
            d["p"] = r.pValue;
            return d;
        },
        py::arg("baseline_mean"), py::arg("baseline_std"), py::arg("baseline_count"), py::arg("candidate_mean"),
        py::arg("candidate_std"), py::arg("candidate_count"), py::arg("alpha") = kSignificanceLevel);

    m.def("polynomial_delta", &polynomial_delta, py::arg("u"), py::arg("distribution_index"));
    m.def("sbx_spread_factor", &sbx_spread_factor, py::arg("u"), py::arg("distribution_index"));
    m.def("sigmoid_weight", &sigmoid_weight, py::arg("generation"), py::arg("rate") = 0.07);
    m.def(
        "adaptive_distribution_index",
        [](std::size_t generation, double crowdingGap) {
            return adaptive_distribution_index({generation, crowdingGap, {}});
        },
        py::arg("generation"), py::arg("crowding_gap"));

    m.def(
        "nondominated_ranks",
        [](const std::vector<Objectives>& points) {
            auto pop = individuals(points);
            fast_nondominated_sort(pop);
            std::vector<std::size_t> ranks;
            for (const auto& ind : pop) {
                ranks.push_back(ind.rank);
            }
            return ranks;
        },
        py::arg("points"));
    m.def(
        "crowding_distance",
        [](const std::vector<Objectives>& front) {
            auto pop = individuals(front);
            assign_crowding_distance(pop);
            std::vector<double> out;
            for (const auto& ind : pop) {
                out.push_back(ind.crowding);
            }
            return out;
        },
        py::arg("front"));
}
