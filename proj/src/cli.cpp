#include "nsga2/cli.hpp"

#include "nsga2/engine.hpp"
#include "nsga2/evaluation.hpp"
#include "nsga2/harness.hpp"
#include "nsga2/problems.hpp"
#include "nsga2/text.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

namespace nsga2 {

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct RunOptions {
    std::string problem;
    std::string mutation = "adaptive";
    std::size_t popSize = 20;
    std::size_t generations = 100;
    std::uint64_t seed = 0;
    double crossoverProb = 0.9;
    std::optional<double> mutationProb;
    std::string frontOut;
    std::string traceOut;
};

struct BenchmarkOptions {
    std::string plan;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> baseSeed;
    std::string outDir = "results";
    std::string format = "markdown";
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    bool wallTime = false;
};

struct MetricsOptions {
    std::string front;
    std::string reference;
};

struct FrontOptions {
    std::string problem;
    std::size_t points = kDefaultFrontPoints;
    std::string out;
};

void write_text(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << content)) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

std::string format_trace(const std::vector<GenerationTrace>& traces)
{
    std::string out = "generation,crowding_gap,distribution_index,rank0_size\n";
    for (const auto& t : traces) {
        out += std::to_string(t.generation) + ',' + text::format_double(t.crowdingGap) + ',' +
               text::format_double(t.distributionIndex) + ',' + std::to_string(t.rank0Size) + '\n';
    }
    return out;
}

// Validates arguments (usage errors) and returns the action to execute.
using Action = std::function<void(std::ostream&)>;

Action prepare_run(const RunOptions& o)
{
    const ProblemDefinition problem = make_problem(o.problem);
    EngineConfig config;
    config.populationSize = o.popSize;
    config.generations = o.generations;
    config.seed = o.seed;
    config.operators.crossoverProbability = o.crossoverProb;
    config.operators.mutationProbability = o.mutationProb.value_or(1.0 / static_cast<double>(problem.dimension));
    config.operators.mutation = parse_setting(o.mutation).mutation;
    try {
        config.validate();
    } catch (const ContractViolation& e) {
        throw UserError(e.what());
    }
    return [problem, config, o](std::ostream& out) {
        const RunResult result = run(problem, config);
        const auto front = first_front(result.population);
        if (o.frontOut.empty()) {
            out << format_front(front);
        } else {
            write_front_file(front, o.frontOut);
            out << "wrote " << front.size() << " rank-0 points to " << o.frontOut << '\n';
        }
        if (!o.traceOut.empty()) {
            write_text(o.traceOut, format_trace(result.traces));
        }
    };
}

Action prepare_benchmark(const BenchmarkOptions& o)
{
    ExperimentPlan plan = o.plan.empty() ? ExperimentPlan::standard() : read_plan_file(o.plan);
    if (o.runs) {
        plan.runs = *o.runs;
    }
    if (o.baseSeed) {
        plan.baseSeed = *o.baseSeed;
    }
    plan.outputDir = o.outDir;
    plan.workers = o.workers;
    plan.recordWallTime = o.wallTime;
    plan.validate();
    const ReportFormat format = parse_report_format(o.format);
    return [plan, format](std::ostream& out) {
        const ExperimentResult result = execute_plan(plan);
        const std::string report = render_report(result.report, format);
        write_text(plan.outputDir / ("report." + std::string(report_extension(format))), report);
        out << report;
    };
}

Action prepare_metrics(const MetricsOptions& o)
{
    return [o](std::ostream& out) {
        const ReferenceFront obtained = read_front_file(o.front);
        const ReferenceFront reference = read_front_file(o.reference);
        const IndicatorResult r = score(obtained.points(), reference);
        out << "gd " << text::format_double(r.gd) << "\nspread " << text::format_double(r.spread) << '\n';
    };
}

Action prepare_front(const FrontOptions& o)
{
    make_problem(o.problem);
    if (o.points < 2) {
        throw UserError("--points must be at least 2");
    }
    return [o](std::ostream& out) {
        const ReferenceFront front = sample_reference_front(o.problem, o.points);
        if (o.out.empty()) {
            out << format_front(front.points());
        } else {
            write_front_file(front, o.out);
            out << "wrote " << front.size() << " points to " << o.out << '\n';
        }
    };
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"NSGA-II with static and adaptive polynomial mutation"};
    app.name("nsga2");
    app.require_subcommand(1);

    RunOptions runOpts;
    auto* runCmd = app.add_subcommand("run", "Run one optimization and write its rank-0 front");
    runCmd->add_option("--problem", runOpts.problem, "zdt1, zdt2, zdt3, zdt6 or fon2")->required();
    runCmd->add_option("--mutation", runOpts.mutation, "static:<n> or adaptive")->capture_default_str();
    runCmd->add_option("--pop-size", runOpts.popSize, "Population size")->capture_default_str();
    runCmd->add_option("--generations", runOpts.generations, "Number of generations")->capture_default_str();
    runCmd->add_option("--seed", runOpts.seed, "Random seed")->capture_default_str();
    runCmd->add_option("--crossover-prob", runOpts.crossoverProb, "SBX probability per pair")->capture_default_str();
    runCmd->add_option("--mutation-prob", runOpts.mutationProb, "Mutation probability per variable (default 1/V)");
    runCmd->add_option("--front-out", runOpts.frontOut, "Front file to write (stdout when omitted)");
    runCmd->add_option("--trace-out", runOpts.traceOut, "Per-generation trace CSV");

    BenchmarkOptions benchOpts;
    auto* benchCmd = app.add_subcommand("benchmark", "Run the five-problem, three-setting comparison");
    benchCmd->add_option("--plan", benchOpts.plan, "Plan file (key = value)");
    benchCmd->add_option("--runs", benchOpts.runs, "Replications per problem and setting (default 100)");
    benchCmd->add_option("--base-seed", benchOpts.baseSeed, "Seed of run 0 (default 0)");
    benchCmd->add_option("--out-dir", benchOpts.outDir, "Directory for runs.csv and the report")->capture_default_str();
    benchCmd->add_option("--format", benchOpts.format, "markdown, csv or json")->capture_default_str();
    benchCmd->add_option("--workers", benchOpts.workers, "Worker threads")->check(CLI::PositiveNumber);
    benchCmd->add_flag("--wall-time", benchOpts.wallTime, "Record per-run wall time in runs.csv");

    MetricsOptions metricsOpts;
    auto* metricsCmd = app.add_subcommand("metrics", "Score a front file against a reference front file");
    metricsCmd->add_option("--front", metricsOpts.front, "Obtained front file")->required();
    metricsCmd->add_option("--reference", metricsOpts.reference, "Reference front file")->required();

    FrontOptions frontOpts;
    auto* frontCmd = app.add_subcommand("front", "Write a sampled Pareto-optimal front");
    frontCmd->add_option("--problem", frontOpts.problem, "zdt1, zdt2, zdt3, zdt6 or fon2")->required();
    frontCmd->add_option("--points", frontOpts.points, "Number of points")->capture_default_str();
    frontCmd->add_option("--out", frontOpts.out, "Front file to write (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }

    Action action;
    try {
        if (runCmd->parsed()) {
            action = prepare_run(runOpts);
        } else if (benchCmd->parsed()) {
            action = prepare_benchmark(benchOpts);
        } else if (metricsCmd->parsed()) {
            action = prepare_metrics(metricsOpts);
        } else {
            action = prepare_front(frontOpts);
        }
    } catch (const UserError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        action(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return 0;
}

} // namespace nsga2
