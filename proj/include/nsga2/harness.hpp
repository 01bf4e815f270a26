#pragma once

#include "nsga2/core.hpp"
#include "nsga2/evaluation.hpp"
#include "nsga2/operators.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsga2 {

/// A labelled mutation configuration, e.g. "n=5" or "adaptive".
struct SettingSpec {
    std::string label;
    MutationMode mutation;
};

/// Parses "static:<n>" or "adaptive". Labels are "n=<n>" and "adaptive".
SettingSpec parse_setting(std::string_view token);
std::string setting_token(const SettingSpec& setting);

struct ExperimentPlan {
    std::vector<std::string> problems;
    std::vector<SettingSpec> settings;
    std::size_t runs = 100;
    std::size_t populationSize = 20;
    std::size_t generations = 100;
    std::uint64_t baseSeed = 0;
    double crossoverProbability = 0.9;
    double crossoverDistributionIndex = 20.0;
    /// Per-variable mutation probability; 1/V of each problem when unset.
    std::optional<double> mutationProbability;
    std::size_t referencePoints = 1000;
    std::size_t workers = 1;
    bool recordWallTime = false;
    /// When non-empty, execute_plan writes runs.csv here.
    std::filesystem::path outputDir;

    /// Five problems, static n=5, static n=20 and adaptive, 100 runs of 100
    /// generations with 20 individuals.
    static ExperimentPlan standard();

    void validate() const;
};

/// Key-value plan file: problems, settings, runs, pop_size, generations,
/// base_seed (plus optional crossover_prob, mutation_prob, reference_points).
ExperimentPlan parse_plan(std::string_view text);
ExperimentPlan read_plan_file(const std::filesystem::path& path);

OperatorSettings operator_settings(const ExperimentPlan& plan, const SettingSpec& setting, const ProblemDefinition& problem);

struct RunRecord {
    std::string problem;
    std::string setting;
    std::size_t runIndex = 0;
    std::uint64_t seed = 0;
    std::optional<double> gd;
    std::optional<double> spread;
    std::optional<double> wallTimeMs;

    bool operator==(const RunRecord&) const = default;
};

/// One replication: seed = baseSeed + runIndex, scored on the final rank-0 front.
RunRecord execute_run(const ExperimentPlan& plan, const ProblemDefinition& problem, const ReferenceFront& front,
                      const SettingSpec& setting, std::size_t runIndex);

/// CSV with header problem,setting,run,seed,gd,spread,wall_time_ms; missing
/// values are empty fields.
std::string format_run_records(std::span<const RunRecord> records);
std::vector<RunRecord> parse_run_records(std::string_view csv);

enum class Metric { gd, spread };

std::string_view metric_name(Metric metric);

struct ReportCell {
    std::optional<SampleStats> stats;
    std::size_t excluded = 0;
    bool lowestMean = false;
    /// Non-adaptive setting against the adaptive one.
    std::optional<SignificanceMark> mark;
};

struct ExperimentReport {
    std::vector<std::string> problems;
    std::vector<std::string> settings;
    std::optional<std::size_t> adaptiveSetting;
    std::size_t runs = 0;
    std::vector<ReportCell> gdCells;
    std::vector<ReportCell> spreadCells;

    ReportCell& cell(Metric metric, std::size_t setting, std::size_t problem);
    const ReportCell& cell(Metric metric, std::size_t setting, std::size_t problem) const;
};

/// Groups records by (problem, setting) in run order, then computes stats,
/// winners and marks. Missing indicator values are excluded and counted.
ExperimentReport aggregate(const ExperimentPlan& plan, std::span<const RunRecord> records);

struct ExperimentResult {
    std::vector<RunRecord> records;
    ExperimentReport report;
};

/// Runs every (problem, setting, run) on `plan.workers` threads. Records come
/// back in plan order regardless of the worker count.
ExperimentResult execute_plan(const ExperimentPlan& plan);

enum class ReportFormat { markdown, csv, json };

ReportFormat parse_report_format(std::string_view name);
std::string_view report_extension(ReportFormat format);
std::string render_report(const ExperimentReport& report, ReportFormat format);

} // namespace nsga2
