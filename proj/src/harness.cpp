#include "nsga2/harness.hpp"

#include "nsga2/engine.hpp"
#include "nsga2/problems.hpp"
#include "nsga2/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace nsga2 {

namespace {

const std::string kRunHeader = "problem,setting,run,seed,gd,spread,wall_time_ms";

std::uint64_t parse_unsigned(std::string_view token, std::string_view what)
{
    token = text::trim(token);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw UserError(std::string(what) + ": '" + std::string(token) + "' is not a non-negative integer");
    }
    return value;
}

std::vector<std::string> parse_list(std::string_view value)
{
    std::vector<std::string> out;
    for (auto item : text::split(value, ',')) {
        item = text::trim(item);
        if (!item.empty()) {
            out.emplace_back(item);
        }
    }
    return out;
}

std::string optional_field(const std::optional<double>& value)
{
    return value ? text::format_double(*value) : std::string{};
}

std::optional<double> parse_optional(std::string_view field)
{
    field = text::trim(field);
    if (field.empty()) {
        return std::nullopt;
    }
    return text::parse_double(field);
}

std::string upper(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::string fixed3(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", value);
    return buffer;
}

} // namespace

SettingSpec parse_setting(std::string_view token)
{
    token = text::trim(token);
    if (token == "adaptive") {
        return {"adaptive", AdaptiveMutation{}};
    }
    constexpr std::string_view prefix = "static:";
    if (token.starts_with(prefix)) {
        double n = 0.0;
        try {
            n = text::parse_double(token.substr(prefix.size()));
        } catch (const UserError&) {
            n = -1.0;
        }
        if (n > 0.0 && std::isfinite(n)) {
            return {"n=" + text::format_double(n), StaticMutation{n}};
        }
    }
    throw UserError("invalid mutation setting '" + std::string(token) + "'; expected static:<n> with n > 0, or adaptive");
}

std::string setting_token(const SettingSpec& setting)
{
    if (const auto* fixed = std::get_if<StaticMutation>(&setting.mutation)) {
        return "static:" + text::format_double(fixed->distributionIndex);
    }
    return "adaptive";
}

ExperimentPlan ExperimentPlan::standard()
{
    ExperimentPlan plan;
    plan.problems = {"zdt1", "zdt2", "zdt3", "zdt6", "fon2"};
    plan.settings = {parse_setting("static:5"), parse_setting("static:20"), parse_setting("adaptive")};
    return plan;
}

void ExperimentPlan::validate() const
{
    if (problems.empty()) {
        throw UserError("plan lists no problems");
    }
    for (const auto& p : problems) {
        make_problem(p);
    }
    if (settings.empty()) {
        throw UserError("plan lists no settings");
    }
    for (std::size_t i = 0; i < settings.size(); ++i) {
        for (std::size_t k = i + 1; k < settings.size(); ++k) {
            if (settings[i].label == settings[k].label) {
                throw UserError("duplicate setting label '" + settings[i].label + "'");
            }
        }
    }
    if (runs < 2) {
        throw UserError("runs must be at least 2");
    }
    if (populationSize < 4 || populationSize % 2 != 0) {
        throw UserError("population size must be even and at least 4");
    }
    if (generations < 1) {
        throw UserError("generations must be at least 1");
    }
    if (!(crossoverProbability >= 0.0 && crossoverProbability <= 1.0)) {
        throw UserError("crossover probability must be in [0, 1]");
    }
    if (mutationProbability && !(*mutationProbability >= 0.0 && *mutationProbability <= 1.0)) {
        throw UserError("mutation probability must be in [0, 1]");
    }
    if (referencePoints < 2) {
        throw UserError("reference fronts need at least 2 points");
    }
    if (workers < 1) {
        throw UserError("at least one worker is required");
    }
}

ExperimentPlan parse_plan(std::string_view content)
{
    ExperimentPlan plan = ExperimentPlan::standard();
    std::size_t lineNumber = 0;
    for (std::string_view raw : text::split(content, '\n')) {
        ++lineNumber;
        const std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UserError("plan line " + std::to_string(lineNumber) + ": expected key = value");
        }
        const std::string key(text::trim(line.substr(0, eq)));
        const std::string_view value = text::trim(line.substr(eq + 1));
        try {
            if (key == "problems") {
                plan.problems = parse_list(value);
            } else if (key == "settings") {
                plan.settings.clear();
                for (const auto& token : parse_list(value)) {
                    plan.settings.push_back(parse_setting(token));
                }
            } else if (key == "runs") {
                plan.runs = parse_unsigned(value, key);
            } else if (key == "pop_size") {
                plan.populationSize = parse_unsigned(value, key);
            } else if (key == "generations") {
                plan.generations = parse_unsigned(value, key);
            } else if (key == "base_seed") {
                plan.baseSeed = parse_unsigned(value, key);
            } else if (key == "crossover_prob") {
                plan.crossoverProbability = text::parse_double(value);
            } else if (key == "mutation_prob") {
                plan.mutationProbability = text::parse_double(value);
            } else if (key == "reference_points") {
                plan.referencePoints = parse_unsigned(value, key);
            } else {
                throw UserError("unknown key '" + key + "'");
            }
        } catch (const UserError& e) {
            throw UserError("plan line " + std::to_string(lineNumber) + ": " + e.what());
        }
    }
    plan.validate();
    return plan;
}

ExperimentPlan read_plan_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UserError("cannot open plan file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_plan(buffer.str());
}

OperatorSettings operator_settings(const ExperimentPlan& plan, const SettingSpec& setting, const ProblemDefinition& problem)
{
    OperatorSettings ops;
    ops.crossoverProbability = plan.crossoverProbability;
    ops.crossoverDistributionIndex = plan.crossoverDistributionIndex;
    ops.mutationProbability = plan.mutationProbability.value_or(1.0 / static_cast<double>(problem.dimension));
    ops.mutation = setting.mutation;
    return ops;
}

RunRecord execute_run(const ExperimentPlan& plan, const ProblemDefinition& problem, const ReferenceFront& front,
                      const SettingSpec& setting, std::size_t runIndex)
{
    const auto start = std::chrono::steady_clock::now();
    EngineConfig config;
    config.populationSize = plan.populationSize;
    config.generations = plan.generations;
    config.operators = operator_settings(plan, setting, problem);
    config.seed = plan.baseSeed + runIndex;

    const RunResult result = run(problem, config);
    const auto obtained = first_front(result.population);

    RunRecord record{problem.name, setting.label, runIndex, config.seed, {}, {}, {}};
    record.gd = generational_distance(obtained, front);
    if (obtained.size() >= 2) {
        try {
            record.spread = spread(obtained, front);
        } catch (const ContractViolation&) {
            // Degenerate set (all points on both extremes): counted as missing.
        }
    }
    if (plan.recordWallTime) {
        record.wallTimeMs =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return record;
}

std::string format_run_records(std::span<const RunRecord> records)
{
    std::string out = kRunHeader + "\n";
    for (const auto& r : records) {
        out += r.problem + ',' + r.setting + ',' + std::to_string(r.runIndex) + ',' + std::to_string(r.seed) + ',' +
               optional_field(r.gd) + ',' + optional_field(r.spread) + ',' + optional_field(r.wallTimeMs) + '\n';
    }
    return out;
}

std::vector<RunRecord> parse_run_records(std::string_view csv)
{
    std::vector<RunRecord> records;
    std::size_t lineNumber = 0;
    for (std::string_view line : text::split(csv, '\n')) {
        ++lineNumber;
        if (text::trim(line).empty()) {
            continue;
        }
        if (lineNumber == 1) {
            if (text::trim(line) != kRunHeader) {
                throw UserError("run record CSV has an unexpected header");
            }
            continue;
        }
        const auto fields = text::split(line, ',');
        if (fields.size() != 7) {
            throw UserError("run record line " + std::to_string(lineNumber) + ": expected 7 fields");
        }
        RunRecord r;
        r.problem = std::string(fields[0]);
        r.setting = std::string(fields[1]);
        r.runIndex = parse_unsigned(fields[2], "run");
        r.seed = parse_unsigned(fields[3], "seed");
        r.gd = parse_optional(fields[4]);
        r.spread = parse_optional(fields[5]);
        r.wallTimeMs = parse_optional(fields[6]);
        records.push_back(std::move(r));
    }
    return records;
}

std::string_view metric_name(Metric metric)
{
    return metric == Metric::gd ? "gd" : "spread";
}

ReportCell& ExperimentReport::cell(Metric metric, std::size_t setting, std::size_t problem)
{
    auto& cells = metric == Metric::gd ? gdCells : spreadCells;
    return cells.at(setting * problems.size() + problem);
}

const ReportCell& ExperimentReport::cell(Metric metric, std::size_t setting, std::size_t problem) const
{
    const auto& cells = metric == Metric::gd ? gdCells : spreadCells;
    return cells.at(setting * problems.size() + problem);
}

ExperimentReport aggregate(const ExperimentPlan& plan, std::span<const RunRecord> records)
{
    ExperimentReport report;
    report.problems = plan.problems;
    report.runs = plan.runs;
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
        report.settings.push_back(plan.settings[s].label);
        if (!report.adaptiveSetting && std::holds_alternative<AdaptiveMutation>(plan.settings[s].mutation)) {
            report.adaptiveSetting = s;
        }
    }
    const std::size_t cellCount = report.settings.size() * report.problems.size();
    report.gdCells.resize(cellCount);
    report.spreadCells.resize(cellCount);

    auto indexOf = [](const std::vector<std::string>& names, const std::string& name) {
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            throw UserError("run record refers to '" + name + "', which is not in the plan");
        }
        return static_cast<std::size_t>(it - names.begin());
    };

    // (cell, runIndex) -> record, so the summation order is the run order.
    std::vector<std::map<std::size_t, const RunRecord*>> grouped(cellCount);
    for (const auto& r : records) {
        const std::size_t cell = indexOf(report.settings, r.setting) * report.problems.size() +
                                 indexOf(report.problems, r.problem);
        if (!grouped[cell].emplace(r.runIndex, &r).second) {
            throw UserError("duplicate run record for " + r.problem + "/" + r.setting + "/" +
                            std::to_string(r.runIndex));
        }
    }

    for (Metric metric : {Metric::gd, Metric::spread}) {
        for (std::size_t c = 0; c < cellCount; ++c) {
            std::vector<double> values;
            ReportCell& cell = (metric == Metric::gd ? report.gdCells : report.spreadCells)[c];
            for (const auto& [run, r] : grouped[c]) {
                const auto& value = metric == Metric::gd ? r->gd : r->spread;
                if (value && std::isfinite(*value)) {
                    values.push_back(*value);
                } else {
                    ++cell.excluded;
                }
            }
            if (values.size() >= 2) {
                cell.stats = sample_stats(values);
            }
        }
        for (std::size_t p = 0; p < report.problems.size(); ++p) {
            double best = kInfinity;
            for (std::size_t s = 0; s < report.settings.size(); ++s) {
                if (const auto& st = report.cell(metric, s, p).stats) {
                    best = std::min(best, st->mean);
                }
            }
            for (std::size_t s = 0; s < report.settings.size(); ++s) {
                auto& cell = report.cell(metric, s, p);
                cell.lowestMean = cell.stats && cell.stats->mean == best;
            }
            if (!report.adaptiveSetting) {
                continue;
            }
            const auto& adaptive = report.cell(metric, *report.adaptiveSetting, p).stats;
            for (std::size_t s = 0; s < report.settings.size(); ++s) {
                auto& cell = report.cell(metric, s, p);
                if (s != *report.adaptiveSetting && cell.stats && adaptive) {
                    cell.mark = welch_t_test(*cell.stats, *adaptive);
                }
            }
        }
    }
    return report;
}

ExperimentResult execute_plan(const ExperimentPlan& plan)
{
    plan.validate();
    std::vector<ProblemDefinition> problems;
    std::vector<ReferenceFront> fronts;
    for (const auto& name : plan.problems) {
        problems.push_back(make_problem(name));
        fronts.push_back(sample_reference_front(name, plan.referencePoints));
    }

    const std::size_t perProblem = plan.settings.size() * plan.runs;
    const std::size_t total = plan.problems.size() * perProblem;
    std::vector<RunRecord> records(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;

    auto worker = [&] {
        for (std::size_t task = next++; task < total; task = next++) {
            const std::size_t p = task / perProblem;
            const std::size_t s = (task % perProblem) / plan.runs;
            const std::size_t r = task % plan.runs;
            try {
                records[task] = execute_run(plan, problems[p], fronts[p], plan.settings[s], r);
            } catch (...) {
                std::lock_guard lock(failureMutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = total;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t threads = std::min(plan.workers, total);
        for (std::size_t i = 1; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ExperimentResult result{std::move(records), {}};
    result.report = aggregate(plan, result.records);

    if (!plan.outputDir.empty()) {
        std::filesystem::create_directories(plan.outputDir);
        const auto path = plan.outputDir / "runs.csv";
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw UserError("cannot write " + path.string());
        }
        out << format_run_records(result.records);
    }
    return result;
}

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "markdown" || name == "md") {
        return ReportFormat::markdown;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    throw UserError("unknown report format '" + std::string(name) + "'; expected markdown, csv or json");
}

std::string_view report_extension(ReportFormat format)
{
    switch (format) {
    case ReportFormat::markdown:
        return "md";
    case ReportFormat::csv:
        return "csv";
    case ReportFormat::json:
        break;
    }
    return "json";
}

namespace {

std::string render_markdown(const ExperimentReport& report)
{
    std::ostringstream out;
    out << "# Results over " << report.runs << " runs\n";
    for (Metric metric : {Metric::spread, Metric::gd}) {
        out << "\n## " << (metric == Metric::gd ? "Generational distance" : "Spread") << "\n\n| Setting |";
        for (const auto& p : report.problems) {
            out << ' ' << upper(p) << " |";
        }
        out << "\n|---|";
        for (std::size_t p = 0; p < report.problems.size(); ++p) {
            out << "---|";
        }
        out << '\n';
        std::size_t excluded = 0;
        for (std::size_t s = 0; s < report.settings.size(); ++s) {
            auto row = [&](std::string_view head, auto&& cellText) {
                out << "| " << head << " |";
                for (std::size_t p = 0; p < report.problems.size(); ++p) {
                    out << ' ' << cellText(report.cell(metric, s, p)) << " |";
                }
                out << '\n';
            };
            row(report.settings[s], [](const ReportCell& c) {
                if (!c.stats) {
                    return std::string("n/a");
                }
                return c.lowestMean ? "**" + fixed3(c.stats->mean) + "**" : fixed3(c.stats->mean);
            });
            row("", [](const ReportCell& c) { return c.stats ? fixed3(c.stats->std) : std::string("n/a"); });
            if (report.adaptiveSetting && s != *report.adaptiveSetting) {
                row("", [](const ReportCell& c) { return c.mark ? std::string(mark_token(c.mark->mark)) : std::string(); });
            }
            for (std::size_t p = 0; p < report.problems.size(); ++p) {
                excluded += report.cell(metric, s, p).excluded;
            }
        }
        if (excluded > 0) {
            out << "\n" << excluded << " run(s) excluded for an undefined indicator value.\n";
        }
    }
    if (report.adaptiveSetting) {
        out << "\nMarks compare each setting with " << report.settings[*report.adaptiveSetting]
            << " (Welch t test, two-sided, alpha 0.05): + adaptive lower, - adaptive higher, ~ no significant "
               "difference.\n";
    }
    return out.str();
}

std::string render_csv(const ExperimentReport& report)
{
    std::string out = "metric,problem,setting,mean,std,count,excluded,lowest,mark,t,df,p\n";
    for (Metric metric : {Metric::spread, Metric::gd}) {
        for (std::size_t s = 0; s < report.settings.size(); ++s) {
            for (std::size_t p = 0; p < report.problems.size(); ++p) {
                const auto& c = report.cell(metric, s, p);
                out += std::string(metric_name(metric)) + ',' + report.problems[p] + ',' + report.settings[s] + ',';
                if (c.stats) {
                    out += text::format_double(c.stats->mean) + ',' + text::format_double(c.stats->std) + ',' +
                           std::to_string(c.stats->count);
                } else {
                    out += ",,0";
                }
                out += ',' + std::to_string(c.excluded) + ',' + (c.lowestMean ? "1" : "0") + ',';
                if (c.mark) {
                    out += std::string(mark_token(c.mark->mark)) + ',' + text::format_double(c.mark->tStatistic) +
                           ',' + text::format_double(c.mark->degreesOfFreedom) + ',' +
                           text::format_double(c.mark->pValue);
                } else {
                    out += ",,,";
                }
                out += '\n';
            }
        }
    }
    return out;
}

std::string render_json(const ExperimentReport& report)
{
    nlohmann::ordered_json doc;
    doc["runs"] = report.runs;
    doc["problems"] = report.problems;
    doc["settings"] = report.settings;
    doc["adaptive"] = report.adaptiveSetting ? nlohmann::ordered_json(report.settings[*report.adaptiveSetting])
                                             : nlohmann::ordered_json(nullptr);
    auto& cells = doc["cells"] = nlohmann::ordered_json::array();
    for (Metric metric : {Metric::spread, Metric::gd}) {
        for (std::size_t s = 0; s < report.settings.size(); ++s) {
            for (std::size_t p = 0; p < report.problems.size(); ++p) {
                const auto& c = report.cell(metric, s, p);
                nlohmann::ordered_json cell;
                cell["metric"] = metric_name(metric);
                cell["problem"] = report.problems[p];
                cell["setting"] = report.settings[s];
                cell["mean"] = c.stats ? nlohmann::ordered_json(c.stats->mean) : nlohmann::ordered_json(nullptr);
                cell["std"] = c.stats ? nlohmann::ordered_json(c.stats->std) : nlohmann::ordered_json(nullptr);
                cell["count"] = c.stats ? c.stats->count : 0;
                cell["excluded"] = c.excluded;
                cell["lowest"] = c.lowestMean;
                if (c.mark) {
                    cell["mark"] = {{"token", mark_token(c.mark->mark)},
                                    {"t", c.mark->tStatistic},
                                    {"df", c.mark->degreesOfFreedom},
                                    {"p", c.mark->pValue}};
                } else {
                    cell["mark"] = nullptr;
                }
                cells.push_back(std::move(cell));
            }
        }
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_report(const ExperimentReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::markdown:
        return render_markdown(report);
    case ReportFormat::csv:
        return render_csv(report);
    case ReportFormat::json:
        break;
    }
    return render_json(report);
}

} // namespace nsga2
