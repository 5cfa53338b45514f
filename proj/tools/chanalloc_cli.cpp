// Command-line front end: instance generation, epsilon-constraint solving,
// brute-force cross-checks, and benchmark statistics.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 verification failure
// (oracle diff), 3 enumeration budget exceeded.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chanalloc/chanalloc.hpp"

namespace {

using namespace chanalloc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;

struct CliOptions {
    RunConfig config;
    std::string model_path; // input fixture; empty = generate from config
    std::string topology_out;
    std::string model_out;
    std::string csv_out;
    std::string json_out;
    std::string front_path; // oracle: previously written front to check
    std::string report_csv;
    std::string report_json;
    std::size_t trials = 1;
    std::vector<std::size_t> q_sweep;
    bool debug_stats = false;
};

void add_generation_flags(CLI::App& cmd, RunConfig& config)
{
    cmd.add_option("--seed", config.seed, "Random seed (all randomness flows from it)");
    cmd.add_option("--area-side", config.area_side, "Square area side, km");
    cmd.add_option("--pus", config.num_pus, "Number of primary users (K)");
    cmd.add_option("--sus", config.num_sus, "Number of secondary users (N)");
    cmd.add_option("--channels", config.num_channels, "Number of channels (M)");
    cmd.add_option("--d-min", config.d_min, "Interference-range floor, km");
    cmd.add_option("--d-max", config.d_max, "Interference-range cap, km");
    cmd.add_option("--dp-min", config.protection_radius_min, "Protection radius lower bound, km");
    cmd.add_option("--dp-max", config.protection_radius_max, "Protection radius upper bound, km");
}

void add_solve_flags(CLI::App& cmd, RunConfig& config)
{
    cmd.add_option("--c-max", config.channel_cap,
        "Per-user channel cap (0 = number of channels, i.e. inactive)");
    cmd.add_option("--grid", config.grid_intervals,
        "Grid intervals per constrained objective (one value applies to all)");
    cmd.add_option("--epsilon", config.epsilon, "Augmentation weight");
    cmd.add_option("--main", config.main_objective, "Main objective, 1-based user index");
    cmd.add_option("--threads", config.threads, "Sweep worker threads");
    cmd.add_option("--time-budget", config.time_budget_seconds,
        "Wall-clock budget per sweep in seconds (0 = unlimited)");
}

AllocationProblem load_or_generate_problem(const CliOptions& options)
{
    const std::size_t cap = options.config.channel_cap ? options.config.channel_cap
                                                       : options.config.num_channels;
    if (!options.model_path.empty()) {
        const ChannelModel model = channel_model_from_json(load_json(options.model_path));
        const std::size_t file_cap = options.config.channel_cap ? options.config.channel_cap
                                                                : model.num_channels;
        return build_problem(model, file_cap);
    }
    return build_problem(build_channel_model(generate_topology(options.config.seed,
                             options.config.area_side, options.config.num_pus,
                             options.config.num_sus, options.config.num_channels,
                             options.config.d_min, options.config.d_max,
                             { options.config.protection_radius_min, options.config.protection_radius_max })),
        cap);
}

GridSpec grid_spec_for(const CliOptions& options, std::size_t num_users)
{
    GridSpec spec;
    if (options.config.main_objective < 1 || options.config.main_objective > num_users)
        throw std::invalid_argument("main objective must be a 1-based user index");
    spec.main_objective = options.config.main_objective - 1;
    spec.intervals = options.config.grid_intervals;
    spec.epsilon = options.config.epsilon;
    return spec;
}

int cmd_generate(const CliOptions& options)
{
    const Topology topo = generate_topology(options.config.seed, options.config.area_side,
        options.config.num_pus, options.config.num_sus, options.config.num_channels,
        options.config.d_min, options.config.d_max,
        { options.config.protection_radius_min, options.config.protection_radius_max });
    const ChannelModel model = build_channel_model(topo);

    if (model.num_users == 0)
        std::cerr << "warning: no secondary users; the model is empty\n";

    if (!options.topology_out.empty())
        write_text(options.topology_out, to_json(topo).dump(2) + "\n");
    if (!options.model_out.empty())
        write_text(options.model_out, to_json(model).dump(2) + "\n");

    std::size_t available = 0;
    for (std::size_t i = 0; i < model.availability.size(); ++i)
        available += model.availability[i];
    std::size_t conflict_count = 0;
    for (std::size_t n = 0; n + 1 < model.num_users; ++n)
        for (std::size_t k = n + 1; k < model.num_users; ++k)
            for (std::size_t m = 0; m < model.num_channels; ++m)
                conflict_count += model.conflict(n, k, m);

    std::cout << "generated topology: " << topo.pus.size() << " primary users, "
              << topo.sus.size() << " secondary users, " << topo.num_channels << " channels\n";
    const double density = model.availability.size()
        ? static_cast<double>(available) / static_cast<double>(model.availability.size())
        : 0.0;
    std::cout << "availability density: " << density << "\n";
    std::cout << "conflict pairs (per channel, deduplicated): " << conflict_count << "\n";
    return kExitOk;
}

int cmd_solve(const CliOptions& options)
{
    const AllocationProblem problem = load_or_generate_problem(options);
    if (problem.num_users() < 2)
        throw std::invalid_argument("the sweep needs at least two secondary users: each user is "
                                    "one objective, and a single objective has no trade-off to map");
    const GridSpec spec = grid_spec_for(options, problem.num_users());
    const SweepOptions sweep { options.config.threads, options.config.time_budget_seconds };

    const auto t0 = std::chrono::steady_clock::now();
    const ParetoSet set = epsilon_constraint_solve(problem, spec, sweep);
    const auto t1 = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();

    if (!options.csv_out.empty())
        write_text(options.csv_out, pareto_csv(set, problem.num_users(), problem.num_channels()));
    if (!options.json_out.empty())
        write_text(options.json_out, to_json(set).dump(2) + "\n");

    std::cout << "pareto points: " << set.points.size() << "\n";
    std::cout << "subproblems: " << set.subproblems_total << " total, " << set.subproblems_solved
              << " solved, " << set.subproblems_infeasible << " infeasible, "
              << set.duplicates_merged << " duplicates merged\n";
    std::cout << "dominated filtered: " << set.dominated_filtered << "\n";
    if (set.truncated)
        std::cout << "truncated: sweep stopped at the time budget\n";
    std::cout << "wall time: " << seconds << " s\n";
    if (options.debug_stats)
        std::cout << "search: " << set.stats.nodes << " nodes, " << set.stats.bound_prunes
                  << " bound prunes, " << set.stats.constraint_prunes << " constraint prunes\n";
    return kExitOk;
}

int cmd_oracle(const CliOptions& options)
{
    if (options.model_path.empty())
        throw std::invalid_argument("oracle needs --model");
    const AllocationProblem problem = load_or_generate_problem(options);
    const ParetoSet reference = brute_force_front(problem);

    std::vector<ParetoPoint> candidate;
    if (!options.front_path.empty()) {
        candidate = pareto_points_from_json(load_json(options.front_path));
    } else {
        if (problem.num_users() < 2)
            throw std::invalid_argument("the sweep needs at least two secondary users");
        const GridSpec spec = grid_spec_for(options, problem.num_users());
        candidate = epsilon_constraint_solve(problem, spec,
            SweepOptions { options.config.threads, options.config.time_budget_seconds })
                        .points;
    }

    const auto matches = [](const std::vector<double>& a, const std::vector<double>& b) {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-6)
                return false;
        return true;
    };

    std::size_t violations = 0;
    for (const ParetoPoint& p : candidate) {
        const bool found = std::any_of(reference.points.begin(), reference.points.end(),
            [&](const ParetoPoint& r) { return matches(r.objectives, p.objectives); });
        if (!found) {
            ++violations;
            std::cout << "not in reference front:";
            for (double v : p.objectives)
                std::cout << " " << format_double(v);
            std::cout << "\n";
        }
    }
    std::size_t missing = 0;
    for (const ParetoPoint& r : reference.points) {
        const bool found = std::any_of(candidate.begin(), candidate.end(),
            [&](const ParetoPoint& p) { return matches(r.objectives, p.objectives); });
        if (!found)
            ++missing; // informational: coarse grids may under-sample the front
    }

    std::cout << "reference front: " << reference.points.size() << " points; checked front: "
              << candidate.size() << " points\n";
    std::cout << "violations: " << violations << " (points outside the reference front)\n";
    std::cout << "uncovered reference points: " << missing << "\n";
    return violations == 0 ? kExitOk : kExitVerification;
}

int cmd_benchmark(const CliOptions& options)
{
    if (!options.q_sweep.empty()) {
        const std::vector<QSweepRow> rows = run_q_sweep(options.config, options.q_sweep);
        std::cout << "q,subproblems_total,subproblems_solved,solve_seconds,pareto_count,truncated\n";
        for (const QSweepRow& row : rows)
            std::cout << row.q << "," << row.subproblems_total << "," << row.subproblems_solved
                      << "," << format_double(row.solve_seconds) << "," << row.pareto_count << ","
                      << (row.truncated ? 1 : 0) << "\n";
        return kExitOk;
    }

    const BenchReport report = run_benchmark(options.config, options.trials);
    if (!options.report_csv.empty())
        write_text(options.report_csv, bench_csv(report));
    if (!options.report_json.empty())
        write_text(options.report_json, to_json(report).dump(2) + "\n");

    std::cout << "trials: " << report.records.size() << "\n";
    std::cout << "time (s): mean " << report.time.mean << ", variance " << report.time.variance
              << ", stddev " << report.time.stddev << "\n";
    std::cout << "pareto count: mean " << report.pareto_count.mean << ", variance "
              << report.pareto_count.variance << ", stddev " << report.pareto_count.stddev << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Cognitive-radio channel allocation: geometric instances, multi-objective "
                   "binary programs, and Pareto fronts via the augmented epsilon-constraint method" };
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI/TOML file (sections per subcommand)");

    CliOptions options;

    CLI::App* generate = app.add_subcommand("generate", "Generate a topology and channel model");
    add_generation_flags(*generate, options.config);
    generate->add_option("--topology-out", options.topology_out, "Topology JSON path");
    generate->add_option("--model-out", options.model_out, "Channel-model JSON path");

    CLI::App* solve = app.add_subcommand("solve", "Enumerate the Pareto front of an instance");
    add_generation_flags(*solve, options.config);
    add_solve_flags(*solve, options.config);
    solve->add_option("--model", options.model_path, "Channel-model JSON fixture (skips generation)");
    solve->add_option("--csv-out", options.csv_out, "Front CSV path");
    solve->add_option("--json-out", options.json_out, "Front JSON path");
    solve->add_flag("--debug-stats", options.debug_stats, "Print search statistics");

    CLI::App* oracle = app.add_subcommand("oracle",
        "Cross-check a front against exhaustive enumeration");
    add_solve_flags(*oracle, options.config);
    oracle->add_option("--model", options.model_path, "Channel-model JSON fixture")->required();
    oracle->add_option("--front", options.front_path,
        "Front JSON to verify (default: run the sweep in-process)");

    CLI::App* benchmark = app.add_subcommand("benchmark", "Timing statistics over seeded topologies");
    add_generation_flags(*benchmark, options.config);
    add_solve_flags(*benchmark, options.config);
    benchmark->add_option("--trials", options.trials, "Number of consecutive-seed topologies");
    benchmark->add_option("--q-sweep", options.q_sweep,
        "Re-solve one topology at these grid interval counts instead of running trials");
    benchmark->add_option("--report-csv", options.report_csv, "Per-trial records CSV path");
    benchmark->add_option("--report-json", options.report_json, "Aggregate report JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed())
            return cmd_generate(options);
        if (solve->parsed())
            return cmd_solve(options);
        if (oracle->parsed())
            return cmd_oracle(options);
        if (benchmark->parsed())
            return cmd_benchmark(options);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
