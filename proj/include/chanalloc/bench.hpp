#ifndef CHANALLOC_BENCH_HPP_
#define CHANALLOC_BENCH_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chanalloc/channel_model.hpp"
#include "chanalloc/config.hpp"
#include "chanalloc/pareto.hpp"
#include "chanalloc/problem.hpp"
#include "chanalloc/serialize.hpp"
#include "chanalloc/topology.hpp"

namespace chanalloc {

namespace detail {
    inline GridSpec grid_spec_from(const RunConfig& config)
    {
        GridSpec spec;
        if (config.main_objective < 1 || config.main_objective > config.num_sus)
            throw std::invalid_argument("config: main objective out of range");
        spec.main_objective = config.main_objective - 1;
        spec.intervals = config.grid_intervals;
        spec.epsilon = config.epsilon;
        return spec;
    }

    inline AllocationProblem problem_from(const RunConfig& config)
    {
        const Topology topo = generate_topology(config.seed, config.area_side, config.num_pus,
            config.num_sus, config.num_channels, config.d_min, config.d_max,
            { config.protection_radius_min, config.protection_radius_max });
        const ChannelModel model = build_channel_model(topo);
        const std::size_t cap = config.channel_cap ? config.channel_cap : config.num_channels;
        return build_problem(model, cap);
    }

    /// Wall-clock seconds rounded to millisecond resolution, so reports and
    /// their recomputed aggregates agree exactly.
    inline double round_ms(double seconds)
    {
        return std::round(seconds * 1000.0) / 1000.0;
    }
} // namespace detail

/// One benchmarked topology: solve wall time (solve call only, I/O excluded)
/// and the front accounting.
struct BenchRecord {
    std::uint64_t seed = 0;
    double solve_seconds = 0.0;
    std::size_t pareto_count = 0;
    std::uint64_t subproblems_total = 0;
    std::uint64_t subproblems_solved = 0;
    std::uint64_t subproblems_infeasible = 0;
    bool truncated = false;
};

/// Population mean/variance/stddev over a sample; a single trial has zero
/// variance by definition.
struct Aggregate {
    double mean = 0.0;
    double variance = 0.0;
    double stddev = 0.0;
};

inline Aggregate aggregate(std::span<const double> values)
{
    Aggregate agg;
    if (values.empty())
        return agg;
    double sum = 0.0;
    for (double v : values)
        sum += v;
    agg.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values)
        sq += (v - agg.mean) * (v - agg.mean);
    agg.variance = sq / static_cast<double>(values.size());
    agg.stddev = std::sqrt(agg.variance);
    return agg;
}

struct BenchReport {
    std::vector<BenchRecord> records; // ordered by seed
    Aggregate time;
    Aggregate pareto_count;
};

/// Runs `trials` seeded topologies (seed, seed+1, ...) through generation and
/// the epsilon-constraint sweep, then aggregates wall time and front size.
inline BenchReport run_benchmark(const RunConfig& config, std::size_t trials)
{
    if (trials < 1)
        throw std::invalid_argument("run_benchmark: need at least one trial");
    BenchReport report;
    report.records.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        RunConfig trial = config;
        trial.seed = config.seed + t;
        const AllocationProblem problem = detail::problem_from(trial);
        const GridSpec spec = detail::grid_spec_from(trial);
        const SweepOptions options { config.threads, config.time_budget_seconds };

        const auto t0 = std::chrono::steady_clock::now();
        const ParetoSet set = epsilon_constraint_solve(problem, spec, options);
        const auto t1 = std::chrono::steady_clock::now();

        BenchRecord rec;
        rec.seed = trial.seed;
        rec.solve_seconds = detail::round_ms(std::chrono::duration<double>(t1 - t0).count());
        rec.pareto_count = set.points.size();
        rec.subproblems_total = set.subproblems_total;
        rec.subproblems_solved = set.subproblems_solved;
        rec.subproblems_infeasible = set.subproblems_infeasible;
        rec.truncated = set.truncated;
        report.records.push_back(rec);
    }

    std::vector<double> times, counts;
    times.reserve(trials);
    counts.reserve(trials);
    for (const BenchRecord& rec : report.records) {
        times.push_back(rec.solve_seconds);
        counts.push_back(static_cast<double>(rec.pareto_count));
    }
    report.time = aggregate(times);
    report.pareto_count = aggregate(counts);
    return report;
}

/// One row of a grid-resolution sweep on a fixed topology.
struct QSweepRow {
    std::size_t q = 0;
    std::uint64_t subproblems_total = 0;
    std::uint64_t subproblems_solved = 0;
    double solve_seconds = 0.0;
    std::size_t pareto_count = 0;
    bool truncated = false;
};

/// Re-solves the same seeded topology at each grid interval count in `qs`,
/// under the config's time budget. Times are reported as measured; truncated
/// rows state how far the sweep got.
inline std::vector<QSweepRow> run_q_sweep(const RunConfig& config, std::span<const std::size_t> qs)
{
    const AllocationProblem problem = detail::problem_from(config);
    std::vector<QSweepRow> rows;
    rows.reserve(qs.size());
    for (std::size_t q : qs) {
        RunConfig at_q = config;
        at_q.grid_intervals = { q };
        const GridSpec spec = detail::grid_spec_from(at_q);
        const SweepOptions options { config.threads, config.time_budget_seconds };

        const auto t0 = std::chrono::steady_clock::now();
        const ParetoSet set = epsilon_constraint_solve(problem, spec, options);
        const auto t1 = std::chrono::steady_clock::now();

        QSweepRow row;
        row.q = q;
        row.subproblems_total = set.subproblems_total;
        row.subproblems_solved = set.subproblems_solved;
        row.solve_seconds = detail::round_ms(std::chrono::duration<double>(t1 - t0).count());
        row.pareto_count = set.points.size();
        row.truncated = set.truncated;
        rows.push_back(row);
    }
    return rows;
}

inline std::string bench_csv(const BenchReport& report)
{
    std::ostringstream out;
    out << "seed,solve_seconds,pareto_count,subproblems_total,subproblems_solved,"
           "subproblems_infeasible,truncated\n";
    for (const BenchRecord& rec : report.records)
        out << rec.seed << "," << format_double(rec.solve_seconds) << "," << rec.pareto_count
            << "," << rec.subproblems_total << "," << rec.subproblems_solved << ","
            << rec.subproblems_infeasible << "," << (rec.truncated ? 1 : 0) << "\n";
    return out.str();
}

inline json to_json(const Aggregate& agg)
{
    return json { { "mean", agg.mean }, { "variance", agg.variance }, { "stddev", agg.stddev } };
}

inline json to_json(const BenchReport& report)
{
    json records = json::array();
    for (const BenchRecord& rec : report.records)
        records.push_back({ { "seed", rec.seed }, { "solve_seconds", rec.solve_seconds },
            { "pareto_count", rec.pareto_count }, { "subproblems_total", rec.subproblems_total },
            { "subproblems_solved", rec.subproblems_solved },
            { "subproblems_infeasible", rec.subproblems_infeasible },
            { "truncated", rec.truncated } });
    return json {
        { "schema", "chanalloc/bench-v1" },
        { "records", std::move(records) },
        { "time", to_json(report.time) },
        { "pareto_count", to_json(report.pareto_count) },
    };
}

} // namespace chanalloc

#endif // CHANALLOC_BENCH_HPP_
