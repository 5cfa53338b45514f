#ifndef CHANALLOC_PARETO_HPP_
#define CHANALLOC_PARETO_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "chanalloc/problem.hpp"
#include "chanalloc/solver.hpp"

namespace chanalloc {

/// Equality tolerance used by the dominance predicate.
inline constexpr double kDominanceTol = 1e-9;

/// True iff f is component-wise >= g and strictly better in at least one
/// component (maximization sense). Components within kDominanceTol count as
/// equal, so a vector never dominates itself.
inline bool dominates(std::span<const double> f, std::span<const double> g, double tol = kDominanceTol)
{
    if (f.size() != g.size())
        throw std::invalid_argument("dominates: vectors of different length");
    bool strictly_better = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < g[i] - tol)
            return false;
        if (f[i] > g[i] + tol)
            strictly_better = true;
    }
    return strictly_better;
}

/// One efficient solution: objective vector, a witness allocation achieving
/// it, and the grid position of the subproblem that produced it (empty when
/// not grid-generated).
struct ParetoPoint {
    std::vector<double> objectives;
    Allocation witness;
    std::vector<std::size_t> grid_index;
};

namespace detail {
    inline bool lex_greater(const std::vector<double>& a, const std::vector<double>& b)
    {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
} // namespace detail

/// Keeps exactly the points not dominated by any other; output in stable
/// lexicographic descending order of the objective vector.
inline std::vector<ParetoPoint> nondominated_filter(std::vector<ParetoPoint> points)
{
    std::vector<char> dominated(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i && dominates(points[j].objectives, points[i].objectives)) {
                dominated[i] = 1;
                break;
            }
    std::vector<ParetoPoint> kept;
    kept.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!dominated[i])
            kept.push_back(std::move(points[i]));
    std::stable_sort(kept.begin(), kept.end(),
        [](const ParetoPoint& a, const ParetoPoint& b) { return detail::lex_greater(a.objectives, b.objectives); });
    return kept;
}

/// Payoff table of a p-objective problem. Row i holds the objective values at
/// the lexicographic optimum that prioritizes objective i, so the diagonal is
/// the utopia point and column minima give the pseudo-nadir. The true nadir
/// (component-wise minimum over the whole feasible region) is kept alongside.
struct PayoffTable {
    Matrix<double> phi; // p x p
    std::vector<double> utopia; // f_max, the diagonal
    std::vector<double> pseudo_nadir; // f_min, column minima of phi
    std::vector<double> nadir; // component-wise feasible minima
    std::vector<double> ranges; // utopia - pseudo_nadir

    std::size_t num_objectives() const { return utopia.size(); }

    /// Derives utopia, pseudo-nadir, and ranges from a raw payoff matrix.
    /// The true nadir is not recoverable from the matrix alone and is set to
    /// the pseudo-nadir estimate.
    static PayoffTable from_phi(Matrix<double> phi)
    {
        if (phi.rows() != phi.cols() || phi.rows() == 0)
            throw std::invalid_argument("PayoffTable::from_phi: matrix must be square and non-empty");
        const std::size_t p = phi.rows();
        PayoffTable table;
        table.utopia.resize(p);
        table.pseudo_nadir.resize(p);
        table.ranges.resize(p);
        for (std::size_t i = 0; i < p; ++i) {
            table.utopia[i] = phi(i, i);
            double column_min = phi(0, i);
            for (std::size_t j = 1; j < p; ++j)
                column_min = std::min(column_min, phi(j, i));
            table.pseudo_nadir[i] = column_min;
            table.ranges[i] = table.utopia[i] - table.pseudo_nadir[i];
        }
        table.nadir = table.pseudo_nadir;
        table.phi = std::move(phi);
        return table;
    }
};

/// Builds the payoff table by p lexicographic solves: row i prioritizes
/// objective i, then the remaining objectives in index order. Rows are
/// re-evaluated at the final witness, so each row is a feasible objective
/// vector. The nadir is found by minimizing each objective over the feasible
/// region (maximizing its negation).
inline PayoffTable payoff_table(const AllocationProblem& problem, Deadline deadline = {})
{
    const std::size_t p = problem.num_users();
    if (p < 2)
        throw std::invalid_argument("payoff_table: need at least two objectives");

    std::vector<LinearObjective> row_objectives(p);
    for (std::size_t i = 0; i < p; ++i)
        row_objectives[i] = user_reward_objective(problem, i);

    Matrix<double> phi(p, p);
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<LinearObjective> order;
        order.reserve(p);
        order.push_back(row_objectives[i]);
        for (std::size_t j = 0; j < p; ++j)
            if (j != i)
                order.push_back(row_objectives[j]);
        const LexResult res = solve_lexicographic(problem, order, {}, deadline);
        // Cannot fail: the all-zero allocation is feasible.
        const RewardVector row = reward_vector(problem, res.witness);
        for (std::size_t j = 0; j < p; ++j)
            phi(i, j) = row[j];
    }

    PayoffTable table = PayoffTable::from_phi(std::move(phi));
    table.nadir.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        LinearObjective negated = row_objectives[i];
        for (std::size_t v = 0; v < negated.coeffs.size(); ++v)
            negated.coeffs[v] = -negated.coeffs[v];
        const SolveResult res = solve(problem, negated, {}, deadline);
        table.nadir[i] = -res.value;
    }
    return table;
}

/// Equally spaced constraint levels e_n = f_max + n * (f_min - f_max) / q for
/// n = 0..q: q+1 values, descending, endpoints exact.
inline std::vector<double> grid_points(double f_min, double f_max, std::size_t q)
{
    if (f_min > f_max)
        throw std::invalid_argument("grid_points: f_min must not exceed f_max");
    if (q < 1)
        throw std::invalid_argument("grid_points: need at least one interval");
    std::vector<double> points(q + 1);
    points[0] = f_max;
    points[q] = f_min;
    const double step = (f_min - f_max) / static_cast<double>(q);
    for (std::size_t n = 1; n < q; ++n)
        points[n] = f_max + static_cast<double>(n) * step;
    return points;
}

/// Sweep configuration: which objective stays in the objective function, how
/// many grid intervals each constrained objective gets (one entry per
/// constrained objective in ascending index order, or a single entry applied
/// to all), and the augmentation weight.
struct GridSpec {
    std::size_t main_objective = 0; // objective kept in the objective function
    std::vector<std::size_t> intervals { 20 };
    double epsilon = 1e-6;
};

/// One grid subproblem ready for the solver.
struct Subproblem {
    LinearObjective objective;
    std::vector<SideConstraint> side;
};

namespace detail {
    inline std::vector<std::size_t> constrained_objectives(std::size_t p, std::size_t main)
    {
        if (main >= p)
            throw std::invalid_argument("GridSpec: main objective out of range");
        std::vector<std::size_t> others;
        others.reserve(p - 1);
        for (std::size_t i = 0; i < p; ++i)
            if (i != main)
                others.push_back(i);
        return others;
    }

    inline std::vector<std::size_t> resolve_intervals(const GridSpec& spec, std::size_t constrained)
    {
        std::vector<std::size_t> q = spec.intervals;
        if (q.size() == 1)
            q.assign(constrained, q[0]);
        if (q.size() != constrained)
            throw std::invalid_argument("GridSpec: interval count must be 1 or match the constrained objectives");
        for (std::size_t qi : q)
            if (qi < 1)
                throw std::invalid_argument("GridSpec: intervals must be at least 1");
        if (!(spec.epsilon > 0.0) || spec.epsilon >= 1.0)
            throw std::invalid_argument("GridSpec: epsilon must be in (0, 1)");
        return q;
    }

    /// Treat a range this small as degenerate: no augmentation term, constraint
    /// pinned at the objective's single attainable payoff level.
    inline constexpr double kRangeFloor = 1e-12;
} // namespace detail

/// Assembles the augmented subproblem for constraint levels `e` (one entry
/// per constrained objective, ascending index order): maximize
/// f_main + epsilon * sum_i (f_i - e_i) / r_i subject to f_i >= e_i. The
/// slack s_i = f_i - e_i is substituted away, which leaves a purely binary
/// program; dividing by the range r_i keeps the augmentation scale-free.
/// Zero-range objectives contribute no augmentation term and are constrained
/// at their payoff-table minimum.
inline Subproblem build_subproblem(const AllocationProblem& problem, const PayoffTable& table,
    const GridSpec& spec, std::span<const double> e)
{
    const std::size_t p = problem.num_users();
    const std::vector<std::size_t> constrained = detail::constrained_objectives(p, spec.main_objective);
    if (e.size() != constrained.size())
        throw std::invalid_argument("build_subproblem: one constraint level per constrained objective");

    Subproblem sub;
    sub.objective = user_reward_objective(problem, spec.main_objective);
    sub.side.reserve(constrained.size());

    for (std::size_t j = 0; j < constrained.size(); ++j) {
        const std::size_t i = constrained[j];
        const double range = table.ranges[i];
        SideConstraint constraint;
        constraint.coeffs = Matrix<double>(p, problem.num_channels(), 0.0);
        for (std::size_t m = 0; m < problem.num_channels(); ++m)
            constraint.coeffs(i, m) = problem.reward()(i, m);
        constraint.sense = ConstraintSense::greater_equal;
        if (range > detail::kRangeFloor) {
            constraint.rhs = e[j];
            const double weight = spec.epsilon / range;
            for (std::size_t m = 0; m < problem.num_channels(); ++m)
                sub.objective.coeffs(i, m) += weight * problem.reward()(i, m);
            sub.objective.constant -= spec.epsilon * e[j] / range;
        } else {
            constraint.rhs = table.pseudo_nadir[i];
        }
        sub.side.push_back(std::move(constraint));
    }
    return sub;
}

/// Result of a grid sweep: deduplicated non-dominated points plus subproblem
/// accounting. `truncated` is set only when a time budget stopped the sweep
/// early.
struct ParetoSet {
    std::vector<ParetoPoint> points;
    std::uint64_t subproblems_total = 0;
    std::uint64_t subproblems_solved = 0;
    std::uint64_t subproblems_infeasible = 0;
    std::uint64_t duplicates_merged = 0;
    std::uint64_t dominated_filtered = 0; // safety-net removals; expected 0
    bool truncated = false;
    SearchStats stats;
};

/// Execution knobs for the sweep. Results are identical for any thread
/// count; the time budget (0 = none) stops the sweep at a block boundary or
/// aborts a runaway solve, marking the result truncated.
struct SweepOptions {
    unsigned threads = 1;
    double time_budget_seconds = 0.0;
};

namespace detail {
    struct SubproblemOutcome {
        bool feasible = false;
        RewardVector objectives;
        Allocation witness;
        SearchStats stats;
    };

    /// Rounds each component to the deduplication tolerance so equal-valued
    /// points collapse to one key.
    inline std::vector<std::int64_t> dedup_key(const RewardVector& values)
    {
        std::vector<std::int64_t> key(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            key[i] = std::llround(values[i] / kDominanceTol);
        return key;
    }
} // namespace detail

/// The full augmented epsilon-constraint procedure: payoff table via
/// lexicographic solves, grid product over the constrained objectives'
/// [pseudo-nadir, utopia] ranges, one exact solve per grid cell (infeasible
/// cells are discarded), deduplication by objective vector, and a final
/// dominance filter as a safety net against fixing-tolerance artifacts.
/// Deterministic, and independent of the sweep thread count: subproblems are
/// merged in grid order.
inline ParetoSet epsilon_constraint_solve(const AllocationProblem& problem, const GridSpec& spec,
    const SweepOptions& options = {})
{
    const std::size_t p = problem.num_users();
    if (p < 2)
        throw std::invalid_argument("epsilon_constraint_solve: need at least two objectives");
    const std::vector<std::size_t> constrained = detail::constrained_objectives(p, spec.main_objective);
    const std::vector<std::size_t> q = detail::resolve_intervals(spec, constrained.size());

    Deadline deadline;
    if (options.time_budget_seconds > 0.0)
        deadline = std::chrono::steady_clock::now()
            + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(options.time_budget_seconds));

    ParetoSet out;
    out.subproblems_total = 1;
    for (std::size_t qi : q)
        out.subproblems_total *= static_cast<std::uint64_t>(qi) + 1;

    PayoffTable table;
    try {
        table = payoff_table(problem, deadline);
    } catch (const detail::DeadlineReached&) {
        out.truncated = true;
        return out;
    }

    std::vector<std::vector<double>> grids(constrained.size());
    for (std::size_t j = 0; j < constrained.size(); ++j) {
        const std::size_t i = constrained[j];
        grids[j] = grid_points(table.pseudo_nadir[i], table.utopia[i], q[j]);
    }

    // Flat subproblem id -> grid multi-index, first constrained objective
    // outermost.
    const auto grid_index_of = [&](std::uint64_t flat) {
        std::vector<std::size_t> idx(constrained.size());
        for (std::size_t j = constrained.size(); j-- > 0;) {
            const std::uint64_t base = static_cast<std::uint64_t>(q[j]) + 1;
            idx[j] = static_cast<std::size_t>(flat % base);
            flat /= base;
        }
        return idx;
    };

    const auto solve_one = [&](std::uint64_t flat) {
        detail::SubproblemOutcome outcome;
        const std::vector<std::size_t> idx = grid_index_of(flat);
        std::vector<double> e(constrained.size());
        for (std::size_t j = 0; j < constrained.size(); ++j)
            e[j] = grids[j][idx[j]];
        const Subproblem sub = build_subproblem(problem, table, spec, e);
        SolveResult res = solve(problem, sub.objective, sub.side, deadline);
        outcome.stats = res.stats;
        if (res.status == SolveStatus::optimal) {
            outcome.feasible = true;
            outcome.objectives = reward_vector(problem, res.witness);
            outcome.witness = std::move(res.witness);
        }
        return outcome;
    };

    const unsigned threads = std::max(1u, options.threads);
    const std::uint64_t block_size = static_cast<std::uint64_t>(threads) * 16;

    std::map<std::vector<std::int64_t>, std::size_t> seen; // dedup key -> index into raw points
    std::vector<ParetoPoint> raw;

    std::uint64_t next = 0;
    bool deadline_hit = false;
    while (next < out.subproblems_total && !deadline_hit) {
        if (deadline && std::chrono::steady_clock::now() >= *deadline)
            break;
        const std::uint64_t lo = next;
        const std::uint64_t hi = std::min(out.subproblems_total, lo + block_size);

        std::vector<detail::SubproblemOutcome> outcomes(static_cast<std::size_t>(hi - lo));
        if (threads == 1 || hi - lo == 1) {
            try {
                for (std::uint64_t flat = lo; flat < hi; ++flat)
                    outcomes[static_cast<std::size_t>(flat - lo)] = solve_one(flat);
            } catch (const detail::DeadlineReached&) {
                deadline_hit = true;
                break;
            }
        } else {
            std::vector<std::thread> pool;
            std::vector<std::uint8_t> aborted(threads, 0);
            std::vector<std::uint8_t> done(static_cast<std::size_t>(hi - lo), 0);
            for (unsigned w = 0; w < threads; ++w) {
                pool.emplace_back([&, w]() {
                    try {
                        for (std::uint64_t flat = lo + w; flat < hi; flat += threads) {
                            outcomes[static_cast<std::size_t>(flat - lo)] = solve_one(flat);
                            done[static_cast<std::size_t>(flat - lo)] = 1;
                        }
                    } catch (const detail::DeadlineReached&) {
                        aborted[w] = 1;
                    }
                });
            }
            for (std::thread& t : pool)
                t.join();
            for (std::uint8_t a : aborted)
                deadline_hit |= a != 0;
            if (deadline_hit) {
                // Keep only the contiguous prefix so truncation never skips
                // a subproblem.
                std::uint64_t prefix = 0;
                while (prefix < hi - lo && done[static_cast<std::size_t>(prefix)])
                    ++prefix;
                outcomes.resize(static_cast<std::size_t>(prefix));
            }
        }

        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            detail::SubproblemOutcome& outcome = outcomes[k];
            ++out.subproblems_solved;
            out.stats += outcome.stats;
            if (!outcome.feasible) {
                ++out.subproblems_infeasible;
                continue;
            }
            const std::vector<std::int64_t> key = detail::dedup_key(outcome.objectives);
            if (seen.contains(key)) {
                ++out.duplicates_merged;
                continue;
            }
            seen.emplace(key, raw.size());
            raw.push_back(ParetoPoint { std::move(outcome.objectives), std::move(outcome.witness),
                grid_index_of(lo + k) });
        }
        next = lo + outcomes.size();
        if (deadline_hit || outcomes.size() < hi - lo)
            break;
    }
    out.truncated = out.subproblems_solved < out.subproblems_total;

    const std::size_t before = raw.size();
    out.points = nondominated_filter(std::move(raw));
    out.dominated_filtered = before - out.points.size();
    return out;
}

} // namespace chanalloc

#endif // CHANALLOC_PARETO_HPP_
