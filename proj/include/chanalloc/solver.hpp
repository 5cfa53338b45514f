#ifndef CHANALLOC_SOLVER_HPP_
#define CHANALLOC_SOLVER_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chanalloc/problem.hpp"

namespace chanalloc {

/// Optional wall-clock cutoff for a solve. When the search passes it, the
/// solve aborts by throwing detail::DeadlineReached; used by the sweep's
/// time-budget machinery, never enabled by default.
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

namespace detail {
    struct DeadlineReached { };
} // namespace detail

enum class ConstraintSense { greater_equal, less_equal, equal };

/// Linear function over the assignment matrix: sum of coeffs(n,m)*a(n,m)
/// plus a constant offset.
struct LinearObjective {
    Matrix<double> coeffs;
    double constant = 0.0;
};

/// Extra linear constraint imposed on top of the problem's own feasibility
/// (conflicts, cap, exclusions). Compared with absolute tolerance 1e-9.
struct SideConstraint {
    Matrix<double> coeffs;
    ConstraintSense sense = ConstraintSense::greater_equal;
    double rhs = 0.0;
};

enum class SolveStatus { optimal, infeasible };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t bound_prunes = 0;
    std::uint64_t constraint_prunes = 0;
    std::uint64_t incumbents = 0;

    SearchStats& operator+=(const SearchStats& o)
    {
        nodes += o.nodes;
        bound_prunes += o.bound_prunes;
        constraint_prunes += o.constraint_prunes;
        incumbents += o.incumbents;
        return *this;
    }
};

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    double value = 0.0; // objective at witness, valid iff optimal
    Allocation witness;
    SearchStats stats;
};

/// Achieved optima of a lexicographic solve, in priority order, with the
/// final witness.
struct LexResult {
    SolveStatus status = SolveStatus::infeasible;
    std::vector<double> values;
    Allocation witness;
    SearchStats stats;
};

/// Absolute tolerance for side-constraint satisfaction.
inline constexpr double kConstraintTol = 1e-9;

namespace detail {

    /// Depth-first branch and bound over the N*M binary variables in fixed
    /// row-major order, branching value 1 first. The first optimal leaf in
    /// that order is kept, so the witness is the lexicographically largest
    /// assignment string among the optima; identical inputs give an identical
    /// witness. Upper bound: current value plus the positive coefficients of
    /// the remaining variables that could still be set given the partial
    /// assignment. Side constraints prune via their best/worst achievable
    /// completions.
    class BranchAndBound {
    public:
        BranchAndBound(const AllocationProblem& problem, const LinearObjective& objective,
            std::span<const SideConstraint> side, Deadline deadline)
            : problem_(problem)
            , constant_(objective.constant)
            , deadline_(deadline)
        {
            const std::size_t vars = problem.num_vars();
            if (objective.coeffs.rows() != problem.num_users() || objective.coeffs.cols() != problem.num_channels())
                throw std::invalid_argument("solve: objective shape mismatch");
            obj_.assign(objective.coeffs.data().begin(), objective.coeffs.data().end());
            rows_.reserve(side.size());
            for (const SideConstraint& s : side) {
                if (s.coeffs.rows() != problem.num_users() || s.coeffs.cols() != problem.num_channels())
                    throw std::invalid_argument("solve: side constraint shape mismatch");
                rows_.push_back(Row { std::vector<double>(s.coeffs.data().begin(), s.coeffs.data().end()),
                    s.rhs, 0.0, s.sense });
            }
            x_.assign(vars, 0);
            row_count_.assign(problem.num_users(), 0);
        }

        SolveResult run()
        {
            dfs(0);
            SolveResult result;
            result.stats = stats_;
            if (!found_) {
                result.status = SolveStatus::infeasible;
                return result;
            }
            result.status = SolveStatus::optimal;
            result.value = best_exact_value_ + constant_;
            result.witness = Allocation(problem_.num_users(), problem_.num_channels());
            for (std::size_t i = 0; i < best_x_.size(); ++i)
                result.witness[i] = best_x_[i];
            return result;
        }

    private:
        struct Row {
            std::vector<double> coef;
            double rhs = 0.0;
            double lhs = 0.0; // running value over assigned variables
            ConstraintSense sense = ConstraintSense::greater_equal;
        };

        bool can_set_one(std::size_t var) const
        {
            if (problem_.forbidden()[var])
                return false;
            if (row_count_[var / problem_.num_channels()] >= problem_.channel_cap())
                return false;
            for (std::uint32_t partner : problem_.conflict_partners(var))
                if (x_[partner])
                    return false;
            return true;
        }

        void dfs(std::size_t t)
        {
            ++stats_.nodes;
            if (deadline_ && (stats_.nodes & 0x3fff) == 0
                && std::chrono::steady_clock::now() >= *deadline_)
                throw detail::DeadlineReached {};
            const std::size_t vars = x_.size();

            // One pass over the still-open variables: objective gain and
            // per-constraint achievable range.
            double pos_gain = 0.0;
            max_add_.assign(rows_.size(), 0.0);
            min_add_.assign(rows_.size(), 0.0);
            for (std::size_t idx = t; idx < vars; ++idx) {
                if (!can_set_one(idx))
                    continue;
                if (obj_[idx] > 0.0)
                    pos_gain += obj_[idx];
                for (std::size_t s = 0; s < rows_.size(); ++s) {
                    const double c = rows_[s].coef[idx];
                    if (c > 0.0)
                        max_add_[s] += c;
                    else
                        min_add_[s] += c;
                }
            }
            for (std::size_t s = 0; s < rows_.size(); ++s) {
                const Row& row = rows_[s];
                const bool ge_ok = row.lhs + max_add_[s] >= row.rhs - kConstraintTol;
                const bool le_ok = row.lhs + min_add_[s] <= row.rhs + kConstraintTol;
                const bool ok = row.sense == ConstraintSense::greater_equal ? ge_ok
                    : row.sense == ConstraintSense::less_equal              ? le_ok
                                                                            : (ge_ok && le_ok);
                if (!ok) {
                    ++stats_.constraint_prunes;
                    return;
                }
            }

            if (t == vars) {
                if (!found_ || value_ > best_value_) {
                    found_ = true;
                    best_value_ = value_;
                    // The running value carries add/undo rounding residue;
                    // report a fresh exact sum instead.
                    best_exact_value_ = 0.0;
                    for (std::size_t i = 0; i < vars; ++i)
                        if (x_[i])
                            best_exact_value_ += obj_[i];
                    best_x_ = x_;
                    ++stats_.incumbents;
                }
                return;
            }

            if (found_ && value_ + pos_gain <= best_value_) {
                ++stats_.bound_prunes;
                return;
            }

            if (can_set_one(t)) {
                x_[t] = 1;
                ++row_count_[t / problem_.num_channels()];
                value_ += obj_[t];
                for (Row& row : rows_)
                    row.lhs += row.coef[t];
                dfs(t + 1);
                for (Row& row : rows_)
                    row.lhs -= row.coef[t];
                value_ -= obj_[t];
                --row_count_[t / problem_.num_channels()];
                x_[t] = 0;
            }
            dfs(t + 1);
        }

        const AllocationProblem& problem_;
        double constant_ = 0.0;
        Deadline deadline_;
        std::vector<double> obj_;
        std::vector<Row> rows_;
        std::vector<std::uint8_t> x_;
        std::vector<std::size_t> row_count_;
        std::vector<double> max_add_;
        std::vector<double> min_add_;
        double value_ = 0.0;
        bool found_ = false;
        double best_value_ = 0.0; // running-sum scale, drives the search
        double best_exact_value_ = 0.0; // recomputed at acceptance, reported
        std::vector<std::uint8_t> best_x_;
        SearchStats stats_;
    };

} // namespace detail

/// Exact maximizer of a linear objective over the feasible allocations that
/// also satisfy `side`. Deterministic; see detail::BranchAndBound for the
/// witness tie-break.
inline SolveResult solve(const AllocationProblem& problem, const LinearObjective& objective,
    std::span<const SideConstraint> side = {}, Deadline deadline = {})
{
    detail::BranchAndBound search(problem, objective, side, deadline);
    return search.run();
}

/// Sequentially maximizes the objectives: each step restricts the search to
/// the previous step's optimal set via an added >= constraint at the achieved
/// value minus a small fixing tolerance (exact equality on real coefficients
/// is numerically brittle).
inline LexResult solve_lexicographic(const AllocationProblem& problem,
    std::span<const LinearObjective> objectives, std::span<const SideConstraint> side = {},
    Deadline deadline = {})
{
    if (objectives.empty())
        throw std::invalid_argument("solve_lexicographic: need at least one objective");

    std::vector<SideConstraint> sides(side.begin(), side.end());
    LexResult out;
    out.values.reserve(objectives.size());
    for (std::size_t j = 0; j < objectives.size(); ++j) {
        SolveResult res = solve(problem, objectives[j], sides, deadline);
        out.stats += res.stats;
        if (res.status == SolveStatus::infeasible) {
            out.status = SolveStatus::infeasible;
            out.values.clear();
            return out;
        }
        out.values.push_back(res.value);
        out.witness = std::move(res.witness);
        if (j + 1 < objectives.size()) {
            const double fixing = 1e-9 * std::max(1.0, std::abs(res.value));
            sides.push_back(SideConstraint { objectives[j].coeffs, ConstraintSense::greater_equal,
                res.value - objectives[j].constant - fixing });
        }
    }
    out.status = SolveStatus::optimal;
    return out;
}

/// Objective selecting one user's reward row: f_user(A) = sum_m A(user,m) * B(user,m).
inline LinearObjective user_reward_objective(const AllocationProblem& problem, std::size_t user)
{
    if (user >= problem.num_users())
        throw std::invalid_argument("user_reward_objective: user out of range");
    LinearObjective obj;
    obj.coeffs = Matrix<double>(problem.num_users(), problem.num_channels(), 0.0);
    for (std::size_t m = 0; m < problem.num_channels(); ++m)
        obj.coeffs(user, m) = problem.reward()(user, m);
    return obj;
}

} // namespace chanalloc

#endif // CHANALLOC_SOLVER_HPP_
