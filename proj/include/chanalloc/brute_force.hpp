#ifndef CHANALLOC_BRUTE_FORCE_HPP_
#define CHANALLOC_BRUTE_FORCE_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chanalloc/pareto.hpp"
#include "chanalloc/problem.hpp"

namespace chanalloc {

/// Raised when an operation would exceed its enumeration budget.
class BudgetError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hard cap on 2^(N*M) enumeration.
inline constexpr std::size_t kEnumerationBudgetVars = 24;

/// Exhaustive reference front: enumerates every allocation, keeps the
/// feasible ones, and returns the non-dominated objective vectors with
/// canonical witnesses (the lexicographically largest assignment per
/// objective vector, matching the solver's tie-break). Deliberately avoids
/// the branch-and-bound path so it can serve as an independent check of the
/// sweep. Refuses instances with more than kEnumerationBudgetVars variables.
inline ParetoSet brute_force_front(const AllocationProblem& problem)
{
    const std::size_t vars = problem.num_vars();
    if (vars > kEnumerationBudgetVars)
        throw BudgetError("brute_force_front: " + std::to_string(vars)
            + " binary variables exceed the enumeration budget of "
            + std::to_string(kEnumerationBudgetVars));

    const std::size_t n_users = problem.num_users();
    const std::size_t n_channels = problem.num_channels();
    // Variable idx (row-major) maps to bit vars-1-idx, so numerically
    // descending masks enumerate assignment strings in lexicographic
    // descending order; the first witness seen for a vector is canonical.
    const auto bit_of = [vars](std::size_t idx) {
        return std::uint32_t { 1 } << (vars - 1 - idx);
    };

    std::uint32_t forbidden_bits = 0;
    std::vector<std::uint32_t> row_bits(n_users, 0);
    for (std::size_t n = 0; n < n_users; ++n) {
        for (std::size_t m = 0; m < n_channels; ++m) {
            const std::uint32_t b = bit_of(problem.var_index(n, m));
            row_bits[n] |= b;
            if (problem.forbidden()(n, m))
                forbidden_bits |= b;
        }
    }
    std::vector<std::uint32_t> pair_bits;
    pair_bits.reserve(problem.conflicts().size());
    for (const ConflictPair& c : problem.conflicts())
        pair_bits.push_back(bit_of(problem.var_index(c.user_a, c.channel))
            | bit_of(problem.var_index(c.user_b, c.channel)));

    struct Entry {
        RewardVector values;
        std::vector<std::int64_t> key;
        std::uint32_t mask = 0;
    };
    std::vector<Entry> front;

    ParetoSet out;
    const std::uint64_t total = std::uint64_t { 1 } << vars;
    out.subproblems_total = total;
    out.subproblems_solved = total;

    for (std::uint64_t wide = total; wide-- > 0;) {
        const std::uint32_t mask = static_cast<std::uint32_t>(wide);
        bool feasible = (mask & forbidden_bits) == 0;
        for (std::size_t n = 0; feasible && n < n_users; ++n)
            feasible = std::popcount(mask & row_bits[n]) <= static_cast<int>(problem.channel_cap());
        for (std::size_t i = 0; feasible && i < pair_bits.size(); ++i)
            feasible = (mask & pair_bits[i]) != pair_bits[i];
        if (!feasible) {
            ++out.subproblems_infeasible;
            continue;
        }

        RewardVector values(n_users, 0.0);
        for (std::size_t n = 0; n < n_users; ++n) {
            double sum = 0.0;
            for (std::size_t m = 0; m < n_channels; ++m)
                if (mask & bit_of(problem.var_index(n, m)))
                    sum += problem.reward()(n, m);
            values[n] = sum;
        }

        const std::vector<std::int64_t> key = detail::dedup_key(values);
        bool keep = true;
        for (const Entry& e : front) {
            if (e.key == key || dominates(e.values, values)) {
                keep = false;
                break;
            }
        }
        if (!keep)
            continue;
        std::erase_if(front, [&](const Entry& e) { return dominates(values, e.values); });
        front.push_back(Entry { std::move(values), key, mask });
    }

    std::vector<ParetoPoint> points;
    points.reserve(front.size());
    for (Entry& e : front) {
        Allocation alloc(n_users, n_channels);
        for (std::size_t idx = 0; idx < vars; ++idx)
            alloc[idx] = (e.mask & bit_of(idx)) ? 1 : 0;
        points.push_back(ParetoPoint { std::move(e.values), std::move(alloc), {} });
    }
    out.points = nondominated_filter(std::move(points));
    return out;
}

} // namespace chanalloc

#endif // CHANALLOC_BRUTE_FORCE_HPP_
