#ifndef CHANALLOC_PROBLEM_HPP_
#define CHANALLOC_PROBLEM_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chanalloc/channel_model.hpp"
#include "chanalloc/matrix.hpp"

namespace chanalloc {

/// Binary assignment matrix: entry (n, m) is 1 iff channel m is assigned to
/// user n.
using Allocation = Matrix<std::uint8_t>;

/// Per-user achieved reward (km^2).
using RewardVector = std::vector<double>;

/// One pairwise interference constraint: users a and b may not share
/// `channel`. Stored with a < b.
struct ConflictPair {
    std::size_t user_a = 0;
    std::size_t user_b = 0;
    std::size_t channel = 0;

    friend bool operator==(const ConflictPair&, const ConflictPair&) = default;
    friend auto operator<=>(const ConflictPair&, const ConflictPair&) = default;
};

/// Multi-objective binary program over an N x M assignment matrix: one linear
/// reward objective per user, pairwise conflict constraints per channel, a
/// per-user channel cap, and hard exclusions for unavailable cells.
/// Immutable once constructed; safe to share across threads.
class AllocationProblem {
public:
    AllocationProblem() = default;

    AllocationProblem(Matrix<double> reward, Matrix<std::uint8_t> forbidden,
        std::vector<ConflictPair> conflicts, std::size_t channel_cap)
        : reward_(std::move(reward))
        , forbidden_(std::move(forbidden))
        , conflicts_(std::move(conflicts))
    {
        if (forbidden_.rows() != reward_.rows() || forbidden_.cols() != reward_.cols())
            throw std::invalid_argument("AllocationProblem: reward/forbidden shape mismatch");
        if (channel_cap < 1)
            throw std::invalid_argument("AllocationProblem: channel cap must be at least 1");
        c_max_ = std::min(channel_cap, std::max<std::size_t>(num_channels(), 1));

        for (std::size_t i = 0; i < reward_.size(); ++i) {
            if (!std::isfinite(reward_[i]) || reward_[i] < 0.0)
                throw std::invalid_argument("AllocationProblem: rewards must be finite and non-negative");
            if (forbidden_[i])
                reward_[i] = 0.0; // excluded cells carry no reward
        }

        for (ConflictPair& c : conflicts_) {
            if (c.user_a == c.user_b)
                throw std::invalid_argument("AllocationProblem: conflict pair with identical users");
            if (c.user_a > c.user_b)
                std::swap(c.user_a, c.user_b);
            if (c.user_b >= num_users() || c.channel >= num_channels())
                throw std::invalid_argument("AllocationProblem: conflict pair out of range");
        }
        std::sort(conflicts_.begin(), conflicts_.end());
        conflicts_.erase(std::unique(conflicts_.begin(), conflicts_.end()), conflicts_.end());

        partners_.assign(reward_.size(), {});
        for (const ConflictPair& c : conflicts_) {
            partners_[var_index(c.user_a, c.channel)].push_back(static_cast<std::uint32_t>(var_index(c.user_b, c.channel)));
            partners_[var_index(c.user_b, c.channel)].push_back(static_cast<std::uint32_t>(var_index(c.user_a, c.channel)));
        }
    }

    std::size_t num_users() const { return reward_.rows(); }
    std::size_t num_channels() const { return reward_.cols(); }
    std::size_t num_vars() const { return reward_.size(); }
    std::size_t channel_cap() const { return c_max_; }

    const Matrix<double>& reward() const { return reward_; }
    const Matrix<std::uint8_t>& forbidden() const { return forbidden_; }
    const std::vector<ConflictPair>& conflicts() const { return conflicts_; }

    /// Flat row-major variable index of cell (n, m).
    std::size_t var_index(std::size_t n, std::size_t m) const { return n * num_channels() + m; }

    /// Variables that may not be 1 together with `var` (same channel,
    /// conflicting user).
    const std::vector<std::uint32_t>& conflict_partners(std::size_t var) const { return partners_[var]; }

    friend bool operator==(const AllocationProblem& a, const AllocationProblem& b)
    {
        return a.reward_ == b.reward_ && a.forbidden_ == b.forbidden_
            && a.conflicts_ == b.conflicts_ && a.c_max_ == b.c_max_;
    }

private:
    Matrix<double> reward_;
    Matrix<std::uint8_t> forbidden_;
    std::vector<ConflictPair> conflicts_;
    std::size_t c_max_ = 1;
    std::vector<std::vector<std::uint32_t>> partners_;
};

/// Extracts the binary program from a channel model: conflicts become
/// deduplicated unordered pairs per channel, unavailable cells become hard
/// exclusions, rewards are copied. `channel_cap` below 1 is a configuration
/// error; values above the channel count are clamped (the cap cannot bind
/// past M).
inline AllocationProblem build_problem(const ChannelModel& model, std::size_t channel_cap)
{
    if (channel_cap < 1)
        throw std::invalid_argument("build_problem: channel cap must be at least 1");

    Matrix<std::uint8_t> forbidden(model.num_users, model.num_channels);
    for (std::size_t n = 0; n < model.num_users; ++n)
        for (std::size_t m = 0; m < model.num_channels; ++m)
            forbidden(n, m) = model.availability(n, m) ? 0 : 1;

    std::vector<ConflictPair> conflicts;
    for (std::size_t n = 0; n + 1 < model.num_users; ++n)
        for (std::size_t k = n + 1; k < model.num_users; ++k)
            for (std::size_t m = 0; m < model.num_channels; ++m)
                if (model.conflict(n, k, m))
                    conflicts.push_back({ n, k, m });

    return AllocationProblem(model.reward, std::move(forbidden), std::move(conflicts), channel_cap);
}

/// Reward vector of an allocation: component n is the dot product of row n of
/// the assignment with row n of the reward matrix.
inline RewardVector reward_vector(const AllocationProblem& problem, const Allocation& alloc)
{
    if (alloc.rows() != problem.num_users() || alloc.cols() != problem.num_channels())
        throw std::invalid_argument("reward_vector: allocation shape mismatch");
    RewardVector r(problem.num_users(), 0.0);
    for (std::size_t n = 0; n < problem.num_users(); ++n) {
        double sum = 0.0;
        for (std::size_t m = 0; m < problem.num_channels(); ++m)
            if (alloc(n, m))
                sum += problem.reward()(n, m);
        r[n] = sum;
    }
    return r;
}

/// True iff no forbidden cell is set, every row respects the channel cap, and
/// every conflict pair has at most one assignee on its channel.
inline bool is_feasible(const AllocationProblem& problem, const Allocation& alloc)
{
    if (alloc.rows() != problem.num_users() || alloc.cols() != problem.num_channels())
        throw std::invalid_argument("is_feasible: allocation shape mismatch");
    for (std::size_t n = 0; n < problem.num_users(); ++n) {
        std::size_t row_sum = 0;
        for (std::size_t m = 0; m < problem.num_channels(); ++m) {
            if (!alloc(n, m))
                continue;
            if (problem.forbidden()(n, m))
                return false;
            ++row_sum;
        }
        if (row_sum > problem.channel_cap())
            return false;
    }
    for (const ConflictPair& c : problem.conflicts())
        if (alloc(c.user_a, c.channel) && alloc(c.user_b, c.channel))
            return false;
    return true;
}

} // namespace chanalloc

#endif // CHANALLOC_PROBLEM_HPP_
