#include <catch2/catch_amalgamated.hpp>

#include "chanalloc/fixtures.hpp"
#include "chanalloc/rng.hpp"
#include "chanalloc/solver.hpp"
#include "chanalloc/topology.hpp"

#include "oracle.hpp"

using namespace chanalloc;

namespace {

AllocationProblem random_problem(std::uint64_t seed, std::size_t users, std::size_t channels,
    std::size_t cap = 0)
{
    const Topology topo = generate_topology(seed, 20.0, 4, users, channels, 1.0, 4.0, { 1.0, 3.0 });
    return build_problem(build_channel_model(topo), cap ? cap : channels);
}

SideConstraint user_floor(const AllocationProblem& problem, std::size_t user, double rhs)
{
    return SideConstraint { user_reward_objective(problem, user).coeffs,
        ConstraintSense::greater_equal, rhs };
}

} // namespace

TEST_CASE("maximizing one user's reward on the two-user demo")
{
    const AllocationProblem problem = build_problem(two_user_demo_model(), 2);
    const SolveResult res = solve(problem, user_reward_objective(problem, 0));
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.value == 32.0);
    CHECK(res.witness(0, 0) == 1);
    CHECK(res.witness(0, 1) == 1);
    CHECK(res.witness(1, 0) == 0);
    CHECK(res.witness(1, 1) == 0);
}

TEST_CASE("side constraints trade the objective away")
{
    const AllocationProblem problem = build_problem(two_user_demo_model(), 2);
    const std::vector<SideConstraint> floor32 { user_floor(problem, 1, 32.0) };
    const SolveResult res = solve(problem, user_reward_objective(problem, 0), floor32);
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.value == 0.0);

    const std::vector<SideConstraint> floor33 { user_floor(problem, 1, 33.0) };
    CHECK(solve(problem, user_reward_objective(problem, 0), floor33).status == SolveStatus::infeasible);
}

TEST_CASE("lexicographic solves fix earlier objectives")
{
    const AllocationProblem two = build_problem(two_user_demo_model(), 2);
    std::vector<LinearObjective> order12 { user_reward_objective(two, 0), user_reward_objective(two, 1) };
    const LexResult lex = solve_lexicographic(two, order12);
    REQUIRE(lex.status == SolveStatus::optimal);
    CHECK(lex.values == std::vector<double> { 32.0, 0.0 });

    const AllocationProblem three = build_problem(three_user_demo_model(), 3);
    std::vector<LinearObjective> order123 { user_reward_objective(three, 0),
        user_reward_objective(three, 1), user_reward_objective(three, 2) };
    const LexResult lex3 = solve_lexicographic(three, order123);
    REQUIRE(lex3.status == SolveStatus::optimal);
    REQUIRE(lex3.values.size() == 3);
    CHECK(lex3.values[0] == Catch::Approx(34.0982).margin(1e-9));
    CHECK(lex3.values[1] == Catch::Approx(16.0).margin(1e-9));
    CHECK(lex3.values[2] == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("a single-objective lexicographic solve reduces to solve")
{
    const AllocationProblem problem = build_problem(three_user_demo_model(), 3);
    const LinearObjective objective = user_reward_objective(problem, 1);
    const std::vector<LinearObjective> single { objective };
    const LexResult lex = solve_lexicographic(problem, single);
    const SolveResult direct = solve(problem, objective);
    REQUIRE(lex.status == SolveStatus::optimal);
    CHECK(lex.values == std::vector<double> { direct.value });
    CHECK(lex.witness == direct.witness);
}

TEST_CASE("optimal values match exhaustive enumeration on random instances")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t users = 2 + seed % 3; // 2..4
        const std::size_t channels = 2 + (seed / 3) % 3; // 2..4
        const AllocationProblem problem = random_problem(seed, users, channels, 1 + seed % channels);

        Rng rng(seed * 977);
        LinearObjective objective;
        objective.coeffs = Matrix<double>(users, channels);
        for (std::size_t i = 0; i < objective.coeffs.size(); ++i)
            objective.coeffs[i] = rng.uniform(-5.0, 10.0);

        std::vector<SideConstraint> side;
        if (seed % 2 == 0)
            side.push_back(user_floor(problem, seed % users, rng.uniform(0.0, 20.0)));

        const SolveResult res = solve(problem, objective, side);
        const testoracle::OracleBest expect = testoracle::best_by_enumeration(problem, objective, side);
        REQUIRE(res.status == (expect.feasible ? SolveStatus::optimal : SolveStatus::infeasible));
        if (expect.feasible) {
            CHECK(res.value == Catch::Approx(expect.value).margin(1e-9));
            CHECK(testoracle::oracle_feasible(problem, res.witness));
            for (const SideConstraint& c : side)
                CHECK(testoracle::satisfies(c, res.witness));
            const double replay = testoracle::evaluate(objective.coeffs, res.witness) + objective.constant;
            CHECK(res.value == Catch::Approx(replay).margin(1e-12));
        }
    }
}

TEST_CASE("repeat solves return the identical witness")
{
    const AllocationProblem problem = random_problem(5, 3, 4);
    const LinearObjective objective = user_reward_objective(problem, 1);
    const SolveResult a = solve(problem, objective);
    const SolveResult b = solve(problem, objective);
    REQUIRE(a.status == SolveStatus::optimal);
    CHECK(a.witness == b.witness);
    CHECK(a.value == b.value);
}

TEST_CASE("ties resolve to the lexicographically largest assignment")
{
    // Two equal-reward channels, no conflicts, cap 1: both single-channel
    // picks are optimal; the earlier variable must win.
    ChannelModel model;
    model.num_users = 1;
    model.num_channels = 2;
    model.interference_radius = Matrix<double>(1, 2, 4.0);
    model.availability = Matrix<std::uint8_t>(1, 2, 1);
    model.reward = Matrix<double>(1, 2, 16.0);
    model.conflict = ConflictTensor(1, 2);
    const AllocationProblem problem = build_problem(model, 1);
    const SolveResult res = solve(problem, user_reward_objective(problem, 0));
    REQUIRE(res.status == SolveStatus::optimal);
    CHECK(res.value == 16.0);
    CHECK(res.witness(0, 0) == 1);
    CHECK(res.witness(0, 1) == 0);
}

TEST_CASE("negating an objective finds the feasible minimum")
{
    for (std::uint64_t seed = 50; seed <= 60; ++seed) {
        const AllocationProblem problem = random_problem(seed, 2, 3);
        LinearObjective negated = user_reward_objective(problem, 0);
        for (std::size_t i = 0; i < negated.coeffs.size(); ++i)
            negated.coeffs[i] = -negated.coeffs[i];
        const SolveResult res = solve(problem, negated);
        REQUIRE(res.status == SolveStatus::optimal);
        // Rewards are non-negative, so the minimum is the empty row.
        CHECK(res.value == 0.0);
    }
}

TEST_CASE("search statistics are populated")
{
    const AllocationProblem problem = random_problem(9, 3, 3);
    const SolveResult res = solve(problem, user_reward_objective(problem, 2));
    CHECK(res.stats.nodes > 0);
    CHECK(res.stats.incumbents > 0);
}
