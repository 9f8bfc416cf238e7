#include <doctest.h>

#include "stringadp/control.hpp"
#include "stringadp/generators.hpp"

using namespace stringadp;

TEST_CASE("trajectory evaluation on the tiny fixture") {
    const ControlInstance tiny = builtin_tiny();

    // recompute the fixture's expected values through the oracle first
    const auto [oracle_string, oracle_value] = brute_force_optimal(tiny);
    CHECK(oracle_string == ActionString{0, 0});
    CHECK(oracle_value == 6.0);

    const auto full = evaluate_trajectory(tiny, {0, 0});
    CHECK(full.total == 6.0);
    CHECK(full.states == std::vector<int>{0, 0});
    CHECK(full.stage_rewards == std::vector<double>{1.0, 5.0});

    CHECK(evaluate_trajectory(tiny, {1, 0}).total == 3.0);
    CHECK(evaluate_trajectory(tiny, {}).total == 0.0);
    CHECK(evaluate_trajectory(tiny, {1}).total == 2.0); // partial sum
    CHECK_THROWS_AS(evaluate_trajectory(tiny, {0, 0, 0}), StringTooLong);
}

TEST_CASE("value to go") {
    const ControlInstance tiny = builtin_tiny();
    CHECK(value_to_go(tiny, 2, 0, {0}) == 5.0);
    CHECK(value_to_go(tiny, 1, 0, {0, 0}) == 6.0);
    CHECK(value_to_go(tiny, 3, 0, {}) == 0.0); // stage K+1 convention
    CHECK_THROWS_AS(value_to_go(tiny, 2, 0, {0, 0}), WrongTailLength);
}

TEST_CASE("exact DP on the tiny fixture") {
    const ControlInstance tiny = builtin_tiny();
    const ValueTable table = solve_exact_dp(tiny);
    CHECK(table.optimal_value(0) == 6.0);
    CHECK(extract_optimal_string(tiny, table) == ActionString{0, 0});
    CHECK(table.value[1] == std::vector<double>{5.0, 1.0}); // V_2

    // policy rollout reproduces the DP value
    StagePolicy dp_policy{table.policy};
    CHECK(simulate_policy(tiny, dp_policy).second == table.optimal_value(0));
}

TEST_CASE("degenerate horizons") {
    ControlInstance inst;
    inst.horizon = 1;
    inst.state_count = 1;
    inst.action_count = 3;
    inst.initial_state = 0;
    inst.rewards = {{{2.0, 7.0, 4.0}}};
    inst.validate();
    CHECK(solve_exact_dp(inst).optimal_value(0) == 7.0);
    CHECK(brute_force_optimal(inst) == std::pair<ActionString, double>{{1}, 7.0});
}

TEST_CASE("constant rewards give K*c with all-zero optimum") {
    ControlInstance inst = gen_random_instance(5, 3, 2, 4);
    for (auto& stage : inst.rewards) {
        for (auto& row : stage) {
            for (auto& r : row) r = 2.5;
        }
    }
    CHECK(solve_exact_dp(inst).optimal_value(inst.initial_state) == 4 * 2.5);
    const auto [s, v] = brute_force_optimal(inst);
    CHECK(s == ActionString{0, 0, 0, 0});
    CHECK(v == 10.0);
}

TEST_CASE("policy simulation on tiny") {
    const ControlInstance tiny = builtin_tiny();
    CHECK(simulate_policy(tiny, constant_policy(tiny, 0)) == std::pair<ActionString, double>{{0, 0}, 6.0});
    CHECK(simulate_policy(tiny, constant_policy(tiny, 1)) == std::pair<ActionString, double>{{1, 1}, 3.0});

    StagePolicy undefined = constant_policy(tiny, 0);
    undefined.action[1][0] = -1;
    CHECK_THROWS_AS(simulate_policy(tiny, undefined), PolicyUndefined);
}

TEST_CASE("DP equals brute force exactly on random instances") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int states = 2 + static_cast<int>(seed % 3);
        const int actions = 2 + static_cast<int>(seed % 2);
        const int horizon = 2 + static_cast<int>(seed % 5);
        const ControlInstance inst = gen_random_instance(seed, states, actions, horizon);
        const ValueTable table = solve_exact_dp(inst);
        const auto [best, value] = brute_force_optimal(inst);
        CHECK(table.optimal_value(inst.initial_state) == value);
        CHECK(evaluate_trajectory(inst, extract_optimal_string(inst, table)).total == value);
        // parallel and serial oracles agree bit for bit
        CHECK(brute_force_optimal_serial(inst) == std::pair{best, value});
    }
}

TEST_CASE("no trajectory beats the DP value, prefixes are monotone") {
    const ControlInstance inst = gen_random_instance(17, 3, 2, 4);
    const double optimal = solve_exact_dp(inst).optimal_value(inst.initial_state);
    for_each_string(2, 4, [&](const ActionString& s) {
        const double total = evaluate_trajectory(inst, s).total;
        CHECK(total <= optimal);
        double prev = 0.0;
        for (std::size_t len = 1; len <= s.size(); ++len) {
            const ActionString prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
            const double partial = evaluate_trajectory(inst, prefix).total;
            CHECK(partial >= prev);
            prev = partial;
        }
    });
}

TEST_CASE("instance validation errors") {
    ControlInstance bad = builtin_tiny();
    bad.rewards[1][0][0] = 0.0;
    CHECK_THROWS_WITH_AS(bad.validate(), "rewards[1][0][0] must be strictly positive", ValidationError);

    ControlInstance bad2 = builtin_tiny();
    bad2.transitions[0][1][1] = 2;
    CHECK_THROWS_WITH_AS(bad2.validate(), "transitions[0][1][1] = 2 out of range", ValidationError);
}
