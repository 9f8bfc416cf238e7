#include <doctest.h>

#include "stringadp/adp.hpp"
#include "stringadp/generators.hpp"

using namespace stringadp;

TEST_CASE("induced string function, myopic") {
    const ControlInstance tiny = builtin_tiny();
    const auto f = induced_f(tiny, myopic_vtg());
    CHECK(f({}) == 0.0);
    CHECK(f({0}) == 1.0);
    CHECK(f({1}) == 2.0);
    CHECK(f({0, 0}) == 6.0); // full-length values equal the objective
    CHECK(f({1, 0}) == 3.0);
    CHECK(f.max_shift() == 0.0);
    CHECK_THROWS_AS(f({0, 0, 0}), StringTooLong);
}

TEST_CASE("induced string function, rollout and optimal") {
    const ControlInstance tiny = builtin_tiny();

    const auto rollout = induced_f(tiny, rollout_vtg(tiny, constant_policy(tiny, 0), "const0"));
    CHECK(rollout({0}) == 6.0); // 1 + base reward-to-go 5
    CHECK(rollout({1}) == 3.0);
    CHECK(rollout({0, 0}) == 6.0);

    const auto optimal = induced_f(tiny, optimal_vtg(tiny));
    CHECK(optimal({0}) == 6.0);
    CHECK(optimal({1}) == 3.0);
    CHECK(optimal({0, 1}) == 2.0);
}

TEST_CASE("run_adp on the tiny fixture") {
    const ControlInstance tiny = builtin_tiny();

    const auto myopic = run_adp(tiny, myopic_vtg());
    CHECK(myopic.actions() == ActionString{1, 0});
    CHECK(myopic.values == std::vector<double>{2.0, 3.0});

    const auto rollout = run_adp(tiny, rollout_vtg(tiny, constant_policy(tiny, 0), "const0"));
    CHECK(rollout.actions() == ActionString{0, 0});
    CHECK(rollout.total() == 6.0);

    const auto optimal = run_adp(tiny, optimal_vtg(tiny));
    CHECK(optimal.actions() == ActionString{0, 0});
    CHECK(optimal.total() == 6.0);
}

TEST_CASE("vtg labels and stage conventions") {
    const ControlInstance tiny = builtin_tiny();
    CHECK(myopic_vtg().label == "myopic");
    CHECK(rollout_vtg(tiny, constant_policy(tiny, 0), "const0").label == "rollout:const0");
    CHECK(optimal_vtg(tiny).label == "optimal");
    CHECK(vtg_kind_name(VtgKind::table) == "table");

    // W_{K+1} is zero for every kind
    CHECK(myopic_vtg().value(2, 0, 0) == 0.0);
    CHECK(rollout_vtg(tiny, constant_policy(tiny, 1)).value(2, 1, 0) == 0.0);
    CHECK(optimal_vtg(tiny).value(2, 0, 1) == 0.0);
    CHECK(table_vtg({{{4.0, 4.0}, {4.0, 4.0}}}).value(2, 0, 0) == 0.0);
}

TEST_CASE("table approximator with a nonnegativity shift") {
    const ControlInstance tiny = builtin_tiny();
    const auto w = table_vtg({{{-3.0, -3.0}, {-3.0, -3.0}}});
    const auto f = induced_f(tiny, w);

    // min over length-1 values is 1 - 3, so the stage-1 shift is 2
    CHECK(f.shifts == std::vector<double>{2.0});
    CHECK(f.max_shift() == 2.0);
    CHECK(f({0}) == 0.0);
    CHECK(f({1}) == 1.0);
    CHECK(f({0, 0}) == 6.0); // full length unaffected by W

    // the shift is stagewise constant, so the ADP choices are unchanged
    const auto trace = run_adp(tiny, w);
    CHECK(trace.actions() == ActionString{1, 0});
    CHECK(trace.values == std::vector<double>{1.0, 3.0});
}

TEST_CASE("ADP equals greedy on the induced function") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int states = 2 + static_cast<int>(seed % 3);
        const int actions = 2 + static_cast<int>(seed % 2);
        const int horizon = 2 + static_cast<int>(seed % 4);
        const ControlInstance inst = gen_random_instance(seed, states, actions, horizon);

        std::vector<VtgApproximator> schemes;
        schemes.push_back(myopic_vtg());
        schemes.push_back(optimal_vtg(inst));
        schemes.push_back(rollout_vtg(inst, gen_random_policy(inst, seed + 100), "rand"));
        schemes.push_back(table_vtg(gen_conservative_vtg_table(inst, seed + 200)));

        for (const auto& w : schemes) {
            const auto f = induced_f(inst, w);
            const auto adp = run_adp(inst, w);
            const auto greedy = greedy_string(f.fn, inst.horizon);
            CHECK(adp.prefixes == greedy.prefixes);
            CHECK(adp.values == greedy.values);
            CHECK(adp.ties == greedy.ties);
        }
    }
}

TEST_CASE("optimal VTG recovers the DP optimum") {
    for (std::uint64_t seed = 50; seed < 80; ++seed) {
        const ControlInstance inst = gen_random_instance(seed, 3, 3, 4);
        const auto trace = run_adp(inst, optimal_vtg(inst));
        CHECK(trace.total() == solve_exact_dp(inst).optimal_value(inst.initial_state));
    }
}

TEST_CASE("rollout never does worse than its base policy") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int horizon = 2 + static_cast<int>(seed % 5);
        const ControlInstance inst = gen_random_instance(seed, 3, 2, horizon);
        const StagePolicy base =
            seed % 2 == 0 ? myopic_policy(inst) : gen_random_policy(inst, seed + 7);
        const double base_value = simulate_policy(inst, base).second;
        const auto trace = run_adp(inst, rollout_vtg(inst, base));
        CHECK(trace.total() >= base_value);
        // the rollout objective is also nondecreasing along its own trace
        double prev = 0.0;
        for (double v : trace.values) {
            CHECK(v >= prev);
            prev = v;
        }
    }
}
