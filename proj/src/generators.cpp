#include "stringadp/generators.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

namespace stringadp {

namespace {

constexpr double kGrid = 1048576.0; // 2^20

double floor_to_grid(double v) { return std::floor(v * kGrid) / kGrid; }

} // namespace

StringFunction additive_function(int action_count, int max_len) {
    return StringFunction(action_count, max_len,
                          [](const ActionString& s) { return static_cast<double>(s.size()); });
}

StringFunction coverage_function(std::vector<std::vector<int>> sets, std::vector<double> weights,
                                 int max_len) {
    const int action_count = static_cast<int>(sets.size());
    auto eval = [sets = std::move(sets), weights = std::move(weights)](const ActionString& s) {
        std::unordered_set<int> covered;
        for (Action a : s) {
            for (int e : sets[static_cast<std::size_t>(a)]) covered.insert(e);
        }
        double total = 0.0;
        for (int e : covered) total += weights[static_cast<std::size_t>(e)];
        return total;
    };
    return StringFunction(action_count, max_len, std::move(eval));
}

StringFunction random_coverage_function(std::uint64_t seed, int action_count, int ground_size,
                                        int max_len) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> element(0, ground_size - 1);
    std::uniform_int_distribution<int> set_size(1, ground_size);
    std::uniform_int_distribution<std::int64_t> weight_grid(1, static_cast<std::int64_t>(4 * kGrid));

    std::vector<std::vector<int>> sets(static_cast<std::size_t>(action_count));
    for (auto& set : sets) {
        std::unordered_set<int> picked;
        const int target = set_size(rng);
        while (static_cast<int>(picked.size()) < target) picked.insert(element(rng));
        set.assign(picked.begin(), picked.end());
    }
    std::vector<double> weights(static_cast<std::size_t>(ground_size));
    for (auto& w : weights) w = static_cast<double>(weight_grid(rng)) / kGrid;
    return coverage_function(std::move(sets), std::move(weights), max_len);
}

StringFunction discounted_additive_function(std::vector<double> weights, double delta, int max_len) {
    const int action_count = static_cast<int>(weights.size());
    auto eval = [weights = std::move(weights), delta](const ActionString& s) {
        double total = 0.0;
        double factor = 1.0;
        for (Action a : s) {
            total += factor * weights[static_cast<std::size_t>(a)];
            factor *= delta;
        }
        return total;
    };
    return StringFunction(action_count, max_len, std::move(eval));
}

StringFunction exp_growth_function(int action_count, int max_len) {
    return StringFunction(action_count, max_len, [](const ActionString& s) {
        return std::pow(2.0, static_cast<double>(s.size())) - 1.0;
    });
}

ControlInstance gen_random_instance(std::uint64_t seed, int state_count, int action_count,
                                    int horizon, double reward_lo, double reward_hi) {
    if (!(reward_lo > 0.0)) throw ValidationError("reward range lower bound must be > 0");
    if (!(reward_hi >= reward_lo)) throw ValidationError("reward range is empty");

    std::mt19937_64 rng(seed);
    const auto lo = static_cast<std::int64_t>(std::ceil(reward_lo * kGrid));
    const auto hi = static_cast<std::int64_t>(std::floor(reward_hi * kGrid));
    std::uniform_int_distribution<std::int64_t> reward_grid(std::max<std::int64_t>(lo, 1), hi);
    std::uniform_int_distribution<int> state(0, state_count - 1);

    ControlInstance inst;
    inst.horizon = horizon;
    inst.state_count = state_count;
    inst.action_count = action_count;
    inst.initial_state = state(rng);
    inst.rewards.assign(static_cast<std::size_t>(horizon),
                        std::vector<std::vector<double>>(
                            static_cast<std::size_t>(state_count),
                            std::vector<double>(static_cast<std::size_t>(action_count), 0.0)));
    inst.transitions.assign(static_cast<std::size_t>(horizon - 1),
                            std::vector<std::vector<int>>(
                                static_cast<std::size_t>(state_count),
                                std::vector<int>(static_cast<std::size_t>(action_count), 0)));
    for (auto& stage : inst.rewards) {
        for (auto& row : stage) {
            for (auto& r : row) r = static_cast<double>(reward_grid(rng)) / kGrid;
        }
    }
    for (auto& stage : inst.transitions) {
        for (auto& row : stage) {
            for (auto& t : row) t = state(rng);
        }
    }
    inst.validate();
    return inst;
}

std::vector<std::vector<std::vector<double>>> gen_conservative_vtg_table(const ControlInstance& inst,
                                                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int K = inst.horizon;
    std::vector<std::vector<std::vector<double>>> table(
        static_cast<std::size_t>(std::max(K - 1, 0)),
        std::vector<std::vector<double>>(static_cast<std::size_t>(inst.state_count),
                                         std::vector<double>(static_cast<std::size_t>(inst.action_count), 0.0)));

    auto w_at = [&](int stage, int x, int a) { // W(stage, x, a), zero from stage K on
        if (stage >= K) return 0.0;
        return table[static_cast<std::size_t>(stage - 1)][static_cast<std::size_t>(x)]
                    [static_cast<std::size_t>(a)];
    };
    for (int k = K - 1; k >= 1; --k) {
        for (int x = 0; x < inst.state_count; ++x) {
            for (int a = 0; a < inst.action_count; ++a) {
                const int next = inst.next_state(k, x, a);
                double floor_vtg = std::numeric_limits<double>::infinity();
                for (int a2 = 0; a2 < inst.action_count; ++a2) {
                    floor_vtg = std::min(floor_vtg, inst.reward(k + 1, next, a2) + w_at(k + 1, next, a2));
                }
                table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)]
                     [static_cast<std::size_t>(a)] = floor_to_grid(unit(rng) * floor_vtg);
            }
        }
    }
    return table;
}

StagePolicy gen_random_policy(const ControlInstance& inst, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> action(0, inst.action_count - 1);
    StagePolicy p;
    p.action.assign(static_cast<std::size_t>(inst.horizon),
                    std::vector<int>(static_cast<std::size_t>(inst.state_count), 0));
    for (auto& stage : p.action) {
        for (auto& a : stage) a = action(rng);
    }
    return p;
}

ControlInstance builtin_tiny() {
    ControlInstance inst;
    inst.horizon = 2;
    inst.state_count = 2;
    inst.action_count = 2;
    inst.initial_state = 0;
    inst.rewards = {{{1.0, 2.0}, {1.0, 1.0}},  // r_1[x][a]
                    {{5.0, 1.0}, {1.0, 1.0}}}; // r_2[x][a]
    inst.transitions = {{{0, 1}, {0, 1}}};     // h_1(x,a) = a
    inst.validate();
    return inst;
}

} // namespace stringadp
