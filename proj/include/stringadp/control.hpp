#ifndef STRINGADP_CONTROL_HPP
#define STRINGADP_CONTROL_HPP

#include <utility>

#include "stringadp/strings.hpp"

namespace stringadp {

/// Finite-horizon deterministic control instance with tabular stagewise
/// rewards and transitions. Stages are 1-based in the interface; rewards
/// cover stages 1..K and transitions stages 1..K-1 (the post-horizon
/// state is never used).
struct ControlInstance {
    int horizon = 0; // K
    int state_count = 0;
    int action_count = 0;
    int initial_state = 0;
    std::vector<std::vector<std::vector<double>>> rewards;  // [stage-1][state][action], > 0
    std::vector<std::vector<std::vector<int>>> transitions; // [stage-1][state][action]

    double reward(int stage, int state, int action) const {
        return rewards[static_cast<std::size_t>(stage - 1)][static_cast<std::size_t>(state)]
                      [static_cast<std::size_t>(action)];
    }
    int next_state(int stage, int state, int action) const {
        return transitions[static_cast<std::size_t>(stage - 1)][static_cast<std::size_t>(state)]
                          [static_cast<std::size_t>(action)];
    }

    /// Throws ValidationError naming the offending field and index.
    void validate() const;
};

/// Stage-indexed deterministic policy; action[k-1][x] is the action at
/// stage k in state x, or -1 where undefined.
struct StagePolicy {
    std::vector<std::vector<int>> action; // [stage-1][state]

    int at(int stage, int state) const {
        const int a = action[static_cast<std::size_t>(stage - 1)][static_cast<std::size_t>(state)];
        if (a < 0) {
            throw PolicyUndefined("policy undefined at stage " + std::to_string(stage) +
                                  ", state " + std::to_string(state));
        }
        return a;
    }
};

StagePolicy constant_policy(const ControlInstance& inst, Action a);
StagePolicy myopic_policy(const ControlInstance& inst); // per-stage reward argmax, smallest index

/// Worst-case policy from backward induction (minimizes reward-to-go,
/// smallest index on ties). Its rollout value never overestimates any
/// continuation, so the induced string function of a rollout with this
/// base is nondecreasing along every string.
StagePolicy conservative_policy(const ControlInstance& inst);

/// Optimal value-to-go table from backward induction. value[k-1][x] is
/// V_k(x) for k = 1..K+1, with V_{K+1} ≡ 0; policy picks the smallest
/// maximizing action.
struct ValueTable {
    std::vector<std::vector<double>> value;  // [stage-1][state], stages 1..K+1
    std::vector<std::vector<int>> policy;    // [stage-1][state], stages 1..K

    double optimal_value(int initial_state) const { return value[0][static_cast<std::size_t>(initial_state)]; }
};

struct TrajectoryEval {
    double total = 0.0;
    std::vector<int> states;        // states visited, one per applied action
    std::vector<double> stage_rewards;
};

/// Applies a (possibly partial) action string from the initial state,
/// summing rewards in stage order 1 -> K.
TrajectoryEval evaluate_trajectory(const ControlInstance& inst, const ActionString& actions);

/// V_k(x, tail): reward of applying exactly the last K-k+1 actions from
/// state x at stage k.
double value_to_go(const ControlInstance& inst, int stage, int state, const ActionString& tail);

ValueTable solve_exact_dp(const ControlInstance& inst);

/// Forward extraction of the DP policy from the initial state; yields an
/// optimal string with value V_1(x_1).
ActionString extract_optimal_string(const ControlInstance& inst, const ValueTable& table);

/// Independent enumeration oracle: lexicographically-first maximizer of
/// evaluate_trajectory over all strings of length K.
std::pair<ActionString, double> brute_force_optimal(const ControlInstance& inst,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Serial reference for brute_force_optimal, kept for testing the
/// parallel kernel.
std::pair<ActionString, double> brute_force_optimal_serial(const ControlInstance& inst,
                                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Forward rollout of a policy from the initial state.
std::pair<ActionString, double> simulate_policy(const ControlInstance& inst, const StagePolicy& policy);

} // namespace stringadp

#endif
