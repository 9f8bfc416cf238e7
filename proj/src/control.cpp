#include "stringadp/control.hpp"

#include <algorithm>

namespace stringadp {

namespace {

std::string idx3(int k, int x, int a) {
    return "[" + std::to_string(k) + "][" + std::to_string(x) + "][" + std::to_string(a) + "]";
}

} // namespace

void ControlInstance::validate() const {
    if (horizon < 1) throw ValidationError("horizon must be >= 1");
    if (state_count < 1) throw ValidationError("state_count must be >= 1");
    if (action_count < 1) throw ValidationError("action_count must be >= 1");
    if (initial_state < 0 || initial_state >= state_count) {
        throw ValidationError("initial_state " + std::to_string(initial_state) + " out of range");
    }
    if (static_cast<int>(rewards.size()) != horizon) {
        throw ValidationError("rewards: expected " + std::to_string(horizon) + " stages, got " +
                              std::to_string(rewards.size()));
    }
    if (static_cast<int>(transitions.size()) != horizon - 1) {
        throw ValidationError("transitions: expected " + std::to_string(horizon - 1) + " stages, got " +
                              std::to_string(transitions.size()));
    }
    for (int k = 0; k < horizon; ++k) {
        const auto& stage = rewards[static_cast<std::size_t>(k)];
        if (static_cast<int>(stage.size()) != state_count) {
            throw ValidationError("rewards[" + std::to_string(k) + "]: wrong state dimension");
        }
        for (int x = 0; x < state_count; ++x) {
            const auto& row = stage[static_cast<std::size_t>(x)];
            if (static_cast<int>(row.size()) != action_count) {
                throw ValidationError("rewards[" + std::to_string(k) + "][" + std::to_string(x) +
                                      "]: wrong action dimension");
            }
            for (int a = 0; a < action_count; ++a) {
                if (!(row[static_cast<std::size_t>(a)] > 0.0)) {
                    throw ValidationError("rewards" + idx3(k, x, a) + " must be strictly positive");
                }
            }
        }
    }
    for (int k = 0; k < horizon - 1; ++k) {
        const auto& stage = transitions[static_cast<std::size_t>(k)];
        if (static_cast<int>(stage.size()) != state_count) {
            throw ValidationError("transitions[" + std::to_string(k) + "]: wrong state dimension");
        }
        for (int x = 0; x < state_count; ++x) {
            const auto& row = stage[static_cast<std::size_t>(x)];
            if (static_cast<int>(row.size()) != action_count) {
                throw ValidationError("transitions[" + std::to_string(k) + "][" + std::to_string(x) +
                                      "]: wrong action dimension");
            }
            for (int a = 0; a < action_count; ++a) {
                const int target = row[static_cast<std::size_t>(a)];
                if (target < 0 || target >= state_count) {
                    throw ValidationError("transitions" + idx3(k, x, a) + " = " + std::to_string(target) +
                                          " out of range");
                }
            }
        }
    }
}

StagePolicy constant_policy(const ControlInstance& inst, Action a) {
    StagePolicy p;
    p.action.assign(static_cast<std::size_t>(inst.horizon),
                    std::vector<int>(static_cast<std::size_t>(inst.state_count), a));
    return p;
}

StagePolicy myopic_policy(const ControlInstance& inst) {
    StagePolicy p;
    p.action.assign(static_cast<std::size_t>(inst.horizon),
                    std::vector<int>(static_cast<std::size_t>(inst.state_count), 0));
    for (int k = 1; k <= inst.horizon; ++k) {
        for (int x = 0; x < inst.state_count; ++x) {
            int best = 0;
            for (int a = 1; a < inst.action_count; ++a) {
                if (inst.reward(k, x, a) > inst.reward(k, x, best)) best = a;
            }
            p.action[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)] = best;
        }
    }
    return p;
}

StagePolicy conservative_policy(const ControlInstance& inst) {
    StagePolicy p;
    p.action.assign(static_cast<std::size_t>(inst.horizon),
                    std::vector<int>(static_cast<std::size_t>(inst.state_count), 0));
    std::vector<double> next(static_cast<std::size_t>(inst.state_count), 0.0);
    for (int k = inst.horizon; k >= 1; --k) {
        std::vector<double> cur(static_cast<std::size_t>(inst.state_count), 0.0);
        for (int x = 0; x < inst.state_count; ++x) {
            double worst = std::numeric_limits<double>::infinity();
            int worst_action = 0;
            for (int a = 0; a < inst.action_count; ++a) {
                const int y = k < inst.horizon ? inst.next_state(k, x, a) : x;
                const double v = inst.reward(k, x, a) + next[static_cast<std::size_t>(y)];
                if (v < worst) {
                    worst = v;
                    worst_action = a;
                }
            }
            cur[static_cast<std::size_t>(x)] = worst;
            p.action[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)] = worst_action;
        }
        next = std::move(cur);
    }
    return p;
}

TrajectoryEval evaluate_trajectory(const ControlInstance& inst, const ActionString& actions) {
    if (static_cast<int>(actions.size()) > inst.horizon) {
        throw StringTooLong("trajectory of length " + std::to_string(actions.size()) +
                            " exceeds horizon " + std::to_string(inst.horizon));
    }
    TrajectoryEval out;
    int x = inst.initial_state;
    for (int k = 1; k <= static_cast<int>(actions.size()); ++k) {
        const Action a = actions[static_cast<std::size_t>(k - 1)];
        out.states.push_back(x);
        const double r = inst.reward(k, x, a);
        out.stage_rewards.push_back(r);
        out.total += r;
        if (k < inst.horizon) x = inst.next_state(k, x, a);
    }
    return out;
}

double value_to_go(const ControlInstance& inst, int stage, int state, const ActionString& tail) {
    const int expected = inst.horizon - stage + 1;
    if (stage == inst.horizon + 1) {
        if (!tail.empty()) throw WrongTailLength("tail must be empty at stage K+1");
        return 0.0;
    }
    if (static_cast<int>(tail.size()) != expected) {
        throw WrongTailLength("tail of length " + std::to_string(tail.size()) + " at stage " +
                              std::to_string(stage) + ", expected " + std::to_string(expected));
    }
    double total = 0.0;
    int x = state;
    for (int k = stage; k <= inst.horizon; ++k) {
        const Action a = tail[static_cast<std::size_t>(k - stage)];
        total += inst.reward(k, x, a);
        if (k < inst.horizon) x = inst.next_state(k, x, a);
    }
    return total;
}

ValueTable solve_exact_dp(const ControlInstance& inst) {
    ValueTable table;
    table.value.assign(static_cast<std::size_t>(inst.horizon + 1),
                       std::vector<double>(static_cast<std::size_t>(inst.state_count), 0.0));
    table.policy.assign(static_cast<std::size_t>(inst.horizon),
                        std::vector<int>(static_cast<std::size_t>(inst.state_count), 0));
    for (int k = inst.horizon; k >= 1; --k) {
        for (int x = 0; x < inst.state_count; ++x) {
            double best = -std::numeric_limits<double>::infinity();
            int best_action = 0;
            for (int a = 0; a < inst.action_count; ++a) {
                const int next = k < inst.horizon ? inst.next_state(k, x, a) : x;
                const double v = inst.reward(k, x, a) + table.value[static_cast<std::size_t>(k)]
                                                                   [static_cast<std::size_t>(next)];
                if (v > best) {
                    best = v;
                    best_action = a;
                }
            }
            table.value[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)] = best;
            table.policy[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)] = best_action;
        }
    }
    return table;
}

ActionString extract_optimal_string(const ControlInstance& inst, const ValueTable& table) {
    ActionString s;
    int x = inst.initial_state;
    for (int k = 1; k <= inst.horizon; ++k) {
        const Action a = table.policy[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)];
        s.push_back(a);
        if (k < inst.horizon) x = inst.next_state(k, x, a);
    }
    return s;
}

std::pair<ActionString, double> brute_force_optimal(const ControlInstance& inst, std::uint64_t budget) {
    auto result = argmax_over_strings(inst.action_count, inst.horizon,
                                      [&](const ActionString& s) { return evaluate_trajectory(inst, s).total; },
                                      budget);
    return {std::move(result.best), result.value};
}

std::pair<ActionString, double> brute_force_optimal_serial(const ControlInstance& inst, std::uint64_t budget) {
    auto result = argmax_over_strings_serial(inst.action_count, inst.horizon,
                                             [&](const ActionString& s) { return evaluate_trajectory(inst, s).total; },
                                             budget);
    return {std::move(result.best), result.value};
}

std::pair<ActionString, double> simulate_policy(const ControlInstance& inst, const StagePolicy& policy) {
    ActionString s;
    int x = inst.initial_state;
    for (int k = 1; k <= inst.horizon; ++k) {
        s.push_back(policy.at(k, x));
        if (k < inst.horizon) x = inst.next_state(k, x, s.back());
    }
    return {s, evaluate_trajectory(inst, s).total};
}

} // namespace stringadp
