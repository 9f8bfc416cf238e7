#include "stringadp/adp.hpp"

#include <algorithm>
#include <cmath>

namespace stringadp {

std::string vtg_kind_name(VtgKind kind) {
    switch (kind) {
        case VtgKind::myopic: return "myopic";
        case VtgKind::rollout: return "rollout";
        case VtgKind::optimal: return "optimal";
        case VtgKind::table: return "table";
    }
    return "unknown";
}

VtgApproximator myopic_vtg() {
    VtgApproximator w;
    w.kind = VtgKind::myopic;
    w.label = "myopic";
    w.value = [](int, int, int) { return 0.0; };
    return w;
}

VtgApproximator rollout_vtg(const ControlInstance& inst, const StagePolicy& base,
                            const std::string& base_label) {
    VtgApproximator w;
    w.kind = VtgKind::rollout;
    w.label = "rollout:" + base_label;
    w.value = [inst, base](int stage, int state, int action) {
        if (stage >= inst.horizon) return 0.0;
        int x = inst.next_state(stage, state, action);
        double total = 0.0;
        for (int i = stage + 1; i <= inst.horizon; ++i) {
            const int a = base.at(i, x);
            total += inst.reward(i, x, a);
            if (i < inst.horizon) x = inst.next_state(i, x, a);
        }
        return total;
    };
    return w;
}

VtgApproximator optimal_vtg(const ControlInstance& inst) {
    VtgApproximator w;
    w.kind = VtgKind::optimal;
    w.label = "optimal";
    w.value = [inst, table = solve_exact_dp(inst)](int stage, int state, int action) {
        if (stage >= inst.horizon) return 0.0;
        const int next = inst.next_state(stage, state, action);
        return table.value[static_cast<std::size_t>(stage)][static_cast<std::size_t>(next)];
    };
    return w;
}

VtgApproximator table_vtg(std::vector<std::vector<std::vector<double>>> table) {
    VtgApproximator w;
    w.kind = VtgKind::table;
    w.label = "table";
    w.value = [table = std::move(table)](int stage, int state, int action) {
        if (stage - 1 >= static_cast<int>(table.size())) return 0.0; // W_{K+1} and beyond
        return table.at(static_cast<std::size_t>(stage - 1))
            .at(static_cast<std::size_t>(state))
            .at(static_cast<std::size_t>(action));
    };
    return w;
}

double InducedStringFunction::max_shift() const {
    double m = 0.0;
    for (double s : shifts) m = std::max(m, s);
    return m;
}

InducedStringFunction induced_f(const ControlInstance& inst, const VtgApproximator& w) {
    const int horizon = inst.horizon;

    // Per-stage shifts keeping f nonnegative: only a table approximator
    // can push a value below the (positive) accrued reward floor.
    std::vector<double> shifts(static_cast<std::size_t>(std::max(horizon - 1, 0)), 0.0);
    if (w.kind == VtgKind::table) {
        double reward_floor = 0.0;
        for (int k = 1; k <= horizon - 1; ++k) {
            double min_r = std::numeric_limits<double>::infinity();
            double min_w = std::numeric_limits<double>::infinity();
            for (int x = 0; x < inst.state_count; ++x) {
                for (int a = 0; a < inst.action_count; ++a) {
                    min_r = std::min(min_r, inst.reward(k, x, a));
                    min_w = std::min(min_w, w.value(k, x, a));
                }
            }
            reward_floor += min_r;
            shifts[static_cast<std::size_t>(k - 1)] = std::max(0.0, -(min_w + reward_floor));
        }
    }

    auto eval = [inst, value = w.value, shifts](const ActionString& s) -> double {
        const int k = static_cast<int>(s.size());
        if (k == 0) return 0.0;
        double total = 0.0;
        int x = inst.initial_state;
        for (int i = 1; i <= k; ++i) {
            const Action a = s[static_cast<std::size_t>(i - 1)];
            total += inst.reward(i, x, a);
            if (i < k) x = inst.next_state(i, x, a);
        }
        if (k < inst.horizon) {
            total += value(k, x, s.back()) + shifts[static_cast<std::size_t>(k - 1)];
        }
        return total;
    };

    return InducedStringFunction{StringFunction(inst.action_count, horizon, std::move(eval)),
                                 std::move(shifts)};
}

GreedyTrace run_adp(const ControlInstance& inst, const VtgApproximator& w) {
    const InducedStringFunction f = induced_f(inst, w);
    GreedyTrace trace;
    ActionString current;
    int x = inst.initial_state;
    for (int k = 1; k <= inst.horizon; ++k) {
        Action best_action = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        int ties = 0;
        for (Action a = 0; a < inst.action_count; ++a) {
            const double score = inst.reward(k, x, a) + w.value(k, x, a);
            if (score > best_score) {
                best_score = score;
                best_action = a;
                ties = 1;
            } else if (score == best_score) {
                ++ties;
            }
        }
        current.push_back(best_action);
        trace.prefixes.push_back(current);
        trace.values.push_back(f(current));
        trace.ties.push_back(ties);
        if (k < inst.horizon) x = inst.next_state(k, x, best_action);
    }
    return trace;
}

} // namespace stringadp
