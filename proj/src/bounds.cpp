#include "stringadp/bounds.hpp"

#include <cmath>
#include <numeric>

namespace stringadp {

std::vector<double> trajectory_forward_curvatures(const StringFunction& f, const GreedyTrace& trace) {
    const int horizon = trace.horizon();
    std::vector<double> eps;
    eps.reserve(static_cast<std::size_t>(horizon));
    const double g1 = trace.values.front();
    if (g1 <= kTolerance) {
        throw ZeroDenominator("trajectory_forward_curvatures: f(G_1) = " + std::to_string(g1) +
                              " is not positive");
    }
    for (int k = 0; k < horizon; ++k) {
        const double prev = k == 0 ? 0.0 : trace.values[static_cast<std::size_t>(k - 1)];
        eps.push_back(1.0 - (trace.values[static_cast<std::size_t>(k)] - prev) / g1);
    }
    (void)f;
    return eps;
}

std::vector<double> trajectory_elemental_curvatures(const StringFunction& f, const ActionString& optimal) {
    std::vector<double> etas;
    etas.reserve(optimal.size());
    double prev = 0.0;
    ActionString prefix;
    for (std::size_t k = 0; k < optimal.size(); ++k) {
        const Action o = optimal[k];
        const double single = f(ActionString{o});
        if (single <= kTolerance) {
            throw ZeroDenominator("trajectory_elemental_curvatures: f((" + std::to_string(o) +
                                  ")) is not positive");
        }
        prefix.push_back(o);
        const double cur = f(prefix);
        etas.push_back((cur - prev) / single);
        prev = cur;
    }
    return etas;
}

double beta(const std::vector<double>& epsilons, const std::vector<double>& etas) {
    const double eta_sum = std::accumulate(etas.begin(), etas.end(), 0.0);
    if (eta_sum <= kTolerance) {
        throw ZeroDenominator("beta: sum of eta_i is not positive");
    }
    double num = 0.0;
    for (double e : epsilons) num += 1.0 - e;
    return num / eta_sum;
}

CurvatureReport verify_thm3(const ControlInstance& inst, const VtgApproximator& w, std::uint64_t budget) {
    const InducedStringFunction f = induced_f(inst, w);
    const GreedyTrace trace = run_adp(inst, w);
    auto [optimal, optimal_value] = brute_force_optimum(f.fn, inst.horizon, budget);

    CurvatureReport report;
    report.greedy_actions = trace.actions();
    report.optimal_actions = optimal;
    report.greedy_value = trace.total();
    report.optimal_value = optimal_value;
    report.epsilons = trajectory_forward_curvatures(f.fn, trace);
    report.etas = trajectory_elemental_curvatures(f.fn, optimal);
    report.beta_value = beta(report.epsilons, report.etas);
    report.shift_applied = f.max_shift();

    const double tol = kTolerance * std::max(1.0, std::abs(optimal_value));
    report.bound_holds = report.greedy_value >= report.beta_value * optimal_value - tol;

    double one_minus_eps = 0.0;
    for (double e : report.epsilons) one_minus_eps += 1.0 - e;
    report.identity_holds =
        std::abs(report.greedy_value - one_minus_eps * trace.values.front()) <=
        kTolerance * std::max(1.0, std::abs(report.greedy_value));

    const double eta_sum = std::accumulate(report.etas.begin(), report.etas.end(), 0.0);
    report.g1_bound_holds = trace.values.front() >= optimal_value / eta_sum - tol;

    for (double e : report.etas) {
        if (e < -kTolerance) report.eta_nonnegative = false;
    }

    double curvature_sum = 0.0;
    for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
        curvature_sum += report.epsilons[i] + report.etas[i];
    }
    report.remark2_applies = report.eta_nonnegative &&
                             curvature_sum <= static_cast<double>(inst.horizon) + kTolerance;
    if (report.remark2_applies) {
        report.remark2_holds = std::abs(report.greedy_value - optimal_value) <= tol;
    }
    return report;
}

namespace {

// Effective W_{k+1}(x, a) including any nonnegativity shift; zero at the
// horizon and beyond.
double w_eff(const ControlInstance& inst, const VtgApproximator& w,
             const std::vector<double>& shifts, int stage, int state, int action) {
    if (stage >= inst.horizon) return 0.0;
    double v = w.value(stage, state, action);
    if (stage - 1 < static_cast<int>(shifts.size())) v += shifts[static_cast<std::size_t>(stage - 1)];
    return v;
}

// States visited by an action string, x[0] = x_1.
std::vector<int> trajectory_states(const ControlInstance& inst, const ActionString& actions) {
    std::vector<int> states;
    states.push_back(inst.initial_state);
    for (int i = 1; i < static_cast<int>(actions.size()); ++i) {
        states.push_back(inst.next_state(i, states.back(), actions[static_cast<std::size_t>(i - 1)]));
    }
    return states;
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> expanded_curvatures_general(
    const ControlInstance& inst, const VtgApproximator& w, const std::vector<double>& shifts,
    const GreedyTrace& trace, const ActionString& optimal) {
    const int K = inst.horizon;
    const ActionString& g = trace.actions();
    const std::vector<int> gx = trajectory_states(inst, g);
    const std::vector<int> ox = trajectory_states(inst, optimal);

    auto r = [&](int stage, int x, int a) { return inst.reward(stage, x, a); };
    auto W = [&](int stage, int x, int a) { return w_eff(inst, w, shifts, stage, x, a); };
    auto gi = [&](int i) { return g[static_cast<std::size_t>(i - 1)]; };
    auto oi = [&](int i) { return optimal[static_cast<std::size_t>(i - 1)]; };
    auto gxi = [&](int i) { return gx[static_cast<std::size_t>(i - 1)]; };
    auto oxi = [&](int i) { return ox[static_cast<std::size_t>(i - 1)]; };

    std::vector<double> eps{0.0};
    const double eps_den = r(1, gxi(1), gi(1)) + W(1, gxi(1), gi(1));
    for (int k = 1; k <= K - 1; ++k) {
        const double num = r(k + 1, gxi(k + 1), gi(k + 1)) + W(k + 1, gxi(k + 1), gi(k + 1)) -
                           W(k, gxi(k), gi(k));
        eps.push_back(1.0 - num / eps_den);
    }

    std::vector<double> etas;
    for (int k = 0; k <= K - 1; ++k) {
        const double den = r(1, inst.initial_state, oi(k + 1)) + W(1, inst.initial_state, oi(k + 1));
        const double num = k == 0
                               ? r(1, oxi(1), oi(1)) + W(1, oxi(1), oi(1))
                               : r(k + 1, oxi(k + 1), oi(k + 1)) + W(k + 1, oxi(k + 1), oi(k + 1)) -
                                     W(k, oxi(k), oi(k));
        etas.push_back(num / den);
    }
    return {std::move(eps), std::move(etas)};
}

std::pair<std::vector<double>, std::vector<double>> expanded_curvatures_rollout(
    const ControlInstance& inst, const StagePolicy& base, const GreedyTrace& trace,
    const ActionString& optimal) {
    const int K = inst.horizon;
    auto r = [&](int stage, int x, int a) { return inst.reward(stage, x, a); };

    // Builds ε_k (or η_k for the optimal string) from the three state
    // sequences: the driven trajectory x, the one-step-earlier rollout x̂,
    // and the denominator trajectory x̃ seeded by the first action.
    auto expand = [&](const ActionString& actions, bool forward) {
        std::vector<double> out;
        out.push_back(forward ? 0.0 : 1.0); // definitional anchors
        for (int k = 1; k <= K - 1; ++k) {
            // x_{i+1} = h_i(x_i, actions_i) for 1 <= i <= k+1, then follow the base.
            std::vector<int> x{inst.initial_state};
            for (int i = 1; i <= std::min(k + 1, K - 1); ++i) {
                x.push_back(inst.next_state(i, x.back(), actions[static_cast<std::size_t>(i - 1)]));
            }
            for (int i = k + 2; i <= K - 1; ++i) {
                x.push_back(inst.next_state(i, x.back(), base.at(i, x.back())));
            }
            auto xi = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };

            double R1 = 0.0;
            for (int i = k + 2; i <= K; ++i) R1 += r(i, xi(i), base.at(i, xi(i)));

            // x̂_{k+1} = h_k(x_k, actions_k), then follow the base.
            double R2 = 0.0;
            {
                int xh = inst.next_state(k, xi(k), actions[static_cast<std::size_t>(k - 1)]);
                for (int i = k + 1; i <= K; ++i) {
                    R2 += r(i, xh, base.at(i, xh));
                    if (i < K) xh = inst.next_state(i, xh, base.at(i, xh));
                }
            }

            // Denominator trajectory x̃ seeded by the first action of the
            // respective string: g_1 for ε_k, o_{k+1} for η_k.
            const Action seed = forward ? actions[0] : actions[static_cast<std::size_t>(k)];
            double den = r(1, inst.initial_state, seed);
            if (K >= 2) {
                int xt = inst.next_state(1, inst.initial_state, seed);
                for (int i = 2; i <= K; ++i) {
                    den += r(i, xt, base.at(i, xt));
                    if (i < K) xt = inst.next_state(i, xt, base.at(i, xt));
                }
            }

            const double num = r(k + 1, xi(k + 1), actions[static_cast<std::size_t>(k)]) + R1 - R2;
            out.push_back(forward ? 1.0 - num / den : num / den);
        }
        return out;
    };

    return {expand(trace.actions(), true), expand(optimal, false)};
}

ImprovementReport rollout_myopic_improvement(const ControlInstance& inst, std::uint64_t budget) {
    ImprovementReport report;

    const GreedyTrace myopic_trace = run_adp(inst, myopic_vtg());
    report.myopic_value = myopic_trace.total();

    const StagePolicy base = myopic_policy(inst);
    const VtgApproximator w = rollout_vtg(inst, base, "myopic");
    const InducedStringFunction f = induced_f(inst, w);
    const GreedyTrace trace = run_adp(inst, w);
    report.rollout_value = trace.total();
    report.rollout_g1 = trace.values.front();
    report.lhs = report.rollout_value - report.myopic_value;

    const std::vector<double> eps = trajectory_forward_curvatures(f.fn, trace);
    auto [optimal, optimal_value] = brute_force_optimum(f.fn, inst.horizon, budget);
    const std::vector<double> etas = trajectory_elemental_curvatures(f.fn, optimal);

    double tail = 0.0; // Σ_{i=1}^{K-1} (1 - ε_i)
    for (std::size_t i = 1; i < eps.size(); ++i) tail += 1.0 - eps[i];
    const double eta_sum = std::accumulate(etas.begin(), etas.end(), 0.0);

    report.bound_g1 = tail * report.rollout_g1;
    report.bound_beta = tail / eta_sum * optimal_value;

    const double tol = kTolerance * std::max(1.0, std::abs(optimal_value));
    report.claim_holds = report.rollout_g1 >= report.myopic_value - tol;
    report.holds = report.claim_holds && report.lhs >= report.bound_g1 - tol &&
                   report.lhs >= report.bound_beta - tol;
    return report;
}

} // namespace stringadp
