#ifndef STRINGADP_BOUNDS_HPP
#define STRINGADP_BOUNDS_HPP

#include "stringadp/adp.hpp"

namespace stringadp {

/// Trajectory curvatures ε_0..ε_{K-1}, η_0..η_{K-1}, the factor
/// β = Σ(1-ε_i)/Ση_i, and the per-run certificate checks. ε_0 = 0 and
/// η_0 = 1 by construction.
struct CurvatureReport {
    std::vector<double> epsilons;
    std::vector<double> etas;
    double beta_value = 0.0;
    double greedy_value = 0.0;   // f(G_K)
    double optimal_value = 0.0;  // f(O_K), from brute force
    ActionString greedy_actions;
    ActionString optimal_actions;
    bool bound_holds = false;    // f(G_K) >= β f(O_K)
    bool identity_holds = false; // f(G_K) = Σ(1-ε_i) f(G_1)
    bool g1_bound_holds = false; // f(G_1) >= f(O_K) / Ση_i
    bool remark2_applies = false; // Σ(ε_i+η_i) <= K
    bool remark2_holds = true;    // f(G_K) = f(O_K) whenever it applies
    double shift_applied = 0.0;
    // The bound's derivation needs every η_k >= 0 (f(O_K) = Ση_k f((o_{k+1}))
    // is only dominated by Ση_k f(G_1) for nonnegative η_k). A rollout with
    // a poor base can produce negative η_k and genuinely violate the bound,
    // so the bound and its consequences are not applicable then; the
    // telescoping identity holds regardless.
    bool eta_nonnegative = true;

    bool all_hold() const {
        if (!identity_holds) return false;
        if (!eta_nonnegative) return true;
        return bound_holds && g1_bound_holds && (!remark2_applies || remark2_holds);
    }
};

/// ε_k = 1 - (f(G_{k+1}) - f(G_k)) / f(G_1), k = 0..K-1.
std::vector<double> trajectory_forward_curvatures(const StringFunction& f, const GreedyTrace& trace);

/// η_k = (f(O_{k+1}) - f(O_k)) / f((o_{k+1})), k = 0..K-1.
std::vector<double> trajectory_elemental_curvatures(const StringFunction& f, const ActionString& optimal);

double beta(const std::vector<double>& epsilons, const std::vector<double>& etas);

/// Full per-run certificate: builds the induced f, runs the ADP, gets
/// O_K from brute force, and checks the bound, the telescoping identity,
/// the f(G_1) inequality, and the Remark-2 optimality condition.
CurvatureReport verify_thm3(const ControlInstance& inst, const VtgApproximator& w,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// ε_k and η_k recomputed directly from reward and W tables along the
/// greedy/optimal trajectories; cross-check against the trajectory ops.
std::pair<std::vector<double>, std::vector<double>> expanded_curvatures_general(
    const ControlInstance& inst, const VtgApproximator& w, const std::vector<double>& shifts,
    const GreedyTrace& trace, const ActionString& optimal);

/// Rollout-specific curvature expansions built from the three state
/// sequences (x, x̂, x̃) beneath the rollout formulas, reproduced as
/// printed. Discrepancies against the trajectory ops are for the caller
/// to flag, not reconcile.
std::pair<std::vector<double>, std::vector<double>> expanded_curvatures_rollout(
    const ControlInstance& inst, const StagePolicy& base, const GreedyTrace& trace,
    const ActionString& optimal);

/// How far rollout-of-myopic improves on the plain myopic policy, with
/// the two lower bounds of the improvement chain and the claim
/// f^RM(G_1) >= f^M(G_K).
struct ImprovementReport {
    double myopic_value = 0.0;   // f^M(G_K^M)
    double rollout_value = 0.0;  // f^RM(G_K^RM)
    double rollout_g1 = 0.0;     // f^RM(G_1^RM)
    double lhs = 0.0;            // rollout_value - myopic_value
    double bound_g1 = 0.0;       // Σ_{i>=1}(1-ε_i) · f^RM(G_1^RM)
    double bound_beta = 0.0;     // Σ_{i>=1}(1-ε_i)/Ση_i · f^RM(O_K)
    bool claim_holds = false;    // f^RM(G_1^RM) >= f^M(G_K^M)
    bool holds = false;          // lhs clears both bounds and the claim
};

ImprovementReport rollout_myopic_improvement(const ControlInstance& inst,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace stringadp

#endif
