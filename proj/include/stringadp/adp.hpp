#ifndef STRINGADP_ADP_HPP
#define STRINGADP_ADP_HPP

#include <functional>
#include <memory>
#include <string>

#include "stringadp/control.hpp"
#include "stringadp/greedy.hpp"
#include "stringadp/string_function.hpp"

namespace stringadp {

enum class VtgKind { myopic, rollout, optimal, table };

std::string vtg_kind_name(VtgKind kind);

/// Per-stage value-to-go approximation: value(k, x, a) is W_{k+1}(x, a),
/// the approximate reward-to-go after taking a at (stage k, state x).
/// Every built-in kind returns 0 at k = K (W_{K+1} ≡ 0).
struct VtgApproximator {
    VtgKind kind = VtgKind::myopic;
    std::string label = "myopic";
    std::function<double(int stage, int state, int action)> value;
};

VtgApproximator myopic_vtg();
VtgApproximator rollout_vtg(const ControlInstance& inst, const StagePolicy& base,
                            const std::string& base_label = "base");
VtgApproximator optimal_vtg(const ControlInstance& inst);

/// User-supplied table W_{k+1}(x, a) for stages 1..K-1 ([k-1][x][a]);
/// W_{K+1} is implicitly zero.
VtgApproximator table_vtg(std::vector<std::vector<std::vector<double>>> table);

/// The string function induced by an instance and VTG approximator:
///   f((a_1..a_k)) = Σ_{i<=k} r_i(x_i, a_i) + W_{k+1}(x_k, a_k)
/// with W_{K+1} ≡ 0, so full-length values equal the control objective.
/// If a table approximator could drive some value negative, a per-stage
/// constant shift is added to W and recorded in `shifts`.
struct InducedStringFunction {
    StringFunction fn;
    std::vector<double> shifts; // [stage-1], stages 1..K-1; zero for built-in kinds

    double max_shift() const;
    double operator()(const ActionString& s) const { return fn(s); }
};

InducedStringFunction induced_f(const ControlInstance& inst, const VtgApproximator& w);

/// Stagewise ADP execution: â_k ∈ argmax_a { r_k(x̂_k,a) + W_{k+1}(x̂_k,a) }
/// with smallest-index tie-breaking. Trace values are the induced string
/// function evaluated on the successive prefixes.
GreedyTrace run_adp(const ControlInstance& inst, const VtgApproximator& w);

} // namespace stringadp

#endif
