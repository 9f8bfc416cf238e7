#ifndef STRINGADP_GENERATORS_HPP
#define STRINGADP_GENERATORS_HPP

#include <cstdint>

#include "stringadp/control.hpp"
#include "stringadp/string_function.hpp"

namespace stringadp {

// ---------------------------------------------------------------------------
// String-function families
// ---------------------------------------------------------------------------

/// f(M) = |M|: modular, all curvatures trivial.
StringFunction additive_function(int action_count, int max_len);

/// Weighted coverage lifted to strings: each action owns a subset of a
/// ground set, f(M) is the total weight covered by the union of the
/// chosen sets. Order-insensitive, hence string submodular and backward
/// monotone whenever weights are nonnegative.
StringFunction coverage_function(std::vector<std::vector<int>> sets, std::vector<double> weights,
                                 int max_len);

/// Random coverage instance: nonempty subsets of a ground set with
/// positive quantized weights, deterministic in the seed.
StringFunction random_coverage_function(std::uint64_t seed, int action_count, int ground_size,
                                        int max_len);

/// Stage-discounted additive function: f(M) = Σ_i delta^(i-1) w_{m_i}.
/// String submodular for delta in (0, 1] and positive weights.
StringFunction discounted_additive_function(std::vector<double> weights, double delta, int max_len);

/// f(M) = 2^|M| - 1: forward monotone but with growing returns; the
/// standard negative fixture for submodularity checks.
StringFunction exp_growth_function(int action_count, int max_len);

// ---------------------------------------------------------------------------
// Control-instance generation
// ---------------------------------------------------------------------------

/// Rewards are sampled on a 2^-20 grid inside [reward_lo, reward_hi] so
/// that every reward sum is exact in double arithmetic regardless of
/// association; transitions are uniform over states. Deterministic in
/// the seed.
ControlInstance gen_random_instance(std::uint64_t seed, int state_count, int action_count,
                                    int horizon, double reward_lo = 0.5, double reward_hi = 8.0);

/// Random VTG table that never overestimates the worst-case reward-to-go:
/// w(k,x,a) = u * min_a' [r_{k+1}(x',a') + w(k+1,x',a')] with u in [0,1],
/// built backward from w(K,·,·) = 0. The induced string function is then
/// nondecreasing along every string. Values land on the 2^-20 grid.
std::vector<std::vector<std::vector<double>>> gen_conservative_vtg_table(const ControlInstance& inst,
                                                                         std::uint64_t seed);

/// Random stage-indexed policy, deterministic in the seed.
StagePolicy gen_random_policy(const ControlInstance& inst, std::uint64_t seed);

/// The worked two-state, two-action, two-stage example used throughout
/// the tests: h_k(x,a) = a, r_1 = [[1,2],[1,1]], r_2 = [[5,1],[1,1]].
ControlInstance builtin_tiny();

} // namespace stringadp

#endif
