#ifndef STRINGADP_GREEDY_HPP
#define STRINGADP_GREEDY_HPP

#include <optional>
#include <utility>

#include "stringadp/curvature.hpp"
#include "stringadp/string_function.hpp"

namespace stringadp {

/// Stage-by-stage record of a greedy run: the prefixes G_1..G_K, their
/// objective values, and how many actions achieved each stage's argmax.
struct GreedyTrace {
    std::vector<ActionString> prefixes;
    std::vector<double> values;
    std::vector<int> ties;

    int horizon() const { return static_cast<int>(prefixes.size()); }
    const ActionString& actions() const { return prefixes.back(); }
    double total() const { return values.empty() ? 0.0 : values.back(); }
};

/// Greedy construction: at each step pick the action maximizing the value
/// of the extended prefix, breaking ties by smallest action index.
GreedyTrace greedy_string(const StringFunction& f, int horizon);

/// Lexicographically-first maximizer of f over all strings of exactly
/// the given length. Independent oracle for the greedy bounds.
std::pair<ActionString, double> brute_force_optimum(const StringFunction& f, int horizon,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

// Closed-form bound factors.
double bound_thm1_i(double sigma_O, int horizon);           // (1/σ)(1-(1-σ/K)^K)
double bound_thm1_ii(const std::vector<double>& epsilons);  // 1 - max ε(G_i)
double k_eta(double eta, int horizon);                      // (1-η^K)/(1-η), or K at η=1
double bound_thm2(double eta, int horizon);                 // 1 - (1-1/K_η)^K

/// Outcome of one bound check: the predicted floor on f(G_K)/f(O_K) and
/// whether the achieved ratio clears it. Bounds whose hypotheses fail are
/// reported not-applicable, never violated.
struct BoundCheck {
    bool applicable = false;
    double floor = 0.0;
    bool holds = true;
    std::string note;
};

struct BoundCertificate {
    GreedyTrace greedy;
    ActionString optimum;
    double greedy_value = 0.0;
    double optimal_value = 0.0;
    double ratio = 0.0;
    SubmodularityReport submodularity;
    double sigma_O = 0.0;
    std::vector<double> epsilon_Gi;
    double eta = 0.0;
    bool thm2_hypothesis = false; // f(G_i ⊕ O) >= f(O) for i = 1..K-1
    BoundCheck thm1_i;
    BoundCheck thm1_ii;
    BoundCheck thm2;
    bool pass = true; // no applicable bound violated
};

/// Computes G_K and O_K, the curvatures they need, and checks every
/// bound whose hypotheses hold.
BoundCertificate verify_greedy_bounds(const StringFunction& f, int horizon, int cap,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace stringadp

#endif
