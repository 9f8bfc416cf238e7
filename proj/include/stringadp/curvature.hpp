#ifndef STRINGADP_CURVATURE_HPP
#define STRINGADP_CURVATURE_HPP

#include <optional>

#include "stringadp/string_function.hpp"

namespace stringadp {

/// Witness of a monotonicity or diminishing-return failure: the prefix
/// pair (m ⪯ n) and, for diminishing returns, the appended action.
struct SubmodularityCounterexample {
    ActionString m;
    ActionString n;
    std::optional<Action> action;
};

struct SubmodularityReport {
    bool forward_monotone = true;
    bool diminishing_returns = true;
    std::optional<SubmodularityCounterexample> counterexample;
    bool string_submodular() const { return forward_monotone && diminishing_returns; }
};

/// The five global curvatures over a capped string domain. `exhaustive`
/// is false when the cap truncated the admissible domain, in which case
/// the values are certified lower bounds on the true curvatures.
struct GlobalCurvatures {
    double sigma = 0.0;
    double epsilon = 0.0;
    double eta = 0.0;
    std::optional<double> sigma_wrt;
    std::optional<double> epsilon_wrt;
    int search_cap = 0;
    bool exhaustive = false;
};

// Total backward curvature: max over actions a and strings M (|M| <= cap)
// of 1 - (f((a)⊕M) - f(M)) / f((a)).
double total_backward_curvature(const StringFunction& f, int cap,
                                std::uint64_t budget = kDefaultEnumerationBudget);

// Total backward curvature with respect to m: max over nonempty N with
// |N| <= k_max of 1 - (f(N⊕m) - f(m)) / f(N).
double total_backward_wrt(const StringFunction& f, const ActionString& m, int k_max,
                          std::uint64_t budget = kDefaultEnumerationBudget);

// Total forward curvature: max over a, M of 1 - (f(M⊕(a)) - f(M)) / f((a)).
double total_forward_curvature(const StringFunction& f, int cap,
                               std::uint64_t budget = kDefaultEnumerationBudget);

// Total forward curvature with respect to m: max over nonempty N with
// |N| <= k_max of 1 - (f(m⊕N) - f(m)) / f(N).
double total_forward_wrt(const StringFunction& f, const ActionString& m, int k_max,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// Elemental forward curvature: max over a_i, a_j, |M| <= cap of
// (f(M⊕(a_i)⊕(a_j)) - f(M⊕(a_i))) / (f(M⊕(a_j)) - f(M)). Pairs with both
// numerator and denominator below tolerance are skipped; a positive
// numerator over a vanishing denominator raises InfiniteCurvature.
double elemental_forward_curvature(const StringFunction& f, int cap,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

// Exhaustive forward-monotonicity and diminishing-return check over all
// prefix pairs M ⪯ N with |N| <= cap. Returns the first counterexample in
// enumeration order (N by length then lexicographic, M shortest first).
SubmodularityReport check_string_submodular(const StringFunction& f, int cap,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

GlobalCurvatures global_curvatures(const StringFunction& f, int cap,
                                   const std::optional<ActionString>& wrt = std::nullopt,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace stringadp

#endif
