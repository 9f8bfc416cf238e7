#include "stringadp/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stringadp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_domain(const StringFunction& f, int needed, const char* what) {
    if (f.max_len() < needed) {
        throw DomainTooSmall(std::string(what) + ": needs max_len >= " + std::to_string(needed) +
                             ", have " + std::to_string(f.max_len()));
    }
}

// f((a)) for every action, all required positive.
std::vector<double> singleton_values(const StringFunction& f) {
    std::vector<double> vals(static_cast<std::size_t>(f.action_count()));
    for (Action a = 0; a < f.action_count(); ++a) {
        vals[static_cast<std::size_t>(a)] = f(ActionString{a});
        if (vals[static_cast<std::size_t>(a)] <= kTolerance) {
            throw ZeroDenominator("f((" + std::to_string(a) + ")) = " +
                                  std::to_string(vals[static_cast<std::size_t>(a)]) +
                                  " is not positive");
        }
    }
    return vals;
}

} // namespace

double total_backward_curvature(const StringFunction& f, int cap, std::uint64_t budget) {
    if (cap < 1) throw ValidationError("cap must be >= 1");
    require_domain(f, cap + 1, "total_backward_curvature");
    const auto singles = singleton_values(f);
    return max_over_strings(f.action_count(), cap, [&](const ActionString& m) {
        const double fm = f(m);
        double best = -kInf;
        for (Action a = 0; a < f.action_count(); ++a) {
            ActionString am;
            am.reserve(m.size() + 1);
            am.push_back(a);
            am.insert(am.end(), m.begin(), m.end());
            const double v = 1.0 - (f(am) - fm) / singles[static_cast<std::size_t>(a)];
            if (v > best) best = v;
        }
        return best;
    }, budget);
}

double total_backward_wrt(const StringFunction& f, const ActionString& m, int k_max, std::uint64_t budget) {
    require_domain(f, k_max + static_cast<int>(m.size()), "total_backward_wrt");
    const double fm = f(m);
    const double best = max_over_strings(f.action_count(), k_max, [&](const ActionString& n) {
        if (n.empty()) return -kInf;
        const double fn = f(n);
        if (fn <= kTolerance) return kInf; // flagged below
        return 1.0 - (f(concat(n, m)) - fm) / fn;
    }, budget);
    if (std::isinf(best) && best > 0) {
        throw ZeroDenominator("total_backward_wrt: some explored f(N) is not positive");
    }
    return best == -kInf ? 0.0 : best;
}

double total_forward_curvature(const StringFunction& f, int cap, std::uint64_t budget) {
    require_domain(f, cap + 1, "total_forward_curvature");
    const auto singles = singleton_values(f);
    return max_over_strings(f.action_count(), cap, [&](const ActionString& m) {
        const double fm = f(m);
        double best = -kInf;
        for (Action a = 0; a < f.action_count(); ++a) {
            const double v = 1.0 - (f(append(m, a)) - fm) / singles[static_cast<std::size_t>(a)];
            if (v > best) best = v;
        }
        return best;
    }, budget);
}

double total_forward_wrt(const StringFunction& f, const ActionString& m, int k_max, std::uint64_t budget) {
    require_domain(f, k_max + static_cast<int>(m.size()), "total_forward_wrt");
    const double fm = f(m);
    const double best = max_over_strings(f.action_count(), k_max, [&](const ActionString& n) {
        if (n.empty()) return -kInf;
        const double fn = f(n);
        if (fn <= kTolerance) return kInf;
        return 1.0 - (f(concat(m, n)) - fm) / fn;
    }, budget);
    if (std::isinf(best) && best > 0) {
        throw ZeroDenominator("total_forward_wrt: some explored f(N) is not positive");
    }
    return best == -kInf ? 0.0 : best;
}

double elemental_forward_curvature(const StringFunction& f, int cap, std::uint64_t budget) {
    require_domain(f, cap + 2, "elemental_forward_curvature");
    const double best = max_over_strings(f.action_count(), cap, [&](const ActionString& m) {
        const double fm = f(m);
        double local = -kInf;
        for (Action aj = 0; aj < f.action_count(); ++aj) {
            const ActionString mj = append(m, aj);
            const double den = f(mj) - fm;
            for (Action ai = 0; ai < f.action_count(); ++ai) {
                const ActionString mi = append(m, ai);
                const double num = f(append(mi, aj)) - f(mi);
                if (den <= kTolerance) {
                    if (num <= kTolerance) continue; // 0/0 pair, skipped
                    return kInf;                     // positive gain over zero base
                }
                const double v = num / den;
                if (v > local) local = v;
            }
        }
        return local;
    }, budget);
    if (std::isinf(best) && best > 0) {
        throw InfiniteCurvature("elemental_forward_curvature: positive numerator over vanishing denominator");
    }
    if (best == -kInf) {
        throw ZeroDenominator("elemental_forward_curvature: no pair with positive denominator");
    }
    return best;
}

SubmodularityReport check_string_submodular(const StringFunction& f, int cap, std::uint64_t budget) {
    require_domain(f, cap + 1, "check_string_submodular");
    SubmodularityReport report;
    for (int len = 0; len <= cap && (report.forward_monotone || report.diminishing_returns); ++len) {
        for_each_string(f.action_count(), len, [&](const ActionString& n) {
            if (!report.forward_monotone && !report.diminishing_returns) return;
            const double fn = f(n);
            for (std::size_t mlen = 0; mlen <= n.size(); ++mlen) {
                const ActionString m(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(mlen));
                const double fm = f(m);
                if (report.forward_monotone && fm > fn + kTolerance) {
                    report.forward_monotone = false;
                    if (!report.counterexample) report.counterexample = {m, n, std::nullopt};
                }
                if (report.diminishing_returns) {
                    for (Action a = 0; a < f.action_count(); ++a) {
                        const double gain_m = f(append(m, a)) - fm;
                        const double gain_n = f(append(n, a)) - fn;
                        if (gain_m < gain_n - kTolerance) {
                            report.diminishing_returns = false;
                            if (!report.counterexample) report.counterexample = {m, n, a};
                            break;
                        }
                    }
                }
            }
        }, budget);
    }
    return report;
}

GlobalCurvatures global_curvatures(const StringFunction& f, int cap,
                                   const std::optional<ActionString>& wrt, std::uint64_t budget) {
    GlobalCurvatures out;
    out.search_cap = cap;
    const int total_cap = std::min(cap, f.max_len() - 1);
    const int elemental_cap = std::min(cap, f.max_len() - 2);
    out.sigma = total_backward_curvature(f, total_cap, budget);
    out.epsilon = total_forward_curvature(f, total_cap, budget);
    out.eta = elemental_forward_curvature(f, std::max(elemental_cap, 0), budget);
    if (wrt) {
        const int k_max = std::min(cap, f.max_len() - static_cast<int>(wrt->size()));
        out.sigma_wrt = total_backward_wrt(f, *wrt, k_max, budget);
        out.epsilon_wrt = total_forward_wrt(f, *wrt, k_max, budget);
    }
    out.exhaustive = cap >= f.max_len() - 1;
    return out;
}

} // namespace stringadp
