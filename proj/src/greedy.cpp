#include "stringadp/greedy.hpp"

#include <algorithm>
#include <cmath>

namespace stringadp {

GreedyTrace greedy_string(const StringFunction& f, int horizon) {
    if (horizon > f.max_len()) {
        throw DomainTooSmall("greedy_string: horizon " + std::to_string(horizon) +
                             " exceeds max_len " + std::to_string(f.max_len()));
    }
    GreedyTrace trace;
    ActionString current;
    for (int k = 0; k < horizon; ++k) {
        Action best_action = 0;
        double best_value = -std::numeric_limits<double>::infinity();
        int ties = 0;
        for (Action a = 0; a < f.action_count(); ++a) {
            const double v = f(append(current, a));
            if (v > best_value) {
                best_value = v;
                best_action = a;
                ties = 1;
            } else if (v == best_value) {
                ++ties;
            }
        }
        current.push_back(best_action);
        trace.prefixes.push_back(current);
        trace.values.push_back(best_value);
        trace.ties.push_back(ties);
    }
    return trace;
}

std::pair<ActionString, double> brute_force_optimum(const StringFunction& f, int horizon,
                                                    std::uint64_t budget) {
    auto result = argmax_over_strings(f.action_count(), horizon,
                                      [&](const ActionString& s) { return f(s); }, budget);
    return {std::move(result.best), result.value};
}

double bound_thm1_i(double sigma_O, int horizon) {
    if (sigma_O <= 0.0) {
        throw NonpositiveCurvature("bound_thm1_i: sigma(O) = " + std::to_string(sigma_O) +
                                   " must be positive");
    }
    const double k = static_cast<double>(horizon);
    return (1.0 / sigma_O) * (1.0 - std::pow(1.0 - sigma_O / k, k));
}

double bound_thm1_ii(const std::vector<double>& epsilons) {
    if (epsilons.empty()) throw ValidationError("bound_thm1_ii: empty curvature list");
    return 1.0 - *std::max_element(epsilons.begin(), epsilons.end());
}

double k_eta(double eta, int horizon) {
    if (std::abs(eta - 1.0) <= kTolerance) return static_cast<double>(horizon);
    return (1.0 - std::pow(eta, horizon)) / (1.0 - eta);
}

double bound_thm2(double eta, int horizon) {
    const double keta = k_eta(eta, horizon);
    return 1.0 - std::pow(1.0 - 1.0 / keta, horizon);
}

BoundCertificate verify_greedy_bounds(const StringFunction& f, int horizon, int cap,
                                      std::uint64_t budget) {
    BoundCertificate cert;
    cert.greedy = greedy_string(f, horizon);
    auto [optimum, opt_value] = brute_force_optimum(f, horizon, budget);
    cert.optimum = std::move(optimum);
    cert.optimal_value = opt_value;
    cert.greedy_value = cert.greedy.total();
    cert.ratio = cert.greedy_value / cert.optimal_value;

    cert.submodularity = check_string_submodular(f, std::min(cap, f.max_len() - 1), budget);

    const double tol = kTolerance;
    auto check = [&](BoundCheck& bc, double floor) {
        bc.applicable = true;
        bc.floor = floor;
        bc.holds = cert.greedy_value >= floor * cert.optimal_value - tol * std::abs(cert.optimal_value);
        if (!bc.holds) cert.pass = false;
    };

    // Theorem 1 needs string submodularity.
    if (cert.submodularity.string_submodular()) {
        const int k_max = std::min(horizon, f.max_len() - horizon);
        cert.sigma_O = total_backward_wrt(f, cert.optimum, k_max, budget);
        if (cert.sigma_O > tol) {
            check(cert.thm1_i, bound_thm1_i(cert.sigma_O, horizon));
        } else {
            cert.thm1_i.note = "sigma(O) <= 0; bound degenerates to f(G_K) >= f(O)";
        }

        for (int i = 1; i <= horizon - 1; ++i) {
            const int wrt_max = std::min(horizon, f.max_len() - i);
            cert.epsilon_Gi.push_back(total_forward_wrt(f, cert.greedy.prefixes[static_cast<std::size_t>(i - 1)],
                                                        wrt_max, budget));
        }
        const double max_eps = cert.epsilon_Gi.empty()
                                   ? 0.0
                                   : *std::max_element(cert.epsilon_Gi.begin(), cert.epsilon_Gi.end());
        check(cert.thm1_ii, 1.0 - max_eps);
    } else {
        cert.thm1_i.note = "f is not string submodular on the explored domain";
        cert.thm1_ii.note = cert.thm1_i.note;
    }

    // Theorem 2 needs forward monotonicity, a computable eta, and the
    // hypothesis f(G_i ⊕ O) >= f(O) for i = 1..K-1.
    if (cert.submodularity.forward_monotone) {
        cert.thm2_hypothesis = true;
        if (f.max_len() >= 2 * horizon - 1) {
            for (int i = 1; i <= horizon - 1 && cert.thm2_hypothesis; ++i) {
                const double v = f(concat(cert.greedy.prefixes[static_cast<std::size_t>(i - 1)], cert.optimum));
                if (v < cert.optimal_value - tol) cert.thm2_hypothesis = false;
            }
        } else {
            cert.thm2_hypothesis = false;
            cert.thm2.note = "domain too small to evaluate f(G_i ⊕ O)";
        }
        if (cert.thm2_hypothesis) {
            try {
                cert.eta = elemental_forward_curvature(f, std::min(cap, f.max_len() - 2), budget);
                check(cert.thm2, bound_thm2(cert.eta, horizon));
            } catch (const InfiniteCurvature&) {
                cert.thm2.note = "elemental curvature unbounded";
            }
        } else if (cert.thm2.note.empty()) {
            cert.thm2.note = "hypothesis f(G_i ⊕ O) >= f(O) fails";
        }
    } else {
        cert.thm2.note = "f is not forward monotone on the explored domain";
    }

    return cert;
}

} // namespace stringadp
