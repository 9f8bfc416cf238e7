#ifndef STRINGADP_STRINGS_HPP
#define STRINGADP_STRINGS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stringadp/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stringadp {

/// Action indices are dense integers 0..action_count-1.
using Action = int;

/// A finite ordered sequence of actions. The empty string has length 0.
using ActionString = std::vector<Action>;

/// Default cap on the number of strings visited by exhaustive loops.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Absolute tolerance shared by curvature and bound checks.
inline constexpr double kTolerance = 1e-9;

inline ActionString concat(const ActionString& m, const ActionString& n) {
    ActionString out;
    out.reserve(m.size() + n.size());
    out.insert(out.end(), m.begin(), m.end());
    out.insert(out.end(), n.begin(), n.end());
    return out;
}

inline ActionString append(const ActionString& m, Action a) {
    ActionString out = m;
    out.push_back(a);
    return out;
}

/// True iff n = m ⊕ L for some string L.
inline bool is_prefix(const ActionString& m, const ActionString& n) {
    if (m.size() > n.size()) return false;
    return std::equal(m.begin(), m.end(), n.begin());
}

inline std::string to_string(const ActionString& s) {
    if (s.empty()) return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    out += ')';
    return out;
}

/// action_count^length, throwing when it exceeds the budget.
inline std::uint64_t string_count(int action_count, int length, std::uint64_t budget = kDefaultEnumerationBudget) {
    std::uint64_t count = 1;
    for (int i = 0; i < length; ++i) {
        if (count > budget / static_cast<std::uint64_t>(action_count)) {
            throw EnumerationBudgetExceeded("string count " + std::to_string(action_count) + "^" +
                                            std::to_string(length) + " exceeds enumeration budget " +
                                            std::to_string(budget));
        }
        count *= static_cast<std::uint64_t>(action_count);
    }
    if (count > budget) {
        throw EnumerationBudgetExceeded("string count exceeds enumeration budget " + std::to_string(budget));
    }
    return count;
}

/// The index-th string of the given length, in lexicographic order.
inline ActionString string_at(std::uint64_t index, int action_count, int length) {
    ActionString s(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<Action>(index % static_cast<std::uint64_t>(action_count));
        index /= static_cast<std::uint64_t>(action_count);
    }
    return s;
}

/// Visits all strings of exactly the given length in lexicographic order.
template <typename Fn>
void for_each_string(int action_count, int length, Fn&& fn,
                     std::uint64_t budget = kDefaultEnumerationBudget) {
    if (action_count < 1) throw ValidationError("action_count must be >= 1");
    if (length < 0) throw ValidationError("length must be >= 0");
    const std::uint64_t count = string_count(action_count, length, budget);
    ActionString s(static_cast<std::size_t>(length), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        fn(static_cast<const ActionString&>(s));
        // increment as a base-action_count counter, least-significant digit last
        int pos = length - 1;
        while (pos >= 0) {
            if (++s[static_cast<std::size_t>(pos)] < action_count) break;
            s[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
    }
}

struct ArgmaxResult {
    ActionString best;
    double value = -std::numeric_limits<double>::infinity();
};

/// Lexicographically-first maximizer over all strings of exactly `length`.
/// Serial reference implementation.
template <typename Eval>
ArgmaxResult argmax_over_strings_serial(int action_count, int length, Eval&& eval,
                                        std::uint64_t budget = kDefaultEnumerationBudget) {
    ArgmaxResult result;
    bool found = false;
    for_each_string(action_count, length, [&](const ActionString& s) {
        const double v = eval(s);
        if (!found || v > result.value) {
            result.best = s;
            result.value = v;
            found = true;
        }
    }, budget);
    return result;
}

/// OpenMP-parallel variant. Deterministic: evaluations are pure and the
/// per-thread winners are merged by linear index, so ties resolve to the
/// lexicographically-first maximizer exactly as in the serial version.
template <typename Eval>
ArgmaxResult argmax_over_strings(int action_count, int length, Eval&& eval,
                                 std::uint64_t budget = kDefaultEnumerationBudget) {
    if (action_count < 1) throw ValidationError("action_count must be >= 1");
    const std::uint64_t count = string_count(action_count, length, budget);
    double best_value = -std::numeric_limits<double>::infinity();
    std::int64_t best_index = -1;

#ifdef _OPENMP
#pragma omp parallel
    {
        double local_value = -std::numeric_limits<double>::infinity();
        std::int64_t local_index = -1;
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx) {
            const double v = eval(string_at(static_cast<std::uint64_t>(idx), action_count, length));
            if (local_index < 0 || v > local_value) {
                local_value = v;
                local_index = idx;
            }
        }
#pragma omp critical
        {
            if (local_index >= 0 &&
                (best_index < 0 || local_value > best_value ||
                 (local_value == best_value && local_index < best_index))) {
                best_value = local_value;
                best_index = local_index;
            }
        }
    }
#else
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx) {
        const double v = eval(string_at(static_cast<std::uint64_t>(idx), action_count, length));
        if (best_index < 0 || v > best_value) {
            best_value = v;
            best_index = idx;
        }
    }
#endif

    ArgmaxResult result;
    result.best = string_at(static_cast<std::uint64_t>(best_index), action_count, length);
    result.value = best_value;
    return result;
}

/// Max of fn over all strings with length 0..max_len inclusive. fn may
/// return -inf to skip a string and +inf to flag an unbounded ratio; the
/// reduction is order-independent, so the parallel loop is deterministic.
template <typename Fn>
double max_over_strings(int action_count, int max_len, Fn&& fn,
                        std::uint64_t budget = kDefaultEnumerationBudget) {
    // budget over the whole ladder of lengths
    std::uint64_t total = 0;
    for (int len = 0; len <= max_len; ++len) {
        total += string_count(action_count, len, budget);
        if (total > budget) {
            throw EnumerationBudgetExceeded("cumulative string count exceeds budget " + std::to_string(budget));
        }
    }

    double best = -std::numeric_limits<double>::infinity();
    for (int len = 0; len <= max_len; ++len) {
        const std::int64_t count = static_cast<std::int64_t>(string_count(action_count, len, budget));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : best)
#endif
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const double v = fn(string_at(static_cast<std::uint64_t>(idx), action_count, len));
            if (v > best) best = v;
        }
    }
    return best;
}

/// Serial reference for max_over_strings, kept for testing.
template <typename Fn>
double max_over_strings_serial(int action_count, int max_len, Fn&& fn,
                               std::uint64_t budget = kDefaultEnumerationBudget) {
    double best = -std::numeric_limits<double>::infinity();
    for (int len = 0; len <= max_len; ++len) {
        for_each_string(action_count, len, [&](const ActionString& s) {
            const double v = fn(s);
            if (v > best) best = v;
        }, budget);
    }
    return best;
}

} // namespace stringadp

#endif
