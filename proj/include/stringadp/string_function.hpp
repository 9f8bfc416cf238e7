#ifndef STRINGADP_STRING_FUNCTION_HPP
#define STRINGADP_STRING_FUNCTION_HPP

#include <functional>
#include <utility>

#include "stringadp/errors.hpp"
#include "stringadp/strings.hpp"

namespace stringadp {

/// An evaluable map from action strings (length <= max_len) to reals.
/// Construction marginalizes the raw map so that f(∅) = 0 exactly.
class StringFunction {
public:
    using RawEval = std::function<double(const ActionString&)>;

    StringFunction(int action_count, int max_len, RawEval raw)
        : action_count_(action_count), max_len_(max_len), raw_(std::move(raw)) {
        offset_ = raw_(ActionString{});
    }

    double operator()(const ActionString& s) const {
        if (static_cast<int>(s.size()) > max_len_) {
            throw StringTooLong("string of length " + std::to_string(s.size()) +
                                " exceeds max_len " + std::to_string(max_len_));
        }
        if (s.empty()) return 0.0;
        return raw_(s) - offset_;
    }

    int action_count() const { return action_count_; }
    int max_len() const { return max_len_; }

private:
    int action_count_;
    int max_len_;
    RawEval raw_;
    double offset_;
};

} // namespace stringadp

#endif
