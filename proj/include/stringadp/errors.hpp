#ifndef STRINGADP_ERRORS_HPP
#define STRINGADP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stringadp {

struct EnumerationBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfiniteCurvature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonpositiveCurvature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StringTooLong : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WrongTailLength : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolicyUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace stringadp

#endif
