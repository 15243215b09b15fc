#ifndef KNOTPOLY_ERRORS_HPP
#define KNOTPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotpoly {

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroArgument : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorruptCache : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace knotpoly

#endif
