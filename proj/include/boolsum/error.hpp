#pragma once

#include <stdexcept>
#include <string>

namespace boolsum {

/// Malformed degree expression or command-line value.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The request is mathematically fine but exceeds a resource guard
/// (r > r_max, brute force too large, precision too low).
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input does not hold.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace boolsum
