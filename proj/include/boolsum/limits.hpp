#pragma once

#include <cstdint>

namespace boolsum {

/// Resource guards. They bound enumeration work, not the mathematics.
struct Limits {
    /// Largest period exponent r for which 2^r-term enumerations run.
    unsigned r_max = 20;
    /// Largest n for the exhaustive 2^n oracle.
    unsigned n_max_bruteforce = 24;
    /// Above this n, sequences are extended by recurrence stepping.
    std::uint64_t crossover = 64;
};

inline constexpr unsigned kDefaultPrecisionBits = 1024;

}  // namespace boolsum
