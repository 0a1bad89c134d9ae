#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "boolsum/expsum.hpp"
#include "boolsum/recurrence.hpp"

namespace boolsum {

/// S(n0..n1). Below max(crossover, valid_from) the binomial sum is used;
/// above it the minimal recurrence steps forward from directly computed
/// seeds. Both paths give identical integers.
inline ExpSumSequence sequence(const DegreeSet& K, std::uint64_t n0, std::uint64_t n1,
                               const Limits& limits = {}) {
    if (n0 > n1) throw domain_error("sequence range is empty");

    std::optional<LinearRecurrence> rec;
    const std::uint64_t r = K.largest().top_bit() + 1;
    if (r >= 2 && r <= limits.r_max && n1 >= limits.crossover) rec = sequence_recurrence(K, limits);
    if (!rec) return direct_sequence(K, n0, n1);

    const std::uint64_t d = rec->order();
    const std::uint64_t splice = std::max({n0, limits.crossover, rec->valid_from});
    if (n1 < splice) return direct_sequence(K, n0, n1);

    const std::uint64_t seed_from = std::min(n0, splice - d);
    ExpSumSequence work = direct_sequence(K, seed_from, splice - 1);
    work.values.reserve(n1 - seed_from + 1);
    mpz_class next;
    for (std::uint64_t n = splice; n <= n1; ++n) {
        next = 0;
        for (std::uint64_t m = 1; m <= d; ++m) next += rec->coeffs[m - 1] * work.at(n - m);
        work.values.push_back(next);  // minimal recurrences have scale 1
    }

    ExpSumSequence out{K, n0, {}};
    out.values.assign(work.values.begin() + static_cast<std::ptrdiff_t>(n0 - seed_from), work.values.end());
    return out;
}

/// All n in [1, N] with S(n) = 0.
inline std::vector<std::uint64_t> find_balanced(const DegreeSet& K, std::uint64_t N,
                                                const Limits& limits = {}) {
    if (N < 1) throw domain_error("find_balanced needs N >= 1");
    const auto seq = sequence(K, 1, N, limits);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= N; ++n)
        if (seq.at(n) == 0) out.push_back(n);
    return out;
}

}  // namespace boolsum
