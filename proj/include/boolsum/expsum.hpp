#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "boolsum/bitcombinatorics.hpp"
#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"
#include "boolsum/limits.hpp"

namespace boolsum {

/// S(n), S(n+1), ... for a fixed degree set.
struct ExpSumSequence {
    DegreeSet K;
    std::uint64_t start_n = 0;
    std::vector<mpz_class> values;

    std::uint64_t end_n() const { return start_n + values.size(); }
    const mpz_class& at(std::uint64_t n) const { return values.at(n - start_n); }
};

/// S(sigma_{n,k_1} + ... + sigma_{n,k_s}) = sum_j (-1)^{e(j)} binom(n, j).
///
/// Defined for every n >= 0, including n < k_s.
inline mpz_class exp_sum(std::uint64_t n, const DegreeSet& K) {
    mpz_class sum = 0;
    mpz_class binom = 1;
    for (std::uint64_t j = 0;; ++j) {
        if (sign_exponent(j, K))
            sum -= binom;
        else
            sum += binom;
        if (j == n) break;
        binom *= static_cast<unsigned long>(n - j);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    return sum;
}

/// Exhaustive oracle: walks all 2^n points of F_2^n.
///
/// The value at a point of weight j is sum_i binom(j, k_i) mod 2 with the
/// binomials taken as exact big integers, so this path shares nothing with
/// the Lucas-parity code. `threads` only partitions the range; the result
/// does not depend on it.
inline mpz_class exp_sum_bruteforce(std::uint64_t n, const DegreeSet& K,
                                    const Limits& limits = {}, unsigned threads = 1) {
    if (n > limits.n_max_bruteforce)
        throw infeasible_error("brute force n = " + std::to_string(n) + " exceeds limit " +
                               std::to_string(limits.n_max_bruteforce));

    // Function value per weight, from exact binomials.
    std::vector<std::uint8_t> value_at_weight(n + 1, 0);
    for (std::uint64_t j = 0; j <= n; ++j) {
        unsigned parity = 0;
        for (const auto& k : K) {
            if (!k.fits_u64() || k.to_u64() > j) continue;  // binom(j, k) = 0
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j),
                         static_cast<unsigned long>(k.to_u64()));
            parity ^= mpz_odd_p(b.get_mpz_t()) ? 1u : 0u;
        }
        value_at_weight[j] = static_cast<std::uint8_t>(parity);
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    threads = std::max(1u, threads);
    if (total < (std::uint64_t{1} << 12)) threads = 1;

    std::vector<std::int64_t> partial(threads, 0);
    auto work = [&](unsigned part) {
        const std::uint64_t lo = total / threads * part;
        const std::uint64_t hi = part + 1 == threads ? total : total / threads * (part + 1);
        std::int64_t acc = 0;
        for (std::uint64_t x = lo; x < hi; ++x)
            acc += value_at_weight[std::popcount(x)] ? -1 : 1;
        partial[part] = acc;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned p = 0; p < threads; ++p) pool.emplace_back(work, p);
    }

    mpz_class sum = 0;
    for (auto v : partial) sum += static_cast<long>(v);
    return sum;
}

/// C(F) = S / 2^n, reduced.
inline mpq_class correlation(std::uint64_t n, const DegreeSet& K) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n));
    mpq_class c(exp_sum(n, K), den);
    c.canonicalize();
    return c;
}

/// Direct (non-accelerated) values S(n0..n1).
inline ExpSumSequence direct_sequence(const DegreeSet& K, std::uint64_t n0, std::uint64_t n1) {
    if (n0 > n1) throw domain_error("sequence range is empty");
    ExpSumSequence seq{K, n0, {}};
    seq.values.reserve(n1 - n0 + 1);
    for (std::uint64_t n = n0; n <= n1; ++n) seq.values.push_back(exp_sum(n, K));
    return seq;
}

}  // namespace boolsum
