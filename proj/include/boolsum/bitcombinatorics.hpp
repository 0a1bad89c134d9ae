#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"
#include "boolsum/limits.hpp"

namespace boolsum {

inline std::size_t binary_weight(const Degree& k) { return k.weight(); }

inline Degree or_merge(const Degree& a, const Degree& b) { return a.merge(b); }

/// binom(m, k) mod 2 by Lucas: odd iff every bit of k is a bit of m.
inline bool binom_parity(std::uint64_t m, const Degree& k) {
    if (!k.fits_u64()) return false;  // k > m
    const std::uint64_t kv = k.to_u64();
    return (m & kv) == kv;
}

inline bool binom_parity(std::uint64_t m, std::uint64_t k) { return (m & k) == k; }

/// e(m) = sum_i binom(m, k_i) mod 2; the sign exponent of weight m.
inline bool sign_exponent(std::uint64_t m, const DegreeSet& K) {
    bool e = false;
    for (const auto& k : K) e ^= binom_parity(m, k);
    return e;
}

struct StructureParams {
    std::uint64_t r;  ///< floor(log2 k_s) + 1
    Degree or_all;    ///< k_1 | ... | k_s
    Degree k_bar;     ///< or_all with bit 0 set
    bool epsilon_ks;  ///< false iff k_s is a power of two
    bool is_nested;   ///< k_1 ⪯ k_2 ⪯ ... ⪯ k_s
};

inline StructureParams structure_params(const DegreeSet& K) {
    Degree all = K[0];
    bool nested = true;
    for (std::size_t i = 1; i < K.size(); ++i) {
        all = all.merge(K[i]);
        nested = nested && K[i - 1].is_submask_of(K[i]);
    }
    const Degree& ks = K.largest();
    return StructureParams{ks.top_bit() + 1, all, all.with_low_bit(), !ks.is_power_of_two(),
                           nested};
}

/// r for K; throws infeasible_error when 2^r enumeration is over the guard.
inline unsigned checked_r(const DegreeSet& K, const Limits& limits) {
    const std::uint64_t r = K.largest().top_bit() + 1;
    if (r > limits.r_max || r > 62)
        throw infeasible_error("r = " + std::to_string(r) + " exceeds r_max = " +
                               std::to_string(limits.r_max));
    return static_cast<unsigned>(r);
}

/// The degrees as machine integers, once the r guard has passed.
inline std::vector<std::uint64_t> dense_degrees(const DegreeSet& K, const Limits& limits) {
    checked_r(K, limits);
    std::vector<std::uint64_t> out;
    out.reserve(K.size());
    for (const auto& k : K) out.push_back(k.to_u64());
    return out;
}

/// Sign exponents e(0), ..., e(2^r - 1): one full period.
inline std::vector<std::uint8_t> sign_pattern(const DegreeSet& K, const Limits& limits) {
    const unsigned r = checked_r(K, limits);
    const auto ks = dense_degrees(K, limits);
    const std::uint64_t period = std::uint64_t{1} << r;
    std::vector<std::uint8_t> e(period);
    for (std::uint64_t m = 0; m < period; ++m) {
        std::uint8_t bit = 0;
        for (auto k : ks) bit ^= static_cast<std::uint8_t>((m & k) == k);
        e[m] = bit;
    }
    return e;
}

/// Maps bit positions through `relabel` (must be injective on the bits used).
/// The subset formula for c0 only sees weights of unions, so it is invariant
/// under this; it lets huge degrees be checked by a small enumeration.
template <class Map>
DegreeSet relabel_bits(const DegreeSet& K, Map relabel) {
    std::vector<Degree> out;
    out.reserve(K.size());
    for (const auto& k : K) {
        std::vector<Degree::Bit> bits;
        bits.reserve(k.weight());
        for (auto b : k.bits()) bits.push_back(relabel(b));
        out.push_back(Degree::from_bits(std::move(bits)));
    }
    return DegreeSet(std::move(out));
}

/// Relabels the distinct bit positions of K onto 0, 1, 2, ... in order.
inline DegreeSet compact_bits(const DegreeSet& K) {
    std::vector<Degree::Bit> used;
    for (const auto& k : K) used.insert(used.end(), k.bits().begin(), k.bits().end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return relabel_bits(K, [&](Degree::Bit b) {
        return static_cast<Degree::Bit>(std::lower_bound(used.begin(), used.end(), b) -
                                        used.begin());
    });
}

}  // namespace boolsum
