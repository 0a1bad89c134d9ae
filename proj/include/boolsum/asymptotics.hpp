#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "boolsum/bitcombinatorics.hpp"
#include "boolsum/cyclotomic.hpp"
#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"
#include "boolsum/expsum.hpp"
#include "boolsum/limits.hpp"
#include "boolsum/real.hpp"

namespace boolsum {

namespace detail {

/// 2^e as an exact rational, e of either sign.
inline mpq_class pow2q(long e) {
    mpq_class q = 1;
    if (e >= 0)
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return q;
}

inline constexpr std::size_t kMaxSubsetDegrees = 30;

}  // namespace detail

/// c0 = sum over subsets T of K of (-1)^{|T|} 2^{|T| - w2(OR T)}.
///
/// Only weights of unions are needed, so astronomically large degrees cost
/// nothing extra.
inline mpq_class c0_exact(const DegreeSet& K) {
    const std::size_t s = K.size();
    if (s > detail::kMaxSubsetDegrees)
        throw infeasible_error("subset formula limited to " +
                               std::to_string(detail::kMaxSubsetDegrees) + " degrees");
    mpq_class total = 1;  // empty subset
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
        std::optional<Degree> merged;
        long size = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (!(mask >> i & 1u)) continue;
            merged = merged ? merged->merge(K[i]) : K[i];
            ++size;
        }
        const mpq_class term = detail::pow2q(size - static_cast<long>(merged->weight()));
        if (size % 2 == 0)
            total += term;
        else
            total -= term;
    }
    total.canonicalize();
    return total;
}

/// c0 = (2^r - 2 #N) / 2^r with N the odd-sign weights in one period.
inline mpq_class c0_enumerated(const DegreeSet& K, const Limits& limits = {}) {
    const auto e = sign_pattern(K, limits);
    long negatives = 0;
    for (auto bit : e) negatives += bit;
    mpq_class c(static_cast<long>(e.size()) - 2 * negatives, static_cast<long>(e.size()));
    c.canonicalize();
    return c;
}

/// c0 read off the exact cyclotomic orbit sum at zeta = 1.
inline mpq_class c0_from_orbit(const DegreeSet& K, const Limits& limits = {}) {
    const unsigned r = checked_r(K, limits);
    mpq_class c(orbit_sum(K, 0, limits)[0], mpz_class(1) << r);
    c.canonicalize();
    return c;
}

/// Nested-chain closed form: 1 - Delta(s) 2^{1-w2(k_s)}
///   - sum_{j=1}^{floor(s/2)} (2^{w2(k_{2j} - k_{2j-1})} - 1) 2^{1-w2(k_{2j})}.
inline mpq_class c0_nested(const DegreeSet& K) {
    if (!structure_params(K).is_nested) throw domain_error("degrees do not form a nested chain");
    const std::size_t s = K.size();
    mpq_class c = 1;
    if (s % 2 == 1) c -= detail::pow2q(1 - static_cast<long>(K.largest().weight()));
    for (std::size_t j = 1; j <= s / 2; ++j) {
        const auto& lo = K[2 * j - 2];
        const auto& hi = K[2 * j - 1];
        // k_{2j-1} ⪯ k_{2j}, so the difference has weight w2(hi) - w2(lo).
        const long diff_weight = static_cast<long>(hi.weight() - lo.weight());
        c -= (detail::pow2q(diff_weight) - 1) * detail::pow2q(1 - static_cast<long>(hi.weight()));
    }
    c.canonicalize();
    return c;
}

/// Balanced in the limit: lim S(n)/2^n = c0 = 0.
inline bool is_asym_balanced(const DegreeSet& K) { return c0_exact(K) == 0; }

/// 2 cos(pi / 2^r), the dominant modulus once c0 = 0.
inline Real dominant_modulus(unsigned r, mpfr_prec_t bits) {
    return cos(ldexp(Real::pi(bits), -static_cast<long>(r))) * 2;
}

/// omega^n * 2^r c_1 exactly, with omega = exp(pi i / 2^r) (level r).
/// M(n) is 2^{1-r} times its real part, so this pins M's periodicity exactly.
inline CyclotomicInt main_term_exact(const DegreeSet& K, std::uint64_t n, const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    const auto c1 = coefficient_cj(K, 1, limits);
    const std::uint64_t period = std::uint64_t{1} << (r + 1);
    return c1.numerator.lift(r).shifted(static_cast<std::int64_t>(n % period));
}

namespace detail {

/// cos(pi i / 2^r) for i < 2^r.
inline std::vector<Real> cos_table(unsigned r, mpfr_prec_t bits) {
    const Real step = ldexp(Real::pi(bits), -static_cast<long>(r));
    std::vector<Real> table;
    table.reserve(std::size_t{1} << r);
    for (std::size_t i = 0; i < (std::size_t{1} << r); ++i) table.push_back(cos(step * static_cast<long>(i)));
    return table;
}

inline Real real_part(const CyclotomicInt& y, const std::vector<Real>& cosines, mpfr_prec_t bits) {
    Real re(bits);
    for (std::size_t i = 0; i < y.dimension(); ++i)
        if (y[i] != 0) re += Real(y[i], bits) * cosines[i];
    return re;
}

}  // namespace detail

/// M(n) = 2^{1-r} sum_m (-1)^{e(m)} cos((n - 2m) pi / 2^r), from the exact c_1.
inline Real main_term(const DegreeSet& K, std::uint64_t n, const PrecisionConfig& prec = {},
                      const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    const mpfr_prec_t bits = prec.bits + 32;
    const auto y = main_term_exact(K, n, limits);
    const auto cosines = detail::cos_table(r, bits);
    return ldexp(detail::real_part(y, cosines, bits), 1 - static_cast<long>(r));
}

/// M(n) by summing the cosines directly; an independent check of main_term.
inline Real main_term_direct(const DegreeSet& K, std::uint64_t n, const PrecisionConfig& prec = {},
                             const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    const mpfr_prec_t bits = prec.bits + 32;
    const auto e = sign_pattern(K, limits);
    const Real step = ldexp(Real::pi(bits), -static_cast<long>(r));
    Real sum(bits);
    for (std::uint64_t m = 0; m < e.size(); ++m) {
        const long arg = static_cast<long>(n) - 2 * static_cast<long>(m);
        const Real term = cos(step * arg);
        if (e[m])
            sum -= term;
        else
            sum += term;
    }
    return ldexp(sum, 1 - static_cast<long>(r));
}

/// One period of M(n) plus the exact c_1 it comes from.
struct MainTermProfile {
    DegreeSet K;
    unsigned r;
    std::uint64_t period;     ///< 2^{r+1}
    ScaledCoefficient c1;
    std::vector<Real> values;  ///< M(0), ..., M(period - 1)

    const Real& at(std::uint64_t n) const { return values[n % period]; }
};

inline MainTermProfile main_term_profile(const DegreeSet& K, const PrecisionConfig& prec = {},
                                         const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    const mpfr_prec_t bits = prec.bits + 32;
    auto c1 = coefficient_cj(K, 1, limits);
    const auto lifted = c1.numerator.lift(r);
    const auto cosines = detail::cos_table(r, bits);
    const std::uint64_t period = std::uint64_t{1} << (r + 1);

    MainTermProfile profile{K, r, period, std::move(c1), {}};
    profile.values.reserve(period);
    for (std::uint64_t n = 0; n < period; ++n)
        profile.values.push_back(ldexp(detail::real_part(lifted.shifted(static_cast<std::int64_t>(n)),
                                                         cosines, bits),
                                       1 - static_cast<long>(r)));
    return profile;
}

/// Bits needed so S(n) / (2 cos(pi/2^r))^n keeps 64 bits past the integer part.
inline unsigned required_error_bits(unsigned r, std::uint64_t n) {
    const double lg = std::log2(2.0 * std::cos(std::numbers::pi / std::ldexp(1.0, static_cast<int>(r))));
    return static_cast<unsigned>(std::ceil(static_cast<double>(n) * lg)) + 64;
}

/// Error_n = S(n) / (2 cos(pi/2^r))^n - M(n); only meaningful when c0 = 0.
inline Real error_term(const DegreeSet& K, std::uint64_t n, const PrecisionConfig& prec = {},
                       const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    if (c0_exact(K) != 0) throw domain_error("Error_n is defined only when c0 = 0");
    if (prec.bits < required_error_bits(r, n))
        throw infeasible_error("precision " + std::to_string(prec.bits) + " bits below required " +
                               std::to_string(required_error_bits(r, n)) + " for n = " +
                               std::to_string(n));
    const mpfr_prec_t bits = prec.bits + 32;
    const Real s(exp_sum(n, K), bits);
    const Real scale = pow(dominant_modulus(r, bits), static_cast<unsigned long>(n));
    return s / scale - main_term(K, n, prec, limits);
}

/// Two-term truncation c0 2^n + (2 cos(pi/2^r))^n M(n).
inline Real asymptotic_eval(const DegreeSet& K, std::uint64_t n, const PrecisionConfig& prec = {},
                            const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    const mpfr_prec_t bits = prec.bits + 32;
    const Real lead = ldexp(Real(c0_exact(K), bits), static_cast<long>(n));
    const Real scale = pow(dominant_modulus(r, bits), static_cast<unsigned long>(n));
    return lead + scale * main_term(K, n, prec, limits);
}

}  // namespace boolsum
