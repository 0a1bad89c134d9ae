#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "boolsum/bitcombinatorics.hpp"
#include "boolsum/cyclotomic.hpp"
#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"
#include "boolsum/expsum.hpp"
#include "boolsum/limits.hpp"

namespace boolsum {

/// Integer polynomial, constant term first.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        IntPolynomial p{std::vector<mpz_class>(a.coeffs.size() + b.coeffs.size() - 1)};
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (a.coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
                p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
            }
        }
        return p;
    }

    mpz_class operator()(const mpz_class& x) const {
        mpz_class v = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
        return v;
    }
};

/// (x-2)^{0|1} * prod_{t in levels} Phi_{2^{t+1}}(x-1).
struct FactoredCharPoly {
    bool has_x_minus_2 = false;
    std::set<std::uint64_t> levels;  ///< each t >= 1 contributes degree 2^t

    /// Degree as a sparse integer: bit 0 for x-2, bit t for each level.
    Degree degree() const {
        std::vector<Degree::Bit> bits(levels.begin(), levels.end());
        if (has_x_minus_2) bits.push_back(0);
        return Degree::from_bits(std::move(bits));
    }

    std::uint64_t degree_u64() const { return degree().to_u64(); }

    friend bool operator==(const FactoredCharPoly&, const FactoredCharPoly&) = default;
};

/// scale * x_n = sum_{m=1}^{d} coeffs[m-1] * x_{n-m}, asserted for n >= valid_from.
struct LinearRecurrence {
    std::vector<mpz_class> coeffs;
    mpz_class scale = 1;
    std::uint64_t valid_from = 0;

    std::size_t order() const { return coeffs.size(); }
    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// Phi_{2^{t+1}}(x-1) = (x-1)^{2^t} + 1.
inline IntPolynomial shifted_cyclotomic(std::uint64_t t) {
    const unsigned long deg = 1ul << t;
    IntPolynomial p{std::vector<mpz_class>(deg + 1)};
    mpz_class b;
    for (unsigned long i = 0; i <= deg; ++i) {
        mpz_bin_uiui(b.get_mpz_t(), deg, i);
        p.coeffs[i] = ((deg - i) % 2 == 0) ? b : mpz_class(-b);
    }
    p.coeffs[0] += 1;
    return p;
}

inline IntPolynomial expand(const FactoredCharPoly& f) {
    IntPolynomial p{{1}};
    if (f.has_x_minus_2) p = p * IntPolynomial{{-2, 1}};
    for (auto t : f.levels) {
        if (t > 40) throw infeasible_error("cyclotomic factor level too large to expand");
        p = p * shifted_cyclotomic(t);
    }
    return p;
}

inline void check_r_range(unsigned r, const Limits& limits) {
    if (r < 2 || r > limits.r_max)
        throw infeasible_error("r = " + std::to_string(r) + " outside [2, r_max = " +
                               std::to_string(limits.r_max) + "]");
}

/// P_r = (x-2) Phi_4(x-1) ... Phi_{2^r}(x-1), expanded from its factors.
inline IntPolynomial full_charpoly(unsigned r, const Limits& limits = {}) {
    check_r_range(r, limits);
    FactoredCharPoly f{true, {}};
    for (std::uint64_t t = 1; t < r; ++t) f.levels.insert(t);
    return expand(f);
}

/// P_r = sum_{m=0}^{2^r-1} (-1)^m binom(2^r, m) x^{2^r-1-m}.
inline IntPolynomial full_charpoly_binomial(unsigned r, const Limits& limits = {}) {
    check_r_range(r, limits);
    const unsigned long n = 1ul << r;
    IntPolynomial p{std::vector<mpz_class>(n)};
    mpz_class b;
    for (unsigned long m = 0; m < n; ++m) {
        mpz_bin_uiui(b.get_mpz_t(), n, m);
        p.coeffs[n - 1 - m] = (m % 2 == 0) ? b : mpz_class(-b);
    }
    return p;
}

/// Keeps exactly the factors whose orbit sums are nonzero.
inline FactoredCharPoly minimal_charpoly(const DegreeSet& K, const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    FactoredCharPoly f;
    f.has_x_minus_2 = !is_zero_orbit(K, 0, limits);
    for (unsigned t = 1; t < r; ++t)
        if (!is_zero_orbit(K, t, limits)) f.levels.insert(t);
    return f;
}

/// Closed form for a single degree: (x-2)^{eps(k)} times Phi_{2^{a+1}}(x-1)
/// over the bits 2^a (a >= 1) of 2 floor(k/2) + 1.
inline FactoredCharPoly single_k_charpoly(const Degree& k) {
    if (k.is_power_of_two() && k.top_bit() == 0) throw domain_error("single_k_charpoly needs k >= 2");
    FactoredCharPoly f;
    f.has_x_minus_2 = !k.is_power_of_two();
    const Degree odd = k.with_low_bit();
    for (auto b : odd.bits())
        if (b >= 1) f.levels.insert(b);
    return f;
}

inline LinearRecurrence to_recurrence(const IntPolynomial& p) {
    if (!p.is_monic()) throw domain_error("characteristic polynomial must be monic");
    const std::size_t d = p.degree();
    LinearRecurrence rec;
    rec.coeffs.reserve(d);
    for (std::size_t m = 1; m <= d; ++m) rec.coeffs.push_back(-p.coeffs[d - m]);
    rec.valid_from = d;
    return rec;
}

/// 2^r c_{2^{r-1}} = sum_m (-1)^{e(m)+m}: the weight of the 0^n term in S(n).
inline mpz_class zero_root_weight(const DegreeSet& K, const Limits& limits = {}) {
    const auto e = sign_pattern(K, limits);
    long total = 0;
    for (std::size_t m = 0; m < e.size(); ++m) total += ((e[m] ^ (m & 1u)) != 0) ? -1 : 1;
    return total;
}

/// The minimal recurrence of S(n) with its true starting index.
///
/// S(n) also carries c_{2^{r-1}} 0^n, which only touches S(0); when that
/// weight is nonzero the relation first holds at n = d + 1.
inline LinearRecurrence sequence_recurrence(const DegreeSet& K, const Limits& limits = {}) {
    LinearRecurrence rec = to_recurrence(expand(minimal_charpoly(K, limits)));
    if (zero_root_weight(K, limits) != 0) rec.valid_from = rec.order() + 1;
    return rec;
}

struct VerifyResult {
    bool ok = true;
    std::optional<std::uint64_t> first_failure;
    std::uint64_t checked = 0;
};

inline VerifyResult verify(const ExpSumSequence& seq, const LinearRecurrence& rec) {
    const std::uint64_t d = rec.order();
    const std::uint64_t first = std::max<std::uint64_t>(rec.valid_from, seq.start_n + d);
    if (seq.end_n() <= first)
        throw domain_error("sequence window too short to check the recurrence");
    VerifyResult res;
    mpz_class rhs;
    for (std::uint64_t n = first; n < seq.end_n(); ++n) {
        rhs = 0;
        for (std::uint64_t m = 1; m <= d; ++m) rhs += rec.coeffs[m - 1] * seq.at(n - m);
        ++res.checked;
        if (rec.scale * seq.at(n) != rhs) {
            res.ok = false;
            res.first_failure = n;
            return res;
        }
    }
    return res;
}

/// Minimal linear recurrence of an integer prefix by Berlekamp-Massey over Q.
///
/// Indices are relative to prefix[0]. The returned order is the degree of the
/// connection polynomial and valid_from its linear complexity; the two differ
/// when the first terms are "off" (a root at 0). The fit is certified only if
/// the complexity did not change over the last quarter of the prefix.
inline LinearRecurrence minimal_recurrence_oracle(const std::vector<mpz_class>& prefix) {
    const std::size_t N = prefix.size();
    if (N < 8) throw domain_error("prefix too short for a certified fit");

    std::vector<mpq_class> C{1}, B{1};
    std::size_t L = 0, shift = 1;
    mpq_class b = 1;
    std::size_t last_change = 0;

    for (std::size_t n = 0; n < N; ++n) {
        mpq_class disc = prefix[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc += C[i] * prefix[n - i];
        if (disc == 0) {
            ++shift;
            continue;
        }
        const mpq_class coef = disc / b;
        std::vector<mpq_class> next = C;
        if (next.size() < B.size() + shift) next.resize(B.size() + shift, 0);
        for (std::size_t i = 0; i < B.size(); ++i) next[i + shift] -= coef * B[i];
        if (2 * L <= n) {
            B = std::move(C);
            L = n + 1 - L;
            b = disc;
            shift = 1;
            last_change = n;
        } else {
            ++shift;
        }
        C = std::move(next);
    }

    const std::size_t quarter_start = N - N / 4;
    if (last_change >= quarter_start || 2 * L > quarter_start)
        throw domain_error("recurrence order did not stabilize; supply a longer prefix");

    C.resize(std::max<std::size_t>(L + 1, 1));
    while (C.size() > 1 && C.back() == 0) C.pop_back();

    mpz_class den = 1;
    for (const auto& c : C) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

    LinearRecurrence rec;
    rec.scale = den;
    for (std::size_t i = 1; i < C.size(); ++i) {
        mpq_class v = -C[i] * den;
        v.canonicalize();
        rec.coeffs.push_back(v.get_num());
    }
    rec.valid_from = L;
    return rec;
}

struct DegreeBounds {
    Degree lower;  ///< 2^{floor(log2 k_s)}
    Degree upper;  ///< 2 floor((k_1 | ... | k_s) / 2) + 1
};

inline DegreeBounds degree_bounds(const DegreeSet& K) {
    const auto params = structure_params(K);
    return DegreeBounds{Degree::power_of_two(K.largest().top_bit()), params.k_bar};
}

}  // namespace boolsum
