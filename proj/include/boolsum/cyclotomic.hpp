#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "boolsum/bitcombinatorics.hpp"
#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"
#include "boolsum/limits.hpp"
#include "boolsum/real.hpp"

namespace boolsum {

/// Exact element sum_i c_i zeta^i of Z[zeta], zeta = exp(pi i / 2^t), stored
/// in the power basis of y^{2^t} + 1. The representation is unique, so the
/// element is zero iff every coefficient is zero.
class CyclotomicInt {
public:
    explicit CyclotomicInt(unsigned level) : level_(level), c_(std::size_t{1} << level) {}

    CyclotomicInt(unsigned level, std::vector<mpz_class> coeffs) : level_(level), c_(std::move(coeffs)) {
        if (c_.size() != (std::size_t{1} << level))
            throw domain_error("coefficient vector length must be 2^level");
    }

    static CyclotomicInt integer(unsigned level, const mpz_class& v) {
        CyclotomicInt x(level);
        x.c_[0] = v;
        return x;
    }

    /// zeta^e for any integer e (reduced mod 2^{t+1} with zeta^{2^t} = -1).
    static CyclotomicInt zeta_power(unsigned level, std::int64_t e) {
        CyclotomicInt x(level);
        x.add_monomial(e, 1);
        return x;
    }

    unsigned level() const noexcept { return level_; }
    std::size_t dimension() const noexcept { return c_.size(); }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    /// this += s * zeta^e.
    void add_monomial(std::int64_t e, const mpz_class& s) {
        const std::int64_t half = static_cast<std::int64_t>(c_.size());
        std::int64_t idx = e % (2 * half);
        if (idx < 0) idx += 2 * half;
        if (idx < half)
            c_[idx] += s;
        else
            c_[idx - half] -= s;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// True when the element is a rational integer (only c_0 may be nonzero).
    bool is_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    /// The same element viewed in a finer level (zeta_t = zeta_{t'}^{2^{t'-t}}).
    CyclotomicInt lift(unsigned to_level) const {
        if (to_level < level_) throw domain_error("cannot lift to a coarser level");
        CyclotomicInt x(to_level);
        const std::size_t stride = std::size_t{1} << (to_level - level_);
        for (std::size_t i = 0; i < c_.size(); ++i) x.c_[i * stride] = c_[i];
        return x;
    }

    /// Complex conjugate: zeta -> zeta^{-1}.
    CyclotomicInt conj() const {
        CyclotomicInt x(level_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) x.add_monomial(-static_cast<std::int64_t>(i), c_[i]);
        return x;
    }

    /// Multiply by zeta^e.
    CyclotomicInt shifted(std::int64_t e) const {
        CyclotomicInt x(level_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) x.add_monomial(static_cast<std::int64_t>(i) + e, c_[i]);
        return x;
    }

    CyclotomicInt& operator+=(const CyclotomicInt& o) {
        check_level(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CyclotomicInt& operator-=(const CyclotomicInt& o) {
        check_level(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CyclotomicInt& operator*=(const mpz_class& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }

    /// Negacyclic product modulo y^{2^t} + 1.
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.check_level(b);
        const std::size_t n = a.c_.size();
        CyclotomicInt x(a.level_);
        mpz_class prod;
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.c_[j] == 0) continue;
                prod = a.c_[i] * b.c_[j];
                if (i + j < n)
                    x.c_[i + j] += prod;
                else
                    x.c_[i + j - n] -= prod;
            }
        }
        return x;
    }

    CyclotomicInt pow(std::uint64_t e) const {
        CyclotomicInt result = integer(level_, 1), base = *this;
        while (e != 0) {
            if (e & 1u) result = result * base;
            e >>= 1;
            if (e != 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

    /// Real and imaginary parts of the complex value, at `bits` precision.
    std::pair<Real, Real> evaluate(mpfr_prec_t bits) const {
        Real re(bits), im(bits);
        const Real step = Real::pi(bits) / static_cast<long>(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const Real angle = step * static_cast<long>(i);
            const Real coef(c_[i], bits);
            re += coef * cos(angle);
            im += coef * sin(angle);
        }
        return {std::move(re), std::move(im)};
    }

private:
    void check_level(const CyclotomicInt& o) const {
        if (o.level_ != level_) throw domain_error("cyclotomic level mismatch");
    }

    unsigned level_;
    std::vector<mpz_class> c_;
};

namespace detail {

inline unsigned orbit_r(const DegreeSet& K, const Limits& limits) {
    const unsigned r = checked_r(K, limits);
    if (r < 2) throw domain_error("k_s = 1 has no cyclotomic factors (r = 1)");
    return r;
}

}  // namespace detail

/// T_t = sum_{m < 2^r} (-1)^{e(m)} zeta^m with zeta a primitive 2^{t+1}-th
/// root of unity, for 1 <= t <= r-1. For t = 0 the sum is taken at zeta = 1
/// (the root x = 2 of x - 2), giving the integer 2^r c_0.
inline CyclotomicInt orbit_sum(const DegreeSet& K, unsigned t, const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    if (t >= r) throw domain_error("orbit level t must be below r = " + std::to_string(r));
    const auto e = sign_pattern(K, limits);

    if (t == 0) {
        std::int64_t total = 0;
        for (auto bit : e) total += bit ? -1 : 1;
        return CyclotomicInt::integer(0, static_cast<long>(total));
    }

    const std::uint64_t half = std::uint64_t{1} << t;
    const std::uint64_t mask = 2 * half - 1;
    std::vector<std::int64_t> acc(half, 0);
    for (std::uint64_t m = 0; m < e.size(); ++m) {
        const std::int64_t s = e[m] ? -1 : 1;
        const std::uint64_t idx = m & mask;
        if (idx < half)
            acc[idx] += s;
        else
            acc[idx - half] -= s;
    }
    std::vector<mpz_class> coeffs(acc.begin(), acc.end());
    return CyclotomicInt(t, std::move(coeffs));
}

inline bool is_zero_orbit(const DegreeSet& K, unsigned t, const Limits& limits = {}) {
    return orbit_sum(K, t, limits).is_zero();
}

/// 2^r c_j as an element of Z[zeta_{2^r}] (level r-1), with scale 2^r kept apart.
struct ScaledCoefficient {
    CyclotomicInt numerator;
    unsigned scale_log2;  ///< c_j = numerator / 2^scale_log2

    bool is_zero() const { return numerator.is_zero(); }

    std::pair<Real, Real> evaluate(mpfr_prec_t bits) const {
        auto [re, im] = numerator.evaluate(bits);
        return {ldexp(re, -static_cast<long>(scale_log2)), ldexp(im, -static_cast<long>(scale_log2))};
    }
};

/// c_j = 2^{-r} sum_i (-1)^{e(i)} zeta_j^{-i}, zeta_j = exp(pi i j / 2^{r-1}).
inline ScaledCoefficient coefficient_cj(const DegreeSet& K, std::uint64_t j, const Limits& limits = {}) {
    const unsigned r = detail::orbit_r(K, limits);
    const std::uint64_t period = std::uint64_t{1} << r;
    if (j >= period) throw domain_error("coefficient index j must be below 2^r");
    const auto e = sign_pattern(K, limits);

    std::vector<std::int64_t> acc(period / 2, 0);
    for (std::uint64_t i = 0; i < period; ++i) {
        const std::int64_t s = e[i] ? -1 : 1;
        const std::uint64_t idx = (0 - i * j) & (period - 1);  // -i*j mod 2^r, wraps exactly
        if (idx < period / 2)
            acc[idx] += s;
        else
            acc[idx - period / 2] -= s;
    }
    std::vector<mpz_class> coeffs(acc.begin(), acc.end());
    return ScaledCoefficient{CyclotomicInt(r - 1, std::move(coeffs)), r};
}

}  // namespace boolsum
