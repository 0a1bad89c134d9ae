#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "boolsum/error.hpp"

namespace boolsum {

/// An MPFR value carrying its own precision. Results of binary operations
/// take the larger operand precision; everything rounds to nearest-even.
class Real {
public:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(const mpz_class& value, mpfr_prec_t bits) : Real(bits) {
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    Real(const mpq_class& value, mpfr_prec_t bits) : Real(bits) {
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    Real(const std::string& decimal, mpfr_prec_t bits) : Real(bits) {
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw parse_error("not a decimal number: " + decimal);
    }

    Real(const Real& o) : Real(o.precision()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept : Real(MPFR_PREC_MIN) { mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.precision());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    static Real pi(mpfr_prec_t bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

    friend Real operator*(const Real& a, long b) {
        Real r(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    /// a * 2^e, exact.
    friend Real ldexp(const Real& a, long e) {
        Real r(a.precision());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    friend Real cos(const Real& a) { return unary(a, mpfr_cos); }
    friend Real sin(const Real& a) { return unary(a, mpfr_sin); }
    friend Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
    friend Real abs(const Real& a) { return unary(a, mpfr_abs); }
    friend Real log2(const Real& a) { return unary(a, mpfr_log2); }
    friend Real pow(const Real& a, unsigned long e) {
        Real r(a.precision());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant digits, e.g. "-1.60776038707e-6".
    std::string to_string(std::size_t digits) const {
        if (mpfr_zero_p(v_)) return "0";
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_signbit(v_) ? "-inf" : "inf";
        digits = std::max<std::size_t>(digits, 2);
        mpfr_exp_t exp10 = 0;
        std::unique_ptr<char, void (*)(char*)> raw(
            mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN), [](char* p) { mpfr_free_str(p); });
        std::string mant(raw.get());
        std::string sign;
        if (mant.front() == '-') {
            sign = "-";
            mant.erase(0, 1);
        }
        std::string out = sign + mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        const long e = static_cast<long>(exp10) - 1;
        if (e != 0) out += "e" + std::to_string(e);
        return out;
    }

private:
    using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real binary(const Real& a, const Real& b, Binary op) {
        Real r(std::max(a.precision(), b.precision()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real unary(const Real& a, Unary op) {
        Real r(a.precision());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

/// Working precision for real evaluation.
struct PrecisionConfig {
    unsigned bits = 1024;
    unsigned output_digits = 15;

    PrecisionConfig() = default;
    explicit PrecisionConfig(unsigned bits_, unsigned digits = 15) : bits(bits_), output_digits(digits) {
        if (bits < 64) throw domain_error("precision must be at least 64 bits");
    }

    /// Default bits, overridden by BOOLSUM_PRECISION when set.
    static PrecisionConfig from_environment() {
        PrecisionConfig p;
        if (const char* env = std::getenv("BOOLSUM_PRECISION"); env && *env) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (*end != '\0' || v < 64) throw parse_error("BOOLSUM_PRECISION must be an integer >= 64");
            p.bits = static_cast<unsigned>(v);
        }
        return p;
    }
};

}  // namespace boolsum
