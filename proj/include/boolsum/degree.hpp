#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "boolsum/error.hpp"

namespace boolsum {

/// A positive integer stored as the ascending list of its set bit positions.
///
/// Degrees such as 2^1000000 + 5 occupy three words. Only operations that
/// genuinely need the numeric value (dense enumeration) convert to a
/// machine integer, and they check `fits_u64()` first.
class Degree {
public:
    using Bit = std::uint64_t;

    explicit Degree(std::uint64_t value) {
        if (value == 0) throw domain_error("degree must be positive");
        for (Bit b = 0; value != 0; ++b, value >>= 1)
            if (value & 1u) bits_.push_back(b);
    }

    /// Bit positions in any order; must be nonempty and distinct.
    static Degree from_bits(std::vector<Bit> bits) {
        if (bits.empty()) throw domain_error("degree must be positive");
        std::sort(bits.begin(), bits.end());
        if (std::adjacent_find(bits.begin(), bits.end()) != bits.end())
            throw domain_error("repeated bit position in degree");
        Degree d;
        d.bits_ = std::move(bits);
        return d;
    }

    static Degree power_of_two(Bit exponent) { return from_bits({exponent}); }

    const std::vector<Bit>& bits() const noexcept { return bits_; }
    std::size_t weight() const noexcept { return bits_.size(); }
    Bit top_bit() const noexcept { return bits_.back(); }
    bool is_power_of_two() const noexcept { return bits_.size() == 1; }
    bool fits_u64() const noexcept { return top_bit() < 64; }

    bool has_bit(Bit b) const {
        return std::binary_search(bits_.begin(), bits_.end(), b);
    }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw infeasible_error("degree does not fit in 64 bits");
        std::uint64_t v = 0;
        for (Bit b : bits_) v |= std::uint64_t{1} << b;
        return v;
    }

    mpz_class to_mpz() const {
        mpz_class v = 0;
        for (Bit b : bits_) mpz_setbit(v.get_mpz_t(), b);
        return v;
    }

    /// Every bit of *this is a bit of other (the nesting order).
    bool is_submask_of(const Degree& other) const {
        return std::includes(other.bits_.begin(), other.bits_.end(), bits_.begin(), bits_.end());
    }

    /// Bitwise OR.
    Degree merge(const Degree& other) const {
        Degree d;
        std::set_union(bits_.begin(), bits_.end(), other.bits_.begin(), other.bits_.end(),
                       std::back_inserter(d.bits_));
        return d;
    }

    /// Same degree with bit 0 forced on.
    Degree with_low_bit() const {
        if (bits_.front() == 0) return *this;
        Degree d;
        d.bits_.reserve(bits_.size() + 1);
        d.bits_.push_back(0);
        d.bits_.insert(d.bits_.end(), bits_.begin(), bits_.end());
        return d;
    }

    /// Decimal when below 2^64, otherwise `2^a+2^b+...+c` with the low part in decimal.
    std::string to_string() const {
        if (fits_u64()) return std::to_string(to_u64());
        std::string out;
        std::uint64_t low = 0;
        for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) {
            if (*it < 64) {
                low |= std::uint64_t{1} << *it;
                continue;
            }
            if (!out.empty()) out += '+';
            out += "2^" + std::to_string(*it);
        }
        if (low != 0) out += '+' + std::to_string(low);
        return out;
    }

    friend bool operator==(const Degree&, const Degree&) = default;

    /// Numeric order: compare from the most significant bit down.
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        auto ia = a.bits_.rbegin(), ib = b.bits_.rbegin();
        for (; ia != a.bits_.rend() && ib != b.bits_.rend(); ++ia, ++ib) {
            if (*ia != *ib) return *ia <=> *ib;
        }
        if (ia != a.bits_.rend()) return std::strong_ordering::greater;
        if (ib != b.bits_.rend()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    Degree() = default;
    std::vector<Bit> bits_;
};

/// The fixed degrees k_1 < ... < k_s of sigma_{n,k_1} + ... + sigma_{n,k_s}.
class DegreeSet {
public:
    /// Sorts; rejects an empty list and duplicates.
    explicit DegreeSet(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
        if (degrees_.empty()) throw domain_error("degree set must be nonempty");
        std::sort(degrees_.begin(), degrees_.end());
        if (std::adjacent_find(degrees_.begin(), degrees_.end()) != degrees_.end())
            throw domain_error("duplicate degree " +
                               std::adjacent_find(degrees_.begin(), degrees_.end())->to_string());
    }

    DegreeSet(std::initializer_list<std::uint64_t> values)
        : DegreeSet(std::vector<Degree>(values.begin(), values.end())) {}

    DegreeSet(std::initializer_list<Degree> degrees) : DegreeSet(std::vector<Degree>(degrees)) {}

    static DegreeSet of(const std::vector<std::uint64_t>& values) {
        return DegreeSet(std::vector<Degree>(values.begin(), values.end()));
    }

    const std::vector<Degree>& degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    const Degree& operator[](std::size_t i) const { return degrees_[i]; }
    const Degree& largest() const { return degrees_.back(); }

    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(degrees_.size());
        for (const auto& d : degrees_) out.push_back(d.to_string());
        return out;
    }

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

private:
    std::vector<Degree> degrees_;
};

}  // namespace boolsum
