#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "boolsum/degree.hpp"
#include "boolsum/error.hpp"

namespace boolsum {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

/// One degree: `INT` or a `+`-separated sum of `INT` and `2^INT` terms whose
/// binary expansions are pairwise disjoint, e.g. `2^1000000+5`.
inline Degree parse_degree(std::string_view text) {
    const auto expr = detail::trim(text);
    if (expr.empty()) throw parse_error("empty degree expression");
    std::vector<Degree::Bit> bits;
    for (auto raw : detail::split(expr, '+')) {
        const auto term = detail::trim(raw);
        if (term.size() > 2 && term.substr(0, 2) == "2^") {
            const auto exponent = detail::trim(term.substr(2));
            if (!detail::all_digits(exponent) || exponent.size() > 18)
                throw parse_error("bad exponent in term '" + std::string(term) + "'");
            bits.push_back(std::stoull(std::string(exponent)));
        } else if (detail::all_digits(term)) {
            const mpz_class v(std::string(term), 10);
            for (mp_bitcnt_t b = mpz_scan1(v.get_mpz_t(), 0); b != ~mp_bitcnt_t{0};
                 b = mpz_scan1(v.get_mpz_t(), b + 1))
                bits.push_back(b);
        } else {
            throw parse_error("bad term '" + std::string(term) + "' in degree '" + std::string(expr) + "'");
        }
    }
    if (bits.empty()) throw parse_error("degree must be positive: '" + std::string(expr) + "'");
    try {
        return Degree::from_bits(std::move(bits));
    } catch (const domain_error&) {
        throw parse_error("terms of '" + std::string(expr) + "' share a power of two");
    }
}

/// Comma-separated degrees, sorted; zero and duplicates are errors.
inline DegreeSet parse_degrees(std::string_view text) {
    if (detail::trim(text).empty()) throw parse_error("empty degree list");
    std::vector<Degree> degrees;
    for (auto part : detail::split(text, ',')) degrees.push_back(parse_degree(part));
    try {
        return DegreeSet(std::move(degrees));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

}  // namespace boolsum
