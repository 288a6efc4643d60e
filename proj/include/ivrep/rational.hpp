// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/rational.hpp>

#include <cerrno>
#include <cstdlib>
#include <optional>
#include <string>

namespace ivrep {

/// Exact rational arithmetic for interval endpoints and oracle witnesses.
/// Magnitudes stay tiny here (numerators O(n^3), denominators O(n^2)), so a
/// 64-bit backing type has plenty of headroom at supported instance sizes.
using Rational = boost::rational<long long>;

/// Canonical "p/q" form with q > 0, also used in all serialized output.
inline std::string to_fraction(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q" or a bare integer "p". Returns nothing on malformed input
/// (including q <= 0) so callers can attach their own error context.
inline std::optional<Rational> parse_fraction(const std::string& text) {
    const char* s = text.c_str();
    char* end = nullptr;
    errno = 0;
    long long num = std::strtoll(s, &end, 10);
    if (end == s || errno != 0) return std::nullopt;
    long long den = 1;
    if (*end == '/') {
        const char* ds = end + 1;
        den = std::strtoll(ds, &end, 10);
        if (end == ds || errno != 0 || den <= 0) return std::nullopt;
    }
    if (*end != '\0') return std::nullopt;
    return Rational(num, den);
}

}  // namespace ivrep
