// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/rational.hpp"

#include <cassert>

namespace ivrep {

/// Value of the form units - eps_count * eps for an arbitrarily small
/// positive eps. Kept symbolic so comparisons and cycle sums are exact; eps
/// only receives a concrete rational value when endpoints are materialized.
struct EpsWeight {
    long long units = 0;
    long long eps_count = 0;

    friend bool operator==(const EpsWeight&, const EpsWeight&) = default;

    // Total order: unit parts dominate, and at equal units more subtracted
    // eps means a smaller value.
    friend bool operator<(const EpsWeight& l, const EpsWeight& r) {
        if (l.units != r.units) return l.units < r.units;
        return l.eps_count > r.eps_count;
    }
    friend bool operator<=(const EpsWeight& l, const EpsWeight& r) { return l == r || l < r; }

    EpsWeight operator+(const EpsWeight& o) const { return {units + o.units, eps_count + o.eps_count}; }
    EpsWeight& operator+=(const EpsWeight& o) {
        units += o.units;
        eps_count += o.eps_count;
        return *this;
    }

    bool negative() const { return units < 0 || (units == 0 && eps_count >= 1); }
};

/// Pins eps to 1/(n^2 + 1), strictly below 1/n^2. Any eps count reachable by
/// a simple walk stays far below n^2, so the symbolic order transfers exactly
/// to the materialized rationals.
inline Rational materialize(const EpsWeight& w, int vertex_count) {
    assert(vertex_count >= 1);
    const long long q = static_cast<long long>(vertex_count) * vertex_count + 1;
    return Rational(w.units) - Rational(w.eps_count, q);
}

}  // namespace ivrep
