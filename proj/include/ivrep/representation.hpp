// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/certificates.hpp"
#include "ivrep/digraph.hpp"

#include <map>
#include <variant>

namespace ivrep {

struct Interval {
    Rational left, right;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed intervals, one per element: x < y holds iff the interval of x ends
/// strictly before the interval of y starts, and |I_x| = f(x). Endpoints are
/// not normalized; construction naturally places everything at or below 0.
/// The raw potentials are kept alongside for diagnostics.
struct IntervalRepresentation {
    std::map<std::string, Interval> intervals;
    std::map<std::string, EpsWeight> potentials;
};

/// Weight assignment forced by any {0,1}-length representation: 0 exactly on
/// the co-simplicial points.
inline WeightedPoset canonical_01_weights(const Poset& p) {
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        w[static_cast<std::size_t>(i)] = p.is_co_simplicial_index(i) ? 0 : 1;
    return WeightedPoset(p, std::move(w));
}

struct RepresentationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks a claimed representation against the instance from scratch: every
/// element has an interval, lengths equal the weights, and the interval
/// order realizes exactly the poset relation. Returns all violations in
/// element order; only a missing interval is an error.
inline RepresentationReport verify_representation(const WeightedPoset& w,
                                                  const IntervalRepresentation& rep) {
    const Poset& p = w.poset();
    for (const auto& id : p.elements())
        if (!rep.intervals.count(id))
            throw Error(ErrorKind::MissingElement, "no interval for element: " + id);
    RepresentationReport out;
    auto iv = [&](int i) -> const Interval& { return rep.intervals.at(p.element(i)); };
    for (int i = 0; i < p.size(); ++i) {
        const Interval& I = iv(i);
        if (I.left > I.right)
            out.violations.push_back("interval of " + p.element(i) + " is empty: left " +
                                     to_fraction(I.left) + " exceeds right " +
                                     to_fraction(I.right));
        else if (I.right - I.left != Rational(w.weight(i)))
            out.violations.push_back("interval of " + p.element(i) + " has length " +
                                     to_fraction(I.right - I.left) + ", expected " +
                                     std::to_string(w.weight(i)));
    }
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j) {
            const Interval &a = iv(i), &b = iv(j);
            if (p.less(i, j)) {
                if (!(a.right < b.left))
                    out.violations.push_back(p.element(i) + " < " + p.element(j) +
                                             " but interval of " + p.element(i) +
                                             " does not end before interval of " + p.element(j));
            } else if (p.less(j, i)) {
                if (!(b.right < a.left))
                    out.violations.push_back(p.element(j) + " < " + p.element(i) +
                                             " but interval of " + p.element(j) +
                                             " does not end before interval of " + p.element(i));
            } else {
                if (a.right < b.left || b.right < a.left)
                    out.violations.push_back(p.element(i) + " and " + p.element(j) +
                                             " are incomparable but their intervals are disjoint");
            }
        }
    return out;
}

using RepresentResult = std::variant<IntervalRepresentation, NegativeCycle>;

/// Decides representability with the prescribed interval lengths. Either a
/// verified representation or a minimum negative cycle comes back, never
/// both. Inputs containing a 2+2 are rejected up front: no interval
/// representation of any kind exists for them.
inline RepresentResult represent(const WeightedPoset& w) {
    if (auto two = find_pattern(w.poset(), PatternKind::TwoPlusTwo))
        throw NotIntervalOrderError(*two);
    ConstraintDigraph g = build_constraint_digraph(w);
    if (auto cycle = find_min_arc_negative_cycle(g)) {
        validate_negative_cycle(w, g, *cycle);
        return *cycle;
    }
    std::vector<EpsWeight> pot = compute_potential(g);
    IntervalRepresentation rep;
    const int n = w.poset().size();
    for (int i = 0; i < n; ++i) {
        const Rational left = materialize(pot[static_cast<std::size_t>(i)], n);
        rep.intervals.emplace(w.poset().element(i),
                              Interval{left, left + Rational(w.weight(i))});
        rep.potentials.emplace(w.poset().element(i), pot[static_cast<std::size_t>(i)]);
    }
    if (!verify_representation(w, rep).ok())
        throw std::logic_error("constructed representation failed verification");
    return rep;
}

using Represent01Result = std::variant<IntervalRepresentation, Certificate01>;

/// {0,1} lengths with the weight of every point derived, not chosen: solving
/// with the canonical weights is exhaustive, and on failure the obstruction
/// is always one of the four six-point subposets.
inline Represent01Result represent_01(const Poset& p) {
    if (auto two = find_pattern(p, PatternKind::TwoPlusTwo)) throw NotIntervalOrderError(*two);
    WeightedPoset w = canonical_01_weights(p);
    RepresentResult r = represent(w);
    if (auto* rep = std::get_if<IntervalRepresentation>(&r)) return std::move(*rep);
    Certificate01 cert = extract_01_certificate(p);
    if (!verify_certificate(p, cert))
        throw std::logic_error("extracted {0,1} certificate failed verification");
    return cert;
}

using Represent12Result = std::variant<IntervalRepresentation, Certificate12>;

/// Prescribed lengths restricted to {1,2}; failure always reduces to one of
/// the two four-point obstructions or a member of the four infinite
/// families, read off the minimum negative cycle.
inline Represent12Result represent_12(const WeightedPoset& w) {
    for (int i = 0; i < w.poset().size(); ++i)
        if (w.weight(i) != 1 && w.weight(i) != 2)
            throw Error(ErrorKind::WeightOutOfRange,
                        "weight of " + w.poset().element(i) + " must be 1 or 2, got " +
                            std::to_string(w.weight(i)));
    RepresentResult r = represent(w);
    if (auto* rep = std::get_if<IntervalRepresentation>(&r)) return std::move(*rep);
    Certificate12 cert = extract_12_certificate(w, std::get<NegativeCycle>(r));
    if (!verify_certificate(w, cert))
        throw std::logic_error("extracted {1,2} certificate failed verification");
    return cert;
}

}  // namespace ivrep
