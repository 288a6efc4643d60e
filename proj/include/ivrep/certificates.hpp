// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/digraph.hpp"
#include "ivrep/poset.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivrep {

// ---------------------------------------------------------------------------
// Pattern generators. These are the definitional forbidden subposets; both
// the brute-force scans and certificate verification are built on them, while
// certificate *extraction* never touches them.
// ---------------------------------------------------------------------------

/// The four six-point obstructions to a {0,1}-length representation, indexed
/// 1..4. All share a < b < c, d < e, d < c, a < e with x incomparable to
/// everything and b incomparable to d and e; they differ in whether e < c
/// and whether a < d:
///   1: e < c and a < d        3: e < c, a incomparable to d
///   2: neither                4: a < d, e incomparable to c
inline Poset forbidden_01_pattern(int family_index) {
    if (family_index < 1 || family_index > 4)
        throw std::invalid_argument("family index must be 1..4");
    std::vector<std::pair<std::string, std::string>> covers = {
        {"a", "b"}, {"b", "c"}, {"d", "e"}, {"d", "c"}, {"a", "e"}};
    if (family_index == 1 || family_index == 3) covers.push_back({"e", "c"});
    if (family_index == 1 || family_index == 4) covers.push_back({"a", "d"});
    return Poset::from_relations({"a", "b", "c", "d", "e", "x"}, covers);
}

struct Certificate01 {
    int family_index = 0;                          // 1..4
    std::map<std::string, std::string> embedding;  // pattern point -> host element
};

enum class Cert12Kind { Fig3Left, Fig3Right, F1, F2, F3, F4 };

inline std::string to_string(Cert12Kind k) {
    switch (k) {
        case Cert12Kind::Fig3Left: return "Fig3Left";
        case Cert12Kind::Fig3Right: return "Fig3Right";
        case Cert12Kind::F1: return "F1";
        case Cert12Kind::F2: return "F2";
        case Cert12Kind::F3: return "F3";
        case Cert12Kind::F4: return "F4";
    }
    return "?";
}

struct Certificate12 {
    Cert12Kind kind = Cert12Kind::Fig3Left;
    int t = 0;  // family parameter; always 0 for the four-point kinds
    std::map<std::string, std::string> embedding;
};

/// Weighted four-point obstructions on the chain b < y < a with x
/// incomparable to all three: Fig3Left pins the chain middle to weight 2,
/// Fig3Right pins the side point to weight 1. Unpinned points match any host
/// weight.
inline WeightedPattern fig3_pattern(Cert12Kind kind) {
    if (kind != Cert12Kind::Fig3Left && kind != Cert12Kind::Fig3Right)
        throw std::invalid_argument("not a four-point obstruction kind");
    Poset p = Poset::from_relations({"a", "y", "b", "x"}, {{"b", "y"}, {"y", "a"}});
    std::vector<std::optional<int>> wt(4);
    if (kind == Cert12Kind::Fig3Left)
        wt[static_cast<std::size_t>(p.index_of("y"))] = 2;
    else
        wt[static_cast<std::size_t>(p.index_of("x"))] = 1;
    return {std::move(p), std::move(wt)};
}

/// Member t >= 0 of one of the four infinite obstruction families for
/// {1,2}-length representations. Points are b, a, x_i and y_i; in F2 and F4
/// the point a coincides with the top of the y-chain y_{t+1} and is simply
/// named "a". F3 and F4 additionally contain x_0 (and the comparability
/// b < x_1); F1 and F3 have a above the whole y-chain. Cover relations run
/// over every index for which both endpoints exist:
///   b < y_0,  y_i < y_{i+1},  x_i < x_{i+2},  x_i < y_{i+1},  y_i < x_{i+2}
/// Weights: a and b are unconstrained, two family-specific points get weight
/// 1, all remaining points weight 2.
inline WeightedPattern family_pattern(Cert12Kind kind, int t) {
    if (kind == Cert12Kind::Fig3Left || kind == Cert12Kind::Fig3Right)
        throw std::invalid_argument("not a family kind");
    if (t < 0) throw std::invalid_argument("family parameter must be non-negative");
    const bool merged = (kind == Cert12Kind::F2 || kind == Cert12Kind::F4);
    const bool has_x0 = (kind == Cert12Kind::F3 || kind == Cert12Kind::F4);
    auto xn = [](int i) { return "x" + std::to_string(i); };
    auto yn = [&](int i) {
        return (merged && i == t + 1) ? std::string("a") : "y" + std::to_string(i);
    };
    std::vector<std::string> elems = {"a", "b"};
    for (int i = has_x0 ? 0 : 1; i <= t + 1; ++i) elems.push_back(xn(i));
    for (int i = 0; i <= (merged ? t : t + 1); ++i) elems.push_back("y" + std::to_string(i));
    const int xlo = has_x0 ? 0 : 1;
    std::vector<std::pair<std::string, std::string>> covers;
    covers.emplace_back("b", yn(0));
    for (int i = 0; i <= t; ++i) covers.emplace_back(yn(i), yn(i + 1));
    for (int i = xlo; i + 2 <= t + 1; ++i) covers.emplace_back(xn(i), xn(i + 2));
    for (int i = xlo; i + 1 <= t + 1; ++i) covers.emplace_back(xn(i), yn(i + 1));
    for (int i = 0; i + 2 <= t + 1; ++i) covers.emplace_back(yn(i), xn(i + 2));
    if (!merged) covers.emplace_back(yn(t + 1), "a");
    if (has_x0) covers.emplace_back("b", xn(1));
    Poset p = Poset::from_relations(std::move(elems), covers);

    std::vector<std::optional<int>> wt(static_cast<std::size_t>(p.size()), 2);
    wt[static_cast<std::size_t>(p.index_of("a"))] = std::nullopt;
    wt[static_cast<std::size_t>(p.index_of("b"))] = std::nullopt;
    std::vector<std::string> light;
    switch (kind) {
        case Cert12Kind::F1: light = {"y0", "y" + std::to_string(t + 1)}; break;
        case Cert12Kind::F2: light = {"y0", xn(t + 1)}; break;
        case Cert12Kind::F3: light = {"x0", "y" + std::to_string(t + 1)}; break;
        default: light = {"x0", xn(t + 1)}; break;  // F4
    }
    for (const auto& id : light) wt[static_cast<std::size_t>(p.index_of(id))] = 1;
    return {std::move(p), std::move(wt)};
}

/// Fixture helper: concrete weights for a pattern, filling every
/// unconstrained point with the given value.
inline WeightedPoset instantiate_pattern(const WeightedPattern& pat, int wildcard_value = 2) {
    std::vector<int> w(static_cast<std::size_t>(pat.poset.size()));
    for (int i = 0; i < pat.poset.size(); ++i)
        w[static_cast<std::size_t>(i)] =
            pat.weights[static_cast<std::size_t>(i)].value_or(wildcard_value);
    return WeightedPoset(pat.poset, std::move(w));
}

/// Per-point override variant; points absent from the map fall back to 2.
inline WeightedPoset instantiate_pattern(const WeightedPattern& pat,
                                         const std::map<std::string, int>& wildcards) {
    std::vector<int> w(static_cast<std::size_t>(pat.poset.size()));
    for (int i = 0; i < pat.poset.size(); ++i) {
        const auto& fixed = pat.weights[static_cast<std::size_t>(i)];
        if (fixed) {
            w[static_cast<std::size_t>(i)] = *fixed;
        } else {
            auto it = wildcards.find(pat.poset.element(i));
            w[static_cast<std::size_t>(i)] = it == wildcards.end() ? 2 : it->second;
        }
    }
    return WeightedPoset(pat.poset, std::move(w));
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

/// Locates a 3+1 with a non-co-simplicial middle and reads off which of the
/// four six-point obstructions its neighborhood induces. In an interval order
/// the six witness points leave only two relations open, e vs c and a vs d;
/// the four combinations are exactly the four family indices.
inline Certificate01 extract_01_certificate(const Poset& p) {
    auto wopt = find_pattern(p, PatternKind::BadThreePlusOne);
    if (!wopt)
        throw Error(ErrorKind::NoBadPattern, "no 3+1 with a non-co-simplicial middle element");
    const PatternWitness& w = *wopt;
    auto req = [](bool cond, const char* what) {
        if (!cond) throw std::logic_error(std::string("obstruction extraction: ") + what);
    };
    req(w.d != w.x && w.e != w.x, "witness points collide");
    req(p.less(w.d, w.c), "d < c must hold");
    req(p.less(w.a, w.e), "a < e must hold");
    req(!p.less(w.d, w.x) && !p.less(w.x, w.d), "d and x must be incomparable");
    req(!p.less(w.e, w.x) && !p.less(w.x, w.e), "e and x must be incomparable");
    req(!p.less(w.c, w.e), "c < e cannot hold");
    req(!p.less(w.d, w.a), "d < a cannot hold");
    const bool ec = p.less(w.e, w.c);
    const bool ad = p.less(w.a, w.d);
    Certificate01 cert;
    cert.family_index = ec ? (ad ? 1 : 3) : (ad ? 4 : 2);
    cert.embedding = {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d}, {"e", w.e}, {"x", w.x}};
    return cert;
}

enum class CycleFamily { C1, C2, C3, C4 };

struct CycleClassification {
    CycleFamily family = CycleFamily::C1;
    int t = 0;
    std::map<std::string, int> labels;  // pattern point name -> digraph vertex index
};

/// Matches a minimum negative cycle against the four cycle shapes that such
/// cycles provably take on {1,2}-weighted interval orders: one Plus run
/// b -> x.. -> a followed by one Minus run a -> y.. -> b, with unit-part
/// sequences characteristic of the family. The shapes, writing w for the
/// weight of b and listing plus-run then minus-run units:
///   C1 (2t+5 arcs):  [w, 2*(t+1)]        / [-1, -2*t, -1, -w]
///   C2 (2t+4 arcs):  [w, 2*t, 1]         / [-2*t, -1, -w]
///   C3 (2t+6 arcs):  [w, 1, 2*(t+1)]     / [-1, -2*(t+1), -w]
///   C4 (2t+5 arcs):  [w, 1, 2*t, 1]      / [-2*(t+1), -w]
/// Anything else (including an ambiguous match) is rejected; with a valid
/// minimum cycle that can only happen through an implementation bug upstream.
inline CycleClassification classify_cycle(const NegativeCycle& c, const ConstraintDigraph& g) {
    const int len = static_cast<int>(c.arcs.size());
    auto fail = [](const std::string& why) -> void {
        throw Error(ErrorKind::UnclassifiableCycle, "cycle does not match any family shape: " + why);
    };
    if (len < 4) fail("fewer than four arcs");
    for (const Arc& a : c.arcs)
        if (a.tail < 0 || a.tail >= g.n || a.head < 0 || a.head >= g.n)
            fail("vertex out of range");

    // Locate the unique Minus -> Plus boundary; its first Plus arc leaves b.
    int b_pos = -1;
    int changes = 0;
    for (int i = 0; i < len; ++i) {
        ArcType before = c.arcs[static_cast<std::size_t>((i + len - 1) % len)].type;
        ArcType here = c.arcs[static_cast<std::size_t>(i)].type;
        if (before != here) ++changes;
        if (before == ArcType::Minus && here == ArcType::Plus) b_pos = i;
    }
    if (changes != 2 || b_pos < 0) fail("not one plus run followed by one minus run");

    std::vector<Arc> rot;
    rot.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) rot.push_back(c.arcs[static_cast<std::size_t>((b_pos + i) % len)]);
    int q = 0;
    while (q < len && rot[static_cast<std::size_t>(q)].type == ArcType::Plus) ++q;
    const int p = len - q;
    std::vector<long long> plus_units, minus_units;
    for (int i = 0; i < q; ++i) plus_units.push_back(rot[static_cast<std::size_t>(i)].weight.units);
    for (int i = q; i < len; ++i) minus_units.push_back(rot[static_cast<std::size_t>(i)].weight.units);
    const long long wb = plus_units[0];

    auto seq = [](std::initializer_list<std::pair<long long, int>> runs) {
        std::vector<long long> out;
        for (auto [value, count] : runs)
            for (int i = 0; i < count; ++i) out.push_back(value);
        return out;
    };
    std::optional<CycleFamily> family;
    int t = -1;
    auto attempt = [&](CycleFamily f, int tc, const std::vector<long long>& ep,
                       const std::vector<long long>& em) {
        if (tc < 0 || plus_units != ep || minus_units != em) return;
        if (family) fail("ambiguous family match");
        family = f;
        t = tc;
    };
    if ((len - 5) % 2 == 0 && len >= 5) {
        const int tc = (len - 5) / 2;
        if (q == tc + 2 && p == tc + 3)
            attempt(CycleFamily::C1, tc, seq({{wb, 1}, {2, tc + 1}}),
                    seq({{-1, 1}, {-2, tc}, {-1, 1}, {-wb, 1}}));
        if (q == tc + 3 && p == tc + 2)
            attempt(CycleFamily::C4, tc, seq({{wb, 1}, {1, 1}, {2, tc}, {1, 1}}),
                    seq({{-2, tc + 1}, {-wb, 1}}));
    }
    if (len % 2 == 0) {
        const int tc2 = (len - 4) / 2;
        if (q == tc2 + 2 && p == tc2 + 2)
            attempt(CycleFamily::C2, tc2, seq({{wb, 1}, {2, tc2}, {1, 1}}),
                    seq({{-2, tc2}, {-1, 1}, {-wb, 1}}));
        if (len >= 6) {
            const int tc3 = (len - 6) / 2;
            if (q == tc3 + 3 && p == tc3 + 3)
                attempt(CycleFamily::C3, tc3, seq({{wb, 1}, {1, 1}, {2, tc3 + 1}}),
                        seq({{-1, 1}, {-2, tc3 + 1}, {-wb, 1}}));
        }
    }
    if (!family) fail("no unit-part template applies");

    CycleClassification out;
    out.family = *family;
    out.t = t;
    const bool has_x0 = (*family == CycleFamily::C3 || *family == CycleFamily::C4);
    const bool merged = (*family == CycleFamily::C2 || *family == CycleFamily::C4);
    out.labels["b"] = rot[0].tail;
    for (int i = 1; i < q; ++i) {
        const int xi = has_x0 ? i - 1 : i;
        out.labels["x" + std::to_string(xi)] = rot[static_cast<std::size_t>(i)].tail;
    }
    out.labels["a"] = rot[static_cast<std::size_t>(q)].tail;
    // Minus-run intermediates descend the y-chain; its top is y_{t+1}, or
    // y_t when that point coincides with a.
    const int y_top = merged ? t : t + 1;
    for (int i = q + 1; i < len; ++i)
        out.labels["y" + std::to_string(y_top - (i - q - 1))] = rot[static_cast<std::size_t>(i)].tail;
    return out;
}

/// Turns a minimum negative cycle into a forbidden-subposet certificate.
/// Four-arc cycles are handled directly: their vertices always form a 3+1
/// whose infeasibility is one of the two four-point obstructions. Longer
/// cycles go through family classification and the labels are read off.
inline Certificate12 extract_12_certificate(const WeightedPoset& w, const NegativeCycle& c) {
    const Poset& p = w.poset();
    Certificate12 cert;
    if (c.arcs.size() == 4) {
        int i0 = -1;
        for (int i = 0; i < 4; ++i) {
            auto type = [&](int k) { return c.arcs[static_cast<std::size_t>((i + k) % 4)].type; };
            if (type(0) == ArcType::Minus && type(1) == ArcType::Minus &&
                type(2) == ArcType::Plus && type(3) == ArcType::Plus)
                i0 = i;
        }
        if (i0 < 0)
            throw Error(ErrorKind::UnclassifiableCycle,
                        "four-arc cycle is not chain-over-side shaped");
        const int top = c.arcs[static_cast<std::size_t>(i0)].tail;
        const int mid = c.arcs[static_cast<std::size_t>(i0)].head;
        const int bot = c.arcs[static_cast<std::size_t>((i0 + 1) % 4)].head;
        const int side = c.arcs[static_cast<std::size_t>((i0 + 2) % 4)].head;
        cert.kind = (w.weight(mid) == 2) ? Cert12Kind::Fig3Left : Cert12Kind::Fig3Right;
        if (cert.kind == Cert12Kind::Fig3Right && w.weight(side) != 1)
            throw std::logic_error("four-arc cycle weights match neither obstruction");
        cert.t = 0;
        cert.embedding = {{"a", p.element(top)},
                          {"y", p.element(mid)},
                          {"b", p.element(bot)},
                          {"x", p.element(side)}};
        return cert;
    }
    ConstraintDigraph g = build_constraint_digraph(w);
    CycleClassification cls = classify_cycle(c, g);
    switch (cls.family) {
        case CycleFamily::C1: cert.kind = Cert12Kind::F1; break;
        case CycleFamily::C2: cert.kind = Cert12Kind::F2; break;
        case CycleFamily::C3: cert.kind = Cert12Kind::F3; break;
        case CycleFamily::C4: cert.kind = Cert12Kind::F4; break;
    }
    cert.t = cls.t;
    for (const auto& [name, idx] : cls.labels) cert.embedding[name] = p.element(idx);
    return cert;
}

// ---------------------------------------------------------------------------
// Verification. Deliberately independent of extraction: regenerate the
// claimed pattern from its definition and check the embedding point by point.
// ---------------------------------------------------------------------------

namespace detail {

inline bool embedding_matches(const Poset& host, const std::vector<int>* host_w,
                              const Poset& pat, const std::vector<std::optional<int>>* pat_w,
                              const std::map<std::string, std::string>& embedding) {
    if (static_cast<int>(embedding.size()) != pat.size()) return false;
    std::vector<int> img(static_cast<std::size_t>(pat.size()), -1);
    std::vector<std::uint8_t> used(static_cast<std::size_t>(host.size()), 0);
    for (const auto& [pname, hname] : embedding) {
        if (!pat.contains(pname) || !host.contains(hname)) return false;
        const int pi = pat.index_of(pname);
        const int hi = host.index_of(hname);
        if (img[static_cast<std::size_t>(pi)] != -1 || used[static_cast<std::size_t>(hi)])
            return false;
        img[static_cast<std::size_t>(pi)] = hi;
        used[static_cast<std::size_t>(hi)] = 1;
    }
    for (int i = 0; i < pat.size(); ++i)
        if (img[static_cast<std::size_t>(i)] < 0) return false;
    for (int i = 0; i < pat.size(); ++i)
        for (int j = 0; j < pat.size(); ++j) {
            if (i == j) continue;
            if (pat.less(i, j) !=
                host.less(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]))
                return false;
        }
    if (pat_w && host_w)
        for (int i = 0; i < pat.size(); ++i) {
            const auto& need = (*pat_w)[static_cast<std::size_t>(i)];
            if (need && (*host_w)[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])] != *need)
                return false;
        }
    return true;
}

}  // namespace detail

/// True iff the embedding is an injective map of the full claimed pattern
/// into the host that preserves the relation in both directions. Never
/// throws; any defect just yields false.
inline bool verify_certificate(const Poset& host, const Certificate01& cert) {
    if (cert.family_index < 1 || cert.family_index > 4) return false;
    Poset pat = forbidden_01_pattern(cert.family_index);
    return detail::embedding_matches(host, nullptr, pat, nullptr, cert.embedding);
}

/// Weighted variant; pinned pattern weights must match the host exactly.
inline bool verify_certificate(const WeightedPoset& host, const Certificate12& cert) {
    WeightedPattern pat;
    try {
        if (cert.kind == Cert12Kind::Fig3Left || cert.kind == Cert12Kind::Fig3Right)
            pat = fig3_pattern(cert.kind);
        else
            pat = family_pattern(cert.kind, cert.t);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return detail::embedding_matches(host.poset(), &host.weights(), pat.poset, &pat.weights,
                                     cert.embedding);
}

}  // namespace ivrep
