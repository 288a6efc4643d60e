// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/eps_weight.hpp"
#include "ivrep/poset.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

namespace ivrep {

enum class ArcType { Minus, Plus };

struct Arc {
    int tail = 0;
    int head = 0;
    ArcType type = ArcType::Plus;
    EpsWeight weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Difference-constraint digraph of a weighted poset. Every comparable pair
/// x < y yields one Minus arc y -> x of weight -f(x) - eps; every
/// incomparable pair yields two Plus arcs, u -> v carrying +f(u). A potential
/// on this digraph is exactly a choice of left interval endpoints.
struct ConstraintDigraph {
    std::vector<std::string> vertices;
    std::vector<Arc> arcs;  // emitted in (tail, head) lexicographic index order
    int n = 0;
};

inline ConstraintDigraph build_constraint_digraph(const WeightedPoset& w) {
    ConstraintDigraph g;
    g.vertices = w.poset().elements();
    g.n = w.poset().size();
    for (int t = 0; t < g.n; ++t)
        for (int h = 0; h < g.n; ++h) {
            if (t == h) continue;
            if (w.poset().less(h, t))
                g.arcs.push_back({t, h, ArcType::Minus, {-static_cast<long long>(w.weight(h)), 1}});
            else if (!w.poset().less(t, h))
                g.arcs.push_back({t, h, ArcType::Plus, {static_cast<long long>(w.weight(t)), 0}});
        }
    return g;
}

/// Simple cycle with negative total weight; the infeasibility witness for a
/// prescribed-length representation. Arc i runs vertices[i] ->
/// vertices[(i + 1) % size].
struct NegativeCycle {
    std::vector<int> vertices;
    std::vector<Arc> arcs;
    EpsWeight total;
};

/// Finds a negative cycle with the minimum possible number of arcs, or
/// nothing. Hop-indexed dynamic programming: a table of cheapest walks with
/// exactly h arcs per (start, vertex) pair, stopping at the first h where
/// some diagonal entry goes negative. At that minimal h any negative closed
/// walk must already be a simple cycle, since a shorter negative closed walk
/// would split off otherwise. Ties break deterministically: lowest start
/// vertex, then lowest (tail, head) arc during reconstruction.
inline std::optional<NegativeCycle> find_min_arc_negative_cycle(const ConstraintDigraph& g) {
    const int n = g.n;
    if (n == 0) return std::nullopt;
    using Row = std::vector<std::optional<EpsWeight>>;
    std::vector<Row> prev(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n)));
    for (int s = 0; s < n; ++s) prev[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = EpsWeight{};
    int found_h = -1;
    int found_s = -1;
    for (int h = 1; h <= n && found_h < 0; ++h) {
        std::vector<Row> cur(static_cast<std::size_t>(n), Row(static_cast<std::size_t>(n)));
        for (const Arc& a : g.arcs)
            for (int s = 0; s < n; ++s) {
                const auto& from = prev[static_cast<std::size_t>(s)][static_cast<std::size_t>(a.tail)];
                if (!from) continue;
                EpsWeight cand = *from + a.weight;
                auto& slot = cur[static_cast<std::size_t>(s)][static_cast<std::size_t>(a.head)];
                if (!slot || cand < *slot) slot = cand;
            }
        for (int s = 0; s < n && found_h < 0; ++s) {
            const auto& diag = cur[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
            if (diag && diag->negative()) {
                found_h = h;
                found_s = s;
            }
        }
        prev = std::move(cur);
    }
    if (found_h < 0) return std::nullopt;

    // Rerun for the chosen start with predecessor arcs recorded per hop.
    const int H = found_h;
    const int S = found_s;
    std::vector<Row> dist(static_cast<std::size_t>(H) + 1, Row(static_cast<std::size_t>(n)));
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(H) + 1,
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    dist[0][static_cast<std::size_t>(S)] = EpsWeight{};
    for (int h = 1; h <= H; ++h)
        for (int ai = 0; ai < static_cast<int>(g.arcs.size()); ++ai) {
            const Arc& a = g.arcs[static_cast<std::size_t>(ai)];
            const auto& from = dist[static_cast<std::size_t>(h) - 1][static_cast<std::size_t>(a.tail)];
            if (!from) continue;
            EpsWeight cand = *from + a.weight;
            auto& slot = dist[static_cast<std::size_t>(h)][static_cast<std::size_t>(a.head)];
            if (!slot || cand < *slot) {
                slot = cand;
                pred[static_cast<std::size_t>(h)][static_cast<std::size_t>(a.head)] = ai;
            }
        }
    NegativeCycle c;
    const auto& total = dist[static_cast<std::size_t>(H)][static_cast<std::size_t>(S)];
    if (!total || !total->negative())
        throw std::logic_error("negative cycle detection disagrees with reconstruction");
    c.total = *total;
    int v = S;
    for (int h = H; h >= 1; --h) {
        int ai = pred[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)];
        if (ai < 0) throw std::logic_error("broken predecessor chain in cycle reconstruction");
        c.arcs.push_back(g.arcs[static_cast<std::size_t>(ai)]);
        v = g.arcs[static_cast<std::size_t>(ai)].tail;
    }
    if (v != S) throw std::logic_error("reconstructed walk does not close");
    std::reverse(c.arcs.begin(), c.arcs.end());
    std::unordered_set<int> seen;
    EpsWeight sum;
    for (const Arc& a : c.arcs) {
        c.vertices.push_back(a.tail);
        if (!seen.insert(a.tail).second)
            throw std::logic_error("minimum-hop negative closed walk is not simple");
        sum += a.weight;
    }
    if (!(sum == c.total)) throw std::logic_error("cycle weight does not match its arcs");
    return c;
}

/// Cross-checks an emitted cycle against the instance it came from: arcs must
/// exist in the digraph with their stated type and weight, the cycle must be
/// simple and closed, contain a Minus arc, and its total must be negative
/// with unit part no lower than 1 - max(1, max weight). Violations are bugs.
inline void validate_negative_cycle(const WeightedPoset& w, const ConstraintDigraph& g,
                                    const NegativeCycle& c) {
    const Poset& p = w.poset();
    auto fail = [](const char* what) { throw std::logic_error(std::string("bad cycle: ") + what); };
    const int len = static_cast<int>(c.arcs.size());
    if (len < 2 || static_cast<int>(c.vertices.size()) != len) fail("wrong shape");
    std::unordered_set<int> seen;
    long long minus_arcs = 0;
    EpsWeight sum;
    for (int i = 0; i < len; ++i) {
        const Arc& a = c.arcs[static_cast<std::size_t>(i)];
        if (a.tail != c.vertices[static_cast<std::size_t>(i)] ||
            a.head != c.vertices[static_cast<std::size_t>((i + 1) % len)])
            fail("arcs do not follow the vertex sequence");
        if (a.tail < 0 || a.tail >= g.n || a.head < 0 || a.head >= g.n) fail("vertex out of range");
        if (!seen.insert(a.tail).second) fail("repeated vertex");
        if (a.type == ArcType::Minus) {
            if (!p.less(a.head, a.tail)) fail("minus arc without comparable pair");
            if (!(a.weight == EpsWeight{-static_cast<long long>(w.weight(a.head)), 1}))
                fail("minus arc weight mismatch");
            ++minus_arcs;
        } else {
            if (!p.incomparable(a.tail, a.head)) fail("plus arc without incomparable pair");
            if (!(a.weight == EpsWeight{static_cast<long long>(w.weight(a.tail)), 0}))
                fail("plus arc weight mismatch");
        }
        sum += a.weight;
    }
    if (!(sum == c.total)) fail("total mismatch");
    if (!c.total.negative()) fail("total not negative");
    if (minus_arcs < 1 || c.total.eps_count != minus_arcs) fail("eps count mismatch");
    const long long r = std::max(1, w.max_weight());
    if (c.total.units > 0 || c.total.units < 1 - r) fail("unit part outside [1 - max weight, 0]");
}

/// Cheapest-walk potential: p(v) = min over all walks ending at v (the empty
/// walk counts as 0), computed by relaxation. Every arc then satisfies
/// p(head) <= p(tail) + weight, and all values are <= 0. Throws when a
/// negative cycle makes the minimum unbounded.
inline std::vector<EpsWeight> compute_potential(const ConstraintDigraph& g) {
    std::vector<EpsWeight> p(static_cast<std::size_t>(g.n));
    for (int round = 0; round + 1 < g.n; ++round) {
        bool changed = false;
        for (const Arc& a : g.arcs) {
            EpsWeight cand = p[static_cast<std::size_t>(a.tail)] + a.weight;
            if (cand < p[static_cast<std::size_t>(a.head)]) {
                p[static_cast<std::size_t>(a.head)] = cand;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (const Arc& a : g.arcs)
        if (p[static_cast<std::size_t>(a.tail)] + a.weight < p[static_cast<std::size_t>(a.head)])
            throw Error(ErrorKind::NegativeCyclePresent,
                        "digraph has a negative cycle; no potential exists");
    return p;
}

}  // namespace ivrep
