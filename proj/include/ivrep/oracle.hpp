// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/certificates.hpp"
#include "ivrep/poset.hpp"
#include "ivrep/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace ivrep {

// ---------------------------------------------------------------------------
// Fourier-Motzkin oracle over exact rationals. Entirely separate from the
// digraph pipeline; this is what the solver is tested against.
// ---------------------------------------------------------------------------

/// sum(coeff * var) <= bound, or strictly < when strict is set. Terms are
/// kept sorted by variable index with zero coefficients dropped.
struct LinearConstraint {
    std::vector<std::pair<int, Rational>> terms;
    bool strict = false;
    Rational bound;
};

struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearConstraint> constraints;
};

/// Difference constraints of a representation with the prescribed lengths,
/// one variable per left endpoint: x < y gives L(x) - L(y) < -f(x); each
/// incomparable pair gives the two overlap constraints L(v) - L(u) <= f(u).
inline LinearSystem build_system(const WeightedPoset& w) {
    LinearSystem sys;
    sys.variables = w.poset().elements();
    const Poset& p = w.poset();
    auto diff = [](int plus, int minus, bool strict, Rational bound) {
        LinearConstraint c;
        if (plus < minus)
            c.terms = {{plus, Rational(1)}, {minus, Rational(-1)}};
        else
            c.terms = {{minus, Rational(-1)}, {plus, Rational(1)}};
        c.strict = strict;
        c.bound = std::move(bound);
        return c;
    };
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (i == j) continue;
            if (p.less(i, j))
                sys.constraints.push_back(diff(i, j, true, Rational(-w.weight(i))));
            else if (!p.less(j, i))
                sys.constraints.push_back(diff(j, i, false, Rational(w.weight(i))));
        }
    return sys;
}

struct FmResult {
    bool feasible = false;
    std::map<std::string, Rational> solution;  // a witness point when feasible
};

/// Fourier-Motzkin elimination with strictness tracking: a derived bound is
/// strict when any contributing bound was. Variables are eliminated in
/// reverse input order; on feasibility a witness is rebuilt front to back,
/// taking interval midpoints (or bound +- 1 at open ends). Guarded to at
/// most 12 variables since the method can blow up doubly exponentially.
inline FmResult fm_feasible(const LinearSystem& sys) {
    const int k = static_cast<int>(sys.variables.size());
    if (k > 12)
        throw Error(ErrorKind::TooManyVariables,
                    "elimination oracle supports at most 12 variables");
    using Terms = std::vector<std::pair<int, Rational>>;
    auto canonical = [](const LinearConstraint& c) {
        std::map<int, Rational> acc;
        for (const auto& [v, co] : c.terms) acc[v] += co;
        LinearConstraint out;
        for (const auto& [v, co] : acc)
            if (co != Rational(0)) out.terms.emplace_back(v, co);
        out.strict = c.strict;
        out.bound = c.bound;
        return out;
    };

    bool infeasible = false;
    std::vector<LinearConstraint> cur;
    auto absorb = [&](std::vector<LinearConstraint> raw) {
        // Dominance dedup per coefficient pattern: keep the tightest bound,
        // strict beating non-strict at equal bounds. Constant rows are
        // resolved immediately.
        std::map<Terms, std::pair<Rational, bool>> best;
        for (auto& c : raw) {
            if (c.terms.empty()) {
                if (c.bound < Rational(0) || (c.strict && c.bound == Rational(0)))
                    infeasible = true;
                continue;
            }
            auto it = best.find(c.terms);
            if (it == best.end() || c.bound < it->second.first ||
                (c.bound == it->second.first && c.strict && !it->second.second))
                best[c.terms] = {c.bound, c.strict};
        }
        cur.clear();
        for (const auto& [terms, bs] : best) cur.push_back({terms, bs.second, bs.first});
    };

    {
        std::vector<LinearConstraint> init;
        init.reserve(sys.constraints.size());
        for (const auto& c : sys.constraints) init.push_back(canonical(c));
        absorb(std::move(init));
    }

    // bounds_at[v] holds the system right before v was eliminated; those
    // constraints only mention variables <= v.
    std::vector<std::vector<LinearConstraint>> bounds_at(static_cast<std::size_t>(k));
    for (int v = k - 1; v >= 0 && !infeasible; --v) {
        bounds_at[static_cast<std::size_t>(v)] = cur;
        std::vector<LinearConstraint> uppers, lowers, next;
        for (const auto& c : cur) {
            Rational coeff(0);
            for (const auto& [var, co] : c.terms)
                if (var == v) coeff = co;
            if (coeff > Rational(0))
                uppers.push_back(c);
            else if (coeff < Rational(0))
                lowers.push_back(c);
            else
                next.push_back(c);
        }
        for (const auto& lo : lowers)
            for (const auto& up : uppers) {
                Rational cl(0), cu(0);
                std::map<int, Rational> acc;
                for (const auto& [var, co] : lo.terms)
                    if (var == v) cl = -co;
                for (const auto& [var, co] : up.terms)
                    if (var == v) cu = co;
                // Scale so v cancels: cu * lo + cl * up.
                for (const auto& [var, co] : lo.terms)
                    if (var != v) acc[var] += cu * co;
                for (const auto& [var, co] : up.terms)
                    if (var != v) acc[var] += cl * co;
                LinearConstraint c;
                for (const auto& [var, co] : acc)
                    if (co != Rational(0)) c.terms.emplace_back(var, co);
                c.strict = lo.strict || up.strict;
                c.bound = cu * lo.bound + cl * up.bound;
                next.push_back(std::move(c));
            }
        absorb(std::move(next));
    }
    if (infeasible) return {};

    FmResult out;
    out.feasible = true;
    std::vector<Rational> val(static_cast<std::size_t>(k), Rational(0));
    for (int v = 0; v < k; ++v) {
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : bounds_at[static_cast<std::size_t>(v)]) {
            Rational coeff(0), rest(0);
            for (const auto& [var, co] : c.terms) {
                if (var == v)
                    coeff = co;
                else
                    rest += co * val[static_cast<std::size_t>(var)];
            }
            if (coeff == Rational(0)) continue;
            const Rational cand = (c.bound - rest) / coeff;
            if (coeff > Rational(0)) {
                if (!hi || cand < *hi) {
                    hi = cand;
                    hi_strict = c.strict;
                } else if (cand == *hi) {
                    hi_strict = hi_strict || c.strict;
                }
            } else {
                if (!lo || cand > *lo) {
                    lo = cand;
                    lo_strict = c.strict;
                } else if (cand == *lo) {
                    lo_strict = lo_strict || c.strict;
                }
            }
        }
        Rational& x = val[static_cast<std::size_t>(v)];
        if (lo && hi) {
            if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict)))
                throw std::logic_error("elimination left an empty interval on a feasible system");
            x = *lo == *hi ? *lo : (*lo + *hi) / Rational(2);
        } else if (lo) {
            x = *lo + Rational(1);
        } else if (hi) {
            x = *hi - Rational(1);
        }
    }
    for (int v = 0; v < k; ++v)
        out.solution.emplace(sys.variables[static_cast<std::size_t>(v)],
                             val[static_cast<std::size_t>(v)]);
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration and scans
// ---------------------------------------------------------------------------

/// Streams every labeled poset on n elements exactly once, in a fixed
/// deterministic order. Elements are built up one at a time; for the new
/// element every consistent below/above/incomparable assignment to the
/// existing elements is tried, which keeps the relation matrix transitively
/// closed throughout. Counts grow as 1, 1, 3, 19, 219, 4231, 130023 for
/// n = 0..6; anything past 6 is refused.
inline void enumerate_posets(int n, const std::function<void(const Poset&)>& sink) {
    if (n < 0 || n > 6)
        throw Error(ErrorKind::SizeLimit, "exhaustive enumeration supports at most 6 elements");
    static const char* kNames[] = {"a", "b", "c", "d", "e", "f"};
    std::vector<std::string> elems(kNames, kNames + n);
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> code(static_cast<std::size_t>(n > 0 ? n : 1), 0);
    auto at = [&](int i, int j) -> std::uint8_t& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            sink(Poset::from_closed_matrix(elems, m));
            return;
        }
        long total = 1;
        for (int i = 0; i < k; ++i) total *= 3;
        for (long mask = 0; mask < total; ++mask) {
            long mm = mask;
            for (int i = 0; i < k; ++i) {
                code[static_cast<std::size_t>(i)] = static_cast<int>(mm % 3);
                mm /= 3;
            }
            // code: 0 incomparable, 1 below the new element, 2 above it.
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j) {
                    if (i == j) continue;
                    if (code[static_cast<std::size_t>(i)] == 1 &&
                        code[static_cast<std::size_t>(j)] == 2 && !at(i, j))
                        ok = false;  // i < new < j forces i < j
                    if (at(i, j)) {
                        if (code[static_cast<std::size_t>(j)] == 1 &&
                            code[static_cast<std::size_t>(i)] != 1)
                            ok = false;  // below-set must be down-closed
                        if (code[static_cast<std::size_t>(i)] == 2 &&
                            code[static_cast<std::size_t>(j)] != 2)
                            ok = false;  // above-set must be up-closed
                    }
                }
            if (!ok) continue;
            for (int i = 0; i < k; ++i) {
                if (code[static_cast<std::size_t>(i)] == 1) at(i, k) = 1;
                if (code[static_cast<std::size_t>(i)] == 2) at(k, i) = 1;
            }
            rec(k + 1);
            for (int i = 0; i < k; ++i) {
                at(i, k) = 0;
                at(k, i) = 0;
            }
        }
    };
    rec(0);
}

/// First {0,1} obstruction embedded in the host, scanning family indices in
/// order. Weight-blind by definition.
inline std::optional<Certificate01> forbidden_scan_01(const Poset& host) {
    for (int idx = 1; idx <= 4; ++idx) {
        if (auto emb = find_induced_embedding(host, forbidden_01_pattern(idx)))
            return Certificate01{idx, std::move(*emb)};
    }
    return std::nullopt;
}

/// First {1,2} obstruction embedded in the host: the two four-point patterns
/// first, then every family member small enough to fit, by parameter then by
/// family. Exhaustive because a family member needs at least 2t + 4 points.
inline std::optional<Certificate12> forbidden_scan_12(const WeightedPoset& host) {
    const int n = host.poset().size();
    for (Cert12Kind kind : {Cert12Kind::Fig3Left, Cert12Kind::Fig3Right})
        if (n >= 4)
            if (auto emb = find_weighted_embedding(host, fig3_pattern(kind)))
                return Certificate12{kind, 0, std::move(*emb)};
    for (int t = 0; 2 * t + 4 <= n; ++t)
        for (Cert12Kind kind :
             {Cert12Kind::F1, Cert12Kind::F2, Cert12Kind::F3, Cert12Kind::F4}) {
            WeightedPattern pat = family_pattern(kind, t);
            if (pat.poset.size() > n) continue;
            if (auto emb = find_weighted_embedding(host, pat))
                return Certificate12{kind, t, std::move(*emb)};
        }
    return std::nullopt;
}

enum class Setting { ZeroOne, OneTwo };

/// Seeded random interval order with weights drawn for the given setting.
/// n random integer intervals are read back off into a poset, so the result
/// never contains a 2+2. Identical (n, setting, seed) triples produce
/// identical instances.
inline WeightedPoset random_instance(int n, Setting setting, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::ValidationError, "random instance needs at least 1 element");
    std::mt19937_64 rng(seed);
    std::vector<long long> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        left[static_cast<std::size_t>(i)] =
            static_cast<long long>(rng() % (4ull * static_cast<unsigned long long>(n)));
        right[static_cast<std::size_t>(i)] =
            left[static_cast<std::size_t>(i)] +
            static_cast<long long>(rng() % (static_cast<unsigned long long>(n) + 1));
    }
    std::vector<std::string> elems;
    elems.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elems.push_back("v" + std::to_string(i));
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (right[static_cast<std::size_t>(i)] < left[static_cast<std::size_t>(j)])
                m[static_cast<std::size_t>(i) * n + j] = 1;
    Poset p = Poset::from_closed_matrix(std::move(elems), std::move(m));
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] =
            setting == Setting::ZeroOne ? static_cast<int>(rng() % 2)
                                        : 1 + static_cast<int>(rng() % 2);
    return WeightedPoset(std::move(p), std::move(w));
}

}  // namespace ivrep
