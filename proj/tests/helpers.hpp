// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/digraph.hpp"
#include "ivrep/oracle.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace test_helpers {

template <typename Fn>
std::optional<ivrep::ErrorKind> error_kind_of(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const ivrep::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

/// Smallest arc count over all simple negative cycles, found by exhaustive
/// DFS. Each cycle is visited exactly once by rooting it at its smallest
/// vertex. Independent of the production detector on purpose.
inline std::optional<int> brute_min_negative_cycle_arcs(const ivrep::ConstraintDigraph& g) {
    using ivrep::EpsWeight;
    const int n = g.n;
    std::vector<std::vector<std::pair<int, EpsWeight>>> out(static_cast<std::size_t>(n));
    for (const auto& a : g.arcs)
        out[static_cast<std::size_t>(a.tail)].emplace_back(a.head, a.weight);
    std::optional<int> best;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int, EpsWeight)> dfs = [&](int start, int v, int len,
                                                            EpsWeight w) {
        for (const auto& [h, aw] : out[static_cast<std::size_t>(v)]) {
            if (h < start) continue;
            const EpsWeight nw = w + aw;
            if (h == start) {
                if (len + 1 >= 2 && nw.negative() && (!best || len + 1 < *best)) best = len + 1;
                continue;
            }
            if (on_path[static_cast<std::size_t>(h)]) continue;
            on_path[static_cast<std::size_t>(h)] = 1;
            dfs(start, h, len + 1, nw);
            on_path[static_cast<std::size_t>(h)] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s, s, 0, {});
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

inline bool satisfies(const ivrep::LinearSystem& sys,
                      const std::map<std::string, ivrep::Rational>& sol) {
    for (const auto& c : sys.constraints) {
        ivrep::Rational lhs(0);
        for (const auto& [v, co] : c.terms)
            lhs += co * sol.at(sys.variables[static_cast<std::size_t>(v)]);
        if (c.strict ? !(lhs < c.bound) : !(lhs <= c.bound)) return false;
    }
    return true;
}

inline std::string write_temp(const std::string& name, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ivrep_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream file(p, std::ios::binary | std::ios::trunc);
    file << content;
    return p.string();
}

}  // namespace test_helpers
