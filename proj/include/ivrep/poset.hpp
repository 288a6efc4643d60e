// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ivrep {

enum class RelationMode { Covers, Full };

/// Finite strict partial order over named elements. The relation is stored
/// transitively closed as a flat boolean matrix, so comparability tests are
/// O(1). Instances are immutable after construction; indices follow the
/// element input order and element ids are treated as opaque strings.
class Poset {
public:
    Poset() = default;

    /// Builds a poset from explicit relation pairs (x, y) meaning x < y.
    /// With Covers the transitive closure is taken; with Full the input must
    /// already be its own closure. Rejects duplicate element names, pairs
    /// mentioning unknown elements, and relation cycles.
    static Poset from_relations(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& pairs,
                                RelationMode mode = RelationMode::Covers) {
        Poset p;
        p.elements_ = std::move(elements);
        const int n = p.size();
        for (int i = 0; i < n; ++i) {
            if (!p.index_.emplace(p.elements_[i], i).second)
                throw Error(ErrorKind::DuplicateElement, "duplicate element: " + p.elements_[i]);
        }
        std::vector<std::uint8_t> input(static_cast<std::size_t>(n) * n, 0);
        for (const auto& [x, y] : pairs) {
            int i = p.index_of(x);
            int j = p.index_of(y);
            input[static_cast<std::size_t>(i) * n + j] = 1;
        }
        std::vector<std::uint8_t> closure = input;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                if (!closure[static_cast<std::size_t>(i) * n + k]) continue;
                for (int j = 0; j < n; ++j)
                    if (closure[static_cast<std::size_t>(k) * n + j])
                        closure[static_cast<std::size_t>(i) * n + j] = 1;
            }
        for (int i = 0; i < n; ++i)
            if (closure[static_cast<std::size_t>(i) * n + i])
                throw Error(ErrorKind::CycleDetected,
                            "relation cycle through element: " + p.elements_[i]);
        if (mode == RelationMode::Full && closure != input)
            throw Error(ErrorKind::NotTransitive, "relation is not transitively closed");
        p.less_ = std::move(closure);
        return p;
    }

    /// Trusted constructor for internal generators that already hold a closed
    /// matrix. Invariants are only assert-checked.
    static Poset from_closed_matrix(std::vector<std::string> elements,
                                    std::vector<std::uint8_t> matrix) {
        Poset p;
        p.elements_ = std::move(elements);
        const int n = p.size();
        assert(matrix.size() == static_cast<std::size_t>(n) * n);
        p.less_ = std::move(matrix);
        for (int i = 0; i < n; ++i) {
            bool inserted = p.index_.emplace(p.elements_[i], i).second;
            assert(inserted);
            (void)inserted;
            assert(!p.cell(i, i));
        }
#ifndef NDEBUG
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.cell(i, j))
                    for (int k = 0; k < n; ++k)
                        if (p.cell(j, k)) assert(p.cell(i, k));
#endif
        return p;
    }

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "unknown element: " + id);
        return it->second;
    }

    bool less(int i, int j) const { return cell(i, j); }
    bool less(const std::string& x, const std::string& y) const {
        return cell(index_of(x), index_of(y));
    }
    bool comparable(int i, int j) const { return cell(i, j) || cell(j, i); }
    bool incomparable(int i, int j) const { return i != j && !comparable(i, j); }

    std::vector<int> incomparability_indices(int i) const {
        std::vector<int> out;
        for (int j = 0; j < size(); ++j)
            if (incomparable(i, j)) out.push_back(j);
        return out;
    }

    std::vector<std::string> incomparability_set(const std::string& id) const {
        std::vector<std::string> out;
        for (int j : incomparability_indices(index_of(id))) out.push_back(element(j));
        return out;
    }

    /// An element is co-simplicial when its incomparability set is an
    /// antichain. Points with weight zero in a {0,1}-length representation are
    /// exactly of this shape.
    bool is_co_simplicial_index(int i) const {
        std::vector<int> inc = incomparability_indices(i);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (comparable(inc[a], inc[b])) return false;
        return true;
    }
    bool is_co_simplicial(const std::string& id) const {
        return is_co_simplicial_index(index_of(id));
    }

    /// All ordered pairs (x, y) with x < y, in index order.
    std::vector<std::pair<std::string, std::string>> relation_pairs() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (cell(i, j)) out.emplace_back(element(i), element(j));
        return out;
    }

    /// Induced subposet on the given ids; element order follows this poset.
    Poset induced(const std::vector<std::string>& subset) const {
        std::unordered_set<int> keep;
        for (const auto& id : subset) keep.insert(index_of(id));
        std::vector<int> idx;
        for (int i = 0; i < size(); ++i)
            if (keep.count(i)) idx.push_back(i);
        return induced_by_indices(idx);
    }

    Poset induced_by_indices(const std::vector<int>& idx) const {
        const int k = static_cast<int>(idx.size());
        std::vector<std::string> elems;
        elems.reserve(static_cast<std::size_t>(k));
        for (int i : idx) elems.push_back(element(i));
        std::vector<std::uint8_t> m(static_cast<std::size_t>(k) * k, 0);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (cell(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]))
                    m[static_cast<std::size_t>(a) * k + b] = 1;
        return from_closed_matrix(std::move(elems), std::move(m));
    }

    /// Same elements, reversed relation.
    Poset dual() const {
        const int n = size();
        std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (cell(i, j)) m[static_cast<std::size_t>(j) * n + i] = 1;
        return from_closed_matrix(elements_, std::move(m));
    }

    friend bool operator==(const Poset& l, const Poset& r) {
        return l.elements_ == r.elements_ && l.less_ == r.less_;
    }

private:
    bool cell(int i, int j) const {
        return less_[static_cast<std::size_t>(i) * size() + j] != 0;
    }

    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::uint8_t> less_;
};

enum class PatternKind { TwoPlusTwo, ThreePlusOne, BadThreePlusOne };

/// Witness elements by role, unused fields empty.
///   TwoPlusTwo:      a < b and x < y with all four cross pairs incomparable.
///   ThreePlusOne:    chain a < b < c with x incomparable to all three.
///   BadThreePlusOne: a 3+1 as above whose middle element b is not
///                    co-simplicial, plus a comparable pair d < e inside the
///                    incomparability set of b.
struct PatternWitness {
    PatternKind kind = PatternKind::TwoPlusTwo;
    std::string a, b, c, x, y, d, e;
};

class NotIntervalOrderError : public Error {
public:
    explicit NotIntervalOrderError(PatternWitness w)
        : Error(ErrorKind::NotIntervalOrder,
                "not an interval order: " + w.a + "<" + w.b + " and " + w.x + "<" + w.y +
                    " form an induced 2+2"),
          witness_(std::move(w)) {}
    const PatternWitness& witness() const noexcept { return witness_; }

private:
    PatternWitness witness_;
};

/// Finds the first witness in lexicographic index order, or nothing.
inline std::optional<PatternWitness> find_pattern(const Poset& p, PatternKind kind) {
    const int n = p.size();
    if (kind == PatternKind::TwoPlusTwo) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!p.less(a, b)) continue;
                for (int x = 0; x < n; ++x) {
                    if (x == a || x == b) continue;
                    if (!p.incomparable(x, a) || !p.incomparable(x, b)) continue;
                    for (int y = 0; y < n; ++y) {
                        if (y == a || y == b || !p.less(x, y)) continue;
                        if (!p.incomparable(y, a) || !p.incomparable(y, b)) continue;
                        PatternWitness w;
                        w.kind = kind;
                        w.a = p.element(a);
                        w.b = p.element(b);
                        w.x = p.element(x);
                        w.y = p.element(y);
                        return w;
                    }
                }
            }
        return std::nullopt;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.less(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!p.less(b, c)) continue;
                for (int x = 0; x < n; ++x) {
                    if (x == a || x == b || x == c) continue;
                    if (!p.incomparable(x, a) || !p.incomparable(x, b) || !p.incomparable(x, c))
                        continue;
                    PatternWitness w;
                    w.kind = kind;
                    w.a = p.element(a);
                    w.b = p.element(b);
                    w.c = p.element(c);
                    w.x = p.element(x);
                    if (kind == PatternKind::ThreePlusOne) return w;
                    // Bad variant: the middle element must fail to be
                    // co-simplicial, witnessed by a comparable pair d < e
                    // inside Inc(b). d or e may coincide with x.
                    for (int d = 0; d < n; ++d) {
                        if (!p.incomparable(d, b)) continue;
                        for (int e = 0; e < n; ++e) {
                            if (!p.incomparable(e, b) || !p.less(d, e)) continue;
                            w.d = p.element(d);
                            w.e = p.element(e);
                            return w;
                        }
                    }
                }
            }
        }
    return std::nullopt;
}

/// Poset with a total non-negative integer weight function, by index.
class WeightedPoset {
public:
    WeightedPoset(Poset poset, std::vector<int> weights)
        : poset_(std::move(poset)), weights_(std::move(weights)) {
        if (static_cast<int>(weights_.size()) != poset_.size())
            throw Error(ErrorKind::MissingElement, "weight vector does not cover all elements");
        for (int i = 0; i < poset_.size(); ++i)
            if (weights_[static_cast<std::size_t>(i)] < 0)
                throw Error(ErrorKind::WeightOutOfRange,
                            "negative weight for element: " + poset_.element(i));
    }

    WeightedPoset(const Poset& poset, const std::map<std::string, int>& weights)
        : WeightedPoset(poset, collect(poset, weights)) {}

    const Poset& poset() const { return poset_; }
    int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    int weight(const std::string& id) const { return weight(poset_.index_of(id)); }
    const std::vector<int>& weights() const { return weights_; }
    int max_weight() const {
        int m = 0;
        for (int w : weights_) m = std::max(m, w);
        return m;
    }

    friend bool operator==(const WeightedPoset& l, const WeightedPoset& r) {
        return l.poset_ == r.poset_ && l.weights_ == r.weights_;
    }

private:
    static std::vector<int> collect(const Poset& p, const std::map<std::string, int>& weights) {
        std::vector<int> w(static_cast<std::size_t>(p.size()), 0);
        for (int i = 0; i < p.size(); ++i) {
            auto it = weights.find(p.element(i));
            if (it == weights.end())
                throw Error(ErrorKind::MissingElement, "no weight for element: " + p.element(i));
            w[static_cast<std::size_t>(i)] = it->second;
        }
        return w;
    }

    Poset poset_;
    std::vector<int> weights_;
};

/// Pattern poset whose points optionally constrain the host weight; a point
/// without a weight matches any host weight.
struct WeightedPattern {
    Poset poset;
    std::vector<std::optional<int>> weights;
};

namespace detail {

inline bool extend_embedding(const Poset& host, const std::vector<int>* host_w,
                             const Poset& pat, const std::vector<std::optional<int>>* pat_w,
                             std::vector<int>& img, std::vector<std::uint8_t>& used, int i) {
    if (i == pat.size()) return true;
    for (int h = 0; h < host.size(); ++h) {
        if (used[static_cast<std::size_t>(h)]) continue;
        if (pat_w && (*pat_w)[static_cast<std::size_t>(i)]) {
            assert(host_w != nullptr);
            if ((*host_w)[static_cast<std::size_t>(h)] != *(*pat_w)[static_cast<std::size_t>(i)])
                continue;
        }
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            int hj = img[static_cast<std::size_t>(j)];
            ok = (pat.less(j, i) == host.less(hj, h)) && (pat.less(i, j) == host.less(h, hj));
        }
        if (!ok) continue;
        img[static_cast<std::size_t>(i)] = h;
        used[static_cast<std::size_t>(h)] = 1;
        if (extend_embedding(host, host_w, pat, pat_w, img, used, i + 1)) return true;
        used[static_cast<std::size_t>(h)] = 0;
    }
    return false;
}

inline std::optional<std::map<std::string, std::string>> embedding_search(
    const Poset& host, const std::vector<int>* host_w, const Poset& pat,
    const std::vector<std::optional<int>>* pat_w) {
    if (pat.size() > host.size()) return std::nullopt;
    std::vector<int> img(static_cast<std::size_t>(pat.size()), -1);
    std::vector<std::uint8_t> used(static_cast<std::size_t>(host.size()), 0);
    if (!extend_embedding(host, host_w, pat, pat_w, img, used, 0)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (int i = 0; i < pat.size(); ++i)
        out.emplace(pat.element(i), host.element(img[static_cast<std::size_t>(i)]));
    return out;
}

}  // namespace detail

/// First induced embedding of the pattern into the host that preserves both
/// the relation and every constrained weight, searching host candidates in
/// index order. Returns a map from pattern ids to host ids.
inline std::optional<std::map<std::string, std::string>> find_weighted_embedding(
    const WeightedPoset& host, const WeightedPattern& pattern) {
    return detail::embedding_search(host.poset(), &host.weights(), pattern.poset,
                                    &pattern.weights);
}

/// Weight-blind variant for plain posets.
inline std::optional<std::map<std::string, std::string>> find_induced_embedding(
    const Poset& host, const Poset& pattern) {
    return detail::embedding_search(host, nullptr, pattern, nullptr);
}

}  // namespace ivrep
