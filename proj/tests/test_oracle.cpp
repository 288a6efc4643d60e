// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ivrep/oracle.hpp"

#include <doctest.h>

#include "ivrep/representation.hpp"

#include <set>

#include "helpers.hpp"

using ivrep::Error;
using ivrep::ErrorKind;
using ivrep::FmResult;
using ivrep::IntervalRepresentation;
using ivrep::LinearConstraint;
using ivrep::LinearSystem;
using ivrep::PatternKind;
using ivrep::Poset;
using ivrep::Rational;
using ivrep::Setting;
using ivrep::WeightedPoset;
using test_helpers::error_kind_of;
using test_helpers::satisfies;

namespace {

/// All labeled posets on n elements by raw subset enumeration: every
/// irreflexive relation matrix, kept when transitive and acyclic. A second,
/// slower route to the same census as the incremental generator.
long long brute_count_posets(int n) {
    const int pairs = n * (n - 1);
    std::vector<std::pair<int, int>> slot;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) slot.emplace_back(i, j);
    long long count = 0;
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
        std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
        for (int k = 0; k < pairs; ++k)
            if ((mask >> k) & 1)
                m[static_cast<std::size_t>(slot[static_cast<std::size_t>(k)].first) * n +
                  slot[static_cast<std::size_t>(k)].second] = 1;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (m[static_cast<std::size_t>(i) * n + j] &&
                    m[static_cast<std::size_t>(j) * n + i])
                    ok = false;
                for (int k = 0; k < n && ok; ++k)
                    if (m[static_cast<std::size_t>(i) * n + j] &&
                        m[static_cast<std::size_t>(j) * n + k] &&
                        !m[static_cast<std::size_t>(i) * n + k])
                        ok = false;
            }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("poset census for small sizes") {
    const long long expected[] = {1, 1, 3, 19, 219, 4231};
    for (int n = 0; n <= 5; ++n) {
        long long count = 0;
        ivrep::enumerate_posets(n, [&](const Poset&) { ++count; });
        CHECK(count == expected[n]);
    }
    CHECK(error_kind_of([] { ivrep::enumerate_posets(7, [](const Poset&) {}); }) ==
          ErrorKind::SizeLimit);
}

TEST_CASE("incremental generator agrees with subset enumeration") {
    for (int n = 0; n <= 4; ++n) {
        long long count = 0;
        ivrep::enumerate_posets(n, [&](const Poset&) { ++count; });
        CHECK(count == brute_count_posets(n));
    }
    // At n = 3, the generated relation sets are exactly the valid ones.
    std::set<std::vector<std::pair<std::string, std::string>>> seen;
    ivrep::enumerate_posets(3, [&](const Poset& p) { seen.insert(p.relation_pairs()); });
    CHECK(seen.size() == 19);
}

TEST_CASE("difference constraints of an instance") {
    Poset chain = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    LinearSystem s1 = build_system(WeightedPoset(chain, std::vector<int>{2, 1}));
    REQUIRE(s1.constraints.size() == 1);
    CHECK(s1.constraints[0].strict);
    CHECK(s1.constraints[0].bound == Rational(-2));
    CHECK(s1.constraints[0].terms ==
          std::vector<std::pair<int, Rational>>{{0, Rational(1)}, {1, Rational(-1)}});

    Poset three_one = Poset::from_relations({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}});
    LinearSystem s2 = build_system(WeightedPoset(three_one, {1, 1, 1, 1}));
    int strict = 0, weak = 0;
    for (const auto& c : s2.constraints) (c.strict ? strict : weak)++;
    CHECK(strict == 3);
    CHECK(weak == 6);
}

TEST_CASE("elimination decides hand-built systems") {
    SUBCASE("empty system is feasible") {
        CHECK(ivrep::fm_feasible({{}, {}}).feasible);
    }
    SUBCASE("contradictory strict differences") {
        LinearSystem sys;
        sys.variables = {"x", "y"};
        sys.constraints = {{{{0, Rational(1)}, {1, Rational(-1)}}, true, Rational(0)},
                           {{{0, Rational(-1)}, {1, Rational(1)}}, true, Rational(0)}};
        CHECK_FALSE(ivrep::fm_feasible(sys).feasible);
    }
    SUBCASE("strictness decides the knife edge") {
        LinearSystem weak;
        weak.variables = {"x"};
        weak.constraints = {{{{0, Rational(1)}}, false, Rational(0)},
                            {{{0, Rational(-1)}}, false, Rational(0)}};
        FmResult r = ivrep::fm_feasible(weak);
        REQUIRE(r.feasible);
        CHECK(r.solution.at("x") == Rational(0));

        LinearSystem strict = weak;
        strict.constraints[1].strict = true;
        CHECK_FALSE(ivrep::fm_feasible(strict).feasible);
    }
    SUBCASE("unbounded directions still produce a witness") {
        LinearSystem sys;
        sys.variables = {"x", "y"};
        sys.constraints = {{{{0, Rational(1)}, {1, Rational(-1)}}, true, Rational(-3)}};
        FmResult r = ivrep::fm_feasible(sys);
        REQUIRE(r.feasible);
        CHECK(satisfies(sys, r.solution));
    }
}

TEST_CASE("elimination witnesses satisfy every constraint") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        WeightedPoset w = ivrep::random_instance(6, Setting::OneTwo, seed);
        LinearSystem sys = build_system(w);
        FmResult r = ivrep::fm_feasible(sys);
        if (!r.feasible) continue;
        CHECK(satisfies(sys, r.solution));
        // The witness doubles as left endpoints of a valid representation.
        ivrep::IntervalRepresentation rep;
        for (const auto& [id, left] : r.solution)
            rep.intervals[id] = {left, left + Rational(w.weight(id))};
        CHECK(ivrep::verify_representation(w, rep).ok());
    }
}

TEST_CASE("variable limit is enforced") {
    WeightedPoset w = ivrep::random_instance(13, Setting::OneTwo, 0);
    CHECK(error_kind_of([&] { ivrep::fm_feasible(build_system(w)); }) ==
          ErrorKind::TooManyVariables);
    CHECK_NOTHROW(ivrep::fm_feasible(build_system(ivrep::random_instance(12, Setting::OneTwo, 0))));
}

TEST_CASE("elimination agrees with the solver on small instances") {
    ivrep::enumerate_posets(3, [&](const Poset& p) {
        const int n = p.size();
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> f(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = 1 + ((mask >> i) & 1);
            WeightedPoset w(p, f);
            bool solver = false;
            try {
                solver = std::holds_alternative<IntervalRepresentation>(represent(w));
            } catch (const ivrep::NotIntervalOrderError&) {
            }
            CHECK(solver == ivrep::fm_feasible(build_system(w)).feasible);
        }
    });
}

TEST_CASE("obstruction scans locate embedded patterns") {
    Poset h3 = ivrep::forbidden_01_pattern(3);
    auto cert = ivrep::forbidden_scan_01(h3);
    REQUIRE(cert.has_value());
    CHECK(cert->family_index == 3);
    CHECK(verify_certificate(h3, *cert));

    Poset chain = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(ivrep::forbidden_scan_01(chain).has_value());

    WeightedPoset fig = instantiate_pattern(ivrep::fig3_pattern(ivrep::Cert12Kind::Fig3Left));
    auto cert12 = ivrep::forbidden_scan_12(fig);
    REQUIRE(cert12.has_value());
    CHECK(cert12->kind == ivrep::Cert12Kind::Fig3Left);
    CHECK(verify_certificate(fig, *cert12));

    WeightedPoset f3 = instantiate_pattern(ivrep::family_pattern(ivrep::Cert12Kind::F3, 1));
    auto cert12b = ivrep::forbidden_scan_12(f3);
    REQUIRE(cert12b.has_value());
    CHECK(cert12b->kind == ivrep::Cert12Kind::F3);
    CHECK(cert12b->t == 1);

    CHECK_FALSE(ivrep::forbidden_scan_12(WeightedPoset(chain, {1, 2, 1})).has_value());
}

TEST_CASE("random instances are reproducible interval orders") {
    WeightedPoset a = ivrep::random_instance(9, Setting::OneTwo, 42);
    WeightedPoset b = ivrep::random_instance(9, Setting::OneTwo, 42);
    CHECK(a == b);
    WeightedPoset c = ivrep::random_instance(9, Setting::OneTwo, 43);
    CHECK_FALSE(a == c);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        WeightedPoset w01 = ivrep::random_instance(10, Setting::ZeroOne, seed);
        CHECK_FALSE(find_pattern(w01.poset(), PatternKind::TwoPlusTwo).has_value());
        for (int wt : w01.weights()) CHECK((wt == 0 || wt == 1));
        WeightedPoset w12 = ivrep::random_instance(10, Setting::OneTwo, seed);
        for (int wt : w12.weights()) CHECK((wt == 1 || wt == 2));
    }
    CHECK(error_kind_of([] { ivrep::random_instance(0, Setting::OneTwo, 1); }) ==
          ErrorKind::ValidationError);
}
