// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ivrep/representation.hpp"

#include <doctest.h>

#include "helpers.hpp"

using ivrep::Certificate01;
using ivrep::Certificate12;
using ivrep::Cert12Kind;
using ivrep::Error;
using ivrep::ErrorKind;
using ivrep::Interval;
using ivrep::IntervalRepresentation;
using ivrep::NegativeCycle;
using ivrep::NotIntervalOrderError;
using ivrep::Poset;
using ivrep::Rational;
using ivrep::WeightedPoset;
using test_helpers::error_kind_of;

TEST_CASE("derived weights are zero exactly on co-simplicial points") {
    Poset p = Poset::from_relations({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}});
    WeightedPoset w = canonical_01_weights(p);
    CHECK(w.weights() == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("two-point chain gets exact endpoints") {
    Poset p = Poset::from_relations({"a", "b"}, {{"b", "a"}});
    auto r = represent(WeightedPoset(p, std::vector<int>{1, 1}));
    auto* rep = std::get_if<IntervalRepresentation>(&r);
    REQUIRE(rep != nullptr);
    CHECK(rep->intervals.at("a") == Interval{Rational(0), Rational(1)});
    CHECK(rep->intervals.at("b") == Interval{Rational(-6, 5), Rational(-1, 5)});
    CHECK(rep->potentials.at("a") == ivrep::EpsWeight{0, 0});
    CHECK(rep->potentials.at("b") == ivrep::EpsWeight{-1, 1});
}

TEST_CASE("chain beside a point with derived lengths") {
    Poset p = Poset::from_relations({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}});
    auto r = represent_01(p);
    auto* rep = std::get_if<IntervalRepresentation>(&r);
    REQUIRE(rep != nullptr);
    CHECK(rep->intervals.at("a") == Interval{Rational(-2, 17), Rational(-2, 17)});
    CHECK(rep->intervals.at("b") == Interval{Rational(-1, 17), Rational(-1, 17)});
    CHECK(rep->intervals.at("c") == Interval{Rational(0), Rational(0)});
    CHECK(rep->intervals.at("x") == Interval{Rational(-2, 17), Rational(15, 17)});
    CHECK(verify_representation(canonical_01_weights(p), *rep).ok());
}

TEST_CASE("representation checker reports violations precisely") {
    Poset p = Poset::from_relations({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}});
    WeightedPoset w = canonical_01_weights(p);
    auto r = represent_01(p);
    auto rep = std::get<IntervalRepresentation>(r);

    SUBCASE("intact representation has no violations") {
        CHECK(verify_representation(w, rep).violations.empty());
    }
    SUBCASE("length mismatch") {
        rep.intervals.at("b").right += Rational(1);
        auto report = verify_representation(w, rep);
        REQUIRE(report.violations.size() >= 1);
        CHECK(report.violations[0] ==
              "interval of b has length 1/1, expected 0");
    }
    SUBCASE("empty interval") {
        rep.intervals.at("c") = Interval{Rational(1), Rational(0)};
        auto report = verify_representation(w, rep);
        CHECK_FALSE(report.ok());
        CHECK(report.violations[0].find("is empty") != std::string::npos);
    }
    SUBCASE("comparable pair out of order") {
        std::swap(rep.intervals.at("a"), rep.intervals.at("b"));
        CHECK_FALSE(verify_representation(w, rep).ok());
    }
    SUBCASE("incomparable pair with disjoint intervals") {
        rep.intervals.at("x") = Interval{Rational(5), Rational(6)};
        auto report = verify_representation(w, rep);
        CHECK(report.violations.size() == 3);
    }
    SUBCASE("missing element is an error, not a violation") {
        rep.intervals.erase("x");
        CHECK(error_kind_of([&] { verify_representation(w, rep); }) ==
              ErrorKind::MissingElement);
    }
}

TEST_CASE("posets with a 2+2 are rejected before any cycle search") {
    Poset p = Poset::from_relations({"a", "b", "x", "y"}, {{"a", "b"}, {"x", "y"}});
    try {
        represent(WeightedPoset(p, {1, 1, 1, 1}));
        FAIL("expected rejection");
    } catch (const NotIntervalOrderError& e) {
        CHECK(e.kind() == ErrorKind::NotIntervalOrder);
        CHECK(p.less(e.witness().a, e.witness().b));
        CHECK(p.less(e.witness().x, e.witness().y));
    }
    CHECK_THROWS_AS(represent_01(p), NotIntervalOrderError);
    CHECK_THROWS_AS(represent_12(WeightedPoset(p, {1, 1, 1, 1})), NotIntervalOrderError);
}

TEST_CASE("prescribed-length solver returns the minimum cycle on rejection") {
    Poset p = Poset::from_relations({"a", "y", "b", "x"}, {{"b", "y"}, {"y", "a"}});
    auto r = represent(WeightedPoset(p, {2, 2, 2, 2}));
    auto* cycle = std::get_if<NegativeCycle>(&r);
    REQUIRE(cycle != nullptr);
    CHECK(cycle->arcs.size() == 4);
    CHECK(cycle->total == ivrep::EpsWeight{0, 2});
}

TEST_CASE("derived-length solver emits a six-point obstruction certificate") {
    for (int idx = 1; idx <= 4; ++idx) {
        Poset h = ivrep::forbidden_01_pattern(idx);
        auto r = represent_01(h);
        auto* cert = std::get_if<Certificate01>(&r);
        REQUIRE(cert != nullptr);
        CHECK(cert->family_index == idx);
        CHECK(cert->embedding.size() == 6);
        CHECK(verify_certificate(h, *cert));
    }
}

TEST_CASE("weight validation for the restricted-length solver") {
    Poset p = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    CHECK(error_kind_of([&] { represent_12(WeightedPoset(p, std::vector<int>{0, 1})); }) ==
          ErrorKind::WeightOutOfRange);
    CHECK(error_kind_of([&] { represent_12(WeightedPoset(p, std::vector<int>{1, 3})); }) ==
          ErrorKind::WeightOutOfRange);
}

TEST_CASE("restricted lengths on the side-point instance") {
    Poset p = Poset::from_relations({"a", "y", "b", "x"}, {{"b", "y"}, {"y", "a"}});
    auto kind_for = [&](int fy, int fx) -> std::optional<Cert12Kind> {
        auto r = represent_12(WeightedPoset(p, {2, fy, 2, fx}));
        if (auto* cert = std::get_if<Certificate12>(&r)) return cert->kind;
        return std::nullopt;
    };
    CHECK(kind_for(2, 2) == Cert12Kind::Fig3Left);
    CHECK(kind_for(1, 1) == Cert12Kind::Fig3Right);
    CHECK(kind_for(2, 1) == Cert12Kind::Fig3Left);
    CHECK(kind_for(1, 2) == std::nullopt);
}

TEST_CASE("every emitted certificate verifies against its own instance") {
    // Pad each six-point obstruction with one extra point above everything on
    // the main chain; the certificate embedding must still verify.
    for (int idx = 1; idx <= 4; ++idx) {
        Poset h = ivrep::forbidden_01_pattern(idx);
        auto pairs = h.relation_pairs();
        std::vector<std::string> elems = h.elements();
        elems.insert(elems.begin(), "top");
        for (const auto& id : {"a", "b", "c", "d", "e"}) pairs.push_back({id, "top"});
        Poset padded = Poset::from_relations(elems, pairs);
        auto r = represent_01(padded);
        auto* cert = std::get_if<Certificate01>(&r);
        REQUIRE(cert != nullptr);
        CHECK(cert->embedding.size() == 6);
        CHECK(verify_certificate(padded, *cert));
    }
}
