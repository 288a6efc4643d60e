// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/oracle.hpp"
#include "ivrep/representation.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ivrep {

/// Insertion-ordered JSON keeps serialized output byte-deterministic.
using Json = nlohmann::ordered_json;

/// Parsed and validated instance file. The setting is always resolved: an
/// explicit "setting" wins; otherwise instances with weights default to "12"
/// when every weight is 1 or 2 and to "given" otherwise, and weightless
/// instances default to "01".
struct InstanceDocument {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    RelationMode relation_mode = RelationMode::Covers;
    std::optional<std::map<std::string, int>> weights;
    std::string setting;  // "01", "12" or "given"
};

inline InstanceDocument parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::ValidationError, "instance must be a JSON object");

    InstanceDocument doc;
    if (!j.contains("elements") || !j["elements"].is_array())
        throw Error(ErrorKind::ValidationError, "field 'elements' must be an array of strings");
    std::set<std::string> seen;
    for (const auto& el : j["elements"]) {
        if (!el.is_string())
            throw Error(ErrorKind::ValidationError, "field 'elements' must be an array of strings");
        const std::string id = el.get<std::string>();
        if (!seen.insert(id).second)
            throw Error(ErrorKind::ValidationError, "duplicate element: " + id);
        doc.elements.push_back(id);
    }

    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw Error(ErrorKind::ValidationError, "field 'relations' must be an array of pairs");
        for (const auto& pair : j["relations"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                throw Error(ErrorKind::ValidationError,
                            "each relation must be a pair of element names");
            const std::string x = pair[0].get<std::string>();
            const std::string y = pair[1].get<std::string>();
            for (const auto& id : {x, y})
                if (!seen.count(id))
                    throw Error(ErrorKind::ValidationError, "unknown element in relation: " + id);
            doc.relations.emplace_back(x, y);
        }
    }

    if (j.contains("relation_mode")) {
        const std::string mode = j["relation_mode"].is_string()
                                     ? j["relation_mode"].get<std::string>()
                                     : std::string();
        if (mode == "covers")
            doc.relation_mode = RelationMode::Covers;
        else if (mode == "full")
            doc.relation_mode = RelationMode::Full;
        else
            throw Error(ErrorKind::ValidationError,
                        "field 'relation_mode' must be \"covers\" or \"full\"");
    }

    if (j.contains("weights")) {
        if (!j["weights"].is_object())
            throw Error(ErrorKind::ValidationError, "field 'weights' must be an object");
        std::map<std::string, int> w;
        for (const auto& [id, value] : j["weights"].items()) {
            if (!seen.count(id))
                throw Error(ErrorKind::ValidationError, "weight for unknown element: " + id);
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw Error(ErrorKind::ValidationError,
                            "weight of " + id + " must be a non-negative integer");
            w[id] = value.get<int>();
        }
        doc.weights = std::move(w);
    }

    std::string setting;
    if (j.contains("setting")) {
        if (!j["setting"].is_string())
            throw Error(ErrorKind::ValidationError, "field 'setting' must be a string");
        setting = j["setting"].get<std::string>();
        if (setting != "01" && setting != "12" && setting != "given")
            throw Error(ErrorKind::ValidationError,
                        "field 'setting' must be \"01\", \"12\" or \"given\"");
    } else if (doc.weights) {
        setting = "12";
        for (const auto& [id, w] : *doc.weights)
            if (w != 1 && w != 2) setting = "given";
    } else {
        setting = "01";
    }
    if ((setting == "12" || setting == "given") && !doc.weights)
        throw Error(ErrorKind::ValidationError, "setting '" + setting + "' requires weights");
    if (doc.weights)
        for (const auto& id : doc.elements)
            if (!doc.weights->count(id))
                throw Error(ErrorKind::ValidationError, "missing weight for element: " + id);
    doc.setting = setting;
    return doc;
}

inline Poset instance_poset(const InstanceDocument& doc) {
    return Poset::from_relations(doc.elements, doc.relations, doc.relation_mode);
}

inline WeightedPoset instance_weighted_poset(const InstanceDocument& doc) {
    if (!doc.weights)
        throw Error(ErrorKind::ValidationError, "instance carries no weights");
    return WeightedPoset(instance_poset(doc), *doc.weights);
}

// ---------------------------------------------------------------------------
// Serialization. Intervals are listed in element order, endpoints as "p/q".
// ---------------------------------------------------------------------------

inline Json representation_to_json(const Poset& p, const IntervalRepresentation& rep,
                                   bool normalize = false, bool epsilon_info = false) {
    const int n = p.size();
    Json out;
    out["epsilon"] =
        to_fraction(Rational(1, static_cast<long long>(n) * n + 1));
    Rational shift(0);
    if (normalize && n > 0) {
        bool first = true;
        Rational lo(0);
        for (const auto& id : p.elements()) {
            const Rational& l = rep.intervals.at(id).left;
            if (first || l < lo) lo = l;
            first = false;
        }
        shift = -lo;
    }
    Json iv = Json::object();
    for (const auto& id : p.elements()) {
        const Interval& I = rep.intervals.at(id);
        iv[id] = Json::array({to_fraction(I.left + shift), to_fraction(I.right + shift)});
    }
    out["intervals"] = std::move(iv);
    if (epsilon_info && !rep.potentials.empty()) {
        Json pots = Json::object();
        for (const auto& id : p.elements()) {
            auto it = rep.potentials.find(id);
            if (it == rep.potentials.end()) continue;
            pots[id] = Json{{"units", it->second.units}, {"eps_count", it->second.eps_count}};
        }
        out["potentials"] = std::move(pots);
    }
    return out;
}

inline IntervalRepresentation representation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_object())
        throw Error(ErrorKind::ValidationError,
                    "representation must be an object with an 'intervals' object");
    IntervalRepresentation rep;
    for (const auto& [id, pair] : j["intervals"].items()) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw Error(ErrorKind::ValidationError,
                        "interval of " + id + " must be a pair of \"p/q\" strings");
        auto l = parse_fraction(pair[0].get<std::string>());
        auto r = parse_fraction(pair[1].get<std::string>());
        if (!l || !r)
            throw Error(ErrorKind::ValidationError, "malformed endpoint for element " + id);
        rep.intervals.emplace(id, Interval{*l, *r});
    }
    return rep;
}

namespace detail {

/// Host relations among the embedded points, by host element order.
inline Json induced_relations_json(const Poset& host,
                                   const std::vector<std::string>& image) {
    std::set<int> idx;
    for (const auto& id : image) idx.insert(host.index_of(id));
    Json out = Json::array();
    for (int i : idx)
        for (int j : idx)
            if (host.less(i, j)) out.push_back(Json::array({host.element(i), host.element(j)}));
    return out;
}

inline std::vector<std::string> embedding_image(const std::map<std::string, std::string>& emb) {
    std::vector<std::string> out;
    for (const auto& [from, to] : emb) out.push_back(to);
    return out;
}

}  // namespace detail

inline Json certificate_to_json(const Poset& host, const Certificate01& cert) {
    Json out;
    out["setting"] = "01";
    out["kind"] = "H" + std::to_string(cert.family_index);
    out["embedding"] = cert.embedding;
    out["induced_relations"] =
        detail::induced_relations_json(host, detail::embedding_image(cert.embedding));
    return out;
}

inline Json certificate_to_json(const WeightedPoset& host, const Certificate12& cert) {
    Json out;
    out["setting"] = "12";
    out["kind"] = to_string(cert.kind);
    if (cert.kind != Cert12Kind::Fig3Left && cert.kind != Cert12Kind::Fig3Right)
        out["t"] = cert.t;
    out["embedding"] = cert.embedding;
    const auto image = detail::embedding_image(cert.embedding);
    out["induced_relations"] = detail::induced_relations_json(host.poset(), image);
    Json wts = Json::object();
    std::set<int> idx;
    for (const auto& id : image) idx.insert(host.poset().index_of(id));
    for (int i : idx) wts[host.poset().element(i)] = host.weight(i);
    out["weights"] = std::move(wts);
    return out;
}

inline Json two_plus_two_to_json(const std::string& setting, const Poset& host,
                                 const PatternWitness& w) {
    Json out;
    out["setting"] = setting;
    out["kind"] = "TwoPlusTwo";
    out["embedding"] = Json{{"a", w.a}, {"b", w.b}, {"x", w.x}, {"y", w.y}};
    out["induced_relations"] = detail::induced_relations_json(host, {w.a, w.b, w.x, w.y});
    return out;
}

inline Json negative_cycle_to_json(const WeightedPoset& host, const NegativeCycle& c) {
    Json out;
    out["setting"] = "given";
    out["kind"] = "NegativeCycle";
    Json cyc = Json::array();
    for (int v : c.vertices) cyc.push_back(host.poset().element(v));
    out["cycle"] = std::move(cyc);
    Json wts = Json::object();
    std::set<int> idx(c.vertices.begin(), c.vertices.end());
    for (int i : idx) wts[host.poset().element(i)] = host.weight(i);
    out["weights"] = std::move(wts);
    return out;
}

// ---------------------------------------------------------------------------
// Artifact verification, used by the verify command and round-trip tests.
// ---------------------------------------------------------------------------

struct VerifyReport {
    bool valid = false;
    std::vector<std::string> problems;
};

namespace detail {

/// Re-checks a deserialized certificate against the instance. Embedding
/// validity is delegated to the independent pattern checkers; the
/// informational fields (induced_relations, weights, cycle arcs) are
/// re-derived and compared so a tampered file cannot slip through.
inline VerifyReport verify_certificate_json(const InstanceDocument& doc, const Json& j) {
    VerifyReport rep;
    auto problem = [&](const std::string& p) { rep.problems.push_back(p); };
    if (!j.contains("kind") || !j["kind"].is_string()) {
        problem("certificate has no 'kind'");
        return rep;
    }
    const std::string kind = j["kind"].get<std::string>();
    Poset poset = instance_poset(doc);

    std::map<std::string, std::string> emb;
    if (j.contains("embedding") && j["embedding"].is_object())
        for (const auto& [k, v] : j["embedding"].items()) {
            if (!v.is_string()) {
                problem("embedding values must be element names");
                return rep;
            }
            emb[k] = v.get<std::string>();
        }

    auto check_induced = [&]() {
        if (!j.contains("induced_relations")) return;
        Json expect = induced_relations_json(poset, embedding_image(emb));
        if (j["induced_relations"] != expect)
            problem("induced_relations does not match the instance");
    };

    if (kind == "TwoPlusTwo") {
        for (const char* key : {"a", "b", "x", "y"})
            if (!emb.count(key)) {
                problem("witness is missing point " + std::string(key));
                return rep;
            }
        for (const auto& [k, v] : emb)
            if (!poset.contains(v)) {
                problem("unknown element in witness: " + v);
                return rep;
            }
        std::set<std::string> distinct{emb["a"], emb["b"], emb["x"], emb["y"]};
        bool ok = distinct.size() == 4 && poset.less(emb["a"], emb["b"]) &&
                  poset.less(emb["x"], emb["y"]);
        for (const auto& u : {emb["a"], emb["b"]})
            for (const auto& v : {emb["x"], emb["y"]})
                ok = ok && !poset.less(u, v) && !poset.less(v, u);
        if (!ok) {
            problem("claimed 2+2 is not induced in the instance");
            return rep;
        }
        check_induced();
        rep.valid = rep.problems.empty();
        return rep;
    }

    if (kind.size() == 2 && kind[0] == 'H' && kind[1] >= '1' && kind[1] <= '4') {
        Certificate01 cert{kind[1] - '0', emb};
        if (!verify_certificate(poset, cert)) {
            problem("embedding is not an induced copy of obstruction " + kind);
            return rep;
        }
        check_induced();
        rep.valid = rep.problems.empty();
        return rep;
    }

    if (kind == "NegativeCycle") {
        if (!doc.weights) {
            problem("cycle certificates need instance weights");
            return rep;
        }
        WeightedPoset w(poset, *doc.weights);
        if (!j.contains("cycle") || !j["cycle"].is_array() || j["cycle"].size() < 2) {
            problem("certificate has no usable 'cycle'");
            return rep;
        }
        std::vector<int> verts;
        std::set<int> distinct;
        for (const auto& v : j["cycle"]) {
            if (!v.is_string() || !poset.contains(v.get<std::string>())) {
                problem("unknown element in cycle");
                return rep;
            }
            int idx = poset.index_of(v.get<std::string>());
            if (!distinct.insert(idx).second) {
                problem("cycle repeats an element");
                return rep;
            }
            verts.push_back(idx);
        }
        // Re-derive each arc weight from the instance; the file only needs
        // to name the vertex sequence.
        EpsWeight total;
        const int len = static_cast<int>(verts.size());
        for (int i = 0; i < len; ++i) {
            const int t = verts[static_cast<std::size_t>(i)];
            const int h = verts[static_cast<std::size_t>((i + 1) % len)];
            if (poset.less(h, t))
                total += EpsWeight{-static_cast<long long>(w.weight(h)), 1};
            else if (poset.incomparable(t, h))
                total += EpsWeight{static_cast<long long>(w.weight(t)), 0};
            else {
                problem("cycle step " + poset.element(t) + " -> " + poset.element(h) +
                        " is not a constraint arc");
                return rep;
            }
        }
        if (!total.negative()) {
            problem("cycle weight is not negative");
            return rep;
        }
        rep.valid = true;
        return rep;
    }

    // {1,2} obstruction kinds.
    std::optional<Cert12Kind> k12;
    for (Cert12Kind k : {Cert12Kind::Fig3Left, Cert12Kind::Fig3Right, Cert12Kind::F1,
                         Cert12Kind::F2, Cert12Kind::F3, Cert12Kind::F4})
        if (to_string(k) == kind) k12 = k;
    if (!k12) {
        problem("unknown certificate kind: " + kind);
        return rep;
    }
    if (!doc.weights) {
        problem("weighted certificates need instance weights");
        return rep;
    }
    WeightedPoset w(poset, *doc.weights);
    Certificate12 cert;
    cert.kind = *k12;
    cert.t = j.contains("t") && j["t"].is_number_integer() ? j["t"].get<int>() : 0;
    cert.embedding = emb;
    if (!verify_certificate(w, cert)) {
        problem("embedding is not an induced weighted copy of obstruction " + kind);
        return rep;
    }
    check_induced();
    if (j.contains("weights") && j["weights"].is_object())
        for (const auto& [id, value] : j["weights"].items())
            if (!doc.weights->count(id) || !value.is_number_integer() ||
                doc.weights->at(id) != value.get<int>())
                problem("certificate weight of " + id + " does not match the instance");
    rep.valid = rep.problems.empty();
    return rep;
}

}  // namespace detail

/// Verifies a serialized artifact (representation or certificate) against an
/// instance. Representation files must cover every element; the governing
/// weights for a "01" instance are the canonical ones.
inline VerifyReport verify_document(const InstanceDocument& doc, const Json& artifact) {
    VerifyReport out;
    if (artifact.is_object() && artifact.contains("intervals")) {
        WeightedPoset w = doc.setting == "01" ? canonical_01_weights(instance_poset(doc))
                                              : instance_weighted_poset(doc);
        IntervalRepresentation rep = representation_from_json(artifact);
        try {
            RepresentationReport r = verify_representation(w, rep);
            out.valid = r.ok();
            out.problems = std::move(r.violations);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MissingElement) throw;
            out.valid = false;
            out.problems.push_back(e.what());
        }
        return out;
    }
    if (artifact.is_object() && artifact.contains("kind"))
        return detail::verify_certificate_json(doc, artifact);
    throw Error(ErrorKind::ValidationError,
                "artifact is neither a representation nor a certificate");
}

}  // namespace ivrep
