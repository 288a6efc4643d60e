// Copyright (c) ivrep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ivrep/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace ivrep {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void emit_json(const Json& j, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + output_path);
    file << j.dump(2) << "\n";
}

/// Single entry point for all three settings. Either a representation or a
/// rejection certificate comes back; an induced 2+2 short-circuits into a
/// TwoPlusTwo certificate since no weighting can fix it.
struct Outcome {
    bool representable = false;
    std::optional<Poset> poset;
    std::optional<IntervalRepresentation> representation;
    Json certificate;
    std::string kind;
};

inline Outcome solve_instance(const InstanceDocument& doc) {
    Outcome result;
    Poset p = instance_poset(doc);
    result.poset = p;
    try {
        if (doc.setting == "01") {
            auto r = represent_01(p);
            if (auto* rep = std::get_if<IntervalRepresentation>(&r)) {
                result.representable = true;
                result.representation = std::move(*rep);
            } else {
                const auto& cert = std::get<Certificate01>(r);
                result.kind = "H" + std::to_string(cert.family_index);
                result.certificate = certificate_to_json(p, cert);
            }
        } else if (doc.setting == "12") {
            WeightedPoset w = instance_weighted_poset(doc);
            auto r = represent_12(w);
            if (auto* rep = std::get_if<IntervalRepresentation>(&r)) {
                result.representable = true;
                result.representation = std::move(*rep);
            } else {
                const auto& cert = std::get<Certificate12>(r);
                result.kind = to_string(cert.kind);
                result.certificate = certificate_to_json(w, cert);
            }
        } else {
            WeightedPoset w = instance_weighted_poset(doc);
            auto r = represent(w);
            if (auto* rep = std::get_if<IntervalRepresentation>(&r)) {
                result.representable = true;
                result.representation = std::move(*rep);
            } else {
                result.kind = "NegativeCycle";
                result.certificate = negative_cycle_to_json(w, std::get<NegativeCycle>(r));
            }
        }
    } catch (const NotIntervalOrderError& e) {
        result.kind = "TwoPlusTwo";
        result.certificate = two_plus_two_to_json(doc.setting, p, e.witness());
    }
    return result;
}

inline int run_check(const std::string& instance_path, std::ostream& out) {
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    const Outcome r = solve_instance(doc);
    if (r.representable) {
        out << "representable\n";
        return 0;
    }
    out << "not representable (" << r.kind << ")\n";
    return 1;
}

inline int run_represent(const std::string& instance_path, const std::string& output_path,
                         bool normalize, bool epsilon_info, std::ostream& out) {
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    const Outcome r = solve_instance(doc);
    if (r.representable) {
        emit_json(representation_to_json(*r.poset, *r.representation, normalize, epsilon_info),
                  output_path, out);
        return 0;
    }
    emit_json(r.certificate, output_path, out);
    return 1;
}

inline int run_certify(const std::string& instance_path, const std::string& output_path,
                       std::ostream& out) {
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    const Outcome r = solve_instance(doc);
    if (r.representable) {
        emit_json(Json{{"representable", true}}, output_path, out);
        return 0;
    }
    emit_json(r.certificate, output_path, out);
    return 1;
}

inline int run_verify(const std::string& instance_path, const std::string& artifact_path,
                      std::ostream& out) {
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    Json artifact;
    try {
        artifact = Json::parse(read_file(artifact_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    const VerifyReport report = verify_document(doc, artifact);
    if (report.valid) {
        out << "valid\n";
        return 0;
    }
    out << "invalid\n";
    for (const auto& problem : report.problems) out << "  - " << problem << "\n";
    return 1;
}

inline int run_oracle(const std::string& instance_path, std::ostream& out) {
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    const WeightedPoset w = doc.setting == "01" ? canonical_01_weights(instance_poset(doc))
                                                : instance_weighted_poset(doc);
    const FmResult r = fm_feasible(build_system(w));
    Json j;
    j["feasible"] = r.feasible;
    if (r.feasible) {
        Json sol = Json::object();
        for (const auto& id : w.poset().elements()) sol[id] = to_fraction(r.solution.at(id));
        j["left_endpoints"] = std::move(sol);
    }
    out << j.dump(2) << "\n";
    return r.feasible ? 0 : 1;
}

inline int run_stress(int max_n, int samples, std::uint64_t seed, std::ostream& out) {
    long long posets = 0;
    long long weighted = 0;
    long long mismatches = 0;
    for (int n = 0; n <= max_n; ++n) {
        enumerate_posets(n, [&](const Poset& p) {
            ++posets;
            const bool has_22 = find_pattern(p, PatternKind::TwoPlusTwo).has_value();
            const bool scan01 = !has_22 && !forbidden_scan_01(p);
            bool pipe01 = false;
            try {
                pipe01 = std::holds_alternative<IntervalRepresentation>(represent_01(p));
            } catch (const NotIntervalOrderError&) {
            }
            const bool fm01 = fm_feasible(build_system(canonical_01_weights(p))).feasible;
            if (scan01 != pipe01 || pipe01 != fm01) ++mismatches;
            const int k = p.size();
            for (int mask = 0; mask < (1 << k); ++mask) {
                ++weighted;
                std::vector<int> f(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = 1 + ((mask >> i) & 1);
                const WeightedPoset w(p, f);
                const bool scan12 = !has_22 && !forbidden_scan_12(w);
                bool pipe12 = false;
                try {
                    pipe12 = std::holds_alternative<IntervalRepresentation>(represent_12(w));
                } catch (const NotIntervalOrderError&) {
                }
                const bool fm12 = fm_feasible(build_system(w)).feasible;
                if (scan12 != pipe12 || pipe12 != fm12) ++mismatches;
            }
        });
    }
    out << "exhaustive n <= " << max_n << ": " << posets << " posets, " << weighted
        << " weighted instances, " << mismatches << " mismatches\n";

    long long failures = 0;
    for (int i = 0; i < samples; ++i) {
        const bool one_two = (i % 2) == 1;
        const WeightedPoset w = random_instance(12, one_two ? Setting::OneTwo : Setting::ZeroOne,
                                                seed + static_cast<std::uint64_t>(i));
        const bool fm = fm_feasible(build_system(w)).feasible;
        bool representable = false;
        bool artifact_ok = true;
        if (one_two) {
            auto r = represent_12(w);
            if (auto* rep = std::get_if<IntervalRepresentation>(&r)) {
                representable = true;
                artifact_ok = verify_representation(w, *rep).ok();
            } else {
                artifact_ok = verify_certificate(w, std::get<Certificate12>(r));
            }
        } else {
            auto r = represent(w);
            if (auto* rep = std::get_if<IntervalRepresentation>(&r)) {
                representable = true;
                artifact_ok = verify_representation(w, *rep).ok();
            }
        }
        if (!artifact_ok || representable != fm) ++failures;
    }
    out << "random n = 12: " << samples << " instances, " << failures << " failures\n";
    if (mismatches == 0 && failures == 0) {
        out << "all checks passed\n";
        return 0;
    }
    return 1;
}

}  // namespace detail

/// Parses and runs one invocation. Exit codes: 0 success (or "yes" verdict),
/// 1 negative verdict (not representable, invalid artifact, infeasible,
/// stress failure), 2 usage or input errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interval representations of weighted orders"};
    app.name("ivrep");
    app.require_subcommand(1);

    std::string instance_path;
    std::string artifact_path;
    std::string output_path;
    bool normalize = false;
    bool epsilon_info = false;
    int max_n = 5;
    int samples = 100;
    std::uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check", "Decide representability, verdict only");
    check->add_option("instance", instance_path, "instance JSON file")->required();

    CLI::App* represent =
        app.add_subcommand("represent", "Compute an interval representation or a certificate");
    represent->add_option("instance", instance_path, "instance JSON file")->required();
    represent->add_option("-o,--output", output_path, "write the artifact to a file");
    represent->add_flag("--normalize", normalize, "shift the smallest left endpoint to 0");
    represent->add_flag("--epsilon-info", epsilon_info,
                        "include symbolic endpoint potentials (units, eps_count)");

    CLI::App* certify =
        app.add_subcommand("certify", "Emit a rejection certificate, or report representable");
    certify->add_option("instance", instance_path, "instance JSON file")->required();
    certify->add_option("-o,--output", output_path, "write the artifact to a file");

    CLI::App* verify = app.add_subcommand("verify", "Check an artifact against an instance");
    verify->add_option("instance", instance_path, "instance JSON file")->required();
    verify->add_option("artifact", artifact_path, "representation or certificate JSON file")
        ->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Decide feasibility by Fourier-Motzkin elimination (12 elements max)");
    oracle->add_option("instance", instance_path, "instance JSON file")->required();

    CLI::App* stress =
        app.add_subcommand("stress", "Cross-validate solver, pattern scan and elimination oracle");
    stress->add_option("--max-n", max_n, "exhaustive phase covers all posets up to this size")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    stress->add_option("--samples", samples, "random 12-element instances to solve and verify")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    stress->add_option("--seed", seed, "seed of the first random instance")
        ->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return detail::run_check(instance_path, out);
        if (represent->parsed())
            return detail::run_represent(instance_path, output_path, normalize, epsilon_info, out);
        if (certify->parsed()) return detail::run_certify(instance_path, output_path, out);
        if (verify->parsed()) return detail::run_verify(instance_path, artifact_path, out);
        if (oracle->parsed()) return detail::run_oracle(instance_path, out);
        if (stress->parsed()) return detail::run_stress(max_n, samples, seed, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace ivrep
