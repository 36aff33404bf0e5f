/*
   Copyright 2026 The hexmann authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cli.hpp
 * @brief Command-line front end: construct, verify, decode, simulate.
 *
 * Exit code contract (scriptable): 0 success or certification, 1 semantic
 * failure (counterexample found, decoding gave up), 2 usage errors and
 * infeasible searches.  Machine-readable JSON goes to stdout; human-oriented
 * extras go to stderr.
 */

#pragma once

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hexmann/io.hpp"

namespace hexmann::cli {

/// Accepts "-2..2" ranges and "-1,0,1" lists.
inline std::vector<Int> parse_set(const std::string& text) {
    std::vector<Int> values;
    const auto parse_int = [](const std::string& token) {
        std::size_t used = 0;
        const Int v = std::stoll(token, &used);
        if (used != token.size()) throw Error("bad integer in set: '" + token + "'");
        return v;
    };
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const Int lo = parse_int(text.substr(0, dots));
        const Int hi = parse_int(text.substr(dots + 2));
        if (lo > hi) throw Error("empty range in set: '" + text + "'");
        for (Int v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (!token.empty()) values.push_back(parse_int(token));
    }
    if (values.empty()) throw Error("empty set: '" + text + "'");
    return values;
}

inline std::vector<Int> parse_vector(const std::string& text) {
    std::vector<Int> values;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(0, token.find_first_not_of(" \t\r\n"));
        token.erase(token.find_last_not_of(" \t\r\n") + 1);
        if (token.empty()) throw Error("empty component in vector input");
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw Error("bad integer in vector input: '" + token + "'");
    }
    return values;
}

namespace detail {

struct CodeFlags {
    std::string family;
    Int p{};
    Int m{4};
    Int r{1};
    std::string set;
    std::string matrix_file;
};

inline void add_code_flags(CLI::App* cmd, CodeFlags& flags, bool allow_matrix_file) {
    cmd->add_option("--family", flags.family, "code family: perfect1|gauss2|gauss3|eisen-geo|eisen-alg");
    cmd->add_option("--p", flags.p, "prime modulus");
    cmd->add_option("--m", flags.m, "unit subgroup order (perfect1)");
    cmd->add_option("--r", flags.r, "parity rows (perfect1)");
    cmd->add_option("--set", flags.set, "component set A, e.g. \"-2..2\" or \"-1,0,1\"");
    if (allow_matrix_file)
        cmd->add_option("--matrix-file", flags.matrix_file, "JSON file produced by the construct command");
}

inline LinearCode build_code(const CodeFlags& flags) {
    if (!flags.matrix_file.empty()) {
        std::ifstream in(flags.matrix_file);
        if (!in) throw Error("cannot open matrix file: " + flags.matrix_file);
        json j;
        in >> j;
        return code_from_json(j);
    }
    if (flags.family.empty() || flags.p == 0) throw Error("--family and --p are required");
    std::optional<std::vector<Int>> set;
    if (!flags.set.empty()) set = parse_set(flags.set);
    switch (family_from_name(flags.family)) {
        case Family::perfect1: return construct_perfect1(PrimeField(flags.p), flags.m, flags.r);
        case Family::gauss2: return construct_gauss2(flags.p, set);
        case Family::gauss3: return construct_gauss3(flags.p, set);
        case Family::eisen_geo: return construct_eisen_geo(flags.p, set);
        case Family::eisen_alg: return construct_eisen_alg(flags.p);
    }
    throw Error("unreachable");
}

}  // namespace detail

/// Runs the CLI on already-split arguments (no program name).  Testable
/// in-process; the binary is a thin wrapper.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"codes over Gaussian and Eisenstein integers with restricted error values"};
    app.require_subcommand(1);

    detail::CodeFlags construct_flags;
    std::string construct_format = "json";
    CLI::App* construct = app.add_subcommand("construct", "build a code and print its parity-check matrix");
    detail::add_code_flags(construct, construct_flags, false);
    construct->add_option("--format", construct_format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    detail::CodeFlags verify_flags;
    std::string verify_method = "auto";
    Int verify_bound = 0;
    int verify_jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "certify the minimum-distance claim of a code");
    detail::add_code_flags(verify, verify_flags, true);
    verify->add_option("--method", verify_method, "full|bounded|auto")
        ->check(CLI::IsMember({"full", "bounded", "auto"}));
    verify->add_option("--bound", verify_bound, "distance bound to certify (default: the family guarantee)");
    verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);

    detail::CodeFlags decode_flags;
    std::string decode_decoder = "auto";
    std::string decode_input;
    int decode_t = -1;
    CLI::App* decode = app.add_subcommand("decode", "decode a received vector (stdin: c0,c1,...)");
    detail::add_code_flags(decode, decode_flags, true);
    decode->add_option("--decoder", decode_decoder, "algebraic|bounded|auto")
        ->check(CLI::IsMember({"algebraic", "bounded", "auto"}));
    decode->add_option("--t", decode_t, "bounded decoding radius (default: guaranteed capability)");
    decode->add_option("--input", decode_input, "received vector (overrides stdin)");

    detail::CodeFlags simulate_flags;
    int simulate_t = 1;
    std::uint64_t simulate_trials = 1000;
    std::uint64_t simulate_seed = 0;
    std::string simulate_decoder = "auto";
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "restricted-error channel simulation");
    detail::add_code_flags(simulate_cmd, simulate_flags, true);
    simulate_cmd->add_option("--t", simulate_t, "unit error steps per trial");
    simulate_cmd->add_option("--trials", simulate_trials, "number of trials");
    simulate_cmd->add_option("--seed", simulate_seed, "RNG seed");
    simulate_cmd->add_option("--decoder", simulate_decoder, "algebraic|bounded|auto")
        ->check(CLI::IsMember({"algebraic", "bounded", "auto"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // e.g. --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) {
            const LinearCode code = detail::build_code(construct_flags);
            if (construct_format == "csv")
                out << code_to_csv(code);
            else
                out << code_to_json(code).dump(2) << "\n";
            if (!code.hypothesis_met)
                err << "warning: a + b = " << code.a + code.b
                    << " is below the family threshold; the distance guarantee degrades to a + b\n";
            return 0;
        }

        if (verify->parsed()) {
            const LinearCode code = detail::build_code(verify_flags);
            const Int bound = verify_bound > 0 ? verify_bound : code.guaranteed_distance;
            std::string method = verify_method;
            if (method == "auto") {
                const Matrix basis = kernel_basis(code);
                const unsigned long long full_cost =
                    hexmann::detail::checked_power(code.field.p(), basis.size(), kMaxEnumerableSpace);
                const bool full_ok = full_cost <= kMaxEnumerableSpace;
                const Int bounded_bound = std::min(bound, kMaxCertifiableBound);
                const unsigned long long bounded_cost =
                    weight_ball_size(code.table, code.n(), static_cast<int>(bounded_bound) - 1);
                const bool bounded_ok = bounded_bound == bound;
                if (full_ok && (!bounded_ok || full_cost <= bounded_cost))
                    method = "full";
                else if (bounded_ok)
                    method = "bounded";
                else
                    throw SpaceTooLarge("neither verification strategy is feasible for this code");
            }
            const DistanceReport report = (method == "full")
                                              ? min_distance_full(code, verify_jobs, bound)
                                              : min_distance_bounded(code, bound, verify_jobs);
            out << distance_report_to_json(report).dump(2) << "\n";
            return report.certified ? 0 : 1;
        }

        if (decode->parsed()) {
            const LinearCode code = detail::build_code(decode_flags);
            std::string text = decode_input;
            if (text.empty()) std::getline(in, text);
            std::vector<Int> received;
            try {
                received = parse_vector(text);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
            if (received.size() != code.n()) {
                err << "error: expected " << code.n() << " components, got " << received.size() << "\n";
                return 2;
            }
            DecodeResult result;
            const bool has_algebraic = code.family == Family::gauss2 || code.family == Family::eisen_alg;
            if (decode_decoder == "algebraic" || (decode_decoder == "auto" && has_algebraic)) {
                if (!has_algebraic) throw Error("no algebraic decoder for family " + family_name(code.family));
                result = (code.family == Family::gauss2) ? decode_gauss2(code, received)
                                                         : decode_eisen_alg2(code, received);
            } else {
                const int t = decode_t >= 0 ? decode_t : hexmann::detail::capability_radius(code);
                result = decode_bounded(code, received, t);
            }
            out << decode_result_to_json(result).dump(2) << "\n";
            return result.status == DecodeStatus::detected_uncorrectable ? 1 : 0;
        }

        if (simulate_cmd->parsed()) {
            const LinearCode code = detail::build_code(simulate_flags);
            const SimulationReport report = simulate(code, simulate_t, simulate_trials, simulate_seed,
                                                     decoder_choice_from_name(simulate_decoder));
            out << simulation_report_to_json(report).dump(2) << "\n";
            err << "family " << report.family << "  p " << report.p << "  decoder " << report.decoder << "\n"
                << "trials        " << report.trials << "\n"
                << "success       " << report.success << "\n"
                << "miscorrection " << report.miscorrection << "\n"
                << "detected      " << report.detected << "\n";
            return 0;
        }
    } catch (const SpaceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RadiusTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hexmann::cli
