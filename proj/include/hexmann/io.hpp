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

/// @file io.hpp
/// @brief JSON and CSV serialization of codes, reports, and decode results.

#pragma once

#include <sstream>

#include <json.hpp>

#include "hexmann/simulate.hpp"
#include "hexmann/verify.hpp"

namespace hexmann {

using nlohmann::json;

inline std::string lattice_kind_name(const std::optional<LatticeKind>& kind) {
    if (!kind) return "none";
    return *kind == LatticeKind::gaussian ? "gaussian" : "eisenstein";
}

inline json code_to_json(const LinearCode& code) {
    json j;
    j["p"] = code.field.p();
    j["kind"] = lattice_kind_name(code.lattice);
    j["family"] = family_name(code.family);
    j["n"] = code.n();
    j["rank"] = rank(code);
    j["k"] = code.n() - rank(code);
    j["m"] = code.table.subgroup().m;
    j["r"] = code.r_dim;
    j["guaranteed_distance"] = code.guaranteed_distance;
    j["hypothesis_met"] = code.hypothesis_met;
    if (code.lattice) {
        j["a"] = code.a;
        j["b"] = code.b;
        j["pi"] = {code.a, code.b};
        j["unit_residue"] = code.unit_residue;
    }
    if (!code.set_a.empty()) j["set"] = code.set_a;
    if (!code.labels.empty())
        j["columns"] = code.labels;
    else
        j["columns"] = json::array();
    j["rows"] = code.h;
    return j;
}

/// Rebuilds a code from cmd-construct output.  The matrix is reconstructed
/// from the stored parameters and must agree entry-for-entry with the file.
inline LinearCode code_from_json(const json& j) {
    const Family family = family_from_name(j.at("family").get<std::string>());
    const Int p = j.at("p").get<Int>();
    std::optional<std::vector<Int>> set;
    if (j.contains("set")) set = j.at("set").get<std::vector<Int>>();

    LinearCode code = [&] {
        switch (family) {
            case Family::perfect1:
                return construct_perfect1(PrimeField(p), j.at("m").get<Int>(), j.at("r").get<Int>());
            case Family::gauss2: return construct_gauss2(p, set);
            case Family::gauss3: return construct_gauss3(p, set);
            case Family::eisen_geo: return construct_eisen_geo(p, set);
            case Family::eisen_alg: return construct_eisen_alg(p);
        }
        throw Error("unreachable");
    }();

    if (j.at("rows").get<Matrix>() != code.h) throw Error("matrix file disagrees with its stated parameters");
    return code;
}

/// Header row of column labels, then one row per parity check.
inline std::string code_to_csv(const LinearCode& code) {
    std::ostringstream out;
    if (!code.labels.empty()) {
        for (std::size_t i = 0; i < code.labels.size(); ++i) out << (i ? "," : "") << code.labels[i];
    } else {
        for (std::size_t i = 0; i < code.n(); ++i) out << (i ? "," : "") << "c" << i;
    }
    out << '\n';
    for (const auto& row : code.h) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    return out.str();
}

inline json pattern_to_json(const ErrorPattern& e) {
    json entries = json::array();
    for (const auto& [pos, val] : e.entries) entries.push_back({pos, val});
    return entries;
}

inline json decode_result_to_json(const DecodeResult& result) {
    json j;
    j["status"] = decode_status_name(result.status);
    j["method"] = result.method;
    j["pattern"] = pattern_to_json(result.pattern);
    j["codeword"] = result.codeword;
    return j;
}

inline json distance_report_to_json(const DistanceReport& report) {
    json j;
    j["code"] = report.code_id;
    j["method"] = distance_method_name(report.method);
    j["bound_checked"] = report.bound_checked;
    j["certified"] = report.certified;
    if (report.exact_distance) j["distance"] = *report.exact_distance;
    if (!report.witness.empty()) {
        j["witness"] = report.witness;
        j["witness_weight"] = report.witness_weight;
    }
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

inline json perfect_report_to_json(const PerfectReport& report) {
    json j;
    j["perfect"] = report.perfect;
    j["disjoint"] = report.disjoint;
    j["covering"] = report.covering;
    j["ball_size"] = report.ball_size;
    j["expected_ball"] = report.expected_ball;
    j["rank"] = report.rank;
    j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

/// No timing field on purpose: identical flags and seed must produce
/// byte-identical output.
inline json simulation_report_to_json(const SimulationReport& report) {
    json j;
    j["family"] = report.family;
    j["p"] = report.p;
    j["injected_weight"] = report.injected_t;
    j["decoder"] = report.decoder;
    j["trials"] = report.trials;
    j["success"] = report.success;
    j["miscorrection"] = report.miscorrection;
    j["detected"] = report.detected;
    j["seed"] = report.seed;
    j["actual_weight_counts"] = report.actual_weight_counts;
    return j;
}

}  // namespace hexmann
