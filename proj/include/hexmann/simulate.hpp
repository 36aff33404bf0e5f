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
 * @file simulate.hpp
 * @brief Restricted-error channel simulation.
 *
 * Each trial transmits a uniformly random codeword and injects t unit steps:
 * position uniform in [0, n), value uniform in E.  Steps may stack on one
 * position, so the effective pattern weight can be below t; the histogram
 * records what actually happened.  Every trial derives its generator from
 * (seed, trial index), so runs are reproducible and trivially partitionable.
 */

#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "hexmann/decode.hpp"

namespace hexmann {

enum class DecoderChoice { automatic, algebraic, bounded };

inline DecoderChoice decoder_choice_from_name(const std::string& name) {
    if (name == "auto" || name == "automatic") return DecoderChoice::automatic;
    if (name == "algebraic") return DecoderChoice::algebraic;
    if (name == "bounded") return DecoderChoice::bounded;
    throw Error("unknown decoder: " + name);
}

struct SimulationReport {
    std::string family;
    Int p{};
    int injected_t{};
    std::string decoder;
    std::uint64_t trials{};
    std::uint64_t success{};
    std::uint64_t miscorrection{};
    std::uint64_t detected{};
    std::uint64_t seed{};
    std::vector<std::uint64_t> actual_weight_counts;  // indexed by effective pattern weight
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline SimulationReport simulate(const LinearCode& code, int t, std::uint64_t trials, std::uint64_t seed,
                                 DecoderChoice choice = DecoderChoice::automatic) {
    if (t < 0) throw Error("injected error count must be nonnegative");
    const PrimeField& f = code.field;
    const Matrix basis = kernel_basis(code);
    const auto& units = code.table.subgroup().elements;
    const std::size_t n = code.n();

    const bool has_algebraic = code.family == Family::gauss2 || code.family == Family::eisen_alg;
    if (choice == DecoderChoice::algebraic && !has_algebraic)
        throw Error("no algebraic decoder for family " + family_name(code.family));
    const bool use_algebraic = choice == DecoderChoice::algebraic ||
                               (choice == DecoderChoice::automatic && has_algebraic);

    std::optional<BoundedDecoder> bounded;
    if (!use_algebraic) bounded.emplace(code, detail::capability_radius(code));

    SimulationReport report;
    report.family = family_name(code.family);
    report.p = f.p();
    report.injected_t = t;
    report.decoder = use_algebraic ? "algebraic" : "bounded";
    report.trials = trials;
    report.seed = seed;
    report.actual_weight_counts.assign(static_cast<std::size_t>(t) + 1, 0);

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(0x9E3779B97F4A7C15ULL * (trial + 1)));

        std::vector<Int> codeword(n, 0);
        for (const auto& basis_vec : basis) {
            const Int coeff = f.from_index(static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(f.p())));
            for (std::size_t j = 0; j < n; ++j) codeword[j] = f.add(codeword[j], f.mul(coeff, basis_vec[j]));
        }

        std::vector<Int> error(n, 0);
        for (int step = 0; step < t; ++step) {
            const std::size_t pos = static_cast<std::size_t>(rng() % n);
            const Int value = units[static_cast<std::size_t>(rng() % units.size())];
            error[pos] = f.add(error[pos], value);
        }
        const Int effective_weight = vector_weight(code.table, error);
        report.actual_weight_counts[static_cast<std::size_t>(effective_weight)] += 1;

        std::vector<Int> received(n);
        for (std::size_t j = 0; j < n; ++j) received[j] = f.add(codeword[j], error[j]);

        DecodeResult result;
        if (use_algebraic)
            result = (code.family == Family::gauss2) ? decode_gauss2(code, received)
                                                     : decode_eisen_alg2(code, received);
        else
            result = bounded->decode(received);

        if (result.status == DecodeStatus::detected_uncorrectable)
            report.detected += 1;
        else if (result.codeword == codeword)
            report.success += 1;
        else
            report.miscorrection += 1;
    }
    return report;
}

}  // namespace hexmann
