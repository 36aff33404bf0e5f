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

#pragma once

#include <random>
#include <vector>

#include "hexmann/hexmann.hpp"

namespace testutil {

inline std::vector<hexmann::Int> random_codeword(const hexmann::LinearCode& code, std::mt19937_64& rng) {
    const hexmann::Matrix basis = hexmann::kernel_basis(code);
    std::vector<hexmann::Int> cw(code.n(), 0);
    for (const auto& vec : basis) {
        const hexmann::Int coeff =
            code.field.from_index(static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(code.field.p())));
        for (std::size_t j = 0; j < cw.size(); ++j) cw[j] = code.field.add(cw[j], code.field.mul(coeff, vec[j]));
    }
    return cw;
}

inline std::vector<hexmann::Int> add_pattern(const hexmann::LinearCode& code, std::vector<hexmann::Int> v,
                                             const hexmann::ErrorPattern& e) {
    for (const auto& [pos, val] : e.entries) v[pos] = code.field.add(v[pos], val);
    return v;
}

}  // namespace testutil
