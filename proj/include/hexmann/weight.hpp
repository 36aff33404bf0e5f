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
 * @file weight.hpp
 * @brief The restricted weight on F_p induced by a unit subgroup E, and
 *        enumeration of low-weight error patterns.
 *
 * w(x) is the least number of summands from E needed to reach x from 0;
 * E = F_p^* gives the Hamming weight, E = {+-1} the Lee weight, and the
 * order-4/6 subgroups the Mannheim resp. hexagonal quotient weights.  The
 * table is filled by breadth-first search on the Cayley graph of (F_p, +)
 * with generator set E, which is the definition made executable.
 */

#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <span>
#include <vector>

#include "hexmann/field.hpp"
#include "hexmann/lattice.hpp"

namespace hexmann {

/// All claims in this library concern distances at most 8, so half-distance
/// searches never need radius above 6.
inline constexpr int kMaxBallRadius = 6;

/// Sparse error vector: position -> nonzero value.
struct ErrorPattern {
    std::size_t length{};
    std::map<std::size_t, Int> entries;

    bool operator==(const ErrorPattern& other) const {
        return length == other.length && entries == other.entries;
    }

    std::vector<Int> to_vector() const {
        std::vector<Int> v(length, 0);
        for (const auto& [pos, val] : entries) v[pos] = val;
        return v;
    }

    /// received - pattern, the codeword estimate of a decoder.
    std::vector<Int> subtract_from(const PrimeField& f, std::span<const Int> received) const {
        std::vector<Int> v(received.begin(), received.end());
        for (const auto& [pos, val] : entries) v[pos] = f.sub(v[pos], val);
        return v;
    }
};

class WeightTable {
   public:
    explicit WeightTable(UnitSubgroup subgroup) : subgroup_(std::move(subgroup)) {
        const PrimeField& f = subgroup_.field;
        const std::size_t p = static_cast<std::size_t>(f.p());
        weights_.assign(p, -1);
        weights_[f.index(0)] = 0;
        std::deque<Int> queue{0};
        while (!queue.empty()) {
            const Int x = queue.front();
            queue.pop_front();
            const int d = weights_[f.index(x)];
            for (Int e : subgroup_.elements) {
                const Int y = f.add(x, e);
                if (weights_[f.index(y)] < 0) {
                    weights_[f.index(y)] = d + 1;
                    queue.push_back(y);
                }
            }
        }
        int max_w = 0;
        for (int w : weights_) max_w = std::max(max_w, w);
        shells_.assign(static_cast<std::size_t>(max_w) + 1, {});
        for (std::size_t i = 0; i < p; ++i) shells_[static_cast<std::size_t>(weights_[i])].push_back(f.from_index(i));
        for (auto& shell : shells_) std::sort(shell.begin(), shell.end());
    }

    const PrimeField& field() const noexcept { return subgroup_.field; }
    const UnitSubgroup& subgroup() const noexcept { return subgroup_; }
    Int p() const noexcept { return subgroup_.field.p(); }

    int weight(Int x) const noexcept { return weights_[subgroup_.field.index(x)]; }
    int max_weight() const noexcept { return static_cast<int>(shells_.size()) - 1; }

    /// Elements of exact weight w, sorted by canonical representative.
    const std::vector<Int>& shell(int w) const { return shells_.at(static_cast<std::size_t>(w)); }

   private:
    UnitSubgroup subgroup_;
    std::vector<int> weights_;
    std::vector<std::vector<Int>> shells_;
};

inline WeightTable build_weight_table(const UnitSubgroup& subgroup) { return WeightTable(subgroup); }

inline Int vector_weight(const WeightTable& t, std::span<const Int> v) {
    Int total = 0;
    for (Int x : v) total += t.weight(x);
    return total;
}

inline Int pattern_weight(const WeightTable& t, const ErrorPattern& e) {
    Int total = 0;
    for (const auto& [pos, val] : e.entries) {
        (void)pos;
        total += t.weight(val);
    }
    return total;
}

/// The 0/1/2/infinity comparison weight: 1 on E, 2 on (E+E) \ E, otherwise
/// unbounded (returned as -1).  It fails the triangle inequality in general
/// and is exposed only to compare against w, never as a metric.
inline int remark_weight(const WeightTable& t, Int x) {
    const PrimeField& f = t.field();
    if (f.reduce(x) == 0) return 0;
    if (t.subgroup().contains(x)) return 1;
    for (Int e1 : t.subgroup().elements)
        for (Int e2 : t.subgroup().elements)
            if (f.add(e1, e2) == f.reduce(x)) return 2;
    return -1;
}

namespace detail {

template <class Fn>
bool ball_recurse(const WeightTable& t, ErrorPattern& pattern, std::size_t from_pos, int budget, Fn&& fn) {
    if (budget <= 0) return true;
    for (std::size_t pos = from_pos; pos < pattern.length; ++pos) {
        for (int w = 1; w <= std::min(budget, t.max_weight()); ++w) {
            for (Int value : t.shell(w)) {
                pattern.entries[pos] = value;
                if (!fn(static_cast<const ErrorPattern&>(pattern))) return false;
                if (!ball_recurse(t, pattern, pos + 1, budget - w, fn)) return false;
                pattern.entries.erase(pos);
            }
        }
    }
    return true;
}

}  // namespace detail

/// Visits every length-n pattern of restricted weight <= radius exactly once,
/// in a fixed deterministic order (zero pattern first, then by leading support
/// position).  The callback returns false to stop early; the function returns
/// false iff it was stopped.
template <class Fn>
bool for_each_weight_ball(const WeightTable& t, std::size_t n, int radius, Fn&& fn) {
    if (radius < 0 || radius > kMaxBallRadius)
        throw RadiusTooLarge("ball radius " + std::to_string(radius) + " exceeds " +
                             std::to_string(kMaxBallRadius));
    ErrorPattern pattern{n, {}};
    if (!fn(static_cast<const ErrorPattern&>(pattern))) return false;
    return detail::ball_recurse(t, pattern, 0, radius, fn);
}

/// Number of patterns for_each_weight_ball(t, n, radius) would visit,
/// computed from the shell counts without enumerating.  Saturates at 10^18
/// so guard comparisons stay meaningful for any modulus.
inline unsigned long long weight_ball_size(const WeightTable& t, std::size_t n, int radius) {
    if (radius < 0) return 0;
    constexpr unsigned long long ceiling = 1'000'000'000'000'000'000ULL;
    const auto saturating_add = [=](unsigned long long a, unsigned long long b) {
        return (b >= ceiling || a > ceiling - b) ? ceiling : a + b;
    };
    std::vector<unsigned long long> ways(static_cast<std::size_t>(radius) + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<unsigned long long> next = ways;
        for (int w = 1; w <= std::min(radius, t.max_weight()); ++w) {
            const unsigned long long count = t.shell(w).size();
            for (int total = w; total <= radius; ++total) {
                const unsigned long long term =
                    (ways[total - w] > ceiling / count) ? ceiling : ways[total - w] * count;
                next[total] = saturating_add(next[total], term);
            }
        }
        ways = std::move(next);
    }
    unsigned long long sum = 0;
    for (unsigned long long c : ways) sum = saturating_add(sum, c);
    return sum;
}

/// True iff the restricted weight for this subgroup equals the lattice
/// quotient weight pointwise, which is the defining property of the order-4
/// (Gaussian) and order-6 (Eisenstein) subgroups.  Other even orders compare
/// pointwise too (the Lee weight comes out false already at w of the unit
/// residue); mixing a subgroup with the wrong lattice kind or prime is
/// rejected.
inline bool restricted_equals_quotient(const WeightTable& t, const QuotientContext& ctx) {
    const Int m = t.subgroup().m;
    if ((m == 4 && ctx.kind() != LatticeKind::gaussian) || (m == 6 && ctx.kind() != LatticeKind::eisenstein))
        throw KindMismatch("subgroup order does not match the lattice kind");
    if (ctx.field().p() != t.p()) throw KindMismatch("subgroup and context use different primes");
    for (Int x = -t.field().half(); x <= t.field().half(); ++x) {
        if (t.weight(x) != ctx.quotient_weight(x)) return false;
    }
    return true;
}

}  // namespace hexmann
