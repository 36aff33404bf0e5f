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
 * @file field.hpp
 * @brief Arithmetic in F_p with symmetric canonical representatives, plus the
 *        unit-subgroup machinery used by the code constructions.
 *
 * Elements are plain int64 values kept in the interval [-(p-1)/2, (p-1)/2].
 * The symmetric convention makes parity-check matrices print exactly the way
 * they appear in the literature on two-dimensional signal constellations.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hexmann/errors.hpp"

namespace hexmann {

using Int = std::int64_t;

/// Context for arithmetic modulo an odd prime p < 2^31.  All operations take
/// and return the symmetric canonical representative; p < 2^31 keeps every
/// intermediate product inside int64.
class PrimeField {
   public:
    explicit PrimeField(Int p) : p_(p) {
        if (p == 2) throw EvenModulus("modulus 2 is not odd");
        if (p < 2 || !is_prime(p)) throw CompositeModulus("modulus " + std::to_string(p) + " is not prime");
        if (p >= (Int{1} << 31)) throw Error("modulus must be below 2^31");
        inv2_ = (p_ + 1) / 2;
        if (inv2_ > half()) inv2_ -= p_;
        inv3_ = (p_ != 3) ? inv(reduce(3)) : 0;
    }

    Int p() const noexcept { return p_; }
    Int half() const noexcept { return (p_ - 1) / 2; }

    /// Symmetric canonical representative of z.
    Int reduce(Int z) const noexcept {
        Int r = z % p_;
        if (r > half()) r -= p_;
        if (r < -half()) r += p_;
        return r;
    }

    /// Least nonnegative residue, usable as a table index in [0, p).
    std::size_t index(Int x) const noexcept {
        Int r = x % p_;
        if (r < 0) r += p_;
        return static_cast<std::size_t>(r);
    }

    /// Inverse of index(): canonical representative of residue i.
    Int from_index(std::size_t i) const noexcept { return reduce(static_cast<Int>(i)); }

    Int add(Int a, Int b) const noexcept { return reduce(a + b); }
    Int sub(Int a, Int b) const noexcept { return reduce(a - b); }
    Int neg(Int a) const noexcept { return reduce(-a); }
    Int mul(Int a, Int b) const noexcept { return reduce(a * b); }

    Int pow(Int base, Int exp) const noexcept {
        Int result = reduce(1);
        Int b = reduce(base);
        while (exp > 0) {
            if (exp & 1) result = mul(result, b);
            b = mul(b, b);
            exp >>= 1;
        }
        return result;
    }

    Int inv(Int a) const {
        if (reduce(a) == 0) throw Error("inverse of zero");
        return pow(a, p_ - 2);
    }

    Int div(Int a, Int b) const { return mul(a, inv(b)); }

    Int inv2() const noexcept { return inv2_; }
    Int inv3() const noexcept { return inv3_; }

    bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

    static bool is_prime(Int n) noexcept {
        if (n < 2) return false;
        for (Int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    Int p_;
    Int inv2_;
    Int inv3_;
};

/// Smallest positive generator of F_p^*.  Deterministic, so constructions that
/// order columns by powers of the primitive element are reproducible.
inline Int primitive_element(const PrimeField& f) {
    const Int p = f.p();
    std::vector<Int> prime_factors;
    Int m = p - 1;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (Int g = 2; g < p; ++g) {
        bool generates = true;
        for (Int q : prime_factors) {
            if (f.pow(g, (p - 1) / q) == f.reduce(1)) {
                generates = false;
                break;
            }
        }
        if (generates) return f.reduce(g);
    }
    throw Error("no primitive element found");  // unreachable for prime p > 2
}

/// The subgroup E of F_p^* of even order m.  Since m is even, E contains -1
/// and is closed under negation; error values are drawn from E.
struct UnitSubgroup {
    PrimeField field;
    Int m{};
    Int generator{};
    std::vector<Int> elements;  // sorted by canonical representative

    bool contains(Int x) const noexcept {
        return std::binary_search(elements.begin(), elements.end(), field.reduce(x));
    }
};

inline UnitSubgroup subgroup_of_order(const PrimeField& f, Int m) {
    if (m <= 0 || m % 2 != 0) throw BadOrder("subgroup order must be positive and even");
    if ((f.p() - 1) % m != 0) throw BadOrder("subgroup order must divide p - 1");
    const Int g = f.pow(primitive_element(f), (f.p() - 1) / m);
    std::vector<Int> elements;
    elements.reserve(static_cast<std::size_t>(m));
    Int x = f.reduce(1);
    for (Int k = 0; k < m; ++k) {
        elements.push_back(x);
        x = f.mul(x, g);
    }
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw Error("generator order defect");  // cannot happen: g has order exactly m
    return UnitSubgroup{f, m, g, std::move(elements)};
}

/// Roots, inside a restricted domain, of the locator polynomial
/// sigma(z) = 1 + a_1 z + ... + a_t z^t given by its coefficient list.
/// When sigma = prod_j (1 - alpha_j z) with every alpha_j in the domain, the
/// returned list is exactly the alpha_j (repeated according to multiplicity).
/// Implemented on the reversed polynomial x^t + a_1 x^(t-1) + ... + a_t, whose
/// nonzero roots are the alpha_j.
inline std::vector<Int> poly_roots(const PrimeField& f, const std::vector<Int>& coeffs,
                                   const std::vector<Int>& domain) {
    const std::size_t t = coeffs.size();
    std::vector<Int> reversed(t + 1);  // reversed[i] = coefficient of x^(t-i)
    reversed[0] = f.reduce(1);
    for (std::size_t j = 0; j < t; ++j) reversed[j + 1] = f.reduce(coeffs[j]);

    std::vector<Int> roots;
    std::vector<Int> seen;
    for (Int alpha : domain) {
        const Int a = f.reduce(alpha);
        if (a == 0) continue;  // zero never divides the constant-term-1 locator
        if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
        seen.push_back(a);
        // Synthetic division by (x - a), repeated to count multiplicity.
        std::vector<Int> poly = reversed;
        while (poly.size() > 1) {
            std::vector<Int> quotient(poly.size() - 1);
            Int acc = 0;
            for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
                acc = f.add(f.mul(acc, a), poly[i]);
                quotient[i] = acc;
            }
            const Int remainder = f.add(f.mul(acc, a), poly.back());
            if (remainder != 0) break;
            roots.push_back(a);
            poly = std::move(quotient);
        }
    }
    return roots;
}

}  // namespace hexmann
