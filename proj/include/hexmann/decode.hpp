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
 * @file decode.hpp
 * @brief Syndrome decoders.
 *
 * decode_bounded is the reference decoder: it searches the ball of patterns
 * of restricted weight <= t for the unique one matching the received
 * syndrome (unique because d > 2t).  The algebraic decoders replace the
 * search with syndrome identities and fall back to the reference decoder for
 * the cases the identities do not reach; every algebraic candidate is
 * verified against the full syndrome before being accepted, so the two
 * decoders can only agree.
 *
 * decode_gauss2 splits on the first syndrome s, the sum of the (at most two)
 * error values from {+-1, +-i}:
 *   - s = +-2, +-2i: equal values; the re/im rows give alpha + beta, the
 *     square row gives alpha^2 + beta^2, hence alpha*beta and the pair.
 *   - s = 0: opposite values; the rows give alpha - beta and
 *     alpha^2 - beta^2, hence alpha + beta and the pair.
 *   - s = +-1 +- i: one real and one imaginary value; the re row carries
 *     re alpha and re beta in separate "digits" of the A + iA decomposition,
 *     likewise the im row, so both locations are read off componentwise.
 *   - s in E: a single error, located directly from the re/im rows.
 *
 * decode_eisen_alg2 folds a value sigma*zeta^e at position alpha into the
 * modified locator zeta^e*alpha (possible because the power rows use
 * exponents 1, 4, 7 and zeta = zeta^4 = zeta^7), recovers the locator pair
 * from the S1/S4/S7 product identity under a same-sign hypothesis, and
 * unfolds through the cube-class structure of the column set.
 */

#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>

#include "hexmann/code.hpp"

namespace hexmann {

enum class DecodeStatus { no_error, corrected, detected_uncorrectable };

inline std::string decode_status_name(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::no_error: return "no_error";
        case DecodeStatus::corrected: return "corrected";
        case DecodeStatus::detected_uncorrectable: return "detected_uncorrectable";
    }
    return "?";
}

struct DecodeResult {
    DecodeStatus status{DecodeStatus::detected_uncorrectable};
    ErrorPattern pattern;       // the correction applied (empty otherwise)
    std::vector<Int> codeword;  // codeword estimate (empty when uncorrectable)
    std::string method;         // "algebraic" or "bounded"
};

/// sigma(z) = 1 + a_1 z + ... + a_t z^t.
struct LocatorPolynomial {
    std::vector<Int> coeffs;  // a_1 .. a_t
};

/// Coefficients of the locator polynomial from power-sum syndromes S_1..S_t
/// via the Newton recursion -j a_j = S_j + a_1 S_{j-1} + ... + a_{j-1} S_1.
/// Division by j requires t < p.
inline LocatorPolynomial newton_coefficients(const PrimeField& f, std::span<const Int> syndromes, Int t) {
    if (t >= f.p()) throw CharacteristicTooSmall("Newton recursion needs t < p");
    if (static_cast<Int>(syndromes.size()) < t) throw LengthMismatch("need syndromes S_1..S_t");
    std::vector<Int> a(static_cast<std::size_t>(t), 0);
    for (Int j = 1; j <= t; ++j) {
        Int acc = f.reduce(syndromes[static_cast<std::size_t>(j - 1)]);
        for (Int i = 1; i < j; ++i)
            acc = f.add(acc, f.mul(a[static_cast<std::size_t>(i - 1)],
                                   f.reduce(syndromes[static_cast<std::size_t>(j - i - 1)])));
        a[static_cast<std::size_t>(j - 1)] = f.neg(f.div(acc, f.reduce(j)));
    }
    return {std::move(a)};
}

/// (S1^3 - S3) / (3 S1) = alpha*beta when S1 = alpha + beta != 0 and
/// S3 = alpha^3 + beta^3.
inline Int product_from_s13(const PrimeField& f, Int s1, Int s3) {
    if (f.p() == 3) throw CharacteristicTooSmall("identity needs characteristic other than 3");
    s1 = f.reduce(s1);
    if (s1 == 0) throw ZeroFirstSyndrome("S1 = 0 leaves the product undetermined");
    return f.div(f.sub(f.pow(s1, 3), s3), f.mul(f.reduce(3), s1));
}

/// 2 (S1^7 - S7) / (7 S1 (S1^4 + S4)) = alpha*beta when S1 != 0 and
/// S1^4 + S4 = 2 (alpha^2 + alpha beta + beta^2)^2 != 0.
inline Int product_from_s147(const PrimeField& f, Int s1, Int s4, Int s7) {
    if (f.p() == 7) throw CharacteristicTooSmall("identity needs characteristic other than 2 and 7");
    s1 = f.reduce(s1);
    if (s1 == 0) throw ZeroFirstSyndrome("S1 = 0 leaves the product undetermined");
    const Int core = f.add(f.pow(s1, 4), f.reduce(s4));
    if (core == 0) throw DegenerateDenominator("S1^4 + S4 = 0; the product equals S1^2 directly");
    const Int num = f.mul(f.reduce(2), f.sub(f.pow(s1, 7), s7));
    const Int den = f.mul(f.mul(f.reduce(7), s1), core);
    return f.div(num, den);
}

namespace detail {

inline int capability_radius(const LinearCode& code) {
    return static_cast<int>((code.guaranteed_distance - 1) / 2);
}

/// Builds a pattern from (label, value) contributions, folding entries that
/// hit the same column.  Empty when a label is not a column or everything
/// cancels.
inline std::optional<ErrorPattern> pattern_from(const LinearCode& code,
                                                std::initializer_list<std::pair<Int, Int>> contributions) {
    ErrorPattern e{code.n(), {}};
    for (const auto& [label, value] : contributions) {
        const std::size_t pos = code.position_of(label);
        if (pos == LinearCode::npos) return std::nullopt;
        const auto it = e.entries.find(pos);
        const Int next = code.field.add(it == e.entries.end() ? 0 : it->second, value);
        if (next == 0)
            e.entries.erase(pos);
        else
            e.entries[pos] = next;
    }
    if (e.entries.empty()) return std::nullopt;
    return e;
}

/// Accepts a candidate only if it has restricted weight <= t and reproduces
/// the full received syndrome.
inline std::optional<DecodeResult> accept(const LinearCode& code, const Syndrome& target,
                                          std::span<const Int> received, const std::optional<ErrorPattern>& e,
                                          int t) {
    if (!e) return std::nullopt;
    if (pattern_weight(code.table, *e) > t) return std::nullopt;
    if (pattern_syndrome(code, *e) != target) return std::nullopt;
    return DecodeResult{DecodeStatus::corrected, *e, e->subtract_from(code.field, received), "algebraic"};
}

}  // namespace detail

/// Reference decoder: the unique weight-<= t pattern matching the syndrome,
/// found by streaming the weight ball.  Requires 2t < guaranteed distance.
inline DecodeResult decode_bounded(const LinearCode& code, std::span<const Int> received, int t) {
    if (2 * t >= code.guaranteed_distance)
        throw Error("decoding radius " + std::to_string(t) + " exceeds half the guaranteed distance");
    const Syndrome target = syndrome(code, received);
    if (is_zero(target))
        return {DecodeStatus::no_error, {code.n(), {}}, std::vector<Int>(received.begin(), received.end()),
                "bounded"};
    std::optional<ErrorPattern> found;
    for_each_weight_ball(code.table, code.n(), t, [&](const ErrorPattern& e) {
        if (e.entries.empty()) return true;
        if (pattern_syndrome(code, e) == target) {
            found = e;
            return false;
        }
        return true;
    });
    if (!found) return {DecodeStatus::detected_uncorrectable, {code.n(), {}}, {}, "bounded"};
    return {DecodeStatus::corrected, *found, found->subtract_from(code.field, received), "bounded"};
}

/// Precomputed syndrome table for repeated bounded decoding of one code.
class BoundedDecoder {
   public:
    BoundedDecoder(const LinearCode& code, int t) : code_(&code), t_(t) {
        if (2 * t >= code.guaranteed_distance)
            throw Error("decoding radius " + std::to_string(t) + " exceeds half the guaranteed distance");
        if (weight_ball_size(code.table, code.n(), t) > kMaxEnumerableSpace)
            throw SpaceTooLarge("decoding ball exceeds the enumeration guard");
        for_each_weight_ball(code.table, code.n(), t, [&](const ErrorPattern& e) {
            if (e.entries.empty()) return true;
            auto [it, inserted] = table_.try_emplace(pattern_syndrome(code, e), e);
            if (!inserted) throw Error("syndrome collision inside the decoding ball");
            return true;
        });
    }

    int radius() const noexcept { return t_; }

    DecodeResult decode(std::span<const Int> received) const {
        const Syndrome target = syndrome(*code_, received);
        if (is_zero(target))
            return {DecodeStatus::no_error, {code_->n(), {}}, std::vector<Int>(received.begin(), received.end()),
                    "bounded"};
        const auto it = table_.find(target);
        if (it == table_.end()) return {DecodeStatus::detected_uncorrectable, {code_->n(), {}}, {}, "bounded"};
        return {DecodeStatus::corrected, it->second, it->second.subtract_from(code_->field, received), "bounded"};
    }

   private:
    const LinearCode* code_;
    int t_;
    std::map<Syndrome, ErrorPattern> table_;
};

/// Algebraic decoder for the gauss2 family (up to two restricted errors).
inline DecodeResult decode_gauss2(const LinearCode& code, std::span<const Int> received) {
    if (code.family != Family::gauss2) throw Error("decode_gauss2 requires a gauss2 code");
    const PrimeField& f = code.field;
    const Syndrome syn = syndrome(code, received);
    if (is_zero(syn))
        return {DecodeStatus::no_error, {code.n(), {}}, std::vector<Int>(received.begin(), received.end()),
                "algebraic"};

    const int t_cap = std::min(2, detail::capability_radius(code));
    const Int i0 = code.unit_residue;
    const auto& units = code.table.subgroup().elements;
    const Int s = syn[0];
    const Int d_combined = f.add(syn[1], f.mul(i0, syn[2]));  // sum of value*position over the errors

    const auto is_real = [&](Int eps) { return eps == 1 || eps == f.reduce(-1); };

    // Value multisets consistent with the first syndrome: a single unit, or
    // an unordered pair of units summing to s.
    std::vector<std::pair<Int, std::optional<Int>>> interpretations;
    for (Int eps : units)
        if (eps == s) interpretations.push_back({eps, std::nullopt});
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i; j < units.size(); ++j)
            if (f.add(units[i], units[j]) == s) interpretations.push_back({units[i], units[j]});

    for (const auto& [e1, e2_opt] : interpretations) {
        if (!e2_opt) {
            // single error e1 at alpha: rows 2 and 3 hold e1*re and e1*im
            const Int alpha = f.div(d_combined, e1);
            if (auto r = detail::accept(code, syn, received, detail::pattern_from(code, {{alpha, e1}}), t_cap)) return *r;
            continue;
        }
        const Int e2 = *e2_opt;
        if (e2 == e1) {
            // equal values: alpha + beta and alpha^2 + beta^2 are available
            const Int sum = f.div(d_combined, e1);
            const Int sq_sum = f.div(syn[3], e1);
            const Int prod = f.mul(f.sub(f.mul(sum, sum), sq_sum), f.inv2());
            std::vector<Int> roots;
            for (Int r : code.labels)
                if (f.add(f.sub(f.mul(r, r), f.mul(sum, r)), prod) == 0) roots.push_back(r);
            std::optional<ErrorPattern> cand;
            if (roots.size() == 2)
                cand = detail::pattern_from(code, {{roots[0], e1}, {roots[1], e1}});
            else if (roots.size() == 1 && f.mul(f.reduce(2), roots[0]) == sum)
                cand = detail::pattern_from(code, {{roots[0], e1}, {roots[0], e1}});
            if (auto r = detail::accept(code, syn, received, cand, t_cap)) return *r;
        } else if (e2 == f.neg(e1)) {
            // opposite values: the rows give alpha - beta, the square row
            // alpha^2 - beta^2, and the quotient is alpha + beta
            const Int diff = f.div(d_combined, e1);
            if (diff == 0) continue;
            const Int sum = f.div(f.div(syn[3], e1), diff);
            const Int alpha = f.mul(f.add(diff, sum), f.inv2());
            const Int beta = f.sub(alpha, diff);
            if (auto r = detail::accept(code, syn, received, detail::pattern_from(code, {{alpha, e1}, {beta, e2}}), t_cap))
                return *r;
        } else {
            // mixed real/imaginary values: componentwise read-off inside A
            Int real_val = e1, imag_val = e2;
            if (!is_real(real_val)) std::swap(real_val, imag_val);
            if (!is_real(real_val) || is_real(imag_val)) continue;
            for (Int r1 : code.set_a) {
                for (Int r2 : code.set_a) {
                    if (f.add(f.mul(real_val, f.reduce(r1)), f.mul(imag_val, f.reduce(r2))) != syn[1]) continue;
                    for (Int m1 : code.set_a) {
                        for (Int m2 : code.set_a) {
                            if (f.add(f.mul(real_val, f.reduce(m1)), f.mul(imag_val, f.reduce(m2))) != syn[2])
                                continue;
                            const Int alpha = f.add(f.reduce(r1), f.mul(i0, f.reduce(m1)));
                            const Int beta = f.add(f.reduce(r2), f.mul(i0, f.reduce(m2)));
                            if (auto r = detail::accept(code, syn, received,
                                                        detail::pattern_from(code, {{alpha, real_val}, {beta, imag_val}}),
                                                        t_cap))
                                return *r;
                        }
                    }
                }
            }
        }
    }
    return {DecodeStatus::detected_uncorrectable, {code.n(), {}}, {}, "algebraic"};
}

/// Algebraic decoder for the eisen_alg family (up to two restricted errors).
/// Same-sign value pairs are resolved through the S1/S4/S7 product identity;
/// everything else goes through the bounded reference decoder.
inline DecodeResult decode_eisen_alg2(const LinearCode& code, std::span<const Int> received) {
    if (code.family != Family::eisen_alg) throw Error("decode_eisen_alg2 requires an eisen-alg code");
    const PrimeField& f = code.field;
    const Syndrome syn = syndrome(code, received);
    if (is_zero(syn))
        return {DecodeStatus::no_error, {code.n(), {}}, std::vector<Int>(received.begin(), received.end()),
                "algebraic"};

    const int t_cap = std::min(2, detail::capability_radius(code));
    const Int zeta = f.mul(code.unit_residue, code.unit_residue);
    const Int zeta_pow[3] = {f.reduce(1), zeta, f.mul(zeta, zeta)};

    // Errors confined to the column labeled 0 are invisible in the power rows.
    if (syn[1] == 0 && syn[2] == 0 && syn[3] == 0) {
        if (auto r = detail::accept(code, syn, received, detail::pattern_from(code, {{0, syn[0]}}), t_cap)) return *r;
    }

    // L = zeta^e * alpha with alpha a column label; the cube classes of the
    // nonzero labels partition F_p^*, so e is unique.
    const auto unfold = [&](Int locator) -> std::optional<std::pair<Int, int>> {
        for (int e = 0; e < 3; ++e) {
            const Int alpha = f.div(locator, zeta_pow[e]);
            if (code.position_of(alpha) != LinearCode::npos) return std::make_pair(alpha, e);
        }
        return std::nullopt;
    };

    for (Int sigma : {Int{1}, Int{-1}}) {
        const Int s1 = f.mul(syn[1], sigma);
        const Int s4 = f.mul(syn[2], sigma);
        const Int s7 = f.mul(syn[3], sigma);
        if (s1 == 0) continue;

        // single folded error: S1 itself is the locator
        if (auto u = unfold(s1)) {
            const Int value = f.mul(sigma, zeta_pow[u->second]);
            if (auto r = detail::accept(code, syn, received, detail::pattern_from(code, {{u->first, value}}), t_cap))
                return *r;
        }

        // locator pair: sum S1, product from the identity (or S1^2 when the
        // denominator degenerates)
        Int prod;
        const Int core = f.add(f.pow(s1, 4), s4);
        if (core == 0) {
            prod = f.mul(s1, s1);
        } else {
            prod = f.div(f.mul(f.reduce(2), f.sub(f.pow(s1, 7), s7)), f.mul(f.mul(f.reduce(7), s1), core));
        }
        std::vector<Int> roots;
        for (Int x = -f.half(); x <= f.half(); ++x)
            if (f.add(f.sub(f.mul(x, x), f.mul(s1, x)), prod) == 0) roots.push_back(x);
        std::optional<std::pair<Int, Int>> locators;
        if (roots.size() == 2)
            locators = std::make_pair(roots[0], roots[1]);
        else if (roots.size() == 1 && f.mul(f.reduce(2), roots[0]) == s1)
            locators = std::make_pair(roots[0], roots[0]);
        if (!locators) continue;

        auto [l1, l2] = *locators;
        if (l2 != 0 && l1 == 0) std::swap(l1, l2);
        if (l1 == 0) continue;
        const auto u1 = unfold(l1);
        if (!u1) continue;
        const Int v1 = f.mul(sigma, zeta_pow[u1->second]);
        std::optional<ErrorPattern> cand;
        if (l2 == 0) {
            // the second error sits at the zero column; its value is whatever
            // the first syndrome row has left over
            cand = detail::pattern_from(code, {{u1->first, v1}, {0, f.sub(syn[0], v1)}});
        } else if (const auto u2 = unfold(l2)) {
            const Int v2 = f.mul(sigma, zeta_pow[u2->second]);
            cand = detail::pattern_from(code, {{u1->first, v1}, {u2->first, v2}});
        }
        if (auto r = detail::accept(code, syn, received, cand, t_cap)) return *r;
    }

    return decode_bounded(code, received, t_cap);
}

/// Family-appropriate decoder: the algebraic one where it exists, otherwise
/// bounded search at the guaranteed correction radius.
inline DecodeResult decode_auto(const LinearCode& code, std::span<const Int> received) {
    if (code.family == Family::gauss2) return decode_gauss2(code, received);
    if (code.family == Family::eisen_alg) return decode_eisen_alg2(code, received);
    return decode_bounded(code, received, detail::capability_radius(code));
}

}  // namespace hexmann
