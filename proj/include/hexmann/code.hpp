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
 * @file code.hpp
 * @brief The five code families, given by their parity-check matrices.
 *
 * Families and their guaranteed minimum restricted distance:
 *
 *   perfect1   one column per E-scaling orbit of F_p^r \ {0}; distance 3,
 *              perfect for one error.
 *   gauss2     rows (1, re, im, alpha^2) over J = A + iA; min(a+b, 6).
 *   gauss3     rows (1, re, im, alpha^2, alpha^3); min(a+b, 8).
 *   eisen_geo  rows (1, phi, psi, alpha^2) over J = A + rho A; min(a+b, 6).
 *   eisen_alg  rows (1, alpha, alpha^4, alpha^7) over cube-class
 *              representatives J = {0, 1, gamma, ..., gamma^((p-4)/3)};
 *              min(a+b, 6).
 *
 * The lattice bound a + b always applies; the family bound additionally needs
 * a + b large enough that value sums cannot wrap around the lattice
 * (hypothesis_met records whether that threshold is reached).  Column order
 * is ascending canonical representative for the geometric families and
 * exponent order for eisen_alg, so matrices reproduce deterministically.
 */

#pragma once

#include <optional>
#include <string>

#include "hexmann/lattice.hpp"
#include "hexmann/weight.hpp"

namespace hexmann {

enum class Family { perfect1, gauss2, gauss3, eisen_geo, eisen_alg };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::perfect1: return "perfect1";
        case Family::gauss2: return "gauss2";
        case Family::gauss3: return "gauss3";
        case Family::eisen_geo: return "eisen-geo";
        case Family::eisen_alg: return "eisen-alg";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    if (name == "perfect1") return Family::perfect1;
    if (name == "gauss2") return Family::gauss2;
    if (name == "gauss3") return Family::gauss3;
    if (name == "eisen-geo" || name == "eisen_geo") return Family::eisen_geo;
    if (name == "eisen-alg" || name == "eisen_alg") return Family::eisen_alg;
    throw Error("unknown code family: " + name);
}

using Matrix = std::vector<std::vector<Int>>;
using Syndrome = std::vector<Int>;

struct LinearCode {
    PrimeField field;
    Family family;
    WeightTable table;  // the restricted weight the code is measured in
    Matrix h;           // parity-check matrix, rows x n, canonical entries
    std::vector<Int> labels;                      // column labels (empty for perfect1 with r > 1)
    std::vector<std::pair<Int, Int>> label_parts; // (re, im) resp. (phi, psi) per column

    std::vector<Int> set_a;  // component-extraction set A (geometric families)
    std::optional<LatticeKind> lattice;
    Int a{};             // prime decomposition p = a^2 + b^2 or a^2 + ab + b^2
    Int b{};
    Int unit_residue{};  // residue of i resp. rho
    Int r_dim{1};        // perfect1 ambient dimension
    Int guaranteed_distance{};
    bool hypothesis_met{true};

    std::size_t n() const noexcept { return h.empty() ? 0 : h[0].size(); }
    std::size_t rows() const noexcept { return h.size(); }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position_of(Int label) const noexcept {
        const Int x = field.reduce(label);
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == x) return i;
        return npos;
    }
};

inline Syndrome syndrome(const LinearCode& code, std::span<const Int> v) {
    if (v.size() != code.n()) throw LengthMismatch("vector length does not match code length");
    Syndrome s(code.rows(), 0);
    for (std::size_t row = 0; row < code.rows(); ++row) {
        Int acc = 0;
        for (std::size_t col = 0; col < code.n(); ++col)
            acc = code.field.add(acc, code.field.mul(code.h[row][col], code.field.reduce(v[col])));
        s[row] = acc;
    }
    return s;
}

inline Syndrome pattern_syndrome(const LinearCode& code, const ErrorPattern& e) {
    if (e.length != code.n()) throw LengthMismatch("pattern length does not match code length");
    Syndrome s(code.rows(), 0);
    for (const auto& [pos, val] : e.entries)
        for (std::size_t row = 0; row < code.rows(); ++row)
            s[row] = code.field.add(s[row], code.field.mul(code.h[row][pos], val));
    return s;
}

inline bool is_zero(const Syndrome& s) {
    for (Int x : s)
        if (x != 0) return false;
    return true;
}

namespace detail {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(const PrimeField& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const Int scale = f.inv(m[row][col]);
        for (std::size_t c = col; c < cols; ++c) m[row][c] = f.mul(m[row][c], scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Int factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const LinearCode& code) {
    Matrix m = code.h;
    return detail::rref(code.field, m).size();
}

/// Basis of ker H as row vectors; dim = n - rank(H).
inline Matrix kernel_basis(const LinearCode& code) {
    Matrix m = code.h;
    const std::vector<std::size_t> pivots = detail::rref(code.field, m);
    const std::size_t n = code.n();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Int> v(n, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = code.field.neg(m[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline constexpr unsigned long long kMaxEnumerableSpace = 10'000'000ULL;

namespace detail {

inline unsigned long long checked_power(Int base, std::size_t exp, unsigned long long cap) {
    unsigned long long result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > cap / static_cast<unsigned long long>(base)) return cap + 1;
        result *= static_cast<unsigned long long>(base);
    }
    return result;
}

template <class Fn>
bool codeword_recurse(const PrimeField& f, const Matrix& basis, std::size_t depth, std::vector<Int>& current,
                      Fn&& fn) {
    if (depth == basis.size()) return fn(static_cast<const std::vector<Int>&>(current));
    if (!codeword_recurse(f, basis, depth + 1, current, fn)) return false;
    std::vector<Int> saved = current;
    for (Int coeff = 1; coeff < f.p(); ++coeff) {
        for (std::size_t j = 0; j < current.size(); ++j) current[j] = f.add(current[j], basis[depth][j]);
        if (!codeword_recurse(f, basis, depth + 1, current, fn)) return false;
    }
    current = std::move(saved);
    return true;
}

}  // namespace detail

/// Visits every codeword exactly once (the zero word first), in a fixed
/// deterministic order.  Callback returns false to stop; so does the function.
template <class Fn>
bool for_each_codeword(const LinearCode& code, Fn&& fn) {
    const Matrix basis = kernel_basis(code);
    if (detail::checked_power(code.field.p(), basis.size(), kMaxEnumerableSpace) > kMaxEnumerableSpace)
        throw SpaceTooLarge("codeword space p^k exceeds the enumeration guard");
    std::vector<Int> current(code.n(), 0);
    return detail::codeword_recurse(code.field, basis, 0, current, fn);
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// One-error perfect code: columns are representatives of the E-scaling
/// orbits of F_p^r \ {0}.  The representative of each orbit is its
/// lexicographically smallest member, components ordered by least nonnegative
/// residue, and columns appear in ascending lexicographic order.
inline LinearCode construct_perfect1(const PrimeField& f, Int m, Int r) {
    if (r < 1) throw Error("dimension r must be at least 1");
    UnitSubgroup subgroup = subgroup_of_order(f, m);  // validates m
    const unsigned long long space = detail::checked_power(f.p(), static_cast<std::size_t>(r), kMaxEnumerableSpace);
    if (space > kMaxEnumerableSpace) throw SpaceTooLarge("p^r exceeds the enumeration guard");

    const std::size_t total = static_cast<std::size_t>(space);
    std::vector<bool> seen(total, false);
    seen[0] = true;
    std::vector<std::vector<Int>> reps;

    const auto decode_index = [&](unsigned long long idx) {
        std::vector<Int> v(static_cast<std::size_t>(r));
        for (std::size_t i = static_cast<std::size_t>(r); i-- > 0;) {
            v[i] = f.from_index(static_cast<std::size_t>(idx % static_cast<unsigned long long>(f.p())));
            idx /= static_cast<unsigned long long>(f.p());
        }
        return v;
    };
    const auto encode = [&](const std::vector<Int>& v) {
        unsigned long long idx = 0;
        for (Int x : v) idx = idx * static_cast<unsigned long long>(f.p()) + f.index(x);
        return idx;
    };

    for (unsigned long long idx = 1; idx < total; ++idx) {
        if (seen[idx]) continue;
        const std::vector<Int> rep = decode_index(idx);
        for (Int eps : subgroup.elements) {
            std::vector<Int> scaled(rep.size());
            for (std::size_t i = 0; i < rep.size(); ++i) scaled[i] = f.mul(eps, rep[i]);
            seen[encode(scaled)] = true;
        }
        reps.push_back(rep);
    }

    const std::size_t n = reps.size();
    if (n != (total - 1) / static_cast<std::size_t>(m)) throw Error("orbit count defect");

    Matrix h(static_cast<std::size_t>(r), std::vector<Int>(n, 0));
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row) h[row][col] = reps[col][row];

    std::vector<Int> labels;
    if (r == 1)
        for (const auto& rep : reps) labels.push_back(rep[0]);

    LinearCode code{f,  Family::perfect1, WeightTable(std::move(subgroup)), std::move(h), std::move(labels),
                    {}, {},               std::nullopt,                     0,            0,
                    0,  r,                3,                                true};
    return code;
}

namespace detail {

struct GeoParams {
    Family family;
    LatticeKind kind;
    AdmissibleCondition condition;
    bool require_symmetric;
    Int family_bound;
    Int threshold;  // a + b needed for the family bound to apply
};

inline LinearCode construct_geometric(Int p, std::optional<std::vector<Int>> custom_set, const GeoParams& params) {
    QuotientContext ctx = QuotientContext::make(p, params.kind);
    const PrimeField& f = ctx.field();

    std::vector<Int> set = custom_set ? *custom_set : admissible_set(ctx, params.condition);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() < 2) throw InadmissibleSet("set A must contain at least two integers");
    if (params.require_symmetric) {
        for (Int x : set)
            if (!std::binary_search(set.begin(), set.end(), -x))
                throw AsymmetricSet("set A must satisfy A = -A");
    }
    // Injectivity of the residue map on the sum set is what makes component
    // extraction unambiguous and carries the distance argument.
    if (!admissible(ctx, set, params.condition))
        throw InadmissibleSet(params.condition == AdmissibleCondition::two_error
                                  ? "residues of A + unit*A collide"
                                  : "residues of A + A + unit*A collide");

    struct Column {
        Int label;
        std::pair<Int, Int> parts;
    };
    std::vector<Column> cols;
    for (Int x : set)
        for (Int y : set)
            cols.push_back({f.add(f.reduce(x), f.mul(f.reduce(y), ctx.unit_residue())), {x, y}});
    std::sort(cols.begin(), cols.end(), [](const Column& l, const Column& r) { return l.label < r.label; });
    for (std::size_t i = 0; i + 1 < cols.size(); ++i)
        if (cols[i].label == cols[i + 1].label) throw InadmissibleSet("A + unit*A has colliding residues");

    const std::size_t n = cols.size();
    const std::size_t extra_rows = (params.family == Family::gauss3) ? 2 : 1;
    Matrix h(3 + extra_rows, std::vector<Int>(n, 0));
    std::vector<Int> labels(n);
    std::vector<std::pair<Int, Int>> parts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int alpha = cols[i].label;
        labels[i] = alpha;
        parts[i] = cols[i].parts;
        h[0][i] = 1;
        h[1][i] = f.reduce(cols[i].parts.first);
        h[2][i] = f.reduce(cols[i].parts.second);
        h[3][i] = f.mul(alpha, alpha);
        if (params.family == Family::gauss3) h[4][i] = f.mul(f.mul(alpha, alpha), alpha);
    }

    const Int ab = ctx.a() + ctx.b();
    const Int m = (params.kind == LatticeKind::gaussian) ? 4 : 6;
    LinearCode code{f,
                    params.family,
                    WeightTable(subgroup_of_order(f, m)),
                    std::move(h),
                    std::move(labels),
                    std::move(parts),
                    std::move(set),
                    params.kind,
                    ctx.a(),
                    ctx.b(),
                    ctx.unit_residue(),
                    1,
                    std::min(ab, params.family_bound),
                    ab >= params.threshold};
    return code;
}

}  // namespace detail

/// Two-error Gaussian code with rows (1, re, im, alpha^2) over J = A + iA.
inline LinearCode construct_gauss2(Int p, std::optional<std::vector<Int>> set = std::nullopt) {
    return detail::construct_geometric(
        p, std::move(set),
        {Family::gauss2, LatticeKind::gaussian, AdmissibleCondition::two_error, false, 6, 7});
}

/// Three-error Gaussian code with rows (1, re, im, alpha^2, alpha^3); needs
/// A = -A and A + A + iA inside the fundamental region.
inline LinearCode construct_gauss3(Int p, std::optional<std::vector<Int>> set = std::nullopt) {
    return detail::construct_geometric(
        p, std::move(set),
        {Family::gauss3, LatticeKind::gaussian, AdmissibleCondition::three_error, true, 8, 9});
}

/// Two-error Eisenstein code with rows (1, phi, psi, alpha^2) over A + rho A.
inline LinearCode construct_eisen_geo(Int p, std::optional<std::vector<Int>> set = std::nullopt) {
    return detail::construct_geometric(
        p, std::move(set),
        {Family::eisen_geo, LatticeKind::eisenstein, AdmissibleCondition::two_error, true, 6, 6});
}

/// Two-error Eisenstein code with power rows (1, alpha, alpha^4, alpha^7).
/// Columns are representatives of the classes of F_p modulo multiplication by
/// a primitive cube root of unity, realized as 0 followed by the powers
/// gamma^0 .. gamma^((p-4)/3) of the primitive element.
inline LinearCode construct_eisen_alg(Int p) {
    QuotientContext ctx = QuotientContext::eisenstein(p);
    const PrimeField& f = ctx.field();
    const Int gamma = primitive_element(f);
    const std::size_t n = static_cast<std::size_t>((p + 2) / 3);

    std::vector<Int> labels;
    labels.reserve(n);
    labels.push_back(0);
    Int power = f.reduce(1);
    for (std::size_t i = 1; i < n; ++i) {
        labels.push_back(power);
        power = f.mul(power, gamma);
    }

    Matrix h(4, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        h[0][i] = 1;
        h[1][i] = labels[i];
        h[2][i] = f.pow(labels[i], 4);
        h[3][i] = f.pow(labels[i], 7);
    }

    const Int ab = ctx.a() + ctx.b();
    LinearCode code{f,
                    Family::eisen_alg,
                    WeightTable(subgroup_of_order(f, 6)),
                    std::move(h),
                    std::move(labels),
                    {},
                    {},
                    LatticeKind::eisenstein,
                    ctx.a(),
                    ctx.b(),
                    ctx.unit_residue(),
                    1,
                    std::min(ab, Int{6}),
                    ab >= 6};
    return code;
}

}  // namespace hexmann
