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
 * @file lattice.hpp
 * @brief Gaussian and Eisenstein integers, prime splitting, and the quotient
 *        F_p = Z[i]/(pi) resp. Z[rho]/(pi) with its induced weight.
 *
 * Three related notions of "fundamental region" appear here and they do not
 * coincide in general:
 *
 *  - the metric region: per residue class, a representative of minimal
 *    Manhattan/hexagonal weight (ties broken lexicographically).  This is
 *    what the quotient weight is computed from.
 *  - the geometric region: the open square [-1/2,1/2] pi + [-1/2,1/2] i pi,
 *    resp. the hexagon {W(z/pi) <= 1/2}.  The square is an exact tile (one
 *    lattice point per class; the boundary never carries lattice points for
 *    odd p).  The hexagon only packs: it holds at most one point per class
 *    but covers about three quarters of them.
 *  - what the constructions actually need: injectivity of the residue map on
 *    the sum set A + unit*A (resp. A + A + unit*A), so that component
 *    extraction is unambiguous.  Region containment implies it, but it is
 *    the injectivity itself that the distance arguments use, and it is what
 *    admissible_set tests.
 *
 * The metric and geometric regions genuinely differ: for pi = 5 + 2i the
 * point 2 + 2i lies in the square while its class has the lighter member -3.
 */

#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "hexmann/field.hpp"

namespace hexmann {

/// x + iy.
struct GaussInt {
    Int x{};
    Int y{};

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.x + b.x, a.y + b.y}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.x - b.x, a.y - b.y}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
    }
    GaussInt operator-() const { return {-x, -y}; }
    friend bool operator==(GaussInt a, GaussInt b) { return a.x == b.x && a.y == b.y; }
};

/// u + rho v, where rho is a primitive sixth root of unity, rho^2 = rho - 1.
struct EisenInt {
    Int u{};
    Int v{};

    friend EisenInt operator+(EisenInt a, EisenInt b) { return {a.u + b.u, a.v + b.v}; }
    friend EisenInt operator-(EisenInt a, EisenInt b) { return {a.u - b.u, a.v - b.v}; }
    friend EisenInt operator*(EisenInt a, EisenInt b) {
        // (u + rho v)(u' + rho v') with rho^2 folded via rho^2 = rho - 1
        return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u + a.v * b.v};
    }
    EisenInt operator-() const { return {-u, -v}; }
    friend bool operator==(EisenInt a, EisenInt b) { return a.u == b.u && a.v == b.v; }
};

/// Rotation by 60 degrees: multiplication by rho.
inline EisenInt rotate60(EisenInt z) { return {-z.v, z.u + z.v}; }

inline Int manhattan_weight(GaussInt z) { return std::llabs(z.x) + std::llabs(z.y); }

/// Shortest number of steps from 0 to z using +-1, +-rho, +-rho^2.
/// Closed form for the hexagonal step metric in (1, rho) coordinates.
inline Int hex_weight(EisenInt z) { return (std::llabs(z.u) + std::llabs(z.v) + std::llabs(z.u + z.v)) / 2; }

enum class LatticeKind { gaussian, eisenstein };

/// p = a^2 + b^2 with a odd, b even, both positive.  Exists and is unique for
/// every prime p = 1 (mod 4).
inline std::pair<Int, Int> two_squares(Int p) {
    if (p % 4 != 1) throw BadResidueClass("p must be 1 mod 4 to split in Z[i]");
    for (Int a = 1; a * a <= p; a += 2) {
        for (Int b = 2; a * a + b * b <= p; b += 2) {
            if (a * a + b * b == p) return {a, b};
        }
    }
    throw BadResidueClass("no two-squares decomposition found (p not prime?)");
}

/// p = a^2 + ab + b^2 with a >= b > 0.  Exists for every prime p = 1 (mod 6).
inline std::pair<Int, Int> eisen_decompose(Int p) {
    if (p % 6 != 1) throw BadResidueClass("p must be 1 mod 6 to split in Z[rho]");
    for (Int b = 1; b * b <= p; ++b) {
        for (Int a = b; a * a + a * b + b * b <= p; ++a) {
            if (a * a + a * b + b * b == p) return {a, b};
        }
    }
    throw BadResidueClass("no Eisenstein decomposition found (p not prime?)");
}

/// The quotient of a two-dimensional lattice ring by the prime ideal (pi),
/// identified with F_p.  Precomputes, per residue class, the representative
/// of minimal ambient weight.
class QuotientContext {
   public:
    static QuotientContext make(Int p, LatticeKind kind) { return QuotientContext(p, kind); }
    static QuotientContext gaussian(Int p) { return QuotientContext(p, LatticeKind::gaussian); }
    static QuotientContext eisenstein(Int p) { return QuotientContext(p, LatticeKind::eisenstein); }

    const PrimeField& field() const noexcept { return field_; }
    LatticeKind kind() const noexcept { return kind_; }
    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    /// Residue of i (gaussian) resp. rho (eisenstein) in F_p.
    Int unit_residue() const noexcept { return unit_residue_; }

    GaussInt pi_gauss() const {
        require(LatticeKind::gaussian);
        return {a_, b_};
    }
    EisenInt pi_eisen() const {
        require(LatticeKind::eisenstein);
        return {a_, b_};
    }

    Int residue(GaussInt z) const {
        require(LatticeKind::gaussian);
        return residue_coords(z.x, z.y);
    }
    Int residue(EisenInt z) const {
        require(LatticeKind::eisenstein);
        return residue_coords(z.u, z.v);
    }

    /// Coordinates of the minimal-weight representative of the class of e.
    /// Gaussian: (x, y) of x + iy; Eisenstein: (u, v) of u + rho v.
    std::pair<Int, Int> reduce_to_region(Int e) const { return reps_[field_.index(e)]; }

    /// Weight of the class of e, i.e. of its minimal representative.
    Int quotient_weight(Int e) const { return rep_weights_[field_.index(e)]; }

    /// Membership in the geometric region (see file comment).  Strict
    /// inequalities; for odd p no lattice point sits on the boundary.  The
    /// gaussian square holds exactly one representative per class, the
    /// eisenstein hexagon at most one.
    bool in_geometric_region(Int c1, Int c2) const noexcept {
        if (kind_ == LatticeKind::gaussian) {
            return 2 * std::llabs(a_ * c1 + b_ * c2) < field_.p() && 2 * std::llabs(a_ * c2 - b_ * c1) < field_.p();
        }
        const Int cu = c1 * (a_ + b_) + c2 * b_;
        const Int cv = c2 * a_ - c1 * b_;
        return std::llabs(cu) + std::llabs(cv) + std::llabs(cu + cv) < field_.p();
    }

    /// The p minimal-weight representatives, indexed by least nonnegative
    /// residue.
    const std::vector<std::pair<Int, Int>>& fundamental_region() const noexcept { return reps_; }

    /// Minimal ambient weight over the nonzero points of the ideal lattice,
    /// which equals a + b.  With verify = true the value is re-derived by
    /// enumerating a window of radius 2(a+b).
    Int min_lattice_weight(bool verify = false) const {
        if (verify) {
            const Int window = 2 * (a_ + b_);
            Int best = -1;
            for (Int c1 = -window; c1 <= window; ++c1) {
                for (Int c2 = -window; c2 <= window; ++c2) {
                    if (c1 == 0 && c2 == 0) continue;
                    if (residue_coords(c1, c2) != 0) continue;
                    const Int w = coord_weight(c1, c2);
                    if (best < 0 || w < best) best = w;
                }
            }
            if (best != a_ + b_) throw Error("lattice minimum differs from a + b");
        }
        return a_ + b_;
    }

    Int coord_weight(Int c1, Int c2) const noexcept {
        return kind_ == LatticeKind::gaussian ? manhattan_weight({c1, c2}) : hex_weight({c1, c2});
    }

   private:
    QuotientContext(Int p, LatticeKind kind) : field_(p), kind_(kind) {
        const auto [a, b] = (kind == LatticeKind::gaussian) ? two_squares(p) : eisen_decompose(p);
        a_ = a;
        b_ = b;
        // pi = a + unit*b maps to zero, so unit = -a/b in F_p.
        unit_residue_ = field_.div(field_.neg(field_.reduce(a_)), field_.reduce(b_));
        if (kind == LatticeKind::gaussian) {
            if (field_.mul(unit_residue_, unit_residue_) != field_.reduce(-1)) throw Error("i residue defect");
        } else {
            if (field_.mul(unit_residue_, unit_residue_) != field_.sub(unit_residue_, 1))
                throw Error("rho residue defect");
        }
        build_representatives();
    }

    void require(LatticeKind k) const {
        if (kind_ != k) throw KindMismatch("operation requires the other lattice kind");
    }

    Int residue_coords(Int c1, Int c2) const noexcept {
        return field_.add(field_.reduce(c1), field_.mul(field_.reduce(c2), unit_residue_));
    }

    void build_representatives() {
        const std::size_t p = static_cast<std::size_t>(field_.p());
        // Every class has a representative of weight <= (a+b)/2 + 1, so the
        // first window already suffices; the widening loop is a safety net.
        for (Int window = a_ + b_;; window *= 2) {
            reps_.assign(p, {0, 0});
            rep_weights_.assign(p, -1);
            std::size_t found = 0;
            for (Int c1 = -window; c1 <= window; ++c1) {
                for (Int c2 = -window; c2 <= window; ++c2) {
                    const std::size_t idx = field_.index(residue_coords(c1, c2));
                    const Int w = coord_weight(c1, c2);
                    const std::pair<Int, Int> cand{c1, c2};
                    if (rep_weights_[idx] < 0 || w < rep_weights_[idx] ||
                        (w == rep_weights_[idx] && cand < reps_[idx])) {
                        if (rep_weights_[idx] < 0) ++found;
                        rep_weights_[idx] = w;
                        reps_[idx] = cand;
                    }
                }
            }
            if (found == p) break;
        }
    }

    PrimeField field_;
    LatticeKind kind_;
    Int a_{};
    Int b_{};
    Int unit_residue_{};
    std::vector<std::pair<Int, Int>> reps_;
    std::vector<Int> rep_weights_;
};

enum class AdmissibleCondition { two_error, three_error };

/// True iff the residue map is injective on the sum set: A + unit*A for two
/// errors, A + A + unit*A for three.  This is the exact property the
/// component-extraction maps and the distance arguments rely on.
inline bool admissible(const QuotientContext& ctx, const std::vector<Int>& set, AdmissibleCondition cond) {
    const PrimeField& f = ctx.field();
    std::vector<Int> firsts;
    if (cond == AdmissibleCondition::two_error) {
        firsts = set;
    } else {
        for (Int x1 : set)
            for (Int x2 : set) firsts.push_back(x1 + x2);
        std::sort(firsts.begin(), firsts.end());
        firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
    }
    std::vector<Int> residues;
    residues.reserve(firsts.size() * set.size());
    for (Int c1 : firsts)
        for (Int c2 : set)
            residues.push_back(f.add(f.reduce(c1), f.mul(f.reduce(c2), ctx.unit_residue())));
    std::sort(residues.begin(), residues.end());
    return std::adjacent_find(residues.begin(), residues.end()) == residues.end();
}

/// Largest symmetric interval A = {-k, ..., k} that is admissible for the
/// given condition.  k = 0 always passes, so the result is never empty;
/// constructions reject the degenerate singleton themselves.  Termination is
/// by pigeonhole once the sum set outgrows p.
inline std::vector<Int> admissible_set(const QuotientContext& ctx, AdmissibleCondition cond) {
    Int k = 0;
    for (Int next = 1;; ++next) {
        std::vector<Int> candidate;
        for (Int v = -next; v <= next; ++v) candidate.push_back(v);
        if (!admissible(ctx, candidate, cond)) break;
        k = next;
    }
    std::vector<Int> set;
    for (Int v = -k; v <= k; ++v) set.push_back(v);
    return set;
}

/// The unique (first, second) in A x A with alpha = first + unit*second in
/// F_p.  Uniqueness holds whenever A is admissible; existence is what
/// OutsideDomain reports.
inline std::pair<Int, Int> component_maps(const QuotientContext& ctx, const std::vector<Int>& set_a, Int alpha) {
    const PrimeField& f = ctx.field();
    const Int target = f.reduce(alpha);
    for (Int first : set_a) {
        for (Int second : set_a) {
            if (f.add(f.reduce(first), f.mul(f.reduce(second), ctx.unit_residue())) == target)
                return {first, second};
        }
    }
    throw OutsideDomain("element has no representative in A + unit*A");
}

}  // namespace hexmann
