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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hexmann/field.hpp"

using namespace hexmann;

namespace {

// independent order check by exhaustive power enumeration
Int element_order(const PrimeField& f, Int g) {
    Int x = f.reduce(1);
    for (Int k = 1; k <= f.p() - 1; ++k) {
        x = f.mul(x, g);
        if (x == f.reduce(1)) return k;
    }
    return -1;
}

}  // namespace

TEST_CASE("field construction validates the modulus") {
    CHECK(PrimeField(13).p() == 13);
    CHECK(PrimeField(37).p() == 37);
    CHECK_THROWS_AS(PrimeField(12), CompositeModulus);
    CHECK_THROWS_AS(PrimeField(2), EvenModulus);
    CHECK_THROWS_AS(PrimeField(1), CompositeModulus);
}

TEST_CASE("symmetric representatives round trip") {
    const PrimeField f(13);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Int z = static_cast<Int>(rng() % 100000) - 50000;
        const Int r = f.reduce(z);
        CHECK(r >= -f.half());
        CHECK(r <= f.half());
        CHECK(f.reduce(r) == r);
        CHECK((z - r) % f.p() == 0);
        CHECK(f.from_index(f.index(z)) == r);
    }
}

TEST_CASE("every nonzero element has a multiplicative inverse") {
    for (Int p : {5, 13, 29, 37}) {
        const PrimeField f(p);
        for (Int x = -f.half(); x <= f.half(); ++x) {
            if (x == 0) continue;
            CHECK(f.mul(x, f.inv(x)) == 1);
        }
        CHECK_THROWS_AS(f.inv(0), Error);
    }
    const PrimeField f(13);
    CHECK(f.mul(2, f.inv2()) == 1);
    CHECK(f.mul(3, f.inv3()) == 1);
}

TEST_CASE("primitive element is the smallest generator") {
    const std::pair<Int, Int> expected[] = {{37, 2}, {13, 2}, {7, 3}, {19, 2}, {29, 2}};
    for (const auto& [p, g] : expected) {
        const PrimeField f(p);
        const Int found = primitive_element(f);
        CHECK(found == g);
        CHECK(element_order(f, found) == p - 1);
        for (Int smaller = 2; smaller < found; ++smaller) CHECK(element_order(f, smaller) != p - 1);
    }
}

TEST_CASE("subgroup of given order") {
    const PrimeField f13(13);

    SECTION("order 4 in F_13") {
        const UnitSubgroup e = subgroup_of_order(f13, 4);
        CHECK(e.elements == std::vector<Int>{-5, -1, 1, 5});
        CHECK(element_order(f13, e.generator) == 4);
    }
    SECTION("order 2 is {+-1}") {
        CHECK(subgroup_of_order(f13, 2).elements == std::vector<Int>{-1, 1});
    }
    SECTION("order 6 in F_19 matches the sixth roots of unity") {
        const PrimeField f19(19);
        const UnitSubgroup e = subgroup_of_order(f19, 6);
        CHECK(e.elements == std::vector<Int>{-8, -7, -1, 1, 7, 8});
        // +-{1, rho, rho^2} for rho = 8
        const Int rho = 8;
        CHECK(e.contains(rho));
        CHECK(e.contains(f19.mul(rho, rho)));
        CHECK(e.contains(f19.neg(f19.mul(rho, rho))));
    }
    SECTION("group axioms at several orders") {
        for (Int m : {2, 4, 6, 12}) {
            const UnitSubgroup e = subgroup_of_order(f13, m);
            CHECK(static_cast<Int>(e.elements.size()) == m);
            CHECK(e.contains(1));
            CHECK(e.contains(-1));
            for (Int x : e.elements) {
                CHECK(e.contains(f13.neg(x)));
                for (Int y : e.elements) CHECK(e.contains(f13.mul(x, y)));
            }
        }
    }
    SECTION("rejects bad orders") {
        CHECK_THROWS_AS(subgroup_of_order(f13, 3), BadOrder);   // odd
        CHECK_THROWS_AS(subgroup_of_order(f13, 8), BadOrder);   // does not divide 12
        CHECK_THROWS_AS(subgroup_of_order(f13, 0), BadOrder);
    }
}

TEST_CASE("locator polynomial roots inside a domain") {
    const PrimeField f(13);
    std::vector<Int> domain;
    for (Int x = -6; x <= 6; ++x) domain.push_back(x);

    SECTION("sigma = (1 - z)(1 - 2z) has locators 1 and 2") {
        // expanded: 1 - 3z + 2z^2
        const auto roots = poly_roots(f, {-3, 2}, domain);
        CHECK(roots == std::vector<Int>{1, 2});
    }
    SECTION("degree zero has no locators") {
        CHECK(poly_roots(f, {}, domain).empty());
    }
    SECTION("locator outside the domain is not reported") {
        CHECK(poly_roots(f, {-5}, {1, 2, 4}).empty());
    }
    SECTION("double locators are reported with multiplicity") {
        // (1 - 3z)^2 = 1 - 6z + 9z^2
        const auto roots = poly_roots(f, {-6, f.reduce(9)}, domain);
        CHECK(roots == std::vector<Int>{3, 3});
    }
}
