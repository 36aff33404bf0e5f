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
#include <set>

#include "hexmann/io.hpp"
#include "reference_matrices.hpp"

using namespace hexmann;

TEST_CASE("constructions reproduce the known matrices") {
    SECTION("gauss2 p=13") {
        const LinearCode code = construct_gauss2(13);
        CHECK(code.labels == reference::gauss2_p13_columns);
        CHECK(code.h == reference::gauss2_p13);
        CHECK(code.guaranteed_distance == 5);
        CHECK_FALSE(code.hypothesis_met);  // a + b = 5 < 7
    }
    SECTION("gauss3 p=29") {
        const LinearCode code = construct_gauss3(29);
        CHECK(code.labels == reference::gauss3_p29_columns);
        CHECK(code.h == reference::gauss3_p29);
        CHECK(code.guaranteed_distance == 7);
        CHECK_FALSE(code.hypothesis_met);  // a + b = 7 < 9
    }
    SECTION("eisen-geo p=19") {
        const LinearCode code = construct_eisen_geo(19);
        CHECK(code.labels == reference::eisen_geo_p19_columns);
        CHECK(code.h == reference::eisen_geo_p19);
        CHECK(code.guaranteed_distance == 5);
        CHECK_FALSE(code.hypothesis_met);  // a + b = 5 < 6
    }
    SECTION("eisen-alg p=37") {
        const LinearCode code = construct_eisen_alg(37);
        CHECK(code.labels == reference::eisen_alg_p37_columns);
        CHECK(code.h == reference::eisen_alg_p37);
        CHECK(code.guaranteed_distance == 6);
        CHECK(code.hypothesis_met);  // a + b = 7 >= 6
    }
    SECTION("perfect1 p=13 m=4 r=1") {
        const LinearCode code = construct_perfect1(PrimeField(13), 4, 1);
        CHECK(code.h == reference::perfect1_p13);
        CHECK(code.labels == std::vector<Int>{1, 2, 4});
        CHECK(code.guaranteed_distance == 3);
    }
}

TEST_CASE("perfect1 columns are one representative per scaling orbit") {
    SECTION("r=2 column count by brute-force orbit partition") {
        const PrimeField f(13);
        const UnitSubgroup e = subgroup_of_order(f, 4);
        std::set<std::pair<Int, Int>> seen;
        std::size_t orbits = 0;
        for (Int x = -6; x <= 6; ++x) {
            for (Int y = -6; y <= 6; ++y) {
                if (x == 0 && y == 0) continue;
                if (seen.count({x, y})) continue;
                ++orbits;
                for (Int eps : e.elements) seen.insert({f.mul(eps, x), f.mul(eps, y)});
            }
        }
        CHECK(orbits == 42);
        const LinearCode code = construct_perfect1(f, 4, 2);
        CHECK(code.n() == 42);
        CHECK(rank(code) == 2);
    }
    SECTION("single-orbit code over F_5") {
        const LinearCode code = construct_perfect1(PrimeField(5), 4, 1);
        CHECK(code.h == Matrix{{1}});
    }
    SECTION("columns pairwise inequivalent under scaling") {
        const LinearCode code = construct_perfect1(PrimeField(29), 4, 1);
        CHECK(code.n() == 7);
        const auto& e = code.table.subgroup();
        for (std::size_t i = 0; i < code.n(); ++i)
            for (std::size_t j = i + 1; j < code.n(); ++j)
                for (Int eps : e.elements)
                    CHECK(code.field.mul(eps, code.labels[i]) != code.labels[j]);
    }
}

TEST_CASE("family parameters away from the worked examples") {
    SECTION("gauss2 p=29") {
        const LinearCode code = construct_gauss2(29);
        CHECK(code.n() == 25);
        CHECK(code.set_a == std::vector<Int>{-2, -1, 0, 1, 2});
        CHECK(code.guaranteed_distance == 6);
        CHECK(code.hypothesis_met);
        CHECK(rank(code) == 4);
    }
    SECTION("gauss3 p=41 reaches the full three-error bound") {
        const LinearCode code = construct_gauss3(41);
        CHECK(code.a == 5);
        CHECK(code.b == 4);
        CHECK(code.guaranteed_distance == 8);
        CHECK(code.hypothesis_met);
    }
    SECTION("eisen-geo p=31") {
        const LinearCode code = construct_eisen_geo(31);
        CHECK(code.a == 5);
        CHECK(code.b == 1);
        CHECK(code.guaranteed_distance == 6);
    }
    SECTION("eisen-alg lengths") {
        const LinearCode p19 = construct_eisen_alg(19);
        CHECK(p19.n() == 7);
        CHECK(p19.labels == std::vector<Int>{0, 1, 2, 4, 8, -3, -6});
        const LinearCode p7 = construct_eisen_alg(7);
        CHECK(p7.n() == 3);
        CHECK(p7.labels == std::vector<Int>{0, 1, 3});
    }
    SECTION("eisen-alg labels are inequivalent under the cube root") {
        for (Int p : {19, 37}) {
            const LinearCode code = construct_eisen_alg(p);
            const Int zeta = code.field.mul(code.unit_residue, code.unit_residue);
            for (std::size_t i = 1; i < code.n(); ++i) {
                CHECK(code.position_of(code.field.mul(zeta, code.labels[i])) == LinearCode::npos);
                CHECK(code.position_of(code.field.mul(code.field.mul(zeta, zeta), code.labels[i])) ==
                      LinearCode::npos);
            }
        }
    }
}

TEST_CASE("constructor error paths") {
    CHECK_THROWS_AS(construct_gauss2(11), BadResidueClass);
    CHECK_THROWS_AS(construct_eisen_geo(11), BadResidueClass);
    CHECK_THROWS_AS(construct_eisen_alg(11), BadResidueClass);
    CHECK_THROWS_AS(construct_gauss2(13, std::vector<Int>{0}), InadmissibleSet);
    CHECK_THROWS_AS(construct_gauss2(13, std::vector<Int>{-2, -1, 0, 1, 2}), InadmissibleSet);
    CHECK_THROWS_AS(construct_gauss3(13), InadmissibleSet);  // no usable symmetric interval
    CHECK_THROWS_AS(construct_gauss3(29, std::vector<Int>{0, 1}), AsymmetricSet);
    CHECK_THROWS_AS(construct_eisen_geo(19, std::vector<Int>{0, 1}), AsymmetricSet);
}

TEST_CASE("syndromes") {
    const LinearCode code = construct_gauss2(13);

    SECTION("zero vector") {
        CHECK(is_zero(syndrome(code, std::vector<Int>(9, 0))));
    }
    SECTION("unit error at the column labeled 4") {
        ErrorPattern e{code.n(), {{code.position_of(4), 1}}};
        CHECK(pattern_syndrome(code, e) == Syndrome{1, -1, 1, 3});
        CHECK(syndrome(code, e.to_vector()) == Syndrome{1, -1, 1, 3});
    }
    SECTION("codewords lie in the kernel") {
        for (const auto& basis_vec : kernel_basis(code)) CHECK(is_zero(syndrome(code, basis_vec)));
    }
    SECTION("linearity on random vectors") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Int> u(code.n()), v(code.n()), sum(code.n());
            for (std::size_t j = 0; j < code.n(); ++j) {
                u[j] = code.field.reduce(static_cast<Int>(rng() % 13));
                v[j] = code.field.reduce(static_cast<Int>(rng() % 13));
                sum[j] = code.field.add(u[j], v[j]);
            }
            const Syndrome su = syndrome(code, u), sv = syndrome(code, v), ss = syndrome(code, sum);
            for (std::size_t row = 0; row < code.rows(); ++row)
                CHECK(ss[row] == code.field.add(su[row], sv[row]));
        }
    }
    SECTION("length mismatch") {
        CHECK_THROWS_AS(syndrome(code, std::vector<Int>(8, 0)), LengthMismatch);
    }
}

TEST_CASE("every family has full row rank at its worked parameters") {
    CHECK(rank(construct_gauss2(13)) == 4);
    CHECK(rank(construct_gauss3(29)) == 5);
    CHECK(rank(construct_eisen_geo(19)) == 4);
    CHECK(rank(construct_eisen_alg(37)) == 4);
    CHECK(rank(construct_perfect1(PrimeField(13), 4, 1)) == 1);
}

TEST_CASE("codeword enumeration") {
    SECTION("gauss2 p=13 has 13^5 codewords") {
        const LinearCode code = construct_gauss2(13);
        std::size_t count = 0;
        bool all_kernel = true;
        for_each_codeword(code, [&](const std::vector<Int>& cw) {
            ++count;
            if (count <= 100 && !is_zero(syndrome(code, cw))) all_kernel = false;
            return true;
        });
        CHECK(count == 371293);
        CHECK(all_kernel);
    }
    SECTION("space guard") {
        CHECK_THROWS_AS(for_each_codeword(construct_gauss2(29), [](const std::vector<Int>&) { return true; }),
                        SpaceTooLarge);
    }
}

TEST_CASE("column labels decompose through the component maps") {
    for (const LinearCode& code : {construct_gauss2(13), construct_gauss3(29), construct_eisen_geo(19)}) {
        for (std::size_t i = 0; i < code.n(); ++i) {
            const auto& [first, second] = code.label_parts[i];
            CHECK(code.field.add(code.field.reduce(first),
                                 code.field.mul(code.field.reduce(second), code.unit_residue)) == code.labels[i]);
            CHECK(std::binary_search(code.set_a.begin(), code.set_a.end(), first));
            CHECK(std::binary_search(code.set_a.begin(), code.set_a.end(), second));
        }
    }
}

TEST_CASE("serialization") {
    SECTION("JSON round trip for every family") {
        const LinearCode codes[] = {construct_gauss2(13), construct_gauss3(29), construct_eisen_geo(19),
                                    construct_eisen_alg(37), construct_perfect1(PrimeField(13), 4, 1)};
        for (const LinearCode& code : codes) {
            const json j = code_to_json(code);
            const LinearCode back = code_from_json(j);
            CHECK(back.h == code.h);
            CHECK(back.labels == code.labels);
            CHECK(back.guaranteed_distance == code.guaranteed_distance);
        }
    }
    SECTION("tampered matrix files are rejected") {
        json j = code_to_json(construct_gauss2(13));
        j["rows"][0][0] = 2;
        CHECK_THROWS_AS(code_from_json(j), Error);
    }
    SECTION("CSV has a label header and one line per row") {
        const LinearCode code = construct_gauss2(13);
        const std::string csv = code_to_csv(code);
        CHECK(csv.substr(0, csv.find('\n')) == "-6,-5,-4,-1,0,1,4,5,6");
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    }
}
