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

#include "hexmann/verify.hpp"

using namespace hexmann;

namespace {

LinearCode two_ones_code() {
    const PrimeField f(13);
    return LinearCode{f,  Family::gauss2, WeightTable(subgroup_of_order(f, 4)), Matrix{{1, 1}}, {0, 1},
                      {}, {},             std::nullopt,                         0,              0,
                      0,  1,              3,                                    true};
}

}  // namespace

TEST_CASE("bounded certification fails on a bad code with a verifiable witness") {
    const LinearCode bad = two_ones_code();
    const DistanceReport report = min_distance_bounded(bad, 3);
    CHECK_FALSE(report.certified);
    REQUIRE_FALSE(report.witness.empty());
    CHECK(report.witness_weight == 2);
    CHECK(vector_weight(bad.table, report.witness) == 2);
    CHECK(is_zero(syndrome(bad, report.witness)));
}

TEST_CASE("full enumeration on small codes") {
    SECTION("gauss2 p=13 has exact distance at least 5") {
        const DistanceReport report = min_distance_full(construct_gauss2(13));
        REQUIRE(report.exact_distance.has_value());
        CHECK(*report.exact_distance >= 5);
        CHECK(report.certified);
        CHECK(vector_weight(construct_gauss2(13).table, report.witness) == *report.exact_distance);
    }
    SECTION("eisen-alg p=19 has exact distance at least 5") {
        const LinearCode code = construct_eisen_alg(19);
        CHECK(code.guaranteed_distance == 5);
        const DistanceReport report = min_distance_full(code);
        REQUIRE(report.exact_distance.has_value());
        CHECK(*report.exact_distance >= 5);
        CHECK(is_zero(syndrome(code, report.witness)));
    }
    SECTION("consistency between the two strategies") {
        const LinearCode code = construct_eisen_alg(19);
        const Int d = *min_distance_full(code).exact_distance;
        CHECK(min_distance_bounded(code, std::min<Int>(d, kMaxCertifiableBound)).certified);
        if (d < kMaxCertifiableBound) {
            const DistanceReport beyond = min_distance_bounded(code, d + 1);
            CHECK_FALSE(beyond.certified);
            CHECK(beyond.witness_weight == d);
        }
    }
    SECTION("space guard") {
        CHECK_THROWS_AS(min_distance_full(construct_gauss2(29)), SpaceTooLarge);
    }
    SECTION("bound guard") {
        CHECK_THROWS_AS(min_distance_bounded(construct_gauss2(13), 9), RadiusTooLarge);
        CHECK_THROWS_AS(min_distance_bounded(construct_gauss3(29), 7), RadiusTooLarge);
    }
}

TEST_CASE("parallel runs report exactly what the serial run reports") {
    SECTION("bounded") {
        for (Int bound : {5, 6}) {
            const LinearCode code = construct_gauss2(13);
            const DistanceReport serial = min_distance_bounded(code, bound, 1);
            const DistanceReport parallel = min_distance_bounded(code, bound, 3);
            CHECK(serial.certified == parallel.certified);
            CHECK(serial.witness == parallel.witness);
            CHECK(serial.witness_weight == parallel.witness_weight);
        }
    }
    SECTION("full") {
        const LinearCode code = construct_eisen_alg(19);
        const DistanceReport serial = min_distance_full(code, 1);
        const DistanceReport parallel = min_distance_full(code, 3);
        CHECK(serial.exact_distance == parallel.exact_distance);
        CHECK(serial.witness == parallel.witness);
    }
}

TEST_CASE("syndrome injectivity") {
    const LinearCode code = construct_gauss2(13);

    SECTION("radius 2 is injective, radius 3 is not") {
        CHECK(syndrome_injectivity(code, 2).injective);
        const InjectivityReport report = syndrome_injectivity(code, 3);
        CHECK_FALSE(report.injective);
        REQUIRE(report.collision.has_value());
        const auto& [first, second] = *report.collision;
        CHECK_FALSE(first == second);
        CHECK(pattern_syndrome(code, first) == pattern_syndrome(code, second));
    }
    SECTION("radius 0 is vacuously injective") {
        CHECK(syndrome_injectivity(code, 0).injective);
    }
    SECTION("matches the distance criterion d > 2t") {
        const Int d = *min_distance_full(code).exact_distance;
        CHECK(syndrome_injectivity(code, 2).injective == (d > 4));
        CHECK(syndrome_injectivity(code, 3).injective == (d > 6));
    }
}

TEST_CASE("the Eisenstein families top out at distance 5 where unbalanced unit triples exist") {
    // Over Z[rho] the units satisfy 1 + zeta + zeta^2 = 0, so error values can
    // cancel without pairing up: a net (+1, +zeta, +zeta^2) triple plus one
    // (+zeta, -zeta) pair is a zero value sum of weight 5.  At some primes the
    // power-row equations admit such a codeword, capping the distance at 5.
    SECTION("eisen-alg p=37: no weight-4 word, but a weight-5 word") {
        const LinearCode code = construct_eisen_alg(37);
        CHECK(min_distance_bounded(code, 5).certified);
        const DistanceReport at6 = min_distance_bounded(code, 6);
        CHECK_FALSE(at6.certified);
        REQUIRE_FALSE(at6.witness.empty());
        CHECK(at6.witness_weight == 5);
        CHECK(vector_weight(code.table, at6.witness) == 5);
        CHECK(is_zero(syndrome(code, at6.witness)));
        for (Int x : at6.witness)
            if (x != 0) CHECK(code.table.subgroup().contains(x));
    }
    SECTION("eisen-geo p=31 has a weight-5 word as well") {
        const LinearCode code = construct_eisen_geo(31);
        const DistanceReport at6 = min_distance_bounded(code, 6);
        CHECK_FALSE(at6.certified);
        CHECK(at6.witness_weight == 5);
        CHECK(is_zero(syndrome(code, at6.witness)));
    }
    SECTION("eisen-alg p=19 and p=43 do reach distance 6") {
        CHECK(*min_distance_full(construct_eisen_alg(19)).exact_distance == 6);
        CHECK(min_distance_bounded(construct_eisen_alg(43), 6).certified);
    }
}

TEST_CASE("perfectness") {
    SECTION("the one-error code over F_13") {
        const LinearCode code = construct_perfect1(PrimeField(13), 4, 1);
        const PerfectReport report = check_perfect(code, 1);
        CHECK(report.perfect);
        CHECK(report.disjoint);
        CHECK(report.covering);
        CHECK(report.ball_size == 13);      // 1 + 3*4
        CHECK(report.expected_ball == 13);  // p^rank
    }
    SECTION("the one-error code over F_29") {
        const PerfectReport report = check_perfect(construct_perfect1(PrimeField(29), 4, 1), 1);
        CHECK(report.perfect);
        CHECK(report.ball_size == 29);  // 1 + 7*4
    }
    SECTION("a dimension-zero code over F_5 is perfect") {
        const PerfectReport report = check_perfect(construct_perfect1(PrimeField(5), 4, 1), 1);
        CHECK(report.perfect);
        CHECK(report.ball_size == 5);
        CHECK(report.rank == 1);
    }
    SECTION("gauss2 p=13 is not two-error perfect") {
        const PerfectReport report = check_perfect(construct_gauss2(13), 2);
        CHECK_FALSE(report.perfect);
        CHECK_FALSE(report.covering);
        CHECK(report.disjoint);  // d >= 5 keeps the balls disjoint
    }
}
