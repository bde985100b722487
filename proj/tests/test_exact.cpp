#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "clab/exact.hpp"

using namespace clab;

TEST_CASE("exact_binomials") {
    CHECK(exact_binom(12, 5) == 792);
    CHECK(exact_binom(12, 4) == 495);
    CHECK(exact_binom(6, 3) == 20);
    CHECK(exact_binom(0, 0) == 1);
    CHECK(exact_binom(5, 6) == 0);
    CHECK(exact_binom(5, -1) == 0);
    // negative upper index stays polynomial: C(-1, k) = (-1)^k
    CHECK(exact_binom(-1, 4) == 1);
    CHECK(exact_binom(-1, 5) == -1);
    CHECK(exact_binom(60, 30) == ExactInt("118264581564861424"));
}

TEST_CASE("convolution_sides_small_values") {
    for (Side s : {Side::left, Side::right}) {
        CHECK(lemma21_side(0, s) == 1);
        CHECK(lemma21_side(1, s) == 12);
        CHECK(lemma21_side(2, s) == 216);
    }
}

TEST_CASE("hyper_terms_match_their_sums") {
    for (Side s : {Side::left, Side::right}) {
        for (i64 m = 0; m <= 25; ++m) {
            ExactInt total = 0;
            for (i64 k = 0; k <= m; ++k) total += hyper_term(s, m, k);
            CHECK(total == lemma21_side(m, s));
        }
    }
}

TEST_CASE("batch_values_match_single_sums_and_each_other") {
    auto l = lemma21_values(Side::left, 60);
    auto r = lemma21_values(Side::right, 60);
    REQUIRE(l.size() == 61);
    REQUIRE(r.size() == 61);
    for (i64 m = 0; m <= 60; ++m) {
        CHECK(l[m] == r[m]);
        if (m % 10 == 0) {
            CHECK(l[m] == lemma21_side(m, Side::left));
            CHECK(r[m] == lemma21_side(m, Side::right));
        }
    }
}

TEST_CASE("three_term_recurrence") {
    CHECK(rec_coeff_a(0) == 648);
    CHECK(rec_coeff_b(0) == -198);
    CHECK(rec_coeff_c(0) == 8);
    // 648*1 - 198*12 + 8*216 = 0
    CHECK(rec_coeff_a(0) * 1 + rec_coeff_b(0) * 12 + rec_coeff_c(0) * 216 == 0);
    for (Side s : {Side::left, Side::right}) {
        for (i64 m = 0; m <= 12; ++m) CHECK(check_recurrence(s, m));
        CHECK(check_recurrence_all(s, 80));
    }
}

TEST_CASE("certificate_multiplier_spot_value") {
    // R(3,1) on the left side: -729*1*5*1*2 / (3*4)
    CHECK(wz_multiplier(Side::left, 3, 1) == ExactRat(-1215, 2));
    CHECK(wz_multiplier(Side::left, 3, 0) == 0);
    CHECK(wz_multiplier(Side::right, 2, 0) == 0);
}

TEST_CASE("certificates_telescope_pointwise") {
    for (Side s : {Side::left, Side::right}) {
        for (i64 m = 0; m <= 30; ++m) {
            WzReport rep = check_wz_certificate(s, m);
            CHECK(rep.ok);
            CHECK(rep.poles == 3);
            CHECK(rep.checked == int(m));
        }
    }
}
